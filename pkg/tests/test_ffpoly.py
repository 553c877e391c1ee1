import pytest
from hypothesis import given, settings, strategies as st

from exhopf.ffpoly import (
    ParseError,
    Polynomial,
    PrimeField,
    RingContext,
    RingMismatchError,
    parse,
    render,
)


def ring(p=2, names=("w1", "w2"), weights=None):
    if weights is None:
        weights = (1,) * len(names)
    return RingContext(PrimeField(p), list(zip(names, weights)))


def test_prime_field_validation():
    PrimeField(2)
    PrimeField(251)
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(ValueError):
        PrimeField(257)


def test_field_canonical_residues():
    F = PrimeField(5)
    assert F.normalize(-1) == 4
    assert F.neg(1) == 4
    assert F.inv(2) == 3


def test_additive_inverse_cancels():
    for p in (2, 3, 5):
        R = ring(p)
        f = R.parse("w2^3")
        assert (f + (p - 1) * f).is_zero()


def test_add_identity():
    R = ring(3, ("c4", "c6"), (4, 6))
    f = R.parse("c6^2+c4^3")
    assert f + R.zero() == f


def test_char2_addition():
    R = ring(2)
    f = R.parse("w1^2*w2")
    assert (f + f).is_zero()


def test_mul_g2_theta2():
    # w1 * (w1^2+w1*w2+w2^2) over F_2
    R = ring(2)
    theta2 = R.parse("w1^2+w1*w2+w2^2")
    prod = R.variable("w1") * theta2
    assert prod == R.parse("w1^3+w1^2*w2+w1*w2^2")


def test_mul_identity_and_degree():
    R = ring(5, ("c4",), (4,))
    f = R.parse("2*c4^3")
    assert f * R.one() == f
    g = R.variable("c4") * R.variable("c4")
    assert g == R.parse("c4^2")
    assert g.weight() == 8


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        ring(2).one() + ring(3).one()


def test_weight_and_homogeneity():
    R = ring(2, ("w1", "w2", "c4"), (1, 1, 4))
    f = R.parse("w1^4+c4")
    assert f.is_homogeneous() and f.weight() == 4
    g = R.parse("w1+c4")
    assert not g.is_homogeneous()
    with pytest.raises(ValueError):
        g.weight()
    comps = g.homogeneous_components()
    assert set(comps) == {1, 4}


def test_substitute_is_ring_hom():
    R = ring(2, ("c7", "c8", "w2", "c4"), (7, 8, 1, 4))
    theta15 = R.parse("c7*c8+w2^7*c8+w2^3*c4*c8")
    T = ring(2, ("w2", "c4"), (1, 4))
    image = theta15.substitute(
        {"c7": T.zero(), "c8": T.zero(), "w2": T.variable("w2"), "c4": T.variable("c4")},
        target_ring=T,
    )
    assert image.is_zero()


def test_substitute_identity():
    R = ring(3, ("w1", "w2"))
    f = R.parse("w1^2+2*w1*w2")
    ident = {n: R.variable(n) for n in R.names}
    assert f.substitute(ident) == f


def test_substitute_errors():
    R = ring(2, ("w1", "w2"))
    f = R.parse("w1*w2")
    with pytest.raises(ValueError):
        f.substitute({"w1": R.variable("w1")})
    with pytest.raises(ValueError):
        # inhomogeneous image for a weight-1 variable
        f.substitute({"w1": R.parse("w1^2"), "w2": R.variable("w2")})


def test_parse_render_examples():
    R = ring(2)
    assert render(R.parse("w2^3")) == "w2^3"
    S = ring(2, ("c4", "c6"), (4, 6))
    f = S.parse("c6^2+c4^3")
    assert render(f) == "c6^2+c4^3"
    assert S.parse("0").is_zero()
    assert render(S.zero()) == "0"


def test_render_minus_for_p_minus_one():
    R = ring(5, ("w2", "c2"), (1, 2))
    f = R.parse("-w2^2-c2")
    assert render(f) == "-c2-w2^2"  # c2 is the later (larger) variable
    assert parse(render(f), R) == f
    g = R.parse("2*w2^2+3*c2")
    assert render(g) == "3*c2+2*w2^2"
    assert R.parse("4*c2") == R.parse("-c2")
    assert render(R.parse("4*c2")) == "-c2"


def test_parse_sign_forms():
    R = ring(5, ("c2",), (2,))
    assert R.parse("-1*c2") == R.parse("-c2")
    assert R.parse("-1") == R.constant(4)
    assert render(R.constant(4)) == "-1"


def test_parse_errors_have_positions():
    R = ring(2)
    with pytest.raises(ParseError):
        R.parse("w1^")
    with pytest.raises(ParseError):
        R.parse("w9+w1")
    with pytest.raises(ParseError):
        R.parse("w1++w2")


def test_descending_term_order():
    R = ring(2, ("w1", "w2", "w3"))
    f = R.parse("w1*w3+w2^2+w1^2")
    # grevlex with w1 < w2 < w3: the smallest variable is compared first,
    # so w2^2 beats w1*w3 at equal weight (reverse-lex, not plain lex)
    assert render(f) == "w2^2+w1*w3+w1^2"


def test_monomial_order_respects_weights():
    R = ring(2, ("w1", "c4"), (1, 4))
    f = R.parse("w1^3+c4")
    assert render(f) == "c4+w1^3"  # weight 4 > weight 3


# -- property tests ------------------------------------------------------

fields = st.sampled_from([2, 3, 5])


@st.composite
def ring_and_polys(draw, count=2, max_vars=6, max_weight=12):
    p = draw(fields)
    nvars = draw(st.integers(1, max_vars))
    R = RingContext(PrimeField(p), [(f"x{i+1}", 1) for i in range(nvars)])
    polys = []
    for _ in range(count):
        nterms = draw(st.integers(0, 5))
        terms = []
        for _ in range(nterms):
            mon = tuple(
                draw(st.integers(0, max(0, max_weight // nvars))) for _ in range(nvars)
            )
            terms.append((mon, draw(st.integers(1, p - 1)) if p > 2 else 1))
        polys.append(R.from_terms(terms))
    return (R, *polys)


@settings(max_examples=60, deadline=None)
@given(ring_and_polys(count=3))
def test_ring_axioms(data):
    R, f, g, h = data
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=40, deadline=None)
@given(ring_and_polys(count=2))
def test_frobenius(data):
    R, f, g = data
    p = R.field.p
    assert (f + g) ** p == f ** p + g ** p


@settings(max_examples=40, deadline=None)
@given(ring_and_polys(count=2))
def test_weight_additive_on_product(data):
    R, f, g = data
    if f.is_zero() or g.is_zero():
        return
    fw = max(R.wdeg(m) for m in f.terms)
    ftop = Polynomial(R, {m: c for m, c in f.terms.items() if R.wdeg(m) == fw})
    gw = max(R.wdeg(m) for m in g.terms)
    gtop = Polynomial(R, {m: c for m, c in g.terms.items() if R.wdeg(m) == gw})
    prod = ftop * gtop
    if not prod.is_zero():
        assert prod.weight() == fw + gw


@settings(max_examples=60, deadline=None)
@given(ring_and_polys(count=1))
def test_parse_render_round_trip(data):
    R, f = data
    assert parse(render(f), R) == f

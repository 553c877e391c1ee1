import pytest

from exhopf.ffpoly import parse, render
from exhopf.liedata import (
    EXAMPLE_58_TEXT,
    SUPPORTED_PAIRS,
    UnsupportedPair,
    checksum_payload,
    chern_poly,
    chern_substitution,
    lemma22_printed,
    mixed_ring,
    profile,
    restrict_kappa,
    restricted_ring,
    theta_set,
    weight_ring,
    _stored_checksums,
)


def test_all_ten_pairs_supported():
    assert len(SUPPORTED_PAIRS) == 10
    with pytest.raises(UnsupportedPair):
        profile("G2", 3)
    with pytest.raises(UnsupportedPair):
        profile("F4", 5)


def test_dimension_identity_all_pairs():
    dims = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}
    for g, p in SUPPORTED_PAIRS:
        prof = profile(g, p)
        assert prof.dim == dims[g]
        assert prof.dimension_identity(), (g, p)


def test_e8_p2_dimension_arithmetic():
    prof = profile("E8", 2)
    odd = sum(2 * s - 1 for s in prof.r_set)
    even = sum(2 * (prof.k_map[t] - 1) * t for t in prof.e_set)
    assert odd == 128 and even == 120 and odd + even == 248


def test_lemma_5_4_c1():
    for g, p in SUPPORTED_PAIRS:
        if g == "G2":
            continue
        forms = chern_substitution(g, p)
        total = forms[0]
        for f in forms[1:]:
            total = total + f
        R = weight_ring(g, p)
        r = 1 if g == "F4" else 2
        assert total == 3 * R.variable(f"w{r}"), (g, p)
        assert chern_poly(g, p, 1) == 3 * R.variable(f"w{r}")


def test_f4_telescoping():
    forms = chern_substitution("F4", 2)
    R = weight_ring("F4", 2)
    assert forms[0] + forms[1] == R.variable("w3")


def test_chern_c0_and_range():
    assert chern_poly("F4", 3, 0) == weight_ring("F4", 3).one()
    with pytest.raises(ValueError):
        chern_poly("F4", 3, 7)
    with pytest.raises(UnsupportedPair):
        chern_poly("G2", 2, 1)


def test_c6_f4_is_product_of_forms():
    forms = chern_substitution("F4", 2)
    prod = forms[0]
    for f in forms[1:]:
        prod = prod * f
    assert prod == chern_poly("F4", 2, 6)


def test_g2_thetas():
    ts = theta_set("G2", 2)
    R = ts.weight_ring
    assert ts.theta_c[2] == R.parse("w1^2+w1*w2+w2^2")
    assert ts.theta_c[3] == R.parse("w2^3")
    assert ts.restricted_ring is None
    with pytest.raises(UnsupportedPair):
        restricted_ring("G2", 2)


def test_e8_p5_theta2():
    ts = theta_set("E8", 5)
    assert ts.theta_c[2] == ts.mixed_ring.parse("-w2^2-c2")


def test_e6_p2_derived_table():
    prof = profile("E6", 2)
    assert prof.r_set == (2, 3, 5, 8, 9, 12)
    ts = theta_set("E6", 2)
    assert 14 not in ts.theta_c and 15 not in ts.theta_c
    # theta_8 of E6 is theta_8 of E8 with c7 = c8 = 0
    assert ts.theta_c[8] == ts.mixed_ring.parse("c4^2+w2^2*c6+w2^3*c5+w2^8")
    # theta_9 of E6 loses its c7/c8 terms but keeps w2^3*c6
    assert ts.theta_c[9] == ts.mixed_ring.parse("w2^3*c6")


def test_e7_p2_derived_table():
    ts = theta_set("E7", 2)
    assert sorted(ts.theta_c) == [2, 3, 5, 8, 9, 12, 14]
    assert ts.theta_c[14] == ts.mixed_ring.parse("c7^2+c4^2*c6+w2^2*c6^2")
    assert ts.theta_c[9] == ts.mixed_ring.parse("w2^2*c7+w2^3*c6")


def test_theta_homogeneity_all_pairs():
    for g, p in SUPPORTED_PAIRS:
        ts = theta_set(g, p)
        for s, f in ts.theta_c.items():
            assert f.weight() == s, (g, p, s)
        if ts.theta_restricted is not None:
            for s, f in ts.theta_restricted.items():
                assert f.is_zero() or f.weight() == s


def test_three_way_consistency_light_pairs():
    # recompute the omega-expansion and the restriction for every pair where
    # the expansion is desk-cheap, and check the linking identities
    light = [(g, p) for g, p in SUPPORTED_PAIRS if not (g == "E8" and p in (3, 5))]
    for g, p in light:
        ts = theta_set(g, p)
        for s in ts.profile.r_set:
            om = ts.omega(s)
            assert om.weight() == s
            if g == "G2":
                continue
            # kappa* after full expansion == expansion of the restriction
            r = ts.profile.distinguished_weight
            W = ts.weight_ring
            killed = {f"w{r}": W.zero()}
            for name in W.names:
                if name != f"w{r}":
                    killed[name] = W.variable(name)
            lhs = om.substitute(killed, target_ring=W)
            restricted = ts.theta_restricted[s]
            expand = {}
            for name in restricted.ring.names:
                img = chern_poly(g, p, int(name[1:])).substitute(killed, target_ring=W)
                expand[name] = img
            rhs = (
                restricted.substitute(expand, target_ring=W)
                if not restricted.is_zero()
                else W.zero()
            )
            assert lhs == rhs, (g, p, s)


def test_e8_heavy_pairs_light_degrees():
    # the two heavy tables are spot-expanded at their low degrees
    for p, smax in ((3, 10), (5, 8)):
        ts = theta_set("E8", p)
        for s in ts.profile.r_set:
            if s <= smax:
                assert ts.omega(s).weight() == s


def test_example_58_restrictions():
    ts = theta_set("E8", 5)
    R = ts.restricted_ring
    for s, text in EXAMPLE_58_TEXT.items():
        assert ts.theta_restricted[s] == R.parse(text), s


def test_kappa_kills_w_terms():
    M = mixed_ring("E8", 2)
    f = M.parse("w2^7*c8")
    assert restrict_kappa(f, "E8", 2).is_zero()


def test_kappa_e8_p2_theta9_vanishes():
    ts = theta_set("E8", 2)
    assert ts.theta_restricted[9].is_zero()
    assert not ts.theta_restricted[15].is_zero()


def test_render_parse_round_trip_every_theta():
    for g, p in SUPPORTED_PAIRS:
        ts = theta_set(g, p)
        for s, f in ts.theta_c.items():
            assert parse(render(f), f.ring) == f, (g, p, s)


def test_checksums_pinned_and_match():
    stored = _stored_checksums()
    assert stored is not None, "theta_checksums.json missing"
    assert stored == checksum_payload()


def test_lemma22_printed_values():
    assert lemma22_printed("G2", 2) == {(2, 3): 1}
    assert lemma22_printed("F4", 3) == {(2, 4): 1, (6, 8): 1}
    e7 = lemma22_printed("E7", 3)
    assert e7[(6, 10)] == 2  # -1 mod 3
    assert set(e7) == {(2, 4), (6, 8), (4, 10), (8, 14), (8, 10), (6, 10)}
    e8 = lemma22_printed("E8", 2)
    assert set(e8) == {
        (2, 3),
        (8, 12),
        (3, 5),
        (5, 9),
        (8, 9),
        (12, 14),
        (12, 15),
        (14, 15),
    }
    assert lemma22_printed("E8", 5) == {
        (2, 6): 1,
        (8, 12): 1,
        (14, 18): 1,
        (20, 24): 1,
    }

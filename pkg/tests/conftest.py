"""Shared fixtures and the transcribed closed forms used as test oracles."""

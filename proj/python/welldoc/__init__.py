"""Morphic words, the WELLDOC decision procedure, and word-combined LCG streams."""

import json

try:
    from ._welldoc_core import (  # installed layout
        Morphism,
        decide_json,
        det,
        parikh,
        prefix,
        prng_stream,
        returns_json,
        tuple_coverage,
        verify_json,
    )
except ImportError:  # in-tree build: extension sits on PYTHONPATH
    from _welldoc_core import (
        Morphism,
        decide_json,
        det,
        parikh,
        prefix,
        prng_stream,
        returns_json,
        tuple_coverage,
        verify_json,
    )

__all__ = [
    "Morphism",
    "decide",
    "det",
    "parikh",
    "prefix",
    "prng_stream",
    "returns_to_zero",
    "tuple_coverage",
    "verify",
]


def decide(phi):
    """WELLDOC verdict for a morphism (str or Morphism), as a dict."""
    if isinstance(phi, str):
        phi = Morphism(phi)
    return json.loads(decide_json(phi))


def verify(phi, lmax=5, mmax=6, horizon=100_000):
    """Empirical coverage report, as a dict."""
    if isinstance(phi, str):
        phi = Morphism(phi)
    return json.loads(verify_json(phi, lmax, mmax, horizon))


def returns_to_zero(phi):
    """Certified complete return words to the first letter, as a dict."""
    if isinstance(phi, str):
        phi = Morphism(phi)
    return json.loads(returns_json(phi))

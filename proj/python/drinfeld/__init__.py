"""Invariant factors and Frobenius decompositions of Drinfeld module points.

Thin wrapper over the compiled core: inputs and outputs are plain dicts
mirroring the CLI's JSON conventions.
"""

import json

from drinfeld._core import (
    DrinfeldError,
    bench_csv,
    is_rational_json,
    kernel_json,
    points_json,
    rational_lcm_json,
    torsion_json,
    verify_random,
)

__all__ = [
    "DrinfeldError",
    "bench",
    "is_rational",
    "kernel",
    "points",
    "rational_lcm",
    "torsion",
    "verify",
]


def _dump(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def points(spec):
    """Invariants of the module of rational points phi(K)."""
    return json.loads(points_json(_dump(spec)))


def kernel(spec, morphism):
    """Invariants of the kernel of a morphism given by {"u": [...]}."""
    return json.loads(kernel_json(_dump(spec), _dump(morphism)))


def torsion(spec, a, strategy="direct"):
    """Invariants of the a-torsion; a is an ascending coefficient list."""
    return json.loads(torsion_json(_dump(spec), _dump(a), strategy))


def rational_lcm(spec):
    """The rationality invariant g, the characteristic p and the maximal s."""
    return json.loads(rational_lcm_json(_dump(spec)))


def is_rational(spec, a):
    """Whether the a-torsion is contained in K."""
    return json.loads(is_rational_json(_dump(spec), _dump(a)))


def bench(q, dmin, dmax, r, method="both", seed=0):
    """CSV table of operation counts for the two ore_matrix paths."""
    return bench_csv(q, dmin, dmax, r, method, seed)


def verify(q, d, r, seed=0, count=10):
    """Cross-check random instances against the enumeration oracle."""
    mismatches, report = verify_random(q, d, r, seed, count)
    return mismatches, json.loads(report)

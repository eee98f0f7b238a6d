"""Extended bicyclic semigroup with adjoined zero.

Elements are ``0`` or a pair ``(a, b)``. Topologies, neighbourhoods and
sequence pairs are plain dicts in the same layout as the JSON files used by
the ``ebs`` command-line tool.
"""

import json

from . import _ebs
from ._ebs import (
    ArithmeticOverflow,
    DomainError,
    ParseError,
    difference_hom,
    invert,
    is_idempotent,
    leq,
    multiply,
    parse_element,
    quotient_mod,
    run_verification,
)

__all__ = [
    "ArithmeticOverflow",
    "DomainError",
    "ParseError",
    "compare_at_zero",
    "corner_complement",
    "corner_tail",
    "d_member",
    "difference_hom",
    "distinctness_certificate",
    "invert",
    "is_idempotent",
    "leq",
    "multiply",
    "nbhd_difference",
    "nbhd_member",
    "parse_element",
    "quotient_mod",
    "run_verification",
    "shift_witness",
    "solve_left",
    "solve_right",
    "upset_minus_d",
]


def _dump(obj):
    return json.dumps(obj)


def _element(x):
    return 0 if x == 0 else tuple(x)


def _elements(xs):
    return [_element(x) for x in xs]


def _points(result):
    if result["finite"]:
        result["points"] = _elements(result["points"])
    return result


def solve_left(factor, target):
    return json.loads(_ebs.solve_left(factor, target))


def solve_right(factor, target):
    return json.loads(_ebs.solve_right(factor, target))


def d_member(topology, x):
    return _ebs.d_member(_dump(topology), x)


def upset_minus_d(topology, apex):
    return _ebs.upset_minus_d(_dump(topology), apex)


def nbhd_member(topology, nbhd, x):
    return _ebs.nbhd_member(_dump(topology), _dump(nbhd), x)


def nbhd_difference(topology, u, v):
    return _ebs.nbhd_difference(_dump(topology), _dump(u), _dump(v))


def corner_tail(topology, nbhd, n):
    return _points(json.loads(_ebs.corner_tail(_dump(topology), _dump(nbhd), n)))


def corner_complement(topology, nbhd, n):
    return _points(json.loads(_ebs.corner_complement(_dump(topology), _dump(nbhd), n)))


def shift_witness(topology, element, side, nbhd, window=None):
    return json.loads(_ebs.shift_witness(_dump(topology), element, side, _dump(nbhd), window))


def compare_at_zero(coarse, fine, probe, window=3):
    return json.loads(_ebs.compare_at_zero(_dump(coarse), _dump(fine), _dump(probe), window))


def distinctness_certificate(s1, s2, window=10):
    return _ebs.distinctness_certificate(_dump(s1), _dump(s2), window)

"""Exact integer arithmetic: gcd/lcm with ideal conventions and CRT solving.

Moduli follow the ideal reading of Z: modulus 0 means exact equality
(Z/0Z is Z itself) and modulus 1 imposes no constraint.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable, NamedTuple, Sequence, Tuple


class Congruence(NamedTuple):
    """``x = residue (mod modulus)``; modulus 0 means ``x == residue``."""

    residue: int
    modulus: int


class CrtSolution(NamedTuple):
    residue: int
    modulus: int

    def satisfies(self, x: int) -> bool:
        if self.modulus == 0:
            return x == self.residue
        return (x - self.residue) % self.modulus == 0


class IncompatibleCongruences(ValueError):
    """Raised when a congruence system has no solution.

    ``pair`` holds the positions ``(i, j)`` of one violated pair,
    i.e. ``a_i != a_j (mod gcd(b_i, b_j))``.
    """

    def __init__(self, pair: Tuple[int, int], first: Congruence, second: Congruence):
        self.pair = pair
        self.first = first
        self.second = second
        g = gcd(first.modulus, second.modulus)
        super().__init__(
            f"congruences {pair[0]} and {pair[1]} are incompatible: "
            f"{first.residue} != {second.residue} (mod {g})"
        )


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def lcm_all(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y = g``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _canonical(residue: int, modulus: int) -> CrtSolution:
    if modulus == 0:
        return CrtSolution(residue, 0)
    return CrtSolution(residue % modulus, modulus)


def _compatible(c1: Congruence, c2: Congruence) -> bool:
    g = gcd(c1.modulus, c2.modulus)
    if g == 0:
        return c1.residue == c2.residue
    return (c1.residue - c2.residue) % g == 0


def crt_pair(c1: Congruence, c2: Congruence) -> CrtSolution:
    """Combine two congruences into one class modulo their lcm.

    Raises :class:`IncompatibleCongruences` (with ``pair == (0, 1)``) when
    ``a1 != a2 (mod gcd(b1, b2))``.
    """
    a1, b1 = c1.residue, abs(c1.modulus)
    a2, b2 = c2.residue, abs(c2.modulus)
    c1, c2 = Congruence(a1, b1), Congruence(a2, b2)
    if not _compatible(c1, c2):
        raise IncompatibleCongruences((0, 1), c1, c2)
    if b1 == 0:
        return CrtSolution(a1, 0)
    if b2 == 0:
        return CrtSolution(a2, 0)
    g, p, _ = ext_gcd(b1, b2)
    # b1*p = g (mod b2), so a1 + b1*p*(a2 - a1)/g hits a2 modulo b2
    step = b2 // g
    t = ((a2 - a1) // g * p) % step
    return _canonical(a1 + b1 * t, b1 // g * b2)


def crt_system(congruences: Sequence[Congruence]) -> CrtSolution:
    """Solve a system of congruences by folding :func:`crt_pair` left to right.

    The empty system is all of Z, returned as ``x = 0 (mod 1)``. On failure
    the raised :class:`IncompatibleCongruences` names a violated pair of
    input positions.
    """
    congruences = [Congruence(int(a), abs(int(b))) for a, b in congruences]
    acc = CrtSolution(0, 1)
    for j, cj in enumerate(congruences):
        try:
            acc = crt_pair(Congruence(*acc), cj)
        except IncompatibleCongruences:
            # the prefix is solvable, so some earlier congruence clashes with j
            for i in range(j):
                if not _compatible(congruences[i], cj):
                    raise IncompatibleCongruences((i, j), congruences[i], cj) from None
            raise AssertionError("fold failed without a violated pair")  # pragma: no cover
    return acc

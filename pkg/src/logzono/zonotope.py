"""Logical zonotopes over binary vectors.

A logical zonotope <c, G> is the point set { c xor (xor_i g_i b_i) : b_i in
{0,1} } for a center c and generators g_1..g_gamma. XOR, NOT and XNOR of two
zonotopes are computed exactly; AND (and the operations derived from it) are
over-approximated, meaning the result's point set contains the true
pointwise set but may have surplus members.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CapacityError, DimensionError, EmptyInputError
from .explicit import ExplicitSet
from .gf2 import BitVec, from_columns, gf2_solve, ones, zeros

DEFAULT_GAMMA_CAP = 20
_CAP_ENV = "LOGZONO_GAMMA_CAP"


def effective_cap(cap: Optional[int] = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(_CAP_ENV, DEFAULT_GAMMA_CAP))


@dataclass(frozen=True)
class LogicalZonotope:
    center: BitVec
    generators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.n != self.center.n:
                raise DimensionError(
                    f"generator length {g.n} does not match center length {self.center.n}")

    @property
    def dim(self) -> int:
        return self.center.n

    @property
    def gamma(self) -> int:
        return len(self.generators)

    def __xor__(self, other):
        return mink_xor(self, other)

    def __and__(self, other):
        return mink_and(self, other)

    def __or__(self, other):
        return mink_or(self, other)

    def __invert__(self):
        return mink_not(self)

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "center": self.center.to_text(),
            "generators": [g.to_text() for g in self.generators],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "LogicalZonotope":
        c = BitVec.from_text(d["center"])
        if c.n != d["dim"]:
            raise DimensionError("dim field does not match center length")
        return cls(c, tuple(BitVec.from_text(s) for s in d["generators"]))

    def __repr__(self):
        gens = ",".join(g.to_text() for g in self.generators)
        return f"<{self.center.to_text()};{gens}>"


def singleton(c: BitVec) -> LogicalZonotope:
    return LogicalZonotope(c, ())


def full_set(n: int = 1) -> LogicalZonotope:
    """The zonotope covering all of B^n (unit-vector generators)."""
    return LogicalZonotope(zeros(n), tuple(BitVec(n, 1 << i) for i in range(n)))


def _check_dims(l1: LogicalZonotope, l2: LogicalZonotope):
    if l1.dim != l2.dim:
        raise DimensionError(f"zonotope dims differ: {l1.dim} vs {l2.dim}")


def evaluate(l: LogicalZonotope, cap: Optional[int] = None) -> ExplicitSet:
    """All points of the zonotope, enumerated over the 2^gamma assignments."""
    cap = effective_cap(cap)
    if l.gamma > cap:
        raise CapacityError(
            f"gamma={l.gamma} exceeds enumeration cap {cap} ({_CAP_ENV})")
    words = {l.center.word}
    for g in l.generators:
        if g.word:
            words |= {w ^ g.word for w in words}
    return ExplicitSet.from_words(l.dim, words)


def mink_xor(l1: LogicalZonotope, l2: LogicalZonotope) -> LogicalZonotope:
    """Exact: <c1 xor c2, [G1, G2]>."""
    _check_dims(l1, l2)
    return LogicalZonotope(l1.center ^ l2.center, l1.generators + l2.generators)


def mink_not(l: LogicalZonotope) -> LogicalZonotope:
    """Exact: flip the center, keep the generators."""
    return LogicalZonotope(l.center ^ ones(l.dim), l.generators)


def mink_xnor(l1: LogicalZonotope, l2: LogicalZonotope) -> LogicalZonotope:
    return mink_not(mink_xor(l1, l2))


def mink_and(l1: LogicalZonotope, l2: LogicalZonotope) -> LogicalZonotope:
    """Over-approximation with generators [c1&g2j] ++ [c2&g1i] ++ [g1i&g2j]."""
    _check_dims(l1, l2)
    c1, c2 = l1.center, l2.center
    gens = [c1 & g2 for g2 in l2.generators]
    gens += [c2 & g1 for g1 in l1.generators]
    gens += [g1 & g2 for g1 in l1.generators for g2 in l2.generators]
    return LogicalZonotope(c1 & c2, tuple(gens))


def mink_nand(l1: LogicalZonotope, l2: LogicalZonotope) -> LogicalZonotope:
    return mink_not(mink_and(l1, l2))


def mink_or(l1: LogicalZonotope, l2: LogicalZonotope) -> LogicalZonotope:
    return mink_nand(mink_not(l1), mink_not(l2))


def mink_nor(l1: LogicalZonotope, l2: LogicalZonotope) -> LogicalZonotope:
    return mink_not(mink_or(l1, l2))


def contains(l: LogicalZonotope, x: BitVec) -> bool:
    """Exact membership test via a GF(2) solve of G b = x xor c.

    Polynomial in gamma; never enumerates the 2^gamma assignments.
    """
    if x.n != l.dim:
        raise DimensionError(f"point length {x.n} does not match dim {l.dim}")
    target = x ^ l.center
    if l.gamma == 0:
        return target.word == 0
    return gf2_solve(from_columns(l.generators), target) is not None


def enclose_points(points: Iterable[BitVec]) -> LogicalZonotope:
    """Zonotope guaranteed to contain every input point: c = s1, g_i = s_i xor c."""
    points = list(points)
    if not points:
        raise EmptyInputError("enclose_points needs at least one point")
    n = points[0].n
    for p in points:
        if p.n != n:
            raise DimensionError("points of mixed lengths")
    c = points[0]
    return LogicalZonotope(c, tuple(p ^ c for p in points[1:]))


def reduce(l: LogicalZonotope, cap: Optional[int] = None) -> LogicalZonotope:
    """Drop generators whose removal keeps the evaluated point set equal.

    Scans generators in index order; removals are cumulative. The center is
    never changed, so the result evaluates to exactly the same set.
    """
    target = evaluate(l, cap).words()
    kept = list(l.generators)
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1:]
        if evaluate(LogicalZonotope(l.center, tuple(trial)), cap).words() == target:
            kept = trial
        else:
            i += 1
    return LogicalZonotope(l.center, tuple(kept))

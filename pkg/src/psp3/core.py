"""Exact cover and generation arithmetic for 2- and 3-denomination bases.

A basis {1, a2, a3} "generates" x with at most s stamps if
x = c3*a3 + c2*a2 + c1 with non-negative counts summing to <= s.
The cover C(A,3,s) is the largest X such that every 1 <= x <= X is
generable; M(3,s) is the best cover over all bases.

Everything here is plain integer arithmetic; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True, order=True)
class Basis:
    """Denomination set {1, a2, a3}; a1 = 1 is implicit."""

    a2: int
    a3: int

    def __post_init__(self):
        if not (1 < self.a2 < self.a3):
            raise ValueError(f"invalid basis: need 1 < a2 < a3, got a2={self.a2} a3={self.a3}")

    def __str__(self):
        return f"{{1,{self.a2},{self.a3}}}"


@dataclass(frozen=True)
class Generation:
    """One way of writing a value: c3*a3 + c2*a2 + c1*1."""

    c1: int
    c2: int
    c3: int
    value: int
    stamps: int
    order: int

    @classmethod
    def of(cls, basis: Basis, c1: int, c2: int, c3: int) -> "Generation":
        value = c3 * basis.a3 + c2 * basis.a2 + c1
        order = value // basis.a3 - c3
        if order < 0:
            raise ValueError("generation order must be non-negative")
        return cls(c1=c1, c2=c2, c3=c3, value=value, stamps=c1 + c2 + c3, order=order)


@dataclass(frozen=True)
class CoverResult:
    """Cover X decomposed as (k+1)*a3 + Y; trivial covers report k = -1, Y = X."""

    X: int
    k: int
    Y: int

    @property
    def trivial(self) -> bool:
        return self.k < 0


def stamps2(v: int, a2: int) -> int:
    """Minimum stamps to make v from {1, a2}: use as many a2 as possible."""
    return v // a2 + v % a2


def can_generate(basis: Basis, s: int, x: int) -> bool:
    """True iff x is generable by the basis with at most s stamps."""
    if x < 0:
        raise ValueError("x must be >= 0")
    if s < 1:
        raise ValueError("s must be >= 1")
    if x == 0:
        return True
    return canonical_generation(basis, s, x) is not None


def canonical_generation(basis: Basis, s: int, x: int) -> Generation | None:
    """The generation of x maximising c3 (ties: maximise c2), or None.

    Maximising c3 minimises the generation order; for fixed c3 the cheapest
    completion uses the most a2 stamps, so the first feasible c3 from the
    top wins.
    """
    if x < 0:
        raise ValueError("x must be >= 0")
    if s < 1:
        raise ValueError("s must be >= 1")
    for c3 in range(min(s, x // basis.a3), -1, -1):
        v = x - c3 * basis.a3
        c2, c1 = divmod(v, basis.a2)
        if c3 + c2 + c1 <= s:
            return Generation.of(basis, c1=c1, c2=c2, c3=c3)
    return None


def cover3(basis: Basis, s: int) -> CoverResult:
    """Exact cover C(A,3,s) with its final-stride decomposition.

    Works stride by stride: x = j*a3 + r is generable iff some order
    i <= j has f_i(r) = stamps2(r + i*a3) - i <= s - j.  phi holds the
    running minimum of f_i over i; stride j is complete iff max(phi) fits
    the budget s - j.  Memory stays O(a3) regardless of s.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    a2, a3 = basis.a2, basis.a3
    phi = [stamps2(r, a2) for r in range(a3)]
    phi[0] = 0
    # beyond i_cap, f_i(r) > s for every r, so phi can no longer change
    i_cap = (s * a2) // (a3 - a2) + 1
    j = 0
    while True:
        budget = s - j
        fail = next((r for r in range(1, a3) if phi[r] > budget), 0)
        if fail:
            return CoverResult(X=j * a3 + fail - 1, k=j - 1, Y=fail - 1)
        j += 1
        if j <= i_cap:
            base = j * a3
            for r in range(1, a3):
                f = base + r
                f = f // a2 + f % a2 - j
                if f < phi[r]:
                    phi[r] = f


@lru_cache(maxsize=None)
def cover2(a2: int, s: int) -> int:
    """C({1,a2},2,s) by direct scan, checked against the closed form."""
    if a2 < 2:
        raise ValueError("a2 must be >= 2")
    if s < 1:
        raise ValueError("s must be >= 1")
    x = 1
    while stamps2(x, a2) <= s:
        x += 1
    cover = x - 1
    if 2 <= a2 <= s + 2:
        formula = a2 * (s + 3 - a2) - 2
        if cover != formula:
            raise AssertionError(f"cover2({a2},{s}): scan {cover} != formula {formula}")
    return cover


def m2(s: int) -> tuple[int, list[int]]:
    """M(2,s) and all maximal a2, from the closed form checked by brute force.

    Even s = 2t: t(t+3) with a2 in {t+1, t+2}; odd s = 2t+1: t(t+4)+2
    with a2 = t+2.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    t, r = divmod(s, 2)
    if r == 0:
        value, maximal = t * (t + 3), [t + 1, t + 2]
    else:
        value, maximal = t * (t + 4) + 2, [t + 2]
    best, args = 0, []
    for a2 in range(2, s + 3):
        c = cover2(a2, s)
        if c > best:
            best, args = c, [a2]
        elif c == best:
            args.append(a2)
    maximal = sorted(set(maximal))
    if (best, args) != (value, maximal):
        raise AssertionError(f"m2({s}): scan {(best, args)} != formula {(value, maximal)}")
    return value, maximal

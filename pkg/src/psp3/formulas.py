"""Closed forms: optimal generator tables, cover optima, and bounds.

All table rows are evaluated in exact integer arithmetic; the divisions
by 3 and 4 they contain are checked exact, so a transcription slip fails
loudly instead of rounding.  Rational bounds come back as Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Basis


@dataclass(frozen=True)
class OsgRow:
    """One optimal/sub-optimal generator row: n, basis, first break y."""

    n: int
    a2: int
    a3: int
    y: int

    @property
    def basis(self) -> Basis:
        return Basis(self.a2, self.a3)


@dataclass(frozen=True)
class MoptRow:
    """Best cover over optimal order-1 generators for budget s."""

    s: int
    t: int
    r: int
    k_opt: int
    n_opt: int
    x_opt: int


def _exact(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"{num} is not divisible by {den}")
    return q


def osg0(n: int) -> list[OsgRow]:
    """Longest order-0 generators: one row for odd n, two for even n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2:
        return [OsgRow(n, _exact(n + 3, 2), _exact(n * n + 6 * n + 5, 4), _exact(n * n + 4 * n - 1, 4))]
    a3 = _exact(n * n + 6 * n + 4, 4)
    return [
        OsgRow(n, _exact(n + 2, 2), a3, _exact(n * n + 4 * n, 4)),
        OsgRow(n, _exact(n + 4, 2), a3, _exact(n * n + 4 * n - 4, 4)),
    ]


def osg1(n: int) -> OsgRow:
    """The longest order-1 generator for the given n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r = n % 3
    if r == 0:
        return OsgRow(n, n + 4, _exact(n * n + 5 * n + 6, 3), _exact(n * n + 3 * n - 9, 3))
    if r == 1:
        return OsgRow(n, n + 2, _exact(n * n + 5 * n + 6, 3), _exact(n * n + 3 * n - 1, 3))
    return OsgRow(n, n + 3, _exact(n * n + 5 * n + 7, 3), _exact(n * n + 3 * n - 4, 3))


def sg1_1(n: int) -> OsgRow | None:
    """The order-1 generator one shorter than osg1(n); None when none exists."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 2:
        return OsgRow(2, 4, 6, 3)
    if n == 3:
        return OsgRow(3, 6, 9, 5)
    if n == 1:
        return None
    r = n % 3
    if r == 0:
        return OsgRow(n, n + 1, _exact(n * n + 5 * n + 3, 3), _exact(n * n + 3 * n, 3))
    if r == 1:
        return OsgRow(n, n + 5, _exact(n * n + 5 * n + 3, 3), _exact(n * n + 3 * n - 16, 3))
    return None


# residue -> (k_opt, n_opt, X_opt) as polynomials in t, s = 9t + r
_MOPT = {
    0: (lambda t: 3 * t - 1, lambda t: 6 * t + 1, (36, 54, 22, 0)),
    1: (lambda t: 3 * t, lambda t: 6 * t + 1, (36, 66, 36, 4)),
    2: (lambda t: 3 * t, lambda t: 6 * t + 2, (36, 78, 53, 8)),
    3: (lambda t: 3 * t + 1, lambda t: 6 * t + 2, (36, 90, 71, 15)),
    4: (lambda t: 3 * t + 1, lambda t: 6 * t + 3, (36, 102, 92, 22)),
    5: (lambda t: 3 * t + 1, lambda t: 6 * t + 4, (36, 114, 116, 36)),
    6: (lambda t: 3 * t + 1, lambda t: 6 * t + 5, (36, 126, 143, 49)),
    7: (lambda t: 3 * t + 2, lambda t: 6 * t + 5, (36, 138, 173, 68)),
    8: (lambda t: 3 * t + 2, lambda t: 6 * t + 6, (36, 150, 204, 86)),
}


def mopt(s: int) -> MoptRow:
    """Optimal k and cover for budget s; valid from s = 18."""
    if s < 18:
        raise ValueError(f"mopt needs s >= 18, got {s}")
    t, r = divmod(s, 9)
    k_f, n_f, (a, b, c, d) = _MOPT[r]
    k, n = k_f(t), n_f(t)
    x = ((a * t + b) * t + c) * t + d
    if n != s - k:
        raise AssertionError(f"mopt({s}): n_opt {n} != s - k_opt {s - k}")
    return MoptRow(s=s, t=t, r=r, k_opt=k, n_opt=n, x_opt=x)


# residue -> (a2, C2, C1, X-multipliers (m3, m2, m1)): a3 = C2*a2 + C1,
# X = m3*a3 + m2*a2 + m1, all linear in t
_MAXSET = {
    0: (lambda t: 6 * t + 3, lambda t: 2 * t + 1, lambda t: 2 * t + 1, (3, 0, 2, 0, 4, 0)),
    1: (lambda t: 6 * t + 3, lambda t: 2 * t + 1, lambda t: 2 * t + 1, (3, 1, 2, 0, 4, 0)),
    2: (lambda t: 6 * t + 5, lambda t: 2 * t + 1, lambda t: 2 * t + 2, (3, 1, 2, 0, 4, 1)),
    3: (lambda t: 6 * t + 5, lambda t: 2 * t + 1, lambda t: 2 * t + 2, (3, 2, 2, 0, 4, 1)),
    4: (lambda t: 6 * t + 7, lambda t: 2 * t + 1, lambda t: 2 * t + 3, (3, 2, 2, 0, 4, 2)),
    5: (lambda t: 6 * t + 6, lambda t: 2 * t + 2, lambda t: 2 * t + 2, (3, 2, 2, 1, 4, 2)),
    6: (lambda t: 6 * t + 8, lambda t: 2 * t + 2, lambda t: 2 * t + 3, (3, 2, 2, 1, 4, 3)),
    7: (lambda t: 6 * t + 8, lambda t: 2 * t + 2, lambda t: 2 * t + 3, (3, 3, 2, 1, 4, 3)),
    8: (lambda t: 6 * t + 10, lambda t: 2 * t + 2, lambda t: 2 * t + 4, (3, 3, 2, 1, 4, 4)),
}


def maximal_set(s: int) -> tuple[int, int, int]:
    """(a2, a3, X_opt) of the maximal basis for budget s; valid from s = 18.

    Cross-checked against mopt(s) and osg1(n_opt) before returning.
    """
    row = mopt(s)  # also enforces s >= 18
    t = row.t
    a2_f, c2_f, c1_f, (m3a, m3b, m2a, m2b, m1a, m1b) = _MAXSET[row.r]
    a2 = a2_f(t)
    a3 = c2_f(t) * a2 + c1_f(t)
    x = (m3a * t + m3b) * a3 + (m2a * t + m2b) * a2 + (m1a * t + m1b)
    ref = osg1(row.n_opt)
    if (a2, a3) != (ref.a2, ref.a3):
        raise AssertionError(f"maximal_set({s}): basis {(a2, a3)} != osg1({row.n_opt})")
    if x != row.x_opt:
        raise AssertionError(f"maximal_set({s}): X {x} != mopt X_opt {row.x_opt}")
    return a2, a3, x


def a2_bounds(n: int, p: int, a3: int) -> tuple[Fraction, int]:
    """(lower, upper) bounds on a2 for any SG(n,p) of length a3."""
    if n < 0 or p < 0:
        raise ValueError("n and p must be >= 0")
    return Fraction(a3 * (p + 1), n + p + 1), n * (p + 1) + 1


def a3_upper(n: int, p: int) -> Fraction:
    """Upper bound on the length of any SG(n,p)."""
    if n < 1 or p < 0:
        raise ValueError("need n >= 1 and p >= 0")
    return Fraction(n * (n + p + 1)) + Fraction(n + p + 1, p + 1)


def key1p_limit(n: int, p: int) -> Fraction:
    """Length bound (B+C)(B+3C)/4C for generators whose key is 1 or p."""
    if p < 1:
        raise ValueError("key1p_limit needs p >= 1")
    b = n * (p + 1) + 1
    c = p * p + p + 1
    return Fraction((b + c) * (b + 3 * c), 4 * c)


PP_LIMIT = Fraction(4633, 1296)  # value of the order bound as s -> infinity


def _pp_stationary_points(s: int) -> tuple[float, float]:
    """Roots of dP/da3 = 0; the larger one maximises P beyond s(s+3)/(s+1)."""
    a = 85 * s**3 + 463 * s**2 + 738 * s + 198
    b = -4 * s * (s + 1) * (s + 3) * (2 * s**2 + 27 * s + 99)
    c = 2 * s**2 * (s + 3) ** 2 * (2 * s**2 + 27 * s + 99)
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError(f"pp_bound: no stationary points at s={s} (discriminant < 0)")
    root = math.sqrt(disc)
    return (-b - root) / (2 * a), (-b + root) / (2 * a)


def pp_eval(s: int, a3: float) -> float:
    """The order bound P(a3) = ((N+1)C - a3)/(a3 - C) at budget s."""
    x = 4 * s**3 / 81 + 2 * s**2 / 3 + 22 * s / 9
    c = s + 3 - a3 / s
    n = (s + 2) - x / a3
    return ((n + 1) * c - a3) / (a3 - c)


def pp_bound(s: int) -> float:
    """Maximum of the order bound P over admissible lengths; < 4 from s = 40."""
    if s < 23:
        raise ValueError(f"pp_bound is valid for s >= 23, got {s}")
    _, a32 = _pp_stationary_points(s)
    return pp_eval(s, a32)

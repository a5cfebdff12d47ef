"""Stride-generator classification.

{1, a2, a3} is an n-stride generator of order p when every 0 < x < a3 has
a solution of x + i*a3 = c2*a2 + c1 with c2 + c1 <= n + i for some i <= p
(and p is the least such order), while some 0 < y < a3 has no solution of
y + j*a3 = c2*a2 + c1 with c2 + c1 <= n + j - 1 for any j <= p + 1.  Such
y are the "breaks"; the break order is the least j > p + 1 that repairs
the equation, or None when no j ever does (a canonical break).

Every non-trivial cover C(A,3,s) = (k+1)*a3 + y - 1 is controlled by the
generator at n = s - k, with y its first break; `underlying_sg` recovers
it and `potential_cover` prices any generator against a stamp budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Basis, CoverResult, cover3, stamps2


@dataclass(frozen=True)
class BreakInfo:
    y: int
    order: int | None  # None means canonical (no finite repair order)
    fundamental: bool

    @property
    def canonical(self) -> bool:
        return self.order is None


@dataclass(frozen=True)
class StrideGenerator:
    basis: Basis
    n: int
    p: int
    breaks: tuple[BreakInfo, ...]

    @property
    def a2(self) -> int:
        return self.basis.a2

    @property
    def a3(self) -> int:
        return self.basis.a3

    @property
    def length(self) -> int:
        return self.basis.a3

    @property
    def first_break(self) -> BreakInfo:
        return self.breaks[0]

    @property
    def canonical(self) -> bool:
        return all(b.order is None for b in self.breaks)

    def __str__(self):
        return f"SG({self.n},{self.p})"


def _order_search_limit(a2: int, a3: int, n: int) -> int:
    """Least i with no solution of v + i*a3 = c2*a2 + c1, c2+c1 <= n+i, beyond it."""
    return (n * a2) // (a3 - a2) + 1


def break_termination_bound(a2: int, a3: int, n: int) -> int:
    """J' such that y + j*a3 = c2*a2 + c1, c2+c1 <= n+j-1 has no solution for j >= J'."""
    return ((n - 1) * a2 + a3) // (a3 - a2)


def _min_orders(basis: Basis, n: int, p_cap: int | None) -> list[int] | None:
    """Minimal generation order for each 0 < x < a3, or None if some x has
    none (within p_cap when given)."""
    a2, a3 = basis.a2, basis.a3
    i_top = _order_search_limit(a2, a3, n)
    if p_cap is not None:
        i_top = min(i_top, p_cap)
    minord = [-1] * a3
    minord[0] = 0
    unresolved = a3 - 1
    for i in range(i_top + 1):
        base = i * a3
        budget = n + i
        for x in range(1, a3):
            if minord[x] < 0:
                v = base + x
                if v // a2 + v % a2 <= budget:
                    minord[x] = i
                    unresolved -= 1
        if not unresolved:
            break
    if unresolved:
        return None
    return minord


def _find_breaks(basis: Basis, n: int, p: int) -> list[int]:
    """All y failing y + j*a3 = c2*a2 + c1, c2+c1 <= n+j-1 for every j <= p+1."""
    a2, a3 = basis.a2, basis.a3
    breaks = []
    for y in range(1, a3):
        if all(stamps2(y + j * a3, a2) > n + j - 1 for j in range(p + 2)):
            breaks.append(y)
    return breaks


def _break_order(basis: Basis, n: int, p: int, y: int) -> int | None:
    a2, a3 = basis.a2, basis.a3
    for j in range(p + 2, break_termination_bound(a2, a3, n)):
        if stamps2(y + j * a3, a2) <= n + j - 1:
            return j
    return None


def _is_fundamental(basis: Basis, n: int, y: int) -> bool:
    lo = basis.a3 - basis.a2
    return lo <= y < lo + n


def classify(basis: Basis, n: int, p_cap: int | None = None) -> StrideGenerator | None:
    """Classify the basis as an n-stride generator, or None.

    With p_cap set, bases whose order would exceed it are reported as None
    without searching further (used by the enumeration engines).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    minord = _min_orders(basis, n, p_cap)
    if minord is None:
        return None
    p = max(minord[1:])
    if p_cap is not None and p > p_cap:
        return None
    ys = _find_breaks(basis, n, p)
    if not ys:
        return None
    breaks = tuple(
        BreakInfo(y=y, order=_break_order(basis, n, p, y), fundamental=_is_fundamental(basis, n, y))
        for y in ys
    )
    return StrideGenerator(basis=basis, n=n, p=p, breaks=breaks)


def break_order(basis: Basis, n: int, p: int, y: int) -> BreakInfo:
    """Break order of y in SG(n,p); rejects y that is not a break."""
    if not (0 < y < basis.a3):
        raise ValueError(f"break value must lie in (0, a3), got {y}")
    if any(stamps2(y + j * basis.a3, basis.a2) <= n + j - 1 for j in range(p + 2)):
        raise ValueError(f"{y} is not a break of {basis} at (n={n}, p={p})")
    return BreakInfo(
        y=y, order=_break_order(basis, n, p, y), fundamental=_is_fundamental(basis, n, y)
    )


def max_n(basis: Basis) -> int:
    """No basis is a stride generator beyond n = a2 + floor(a3/a2) - 2."""
    return basis.a2 + basis.a3 // basis.a2 - 2


def sg_series(basis: Basis) -> list[StrideGenerator]:
    """Every (n, p) classification of the basis, by decreasing n.

    The series is non-empty, exactly its last member is canonical, and
    successive members satisfy n' < n, p' > p + 1.
    """
    series = [sg for n in range(max_n(basis), 0, -1) if (sg := classify(basis, n))]
    if not series or any(sg.canonical for sg in series[:-1]) or not series[-1].canonical:
        raise AssertionError(f"malformed stride generator series for {basis}: {series}")
    return series


def potential_cover(sg: StrideGenerator, s: int) -> int:
    """(s - n + 1)*a3 + y - 1 with y the first break; requires s >= n."""
    if s < sg.n:
        raise ValueError(f"potential cover needs s >= n, got s={s} < n={sg.n}")
    return (s - sg.n + 1) * sg.a3 + sg.first_break.y - 1


def underlying_sg(basis: Basis, s: int) -> tuple[StrideGenerator, int]:
    """The stride generator underlying the non-trivial cover C(basis,3,s).

    Checks the cover identity X = (k+1)*a3 + y - 1 against the first break
    of the classification at n = s - k.
    """
    cr: CoverResult = cover3(basis, s)
    if cr.trivial:
        raise ValueError(f"{basis} has only a trivial cover at s={s} (X={cr.X} < a3)")
    k = cr.k
    sg = classify(basis, s - k)
    if sg is None or sg.p > k:
        raise AssertionError(f"no underlying SG({s - k},p<= {k}) found for {basis}, s={s}")
    eligible = next(b for b in sg.breaks if b.order is None or b.order > k + 1)
    if eligible.y != sg.first_break.y or cr.X != (k + 1) * sg.a3 + eligible.y - 1:
        raise AssertionError(
            f"cover mismatch for {basis}, s={s}: X={cr.X}, first break {sg.first_break.y}"
        )
    return sg, k


def construct_long_sg(n: int, k: int) -> Basis:
    """{1, (k-1)n, kn}: an n-stride generator of order <= k-1, length kn."""
    if n <= 1 or k <= 1:
        raise ValueError("construct_long_sg needs n > 1 and k > 1")
    basis = Basis(a2=(k - 1) * n, a3=k * n)
    sg = classify(basis, n)
    if sg is None or sg.p > k - 1:
        raise AssertionError(f"{basis} failed to classify as SG({n},p<={k - 1})")
    return basis

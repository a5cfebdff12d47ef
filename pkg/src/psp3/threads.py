"""Thread geometry for stride generators.

The order-i generations of SG(n,p) form contiguous runs ("threads"):
T_i(c2) starts at c2*a2 - i*a3 and has length n + i - c2 + 1.  Laid out
with one row per order they make a thread diagram; break values are
exactly the positions covered by no thread of order -1..p, and the
left-to-right order of the threads inside one a2-window (the signature)
is the permutation m -> m*key mod (p+1).

These routines are geometry only: they never call the cover machinery,
so they double as an independent oracle for the classification module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Basis
from .stride import StrideGenerator


@dataclass(frozen=True)
class Thread:
    i: int
    c2: int
    start: int
    end: int
    length: int


@dataclass(frozen=True)
class ThreadDiagram:
    basis: Basis
    n: int
    p: int
    x_lo: int
    x_hi: int
    threads: tuple[Thread, ...]  # orders 0..p
    annotations: tuple[Thread, ...]  # orders -1 and p+1
    marks: tuple[int, ...]  # values covered by no thread of order -1..p


@dataclass(frozen=True)
class Signature:
    orders: tuple[int, ...]
    key: int | None


def _make_thread(basis: Basis, n: int, i: int, c2: int) -> Thread | None:
    length = n + i - c2 + 1
    if length < 1:
        return None
    start = c2 * basis.a2 - i * basis.a3
    return Thread(i=i, c2=c2, start=start, end=start + length - 1, length=length)


def thread_at(basis: Basis, n: int, i: int, c2: int) -> Thread | None:
    """Thread T_i(c2), or None when its length would be < 1."""
    if i < 0 or c2 < 0:
        raise ValueError("thread_at needs i >= 0 and c2 >= 0")
    return _make_thread(basis, n, i, c2)


def _threads_in_range(basis: Basis, n: int, i: int, lo: int, hi: int) -> list[Thread]:
    """All order-i threads whose [start, end] meets [lo, hi]."""
    a2, a3 = basis.a2, basis.a3
    out = []
    # end >= lo: c2*(a2-1) >= lo + i*a3 - n - i ; start <= hi: c2*a2 <= hi + i*a3
    c2_lo = max(0, math.ceil((lo + i * a3 - n - i) / (a2 - 1)) if a2 > 1 else 0)
    c2_hi = min(n + i, (hi + i * a3) // a2)
    for c2 in range(c2_lo, c2_hi + 1):
        t = _make_thread(basis, n, i, c2)
        if t is not None and t.end >= lo and t.start <= hi:
            out.append(t)
    return out


def diagram(basis: Basis, n: int, p: int, x_range: tuple[int, int]) -> ThreadDiagram:
    """Thread diagram over [lo, hi] with order -1/p+1 annotation layers.

    Marks are the values in the range covered by no thread of order -1..p;
    inside (a3, 2*a3) these sit exactly a3 above the break values.
    """
    lo, hi = x_range
    if hi < lo:
        return ThreadDiagram(basis, n, p, lo, hi, (), (), ())
    threads: list[Thread] = []
    for i in range(p + 1):
        threads.extend(_threads_in_range(basis, n, i, lo, hi))
    annotations: list[Thread] = []
    for i in (-1, p + 1):
        annotations.extend(_threads_in_range(basis, n, i, lo, hi))
    covered = set()
    for t in threads:
        covered.update(range(max(t.start, lo), min(t.end, hi) + 1))
    for t in annotations:
        if t.i == -1:
            covered.update(range(max(t.start, lo), min(t.end, hi) + 1))
    marks = tuple(x for x in range(max(lo, 1), hi + 1) if x not in covered)
    threads.sort(key=lambda t: (t.i, t.c2))
    annotations.sort(key=lambda t: (t.i, t.c2))
    return ThreadDiagram(basis, n, p, lo, hi, tuple(threads), tuple(annotations), marks)


def window_threads(basis: Basis, n: int, p: int) -> list[Thread]:
    """The p+1 threads starting in [0, a2), one per order, sorted by start."""
    a2, a3 = basis.a2, basis.a3
    out = []
    for i in range(p + 1):
        c2 = -(-i * a3 // a2)  # ceil: unique start in [0, a2)
        t = _make_thread(basis, n, i, c2)
        if t is None:
            raise AssertionError(f"missing order-{i} thread in [0, a2) for {basis}, n={n}")
        out.append(t)
    out.sort(key=lambda t: t.start)
    return out


def signature(sg: StrideGenerator) -> Signature:
    """Order permutation of the window threads; key is its second element."""
    if sg.p == 0:
        return Signature(orders=(0,), key=None)
    ts = window_threads(sg.basis, sg.n, sg.p)
    orders = tuple(t.i for t in ts)
    key = orders[1]
    if orders[0] != 0 or sorted(orders) != list(range(sg.p + 1)):
        raise AssertionError(f"signature of {sg.basis} {sg} is not a 0-led permutation: {orders}")
    if any(orders[m] != (m * key) % (sg.p + 1) for m in range(sg.p + 1)):
        raise AssertionError(f"signature {orders} of {sg.basis} {sg} is not m*key mod p+1")
    if math.gcd(key, sg.p + 1) != 1:
        raise AssertionError(f"key {key} of {sg.basis} {sg} shares a factor with p+1")
    return Signature(orders=orders, key=key)


def _sg_threads(basis: Basis, n: int, p: int) -> list[Thread]:
    """All threads of order <= p meeting [0, a3): ST < a3 and ET >= 0."""
    return [t for i in range(p + 1) for t in _threads_in_range(basis, n, i, 0, basis.a3 - 1)]


def covered_thread_pairs(basis: Basis, n: int, p: int) -> list[tuple[Thread, Thread]]:
    """(inner, outer) pairs where a thread is covered by one of another order."""
    ts = sorted(_sg_threads(basis, n, p), key=lambda t: (t.start, -t.end))
    pairs = []
    for a in ts:
        for b in ts:
            if a.i != b.i and b.start <= a.start and a.end <= b.end:
                pairs.append((a, b))
    return pairs


def check_no_covered_threads(sg: StrideGenerator) -> bool:
    """True iff no thread of the generator is covered by one of another order."""
    return not covered_thread_pairs(sg.basis, sg.n, sg.p)


def relative_positions(sg: StrideGenerator) -> set[tuple[int, int]]:
    """The (order gap, start gap) pairs between successive threads.

    Any stride generator of order > 1 shows exactly two: one up-step with
    order gap equal to the key, one down-step with order gap key-(p+1).
    """
    if sg.p <= 1:
        raise ValueError("relative_positions needs p > 1")
    ts = window_threads(sg.basis, sg.n, sg.p)
    first = ts[0]
    wrap = _make_thread(sg.basis, sg.n, first.i, first.c2 + 1)
    if wrap is None:
        raise AssertionError(f"{sg.basis} {sg}: window thread has no successor")
    ts = ts + [wrap]
    out = set()
    for a, b in zip(ts, ts[1:]):
        out.add((b.i - a.i, b.start - a.start))
    if len(out) != 2:
        raise AssertionError(f"{sg.basis} {sg}: expected two relative positions, got {out}")
    return out

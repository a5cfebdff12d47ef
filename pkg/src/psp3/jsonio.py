"""Shared JSON views of analyses, used by both the CLI and the service.

Schema:
  { "basis": {"a2", "a3"}, "n", "p", "is_sg", "breaks": [{"y", "order",
    "fundamental"}], "canonical", "threads": [{"i", "c2", "start", "end"}],
    "signature", "key", "cover": {"s", "X", "k", "Y"} | null }

order is null exactly for canonical breaks.  Thread geometry is present
even when the basis is not a stride generator at n, so near-miss
configurations stay visible.
"""

from __future__ import annotations

from .core import Basis, cover3
from .stride import StrideGenerator, _min_orders, _order_search_limit, classify
from .threads import diagram, signature


def effective_order(basis: Basis, n: int) -> int:
    """Order used for geometry: the classification order when all values
    are generable, otherwise the largest minimal order of those that are."""
    minord = _min_orders(basis, n, None)
    if minord is not None:
        return max(minord[1:], default=0)
    a2, a3 = basis.a2, basis.a3
    best = 0
    for x in range(1, a3):
        for i in range(_order_search_limit(a2, a3, n) + 1):
            v = x + i * a3
            if v // a2 + v % a2 <= n + i:
                best = max(best, i)
                break
    return best


def analysis_json(
    basis: Basis,
    n: int,
    s: int | None = None,
    x_range: tuple[int, int] | None = None,
) -> dict:
    """Full analysis of (basis, n) in the shared schema."""
    sg: StrideGenerator | None = classify(basis, n)
    p = sg.p if sg is not None else effective_order(basis, n)
    lo, hi = x_range if x_range is not None else (0, 2 * basis.a3)
    dia = diagram(basis, n, p, (lo, hi))
    out: dict = {
        "basis": {"a2": basis.a2, "a3": basis.a3},
        "n": n,
        "p": p,
        "is_sg": sg is not None,
        "breaks": [],
        "canonical": sg.canonical if sg is not None else False,
        "threads": [
            {"i": t.i, "c2": t.c2, "start": t.start, "end": t.end} for t in dia.threads
        ],
        "signature": None,
        "key": None,
        "cover": None,
    }
    if sg is not None:
        out["breaks"] = [
            {"y": b.y, "order": b.order, "fundamental": b.fundamental} for b in sg.breaks
        ]
        sig = signature(sg)
        out["signature"] = list(sig.orders)
        out["key"] = sig.key
    if s is not None:
        cr = cover3(basis, s)
        out["cover"] = {"s": s, "X": cr.X, "k": cr.k, "Y": cr.Y}
    return out

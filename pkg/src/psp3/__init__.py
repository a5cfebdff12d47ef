"""Postage stamp problem workbench for three denominations."""

from .core import Basis, CoverResult, Generation, can_generate, canonical_generation, cover2, cover3, m2
from .stride import (
    BreakInfo,
    StrideGenerator,
    break_order,
    classify,
    construct_long_sg,
    potential_cover,
    sg_series,
    underlying_sg,
)
from .threads import (
    Signature,
    Thread,
    ThreadDiagram,
    check_no_covered_threads,
    diagram,
    relative_positions,
    signature,
    thread_at,
)

__all__ = [
    "Basis", "CoverResult", "Generation", "can_generate", "canonical_generation",
    "cover2", "cover3", "m2",
    "BreakInfo", "StrideGenerator", "break_order", "classify", "construct_long_sg",
    "potential_cover", "sg_series", "underlying_sg",
    "Signature", "Thread", "ThreadDiagram", "check_no_covered_threads", "diagram",
    "relative_positions", "signature", "thread_at",
]

__version__ = "0.1.0"

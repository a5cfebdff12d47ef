"""Shared helpers: deterministic random basis samplers."""

from __future__ import annotations

import random

import pytest

from psp3.core import Basis
from psp3.stride import StrideGenerator, sg_series


def random_bases(seed: int, count: int, a3_max: int = 200) -> list[Basis]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a3 = rng.randrange(3, a3_max + 1)
        a2 = rng.randrange(2, a3)
        out.append(Basis(a2, a3))
    return out


def random_cover_bases(
    seed: int, count: int, s_max: int = 20, a3_max: int = 200
) -> list[tuple[Basis, int]]:
    """(basis, s) pairs whose cover is guaranteed non-trivial: a3 stays within
    the {1,a2} reach a2*(s+3-a2)-1, so every value below a3 is generable."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = rng.randrange(2, s_max + 1)
        a2 = rng.randrange(2, s + 3)
        a3_top = min(a3_max, a2 * (s + 3 - a2) - 1)
        if a3_top <= a2 + 1:
            continue
        a3 = rng.randrange(a2 + 1, a3_top + 1)
        out.append((Basis(a2, a3), s))
    return out


def random_sgs(seed: int, count: int, a3_max: int = 200) -> list[StrideGenerator]:
    """Stride generators harvested from the series of random bases."""
    out: list[StrideGenerator] = []
    for basis in random_bases(seed, count, a3_max):
        out.extend(sg_series(basis))
    return out


@pytest.fixture(scope="session")
def sg_pool() -> list[StrideGenerator]:
    return random_sgs(seed=20260809, count=700)

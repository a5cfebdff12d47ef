"""Thread geometry: worked positions, series laws, and the geometry/
classification cross-checks."""

import math

import pytest

from psp3.core import Basis
from psp3.stride import classify
from psp3.threads import (
    _sg_threads,
    check_no_covered_threads,
    covered_thread_pairs,
    diagram,
    relative_positions,
    signature,
    thread_at,
    window_threads,
)


class TestThreadAt:
    def test_worked_thread(self):
        t = thread_at(Basis(14, 33), 8, i=2, c2=6)
        assert (t.start, t.end, t.length) == (18, 22, 5)

    def test_base_thread(self):
        t = thread_at(Basis(14, 33), 8, i=0, c2=0)
        assert (t.start, t.end, t.length) == (0, 8, 9)

    def test_absent_when_too_short(self):
        assert thread_at(Basis(14, 33), 8, i=1, c2=8 + 1 + 1) is None

    def test_length_identity(self):
        t = thread_at(Basis(30, 82), 12, i=3, c2=9)
        assert t.end - t.start + 1 == t.length

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            thread_at(Basis(14, 33), 8, i=-1, c2=0)


class TestDiagram:
    def test_single_uncovered_value(self):
        dia = diagram(Basis(14, 33), 8, 2, (0, 66))
        assert dia.marks == (55,)

    def test_breaks_appear_one_stride_up(self):
        dia = diagram(Basis(30, 82), 12, 3, (0, 163))
        assert dia.marks == (82 + 53, 82 + 59)

    def test_empty_range(self):
        dia = diagram(Basis(14, 33), 8, 2, (10, 5))
        assert dia.threads == () and dia.marks == ()

    def test_annotation_layers(self):
        dia = diagram(Basis(14, 33), 8, 2, (0, 66))
        assert {t.i for t in dia.annotations} == {-1, 3}
        assert all(t.i in (0, 1, 2) for t in dia.threads)

    def test_marks_match_classifier_breaks(self, sg_pool):
        # geometry never consults the classifier; the two must agree
        for sg in sg_pool[:250]:
            dia = diagram(sg.basis, sg.n, sg.p, (0, 2 * sg.a3 - 1))
            want = tuple(sg.a3 + b.y for b in sg.breaks)
            assert dia.marks == want, (sg.basis, sg)


class TestSignature:
    def test_identity_signature(self):
        sg = classify(Basis(30, 82), 12)
        sig = signature(sg)
        assert sig.orders == (0, 1, 2, 3) and sig.key == 1

    def test_long_signature(self):
        sg = classify(Basis(30, 38), 4)
        sig = signature(sg)
        assert sig.orders == (0, 7, 3, 10, 6, 2, 9, 5, 1, 8, 4) and sig.key == 7

    def test_order_one_signature(self):
        sg = classify(Basis(34, 51), 17)
        assert signature(sg).orders == (0, 1)

    def test_order_zero_signature_has_no_key(self):
        sg = classify(Basis(34, 68), 34)
        sig = signature(sg)
        assert sig.orders == (0,) and sig.key is None

    def test_permutation_and_key_laws(self, sg_pool):
        # m -> m*key mod (p+1); key coprime to p+1; last + second = p + 1
        for sg in sg_pool:
            sig = signature(sg)
            if sg.p == 0:
                assert sig.key is None
                continue
            assert sorted(sig.orders) == list(range(sg.p + 1))
            assert math.gcd(sig.key, sg.p + 1) == 1
            assert all(sig.orders[m] == m * sig.key % (sg.p + 1) for m in range(sg.p + 1))
            if sg.p >= 1:
                assert sig.orders[-1] + sig.orders[1] == sg.p + 1


class TestCoveredThreads:
    def test_holds_on_worked_generators(self):
        for a2, a3, n in [(14, 33, 8), (6, 13, 4), (30, 82, 12), (30, 38, 4)]:
            assert check_no_covered_threads(classify(Basis(a2, a3), n))

    def test_holds_on_random_generators(self, sg_pool):
        for sg in sg_pool[:400]:
            assert check_no_covered_threads(sg)

    def test_non_generator_geometry_can_cover(self):
        # a pleasant basis probed above its order-0 budget shows covered
        # threads in the raw geometry
        basis = Basis(5, 15)
        n = basis.a2 + basis.a3 // basis.a2 - 2 + 5
        assert classify(basis, n) is None
        assert covered_thread_pairs(basis, n, 3)


class TestRelativePositions:
    def test_identity_key_positions(self):
        sg = classify(Basis(30, 82), 12)
        assert relative_positions(sg) == {(1, 8), (-3, 6)}

    def test_key_seven_positions(self):
        sg = classify(Basis(30, 38), 4)
        assert relative_positions(sg) == {(7, 4), (-4, 2)}

    def test_rejects_low_order(self):
        with pytest.raises(ValueError):
            relative_positions(classify(Basis(34, 51), 17))

    def test_gap_structure(self, sg_pool):
        # exactly one positive and one negative order gap; the positive one
        # is the key, the negative one key - (p+1)
        for sg in sg_pool:
            if sg.p <= 1:
                continue
            pos = relative_positions(sg)
            key = signature(sg).key
            ups = {g for g, _ in pos if g > 0}
            downs = {g for g, _ in pos if g < 0}
            assert ups == {key} and downs == {key - (sg.p + 1)}
            assert all(dx > 0 for _, dx in pos)


class TestSeriesLaws:
    def test_same_order_series(self, sg_pool):
        # next thread of the same order: start + a2, one shorter
        for sg in sg_pool[:200]:
            for t in _sg_threads(sg.basis, sg.n, sg.p):
                if t.length > 1 and t.start + sg.a2 < sg.a3:
                    u = thread_at(sg.basis, sg.n, t.i, t.c2 + 1)
                    assert u is not None
                    assert u.start == t.start + sg.a2 and u.length == t.length - 1

    def test_descending_order_series(self, sg_pool):
        # T_{i-1}(c2 - C2) sits C1 to the right and is C2 - 1 longer
        for sg in sg_pool[:200]:
            c2_big, c1 = divmod(sg.a3, sg.a2)
            for t in _sg_threads(sg.basis, sg.n, sg.p):
                if t.i > 0 and t.c2 >= c2_big:
                    u = thread_at(sg.basis, sg.n, t.i - 1, t.c2 - c2_big)
                    assert u is not None
                    assert u.start == t.start + c1 and u.length == t.length + c2_big - 1

    def test_constant_length_series(self, sg_pool):
        # T_{i-1}(c2 - 1) sits a3 - a2 to the right with the same length
        for sg in sg_pool[:200]:
            for t in _sg_threads(sg.basis, sg.n, sg.p):
                if t.i > 0 and t.c2 > 0:
                    u = thread_at(sg.basis, sg.n, t.i - 1, t.c2 - 1)
                    assert u is not None
                    assert u.start == t.start + sg.a3 - sg.a2 and u.length == t.length


class TestPositionsFilled:
    def test_every_window_position_filled(self, sg_pool):
        # one k-thread starting in [a3 - a2, a3) for each k <= p, and every
        # admissible start below a3 realised
        for sg in sg_pool[:200]:
            a2, a3 = sg.a2, sg.a3
            for k in range(sg.p + 1):
                starts = [
                    t.start
                    for t in _sg_threads(sg.basis, sg.n, k)
                    if t.i == k and a3 - a2 <= t.start < a3
                ]
                assert len(starts) == 1, (sg.basis, sg, k)
            for t in _sg_threads(sg.basis, sg.n, sg.p):
                c2 = t.c2
                while c2 > 0:
                    c2 -= 1
                    prev = thread_at(sg.basis, sg.n, t.i, c2)
                    assert prev is not None

    def test_window_threads_one_per_order(self, sg_pool):
        for sg in sg_pool[:200]:
            ts = window_threads(sg.basis, sg.n, sg.p)
            assert sorted(t.i for t in ts) == list(range(sg.p + 1))
            assert all(0 <= t.start < sg.a2 for t in ts)

"""Classification goldens from the worked examples, plus the break-structure
laws on randomized generators."""

import random

import pytest

from psp3.core import Basis, cover3
from psp3.stride import (
    break_order,
    break_termination_bound,
    classify,
    construct_long_sg,
    max_n,
    potential_cover,
    sg_series,
    underlying_sg,
)
from psp3.tables import SG_34_FAMILY

from conftest import random_bases, random_cover_bases


def breaks_of(sg):
    return [(b.y, b.order) for b in sg.breaks]


class TestClassify:
    def test_canonical_two_break_example(self):
        sg = classify(Basis(6, 13), 4)
        assert (sg.n, sg.p) == (4, 2)
        assert breaks_of(sg) == [(9, None), (10, None)]
        assert sg.canonical

    def test_single_break_with_order(self):
        sg = classify(Basis(14, 33), 8)
        assert (sg.n, sg.p) == (8, 2)
        assert breaks_of(sg) == [(22, 4)]
        assert not sg.canonical

    def test_order_three_example(self):
        sg = classify(Basis(30, 82), 12)
        assert (sg.n, sg.p) == (12, 3)
        assert [b.y for b in sg.breaks] == [53, 59]

    def test_order_one_with_late_break(self):
        sg = classify(Basis(34, 51), 17)
        assert (sg.n, sg.p) == (17, 1)
        assert [b.y for b in sg.breaks] == [33, 50]
        assert [b.y for b in sg.breaks if b.fundamental] == [33]

    def test_absent_when_not_a_generator(self):
        assert classify(Basis(6, 13), 3) is None

    def test_family_with_terminal_breaks(self):
        # the twelve {1,34,a3} classifications whose last break is a3-1
        for a3, (n, p, ys, fundamental) in SG_34_FAMILY.items():
            sg = classify(Basis(34, a3), n)
            assert sg is not None and (sg.n, sg.p) == (n, p), (a3, sg)
            assert [b.y for b in sg.breaks] == ys
            assert [b.y for b in sg.breaks if b.fundamental] == fundamental

    def test_order_zero_family_around_34(self):
        for a3, n, ys in [(67, 33, [33, 66]), (68, 34, [67]), (101, 34, [67, 100]), (102, 35, [101])]:
            sg = classify(Basis(34, a3), n)
            assert (sg.n, sg.p) == (n, 0) and [b.y for b in sg.breaks] == ys
            assert sg.canonical

    def test_order_zero_characterisation(self):
        # {1,a2,a3} is SG(n,0) iff C1 = 0 or a2 - C2 <= C1 < a2, with
        # n = a2 + C2 - 2 and first break C2*a2 - 1
        for a2 in range(2, 41):
            for a3 in range(a2 + 1, 401):
                c2, c1 = divmod(a3, a2)
                sg = classify(Basis(a2, a3), a2 + c2 - 2) if a2 + c2 - 2 >= 1 else None
                pleasant = c1 == 0 or a2 - c2 <= c1 < a2
                if pleasant:
                    assert sg is not None and sg.p == 0, (a2, a3)
                    assert sg.first_break.y == c2 * a2 - 1
                else:
                    assert sg is None or sg.p != 0, (a2, a3)

    def test_order_zero_generators_are_canonical_and_alone(self, sg_pool):
        for sg in sg_pool:
            if sg.p == 0:
                assert sg.canonical
                assert len(sg_series(sg.basis)) == 1


class TestBreakOrder:
    def test_finite_order(self):
        assert break_order(Basis(14, 33), 8, 2, 22).order == 4

    def test_canonical(self):
        assert break_order(Basis(6, 13), 4, 2, 9).order is None

    def test_series_break(self):
        assert break_order(Basis(30, 38), 8, 3, 13).order == 6

    def test_rejects_non_break(self):
        with pytest.raises(ValueError):
            break_order(Basis(14, 33), 8, 2, 21)

    def test_orders_respect_termination_bound(self, sg_pool):
        for sg in sg_pool[:600]:
            bound = break_termination_bound(sg.a2, sg.a3, sg.n)
            for b in sg.breaks:
                if b.order is not None:
                    assert sg.p + 1 < b.order < bound


class TestSgSeries:
    def test_three_member_series(self):
        series = sg_series(Basis(38, 97))
        assert [(sg.n, sg.p) for sg in series] == [(19, 2), (15, 4), (14, 6)]
        assert breaks_of(series[0]) == [(71, 4)]
        assert breaks_of(series[1]) == [(67, 6)]
        assert breaks_of(series[2]) == [(67, None)]

    def test_multi_break_series(self):
        series = sg_series(Basis(30, 38))
        assert [(sg.n, sg.p) for sg in series] == [(8, 3), (6, 6), (4, 10)]
        assert breaks_of(series[0]) == [(13, 6), (21, 5)]
        assert breaks_of(series[1]) == [(11, 10), (19, 9), (27, 8)]
        assert [b.y for b in series[2].breaks] == [9, 11, 17, 19, 25, 27, 33, 35]
        assert series[2].canonical

    def test_two_member_series(self):
        series = sg_series(Basis(8, 11))
        assert [(sg.n, sg.p) for sg in series] == [(3, 2), (2, 4)]
        assert not series[0].canonical and series[1].canonical

    def test_ordering_laws(self, sg_pool):
        # n strictly decreasing, p jumping by at least 2, canonical last
        seen = set()
        for sg in sg_pool:
            if sg.basis in seen:
                continue
            seen.add(sg.basis)
            series = sg_series(sg.basis)
            for a, b in zip(series, series[1:]):
                assert b.n < a.n and b.p > a.p + 1
            assert series[-1].canonical
            assert all(not g.canonical for g in series[:-1])

    def test_break_structure_laws(self, sg_pool):
        # breaks in [a3-a2, a3); fundamentals in [a3-a2, a3-a2+n), one or
        # two of them; non-canonical generators decay strictly from the
        # first break; canonicity is all-or-none
        for sg in sg_pool:
            assert 1 <= len([b for b in sg.breaks if b.fundamental]) <= 2
            for b in sg.breaks:
                assert sg.a3 - sg.a2 <= b.y < sg.a3
            orders = [b.order for b in sg.breaks]
            assert all(o is None for o in orders) or all(o is not None for o in orders)
            if sg.a3 > 2 * sg.a2:
                assert len(sg.breaks) <= 2
                assert all(b.fundamental for b in sg.breaks)
            if orders[0] is not None:
                assert all(orders[0] > o for o in orders[1:])
            if sg.a3 < 2 * sg.a2:
                # every break extends a series rooted at a fundamental break,
                # spaced a3 - a2 apart
                roots = [b.y for b in sg.breaks if b.fundamental]
                for b in sg.breaks:
                    assert any(
                        b.y >= f and (b.y - f) % (sg.a3 - sg.a2) == 0 for f in roots
                    ), (sg.basis, sg, b)

    def test_two_fundamental_breaks_forces_canonical(self, sg_pool):
        for sg in sg_pool:
            if len([b for b in sg.breaks if b.fundamental]) == 2:
                assert sg.canonical


class TestUnderlyingSg:
    def test_worked_example(self):
        sg, k = underlying_sg(Basis(6, 13), 6)
        assert (sg.n, sg.p, k) == (4, 2, 2)

    def test_canonical_member_underlies(self):
        sg, _ = underlying_sg(Basis(8, 11), 7)
        assert (sg.n, sg.p) == (2, 4)

    def test_large_example(self):
        sg, k = underlying_sg(Basis(39, 520), 54)
        assert (sg.n, sg.p, k) == (37, 1, 17)

    def test_rejects_trivial_cover(self):
        with pytest.raises(ValueError):
            underlying_sg(Basis(55, 954), 54)

    def test_canonical_generator_underlies_all_larger_budgets(self):
        for s in range(7, 16):
            sg, _ = underlying_sg(Basis(8, 11), s)
            assert (sg.n, sg.p) == (2, 4)

    def test_potential_equals_actual_on_random_bases(self):
        for basis, s in random_cover_bases(seed=29, count=500, s_max=25, a3_max=300):
            cr = cover3(basis, s)
            sg, k = underlying_sg(basis, s)
            assert potential_cover(sg, s) == cr.X
            assert sg.p <= k


class TestPotentialCover:
    def test_realised_example(self):
        sg = classify(Basis(39, 520), 37)
        assert potential_cover(sg, 54) == 9852

    def test_unrealised_example(self):
        sg = classify(Basis(55, 954), 51)
        assert potential_cover(sg, 54) == 4730
        assert cover3(Basis(55, 954), 54).X == 108

    def test_at_s_equal_n(self):
        sg = classify(Basis(6, 13), 4)
        assert potential_cover(sg, 4) == 13 + sg.first_break.y - 1

    def test_rejects_small_s(self):
        sg = classify(Basis(6, 13), 4)
        with pytest.raises(ValueError):
            potential_cover(sg, 3)


class TestConstructLongSg:
    def test_figure_example(self):
        basis = construct_long_sg(5, 20)
        assert basis == Basis(95, 100)
        sg = classify(basis, 5)
        assert sg.p == 18 and sg.first_break.y == 9

    def test_smallest(self):
        assert construct_long_sg(2, 2) == Basis(2, 4)

    def test_order_bound_holds(self):
        basis = construct_long_sg(4, 3)
        assert basis == Basis(8, 12)
        assert classify(basis, 4).p <= 2

    def test_rejects_degenerate_parameters(self):
        with pytest.raises(ValueError):
            construct_long_sg(1, 5)
        with pytest.raises(ValueError):
            construct_long_sg(5, 1)

    def test_arbitrarily_long(self):
        for n, k in [(3, 7), (6, 11), (9, 5)]:
            basis = construct_long_sg(n, k)
            assert basis.a3 == k * n
            assert classify(basis, n).p <= k - 1


class TestResolvedDiscrepancy:
    def test_sub_optimal_order_one_row_for_n_37(self):
        # the length-519 order-1 generator at n=37: first break 488, so the
        # cover at s=54 is 18*519 + 487 = 9829
        sg = classify(Basis(42, 519), 37)
        assert (sg.n, sg.p) == (37, 1)
        assert sg.first_break.y == 488
        cr = cover3(Basis(42, 519), 54)
        assert (cr.X, cr.k, cr.Y) == (9829, 17, 487)


def test_max_n_is_tight(sg_pool):
    for sg in sg_pool[:300]:
        assert sg.n <= max_n(sg.basis)

from __future__ import absolute_import, division, print_function
__metaclass__ = type

import sys
import pytest

from hypothesis import given, settings, strategies as st

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import (
    DiffVector,
    closer_or_equal,
    compute_diff,
    diff_leq,
    diff_strictly_less,
    diff_to_json,
    strictly_closer,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_operations import (
    apply_pu1,
    apply_pu2,
    apply_pu3,
)
from .common.kripke_fixtures import (
    EXAMPLE_ONE,
    EXAMPLE_TWO_BASE,
    EXAMPLE_TWO_M1,
    EXAMPLE_TWO_M2,
    model,
)
from .common.strategies import edited, models

pytestmark = pytest.mark.skipif(
    sys.version_info < (2, 7), reason="requires python2.7 or higher"
)


@st.composite
def quadruples(draw):
    base = draw(models(max_states=4))
    return (base, draw(edited(base)), draw(edited(base)), draw(edited(base)))


class TestComputeDiff():

    def setup_method(self):
        self.base = model(EXAMPLE_TWO_BASE)
        self.m1 = model(EXAMPLE_TWO_M1)
        self.m2 = model(EXAMPLE_TWO_M2)

    def test_single_addition(self):
        d = compute_diff(self.base, self.m1)
        assert d.added_edges == frozenset([('s0', 's2')])
        assert not d.removed_edges and not d.relabeled_states
        assert not d.added_states and not d.removed_states
        assert d.size() == 1

    def test_mixed_changes(self):
        d = compute_diff(self.base, self.m2)
        assert d.added_edges == frozenset([('s1', 's0'), ('s0', 's2')])
        assert d.removed_edges == frozenset([('s3', 's0'), ('s2', 's3')])
        assert d.removed_states == frozenset(['s3'])
        assert not d.relabeled_states and not d.added_states

    def test_ordering(self):
        assert closer_or_equal(self.base, self.m1, self.m2) is True
        assert closer_or_equal(self.base, self.m2, self.m1) is False
        assert strictly_closer(self.base, self.m1, self.m2) is True
        assert strictly_closer(self.base, self.m1, self.m1) is False

    def test_self_diff_is_empty(self):
        d = compute_diff(self.base, self.base)
        assert d.is_empty()
        assert d == DiffVector()

    def test_incomparable_edges(self):
        m = model(EXAMPLE_ONE)
        cut_one = apply_pu2(m, ('s0', 's1'))
        cut_two = apply_pu2(m, ('s0', 's2'))
        assert not closer_or_equal(m, cut_one, cut_two)
        assert not closer_or_equal(m, cut_two, cut_one)

    def test_label_changes_on_same_states(self):
        m = model(EXAMPLE_ONE)
        small = apply_pu3(m, 's1', ['p', 'q', 'r'])
        large = apply_pu3(m, 's1', ['p'])
        d_small, d_large = compute_diff(m, small), compute_diff(m, large)
        assert d_small.label_changes['s1'] == (frozenset(['p']), frozenset())
        assert d_large.label_deltas['s1'] == frozenset(['p', 'q', 'r'])
        assert diff_strictly_less(d_small, d_large)

    def test_label_changes_on_different_states(self):
        m = model(EXAMPLE_ONE)
        one = compute_diff(m, apply_pu3(m, 's1', ['q']))
        two = compute_diff(m, apply_pu3(apply_pu3(m, 's1', ['p', 'q', 'r']), 's2', ['p', 'r']))
        # the relabeled sets differ, so only containment of the sets counts
        assert diff_leq(one, two)

    def test_json(self):
        d = compute_diff(self.base, self.m2)
        document = diff_to_json(d)
        assert document['added_edges'] == [['s0', 's2'], ['s1', 's0']]
        assert document['removed_edges'] == [['s2', 's3'], ['s3', 's0']]
        assert document['removed_states'] == ['s3']
        assert document['relabeled'] == {}

    def test_json_initial_switch(self):
        base = model(EXAMPLE_ONE).with_dummy()
        switched = apply_pu1(base, ('#', 's1'))
        d = compute_diff(base, switched)
        # the switch is an edge of the diff vector, only the rendering moves it
        assert d.added_edges == frozenset([('#', 's1')])
        assert d.size() == 1
        document = diff_to_json(d)
        assert document['added_edges'] == []
        assert document['added_initial'] == ['s1']
        assert document['removed_initial'] == []


class TestOrderingLaws():

    @settings(max_examples=500, deadline=None)
    @given(quadruples())
    def test_preorder(self, quad):
        base, m1, m2, m3 = quad
        d1, d2, d3 = compute_diff(base, m1), compute_diff(base, m2), compute_diff(base, m3)
        assert diff_leq(d1, d1)
        if diff_leq(d1, d2) and diff_leq(d2, d3):
            assert diff_leq(d1, d3)
        if diff_leq(d1, d2) and diff_leq(d2, d1):
            assert d1 == d2
        assert not diff_strictly_less(d1, d1)

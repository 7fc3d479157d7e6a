from __future__ import absolute_import, division, print_function
__metaclass__ = type

import sys
import pytest

from hypothesis import given, settings

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    DummyStateError,
    EdgeExistsError,
    EdgeMissingError,
    PreconditionError,
    StateExistsError,
    StateNotIsolatedError,
    UnchangedLabelError,
    UnsatisfiableError,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import parse
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import compute_diff
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import DUMMY_STATE
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_operations import (
    PrimitiveOp,
    apply_operation,
    apply_pu1,
    apply_pu2,
    apply_pu3,
    apply_pu4,
    apply_pu5,
    canonical_trace,
    fresh_state_name,
    minimal_assignments,
    replay,
)
from .common.kripke_fixtures import (
    EXAMPLE_ONE,
    EXAMPLE_TWO_BASE,
    EXAMPLE_TWO_M2,
    model,
)
from .common.strategies import edited, models

pytestmark = pytest.mark.skipif(
    sys.version_info < (2, 7), reason="requires python2.7 or higher"
)


class TestPrimitiveUpdates():

    def setup_method(self):
        self.m = model(EXAMPLE_ONE)

    def test_pu1_restores_removed_edge(self):
        cut = apply_pu2(self.m, ('s0', 's2'))
        assert ('s0', 's2') not in cut.transitions
        assert apply_pu1(cut, ('s0', 's2')) == self.m

    def test_pu1_preconditions(self):
        with pytest.raises(EdgeExistsError):
            apply_pu1(self.m, ('s0', 's1'))
        with pytest.raises(PreconditionError):
            apply_pu1(self.m, ('s0', 's9'))
        with pytest.raises(DummyStateError):
            apply_pu1(self.m.with_dummy(), ('s1', DUMMY_STATE))

    def test_pu2_preconditions(self):
        with pytest.raises(EdgeMissingError):
            apply_pu2(self.m, ('s1', 's0'))
        rooted = self.m.with_dummy()
        with pytest.raises(DummyStateError):
            apply_pu2(rooted, (DUMMY_STATE, 's0'))

    def test_pu3(self):
        relabeled = apply_pu3(self.m, 's1', ['p', 'q', 'r'])
        assert relabeled.labels['s1'] == frozenset(['p', 'q', 'r'])
        with pytest.raises(UnchangedLabelError):
            apply_pu3(self.m, 's1', ['q', 'r'])
        with pytest.raises(DummyStateError):
            apply_pu3(self.m.with_dummy(), DUMMY_STATE, ['p'])

    def test_pu3_extends_atoms(self):
        relabeled = apply_pu3(self.m, 's2', ['r', 'z'])
        assert 'z' in relabeled.atoms

    def test_pu4_and_pu5(self):
        grown = apply_pu4(self.m, 's3', ['p'])
        assert grown.is_isolated('s3')
        with pytest.raises(StateExistsError):
            apply_pu4(grown, 's3')
        assert apply_pu5(grown, 's3') == self.m
        with pytest.raises(StateNotIsolatedError):
            apply_pu5(self.m, 's1')
        with pytest.raises(DummyStateError):
            apply_pu4(self.m, DUMMY_STATE)

    def test_pu5_example_two(self):
        base = model(EXAMPLE_TWO_BASE)
        stripped = apply_pu2(apply_pu2(base, ('s3', 's0')), ('s2', 's3'))
        stripped = apply_pu5(stripped, 's3')
        stripped = apply_pu1(apply_pu1(stripped, ('s1', 's0')), ('s0', 's2'))
        assert stripped == model(EXAMPLE_TWO_M2)

    def test_fresh_state_name(self):
        assert fresh_state_name(self.m) == '_u1'
        grown = apply_pu4(self.m, '_u1')
        assert fresh_state_name(grown) == '_u2'
        assert fresh_state_name(self.m, taken=['_u1', '_u2']) == '_u3'


class TestTraces():

    def test_operation_json(self):
        assert PrimitiveOp('PU3', 's1', {'q', 'p'}).to_json() == {'op': 'PU3', 'args': ['s1', ['p', 'q']]}
        with pytest.raises(ValueError):
            PrimitiveOp('PU9', 's1')

    def test_apply_operation(self):
        m = model(EXAMPLE_ONE)
        assert apply_operation(m, PrimitiveOp('PU2', 's0', 's1')) == apply_pu2(m, ('s0', 's1'))

    def test_example_two_trace(self):
        base, target = model(EXAMPLE_TWO_BASE), model(EXAMPLE_TWO_M2)
        trace = canonical_trace(base, target)
        assert [op.op for op in trace] == ['PU1', 'PU1', 'PU2', 'PU2', 'PU5']
        assert replay(base, trace) == target

    def test_trace_order_with_new_state(self):
        base = model(EXAMPLE_ONE)
        target = apply_pu1(apply_pu4(apply_pu3(base, 's2', ['p', 'r']), '_u1', ['p']), ('s2', '_u1'))
        trace = canonical_trace(base, target)
        assert [op.op for op in trace] == ['PU4', 'PU3', 'PU1']
        assert replay(base, trace) == target

    @settings(max_examples=200, deadline=None)
    @given(models(max_states=4).flatmap(lambda m: edited(m).map(lambda e: (m, e))))
    def test_replay_reaches_target(self, pair):
        base, target = pair
        trace = canonical_trace(base, target)
        assert replay(base, trace) == target
        assert len(trace) == compute_diff(base, target).size()


class TestMinimalAssignments():

    def test_adds_missing_atom(self):
        assert minimal_assignments(['q', 'r'], parse("p")) == [frozenset(['p', 'q', 'r'])]

    def test_two_ways_to_fix_an_implication(self):
        current = ['Server.belief_valid', 'Server.out_val']
        f = parse("Server.belief_valid -> Client.belief_valid")
        assert minimal_assignments(current, f) == [
            frozenset(['Client.belief_valid', 'Server.belief_valid', 'Server.out_val']),
            frozenset(['Server.out_val']),
        ]

    def test_cap(self):
        assert len(minimal_assignments([], parse("p | q | r"), cap=2)) == 2

    def test_unsatisfiable(self):
        with pytest.raises(UnsatisfiableError):
            minimal_assignments(['p'], parse("q & !q"))

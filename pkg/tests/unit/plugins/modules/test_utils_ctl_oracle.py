from __future__ import absolute_import, division, print_function
__metaclass__ = type

import sys
import pytest

from hypothesis import assume, given, settings, strategies as st

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_checker import check
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    OracleGuardError,
    UnsatisfiableError,
    UpdateBudgetError,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    EX,
    Atom,
    Not,
    parse,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_oracle import (
    EditBudget,
    brute_force_admissible,
    brute_force_check,
    enumerate_models,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_update import (
    UpdateConfig,
    ctl_update,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import diff_strictly_less
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import (
    KripkeModel,
    PointedModel,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_operations import (
    apply_pu2,
    apply_pu3,
)
from .common.kripke_fixtures import (
    EXAMPLE_ONE,
    MICROWAVE,
    afs1_text,
    model,
    pointed,
)
from .common.strategies import ATOMS, formulas, models, single_atom_aeclass

pytestmark = pytest.mark.skipif(
    sys.version_info < (2, 7), reason="requires python2.7 or higher"
)


@st.composite
def exists_next(draw):
    atom = Atom(draw(st.sampled_from(ATOMS)))
    return EX(draw(st.sampled_from([atom, Not(atom)])))


class TestBruteForceCheck():

    @settings(max_examples=200, deadline=None)
    @given(models(max_states=3), formulas(max_depth=2))
    def test_agrees_with_checker(self, m, f):
        pm = PointedModel(m, 's0')
        assert brute_force_check(pm, f) == check(pm, f)

    def test_deadlock(self):
        m = KripkeModel(['a', 'b'], ['p'], [('a', 'b')], {'a': ['p']}, ['a'])
        assert brute_force_check(PointedModel(m, 'b'), parse("AG false")) is True
        assert brute_force_check(PointedModel(m, 'a'), parse("EX true")) is False

    def test_guards(self):
        with pytest.raises(OracleGuardError):
            brute_force_check(pointed(afs1_text()), parse("AG p"))
        with pytest.raises(OracleGuardError):
            brute_force_check(pointed(EXAMPLE_ONE), parse("AX AX AX AX AX p"))


class TestEnumerateModels():

    def test_one_step_neighbourhood(self):
        m = KripkeModel(['s0', 's1'], ['p'], [('s0', 's1'), ('s1', 's1')], {'s1': ['p']}, ['s0'])
        found = enumerate_models(m, EditBudget(max_ops=1))
        # two additions, two removals and two relabels
        assert len(found) == 7
        assert found[0] == m
        assert len(set(x.canonical_text() for x in found)) == 7

    def test_fresh_states(self):
        m = KripkeModel(['s0'], ['p'], [('s0', 's0')], {}, ['s0'])
        found = enumerate_models(m, EditBudget(max_ops=1, allow_new_states=1))
        assert sum(1 for x in found if len(x.states) == 2) == 2

    def test_guards(self):
        with pytest.raises(OracleGuardError):
            enumerate_models(model(MICROWAVE), EditBudget())
        with pytest.raises(OracleGuardError):
            enumerate_models(model(EXAMPLE_ONE), EditBudget(allow_new_states=4))
        with pytest.raises(OracleGuardError):
            enumerate_models(model(EXAMPLE_ONE), EditBudget(atom_universe=['p', 'q', 'r', 'z']))


class TestBruteForceAdmissible():

    def test_invariant_on_example_one(self):
        pm = pointed(EXAMPLE_ONE)
        found = [m for (m, _diff) in brute_force_admissible(pm, parse("AG p"), EditBudget(max_ops=2))]
        assert apply_pu2(apply_pu2(pm.model, ('s0', 's1')), ('s0', 's2')) in found
        assert apply_pu3(apply_pu3(pm.model, 's1', ['p', 'q', 'r']), 's2', ['p', 'r']) in found

    def test_satisfied_base_is_the_only_answer(self):
        pm = pointed(EXAMPLE_ONE)
        found = brute_force_admissible(pm, parse("EG p"), EditBudget(max_ops=1))
        assert [m for (m, _diff) in found] == [pm.model]
        assert found[0][1].is_empty()


class TestEngineAgainstOracle():

    @settings(max_examples=100, deadline=None)
    @given(models(max_states=3), single_atom_aeclass())
    def test_candidates_are_sound(self, m, f):
        pm = PointedModel(m, 's0')
        try:
            candidates = ctl_update(pm, f, UpdateConfig(max_new_states=0, max_steps=2000))
        except (UnsatisfiableError, UpdateBudgetError):
            assume(False)
        for c in candidates:
            assert brute_force_check(PointedModel(c.model, c.start), f)

    @settings(max_examples=100, deadline=None)
    @given(models(max_states=3), single_atom_aeclass())
    def test_no_candidate_is_beaten_by_a_nearby_model(self, m, f):
        pm = PointedModel(m, 's0')
        try:
            candidates = ctl_update(pm, f, UpdateConfig(max_new_states=0, max_steps=2000))
        except (UnsatisfiableError, UpdateBudgetError):
            assume(False)
        for (_o, od) in brute_force_admissible(pm, f, EditBudget(max_ops=2)):
            for c in candidates:
                assert not diff_strictly_less(od, c.diff)

    @settings(max_examples=100, deadline=None)
    @given(models(max_states=3), exists_next())
    def test_one_step_repairs_are_found(self, m, f):
        pm = PointedModel(m, 's0')
        assume(not check(pm, f))
        oracle = brute_force_admissible(pm, f, EditBudget(max_ops=1))
        assume(oracle)
        candidates = ctl_update(pm, f, UpdateConfig(max_new_states=0))
        assert min(len(c.trace) for c in candidates) == 1
        found = set(c.model.canonical_text() for c in candidates)
        for (o, _od) in oracle:
            assert o.canonical_text() in found

from __future__ import absolute_import, division, print_function
__metaclass__ = type

import json
import sys
import pytest

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import ModelError
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import compute_diff
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import (
    DUMMY_STATE,
    KripkeModel,
    Lasso,
    PointedModel,
    dump_model_json,
    export_dot,
    load_model,
    parse_model,
    parse_model_json,
    reachable_states,
    serialize_model,
)
from .common.kripke_fixtures import (
    EXAMPLE_ONE,
    EXAMPLE_TWO_BASE,
    EXAMPLE_TWO_M2,
    MICROWAVE,
    afs1_text,
    write_fixture,
)

pytestmark = pytest.mark.skipif(
    sys.version_info < (2, 7), reason="requires python2.7 or higher"
)


class TestKripkeModel():

    def test_example_one(self):
        m = parse_model(EXAMPLE_ONE)
        assert m.states == ('s0', 's1', 's2')
        assert len(m.transitions) == 6
        assert m.successors('s0') == frozenset(['s0', 's1', 's2'])
        assert m.label('s1') == frozenset(['q', 'r'])
        assert reachable_states(PointedModel(m, 's0')) == frozenset(['s0', 's1', 's2'])

    def test_afs1_shape(self):
        m = parse_model(afs1_text())
        assert len(m.states) == 26
        assert len(m.transitions) == 52
        assert m.initial == frozenset(['11', '12', '13', '14'])

        rooted = m.with_dummy()
        assert rooted.successors(DUMMY_STATE) == m.initial
        assert len(rooted.transitions) == 56
        assert len(rooted.reachable_states(DUMMY_STATE)) == 26
        assert rooted.predecessors(DUMMY_STATE) == frozenset()
        assert rooted.strip_dummy() == m

    def test_deadlock_successors(self):
        m = KripkeModel(['a', 'b'], [], [('a', 'b')], {}, ['a'])
        assert m.successors('b') == frozenset()
        assert m.reachable_states('b') == frozenset(['b'])

    @pytest.mark.parametrize("text", [
        "atoms: p\nstate s0: q\ninit: s0\n",
        "atoms: p\nstate s0\ninit: s0\ntrans: s0 -> s9\n",
        "atoms: p\nstate s0\n",
        "atoms: p\nstate s0\nstate s0\ninit: s0\n",
        "atoms: p\nstate #\ninit: #\n",
        "atoms: p\nstate _u1\ninit: _u1\n",
        "atoms: p\nstate s0\ninit: s0\ntrans: s0\n",
        "atoms: p\nfoo s0\n",
    ])
    def test_invalid_documents(self, text):
        with pytest.raises(ModelError):
            parse_model(text)

    @pytest.mark.parametrize("word", ["U", "A", "E", "AG", "EX", "true", "false"])
    def test_keywords_are_not_atoms(self, word):
        with pytest.raises(ModelError):
            parse_model("atoms: p %s\nstate s0: p\ninit: s0\n" % word)
        with pytest.raises(ModelError):
            parse_model_json({'atoms': [word], 'states': {'s0': [word]}, 'init': ['s0']})

    def test_fresh_names_when_allowed(self):
        m = parse_model("atoms: p\nstate _u1: p\ninit: _u1\n", allow_fresh_names=True)
        assert m.states == ('_u1',)

    def test_dummy_root_rules(self):
        m = parse_model(EXAMPLE_ONE).with_dummy()
        assert m.label(DUMMY_STATE) == frozenset()
        with pytest.raises(ModelError):
            m.with_dummy()
        with pytest.raises(ModelError):
            m.evolve(transitions=m.transitions | frozenset([('s1', DUMMY_STATE)]))

    def test_json_document(self):
        m = parse_model(MICROWAVE)
        assert parse_model_json(dump_model_json(m)) == m

    def test_candidate_document(self):
        grown = parse_model("atoms: p\nstate s0: p\nstate _u1: p\ninit: s0\ntrans: s0 -> _u1\n", allow_fresh_names=True)
        document = {'index': 1, 'model': json.loads(dump_model_json(grown)), 'trace': []}
        assert parse_model_json(json.dumps(document)) == grown

    def test_serialize_is_canonical(self):
        m = parse_model(EXAMPLE_ONE)
        text = serialize_model(m)
        assert text.splitlines()[0] == 'atoms: p q r'
        assert parse_model(text) == m

    def test_load_model_by_extension(self, tmp_path):
        m = parse_model(MICROWAVE)
        json_path = write_fixture(tmp_path, 'oven.json', dump_model_json(m))
        text_path = write_fixture(tmp_path, 'oven.kripke', MICROWAVE)
        assert load_model(json_path) == m
        assert load_model(text_path) == m
        with pytest.raises(ModelError):
            load_model(str(tmp_path / 'missing.kripke'))


class TestLasso():

    def test_unfold_and_edges(self):
        lasso = Lasso(['s0', 's1'], ['s2', 's3'])
        assert lasso.head == 's0'
        assert lasso.unfold(7) == ['s0', 's1', 's2', 's3', 's2', 's3', 's2']
        assert lasso.later_states() == frozenset(['s1', 's2', 's3'])
        assert lasso.edges() == [('s0', 's1'), ('s1', 's2'), ('s2', 's3'), ('s3', 's2')]

    def test_pure_loop(self):
        lasso = Lasso([], ['s4'])
        assert lasso.head == 's4'
        assert lasso.later_states() == frozenset(['s4'])

    def test_validate(self):
        m = parse_model(EXAMPLE_ONE)
        Lasso(['s0'], ['s1']).validate(m)
        with pytest.raises(ModelError):
            Lasso(['s1'], ['s2']).validate(m)
        with pytest.raises(ModelError):
            Lasso(['s0'], [])


class TestExportDot():

    def test_plain_export(self):
        dot = export_dot(parse_model(EXAMPLE_ONE))
        lines = dot.splitlines()
        assert lines[0] == 'digraph "kripke" {'
        assert len([line for line in lines if '->' in line]) == 6
        assert len([line for line in lines if 'shape=' in line]) == 3
        assert 'shape=doublecircle' in [line for line in lines if line.startswith('  "s0" [')][0]

    def test_highlighted_repair(self):
        base = parse_model(MICROWAVE)
        repaired = base.evolve(transitions=base.transitions - frozenset([('s1', 's2')]))
        dot = export_dot(repaired, highlight=compute_diff(base, repaired))
        assert '"s1" -> "s2" [style="dashed", color="grey"];' in dot
        assert '  "s1" -> "s2";' not in dot

    def test_removed_states_are_dashed(self):
        base = parse_model(EXAMPLE_TWO_BASE)
        shrunk = parse_model(EXAMPLE_TWO_M2)
        dot = export_dot(shrunk, highlight=compute_diff(base, shrunk))
        assert '  "s3" [label="s3", shape=circle, style="dashed", color="grey"];' in dot
        assert '  "s2" -> "s3" [style="dashed", color="grey"];' in dot
        assert '  "s3" -> "s0" [style="dashed", color="grey"];' in dot

    def test_dummy_is_hidden(self):
        dot = export_dot(parse_model(afs1_text()).with_dummy())
        assert '"#"' not in dot

# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import json
import os
import re
import traceback

try:
    import networkx as nx
    NETWORKX_IMP_ERR = None
except ImportError:
    NETWORKX_IMP_ERR = traceback.format_exc()

from ansible.module_utils._text import to_native

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    MissingLibError,
    ModelError
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import RESERVED_WORDS


DUMMY_STATE = '#'
FRESH_PREFIX = '_u'
NAME_PATTERN = re.compile(r'^[A-Za-z0-9_.]+$')


def check_requirements():
    if NETWORKX_IMP_ERR:
        raise MissingLibError('networkx', NETWORKX_IMP_ERR)


class KripkeModel(object):
    """
    Immutable Kripke model (S, R, L) with declared atoms and a nonempty set of initial states.
    When has_dummy is set, the reserved state '#' roots the model: it carries an empty label,
    has no incoming edges and its successors are exactly the initial states.
    """

    def __init__(self, states, atoms, transitions, labels, initial, has_dummy=False):
        states = list(states)
        if len(set(states)) != len(states):
            dupes = sorted(set(s for s in states if states.count(s) > 1))
            raise ModelError("Duplicate state name(s): %s" % ', '.join(dupes))

        self.states = tuple(sorted(states))
        self.atoms = frozenset(atoms)
        self.transitions = frozenset(tuple(e) for e in transitions)
        self.labels = dict((s, frozenset(labels.get(s, ()))) for s in self.states)
        self.has_dummy = has_dummy
        if has_dummy:
            initial = [t for (s, t) in self.transitions if s == DUMMY_STATE]
        self.initial = frozenset(initial)

        self._succ = dict((s, set()) for s in self.states)
        self._pred = dict((s, set()) for s in self.states)
        self._validate(labels)
        for (s, t) in self.transitions:
            self._succ[s].add(t)
            self._pred[t].add(s)
        self._succ = dict((s, frozenset(v)) for s, v in self._succ.items())
        self._pred = dict((s, frozenset(v)) for s, v in self._pred.items())

        self._text = None
        self._graph = None

    def _validate(self, labels):
        state_set = set(self.states)
        unknown = set(labels) - state_set
        if unknown:
            raise ModelError("Label given for unknown state(s): %s" % ', '.join(sorted(unknown)))

        for s in self.states:
            undeclared = self.labels[s] - self.atoms
            if undeclared:
                raise ModelError("State %s is labeled with undeclared atom(s): %s" % (s, ', '.join(sorted(undeclared))))

        for (s, t) in sorted(self.transitions):
            if s not in state_set or t not in state_set:
                raise ModelError("Transition %s -> %s refers to an unknown state" % (s, t))

        if not self.initial:
            raise ModelError("The set of initial states is empty")
        missing = self.initial - state_set
        if missing:
            raise ModelError("Initial state(s) not declared: %s" % ', '.join(sorted(missing)))

        if self.has_dummy:
            if DUMMY_STATE not in state_set:
                raise ModelError("Model is marked with a dummy root but has no state %s" % DUMMY_STATE)
            if self.labels[DUMMY_STATE]:
                raise ModelError("The dummy root must carry an empty label")
            if any(t == DUMMY_STATE for (s, t) in self.transitions):
                raise ModelError("The dummy root must not have incoming transitions")
        elif DUMMY_STATE in state_set:
            raise ModelError("State name %s is reserved for the dummy root" % DUMMY_STATE)

    @property
    def dummy(self):
        return DUMMY_STATE if self.has_dummy else None

    def label(self, state):
        try:
            return self.labels[state]
        except KeyError:
            raise ModelError("Unknown state %s" % state)

    def successors(self, state):
        try:
            return self._succ[state]
        except KeyError:
            raise ModelError("Unknown state %s" % state)

    def predecessors(self, state):
        try:
            return self._pred[state]
        except KeyError:
            raise ModelError("Unknown state %s" % state)

    def is_isolated(self, state):
        return not self.successors(state) and not self.predecessors(state)

    def evolve(self, states=None, atoms=None, transitions=None, labels=None, initial=None):
        """
        Build a new model from this one with some components replaced. Initial states of a
        dummy-rooted model always follow the dummy's edges.
        """
        return KripkeModel(
            self.states if states is None else states,
            self.atoms if atoms is None else atoms,
            self.transitions if transitions is None else transitions,
            self.labels if labels is None else labels,
            self.initial if initial is None else initial,
            has_dummy=self.has_dummy,
        )

    def with_dummy(self):
        if self.has_dummy or DUMMY_STATE in self.states:
            raise ModelError("Model already has a dummy root")
        labels = dict(self.labels)
        labels[DUMMY_STATE] = frozenset()
        transitions = set(self.transitions) | set((DUMMY_STATE, s) for s in self.initial)
        return KripkeModel(self.states + (DUMMY_STATE,), self.atoms, transitions, labels, self.initial, has_dummy=True)

    def strip_dummy(self):
        if not self.has_dummy:
            return self
        states = [s for s in self.states if s != DUMMY_STATE]
        transitions = [(s, t) for (s, t) in self.transitions if s != DUMMY_STATE]
        labels = dict((s, l) for s, l in self.labels.items() if s != DUMMY_STATE)
        return KripkeModel(states, self.atoms, transitions, labels, self.initial)

    def to_digraph(self):
        check_requirements()
        if self._graph is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(self.states)
            graph.add_edges_from(sorted(self.transitions))
            self._graph = graph
        return self._graph

    def reachable_states(self, start):
        """
        States on some path from start, start included. The dummy root is never reported.
        """
        if start not in self._succ:
            raise ModelError("Unknown state %s" % start)
        found = set(nx.descendants(self.to_digraph(), start))
        found.add(start)
        found.discard(DUMMY_STATE)
        return frozenset(found)

    def canonical_text(self):
        if self._text is None:
            self._text = serialize_model(self, keep_dummy=True)
        return self._text

    def __eq__(self, other):
        if not isinstance(other, KripkeModel):
            return False
        return self.canonical_text() == other.canonical_text()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.canonical_text())

    def __repr__(self):
        return "KripkeModel(states=%d, transitions=%d, initial=%s)" % (
            len(self.states), len(self.transitions), sorted(self.initial))


class PointedModel(object):
    def __init__(self, model, start):
        if start not in model.states:
            raise ModelError("Start state %s is not a state of the model" % start)
        self.model = model
        self.start = start

    def __eq__(self, other):
        return isinstance(other, PointedModel) and self.start == other.start and self.model == other.model

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.start, self.model))

    def __repr__(self):
        return "PointedModel(%r, start=%s)" % (self.model, self.start)


class Lasso(object):
    """
    Finite representation of the infinite path stem + loop + loop + ...
    """

    def __init__(self, stem, loop):
        if not loop:
            raise ModelError("A lasso needs a nonempty loop")
        self.stem = tuple(stem)
        self.loop = tuple(loop)

    @property
    def head(self):
        return self.stem[0] if self.stem else self.loop[0]

    def states(self):
        return frozenset(self.stem) | frozenset(self.loop)

    def later_states(self):
        """
        States occurring at some position after the first one of the unfolded path.
        """
        if self.stem:
            return frozenset(self.stem[1:]) | frozenset(self.loop)
        return frozenset(self.loop)

    def edges(self):
        sequence = self.stem + self.loop
        pairs = [(sequence[i], sequence[i + 1]) for i in range(len(sequence) - 1)]
        pairs.append((self.loop[-1], self.loop[0]))
        return pairs

    def validate(self, model):
        for edge in self.edges():
            if edge not in model.transitions:
                raise ModelError("Lasso step %s -> %s is not a transition" % edge)

    def unfold(self, length):
        sequence = list(self.stem)
        while len(sequence) < length:
            sequence.extend(self.loop)
        return sequence[:length]

    def __eq__(self, other):
        return isinstance(other, Lasso) and (self.stem, self.loop) == (other.stem, other.loop)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.stem, self.loop))

    def __repr__(self):
        return "Lasso(stem=%s, loop=%s)" % (list(self.stem), list(self.loop))


def _check_name(name, what, allow_fresh_names):
    if not NAME_PATTERN.match(name):
        raise ModelError("Invalid %s name %r" % (what, name))
    if what == 'atom' and name in RESERVED_WORDS:
        raise ModelError("Atom name %s is a formula keyword" % name)
    if what == 'state' and not allow_fresh_names and name.startswith(FRESH_PREFIX):
        raise ModelError("State name %s uses the reserved prefix %s" % (name, FRESH_PREFIX))


def parse_model(text, allow_fresh_names=False):
    """
    Parse the line-oriented model document.
    Args:
        text: str, document text. Blank lines and lines starting with '#' are skipped.
        allow_fresh_names: bool, accept state names with the reserved fresh-state prefix. Used when
                           reading models written by the update engine.
    Returns:
        KripkeModel
    Raises:
        ModelError on malformed lines or model invariant violations
    """
    atoms, states, labels, initial, transitions = [], [], {}, [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        keyword, sep, rest = line.partition(' ')
        keyword = keyword.rstrip(':')
        if keyword == 'atoms':
            for atom in rest.lstrip(':').split():
                _check_name(atom, 'atom', allow_fresh_names)
                atoms.append(atom)
        elif keyword == 'state':
            name, _sep, label = rest.partition(':')
            name = name.strip()
            _check_name(name, 'state', allow_fresh_names)
            if name in labels:
                raise ModelError("Line %d: duplicate state name %s" % (lineno, name))
            states.append(name)
            labels[name] = label.split()
        elif keyword == 'init':
            initial.extend(rest.lstrip(':').split())
        elif keyword == 'trans':
            source, arrow, target = rest.lstrip(':').partition('->')
            if not arrow or not source.strip() or not target.strip():
                raise ModelError("Line %d: expected 'trans: <from> -> <to>'" % lineno)
            transitions.append((source.strip(), target.strip()))
        else:
            raise ModelError("Line %d: unrecognized entry %r" % (lineno, line))

    return KripkeModel(states, atoms, transitions, labels, initial)


def parse_model_json(text, allow_fresh_names=False):
    try:
        document = json.loads(text) if not isinstance(text, dict) else text
    except ValueError as e:
        raise ModelError("Model document is not valid JSON: %s" % to_native(e))
    if not isinstance(document, dict):
        raise ModelError("Model document must be a JSON object")
    if isinstance(document.get('model'), dict) and 'states' not in document:
        # a candidate document written by ctl_update, its model may carry fresh state names
        document = document['model']
        allow_fresh_names = True

    states = document.get('states') or {}
    if not isinstance(states, dict):
        raise ModelError("'states' must map state names to label lists")
    for name in states:
        _check_name(name, 'state', allow_fresh_names)
    atoms = list(document.get('atoms') or [])
    for atom in atoms:
        _check_name(atom, 'atom', allow_fresh_names)
    try:
        transitions = [(pair[0], pair[1]) for pair in document.get('trans') or []]
    except (IndexError, TypeError, KeyError):
        raise ModelError("'trans' must be a list of [from, to] pairs")

    return KripkeModel(
        list(states), atoms, transitions,
        dict((s, l or []) for s, l in states.items()),
        document.get('init') or []
    )


def serialize_model(model, keep_dummy=False):
    """
    Canonical text rendering: states sorted by name, transitions by (from, to).
    The dummy root is stripped unless keep_dummy is set.
    """
    if not keep_dummy:
        model = model.strip_dummy()
    lines = ['atoms: %s' % ' '.join(sorted(model.atoms))]
    for s in model.states:
        label = sorted(model.labels[s])
        lines.append('state %s: %s' % (s, ' '.join(label)) if label else 'state %s' % s)
    lines.append('init: %s' % ' '.join(sorted(model.initial)))
    for (s, t) in sorted(model.transitions):
        lines.append('trans: %s -> %s' % (s, t))
    return '\n'.join(lines) + '\n'


def model_to_json(model):
    model = model.strip_dummy()
    return {
        'atoms': sorted(model.atoms),
        'states': dict((s, sorted(model.labels[s])) for s in model.states),
        'init': sorted(model.initial),
        'trans': [[s, t] for (s, t) in sorted(model.transitions)],
    }


def dump_model_json(model):
    return json.dumps(model_to_json(model), sort_keys=True, indent=2) + '\n'


def load_model(path, model_format='auto', allow_fresh_names=False):
    """
    Read a model document from disk.
    Args:
        path: str, the document path
        model_format: str, one of auto, text or json. auto picks json for a .json extension
        allow_fresh_names: bool, see parse_model
    """
    if model_format == 'auto':
        model_format = 'json' if os.path.splitext(path)[1].lower() == '.json' else 'text'
    try:
        with open(path, 'r') as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise ModelError("Unable to read model document %s: %s" % (path, to_native(e)))

    if model_format == 'json':
        return parse_model_json(text, allow_fresh_names=allow_fresh_names)
    return parse_model(text, allow_fresh_names=allow_fresh_names)


def reachable_states(pm):
    return pm.model.reachable_states(pm.start)


def with_dummy(model):
    return model.with_dummy()


def successors(model, state):
    return model.successors(state)


def predecessors(model, state):
    return model.predecessors(state)


def _gvquote(s):
    return '"%s"' % s.replace('\\', '\\\\').replace('"', '\\"').replace('\n', '\\n')


def export_dot(model, highlight=None, name='kripke'):
    """
    Render the model as a DOT digraph. The dummy root is left out and initial states are drawn
    with a double circle.
    Args:
        model: KripkeModel
        highlight: optional DiffVector computed against some base. Added states and edges are
                   drawn in green, relabeled states in orange, removed states and edges as dashed
                   grey nodes and lines.
    Returns:
        str
    """
    added_edges = removed_edges = added_states = removed_states = relabeled = frozenset()
    if highlight is not None:
        added_edges = highlight.added_edges
        removed_edges = highlight.removed_edges
        added_states = highlight.added_states
        removed_states = highlight.removed_states
        relabeled = highlight.relabeled_states

    lines = ['digraph %s {' % _gvquote(name), '  rankdir=LR;']
    initial = model.initial
    for s in model.states:
        if s == DUMMY_STATE:
            continue
        label = '%s\n{%s}' % (s, ', '.join(sorted(model.labels[s])))
        attrs = ['label=%s' % _gvquote(label)]
        attrs.append('shape=%s' % ('doublecircle' if s in initial else 'circle'))
        if s in added_states:
            attrs.append('color="green"')
        elif s in relabeled:
            attrs.append('style="filled"')
            attrs.append('fillcolor="orange"')
        lines.append('  %s [%s];' % (_gvquote(s), ', '.join(attrs)))
    for s in sorted(removed_states - frozenset([DUMMY_STATE])):
        lines.append('  %s [label=%s, shape=circle, style="dashed", color="grey"];' % (_gvquote(s), _gvquote(s)))

    for (s, t) in sorted(model.transitions):
        if DUMMY_STATE in (s, t):
            continue
        attrs = ' [color="green"]' if (s, t) in added_edges else ''
        lines.append('  %s -> %s%s;' % (_gvquote(s), _gvquote(t), attrs))

    state_set = set(model.states) | set(removed_states)
    for (s, t) in sorted(removed_edges):
        if DUMMY_STATE in (s, t) or s not in state_set or t not in state_set:
            continue
        lines.append('  %s -> %s [style="dashed", color="grey"];' % (_gvquote(s), _gvquote(t)))

    lines.append('}')
    return '\n'.join(lines) + '\n'

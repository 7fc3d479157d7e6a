# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import itertools

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    DummyStateError,
    EdgeExistsError,
    EdgeMissingError,
    ModelError,
    PreconditionError,
    StateExistsError,
    StateNotIsolatedError,
    UnchangedLabelError,
    UnsatisfiableError
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    atoms as formula_atoms,
    evaluate,
    format_formula,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import compute_diff
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import (
    DUMMY_STATE,
    FRESH_PREFIX,
    NAME_PATTERN,
)


OPERATION_NAMES = ('PU1', 'PU2', 'PU3', 'PU4', 'PU5')


class PrimitiveOp(object):
    """
    One primitive update step.
        PU1 (source, target): add a transition
        PU2 (source, target): remove a transition
        PU3 (state, label): replace the label of a state
        PU4 (state, label): add an isolated state
        PU5 (state,): remove an isolated state
    """

    def __init__(self, op, *args):
        if op not in OPERATION_NAMES:
            raise ValueError("Unknown primitive operation %s" % op)
        self.op = op
        self.args = tuple(frozenset(a) if isinstance(a, (set, frozenset, list)) else a for a in args)

    def to_json(self):
        return {
            'op': self.op,
            'args': [sorted(a) if isinstance(a, frozenset) else a for a in self.args],
        }

    def __eq__(self, other):
        return isinstance(other, PrimitiveOp) and (self.op, self.args) == (other.op, other.args)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.op, self.args))

    def __repr__(self):
        return "%s%r" % (self.op, tuple(sorted(a) if isinstance(a, frozenset) else a for a in self.args))


def _dummy_guard(model, state, action):
    if model.has_dummy and state == DUMMY_STATE:
        raise DummyStateError("Cannot %s the dummy root" % action)


def apply_pu1(model, edge):
    source, target = edge
    for s in (source, target):
        if s not in model.labels:
            raise PreconditionError("PU1 endpoint %s is not a state of the model" % s)
    if target == DUMMY_STATE:
        raise DummyStateError("The dummy root cannot receive transitions")
    if (source, target) in model.transitions:
        raise EdgeExistsError("Transition %s -> %s already exists" % (source, target))
    return model.evolve(transitions=model.transitions | frozenset([(source, target)]))


def apply_pu2(model, edge):
    source, target = edge
    if (source, target) not in model.transitions:
        raise EdgeMissingError("Transition %s -> %s does not exist" % (source, target))
    if model.has_dummy and source == DUMMY_STATE and len(model.successors(DUMMY_STATE)) == 1:
        raise DummyStateError("Removing %s -> %s would leave no initial state" % (source, target))
    return model.evolve(transitions=model.transitions - frozenset([(source, target)]))


def apply_pu3(model, state, label):
    label = frozenset(label)
    if state not in model.labels:
        raise PreconditionError("PU3 target %s is not a state of the model" % state)
    _dummy_guard(model, state, 'relabel')
    if model.labels[state] == label:
        raise UnchangedLabelError("State %s already carries label {%s}" % (state, ', '.join(sorted(label))))
    labels = dict(model.labels)
    labels[state] = label
    return model.evolve(atoms=model.atoms | label, labels=labels)


def apply_pu4(model, state, label=()):
    label = frozenset(label)
    if state == DUMMY_STATE:
        raise DummyStateError("The dummy root name cannot be reused")
    if not NAME_PATTERN.match(state):
        raise ModelError("Invalid state name %r" % state)
    if state in model.labels:
        raise StateExistsError("State %s already exists" % state)
    labels = dict(model.labels)
    labels[state] = label
    return model.evolve(states=model.states + (state,), atoms=model.atoms | label, labels=labels)


def apply_pu5(model, state):
    if state not in model.labels:
        raise PreconditionError("PU5 target %s is not a state of the model" % state)
    _dummy_guard(model, state, 'remove')
    if not model.is_isolated(state):
        raise StateNotIsolatedError("State %s still has incident transitions" % state)
    initial = model.initial - frozenset([state])
    if not initial:
        raise PreconditionError("Removing %s would leave no initial state" % state)
    labels = dict(model.labels)
    del labels[state]
    return model.evolve(states=[s for s in model.states if s != state], labels=labels, initial=initial)


def apply_operation(model, op):
    if op.op == 'PU1':
        return apply_pu1(model, op.args)
    if op.op == 'PU2':
        return apply_pu2(model, op.args)
    if op.op == 'PU3':
        return apply_pu3(model, op.args[0], op.args[1])
    if op.op == 'PU4':
        return apply_pu4(model, op.args[0], op.args[1])
    return apply_pu5(model, op.args[0])


def replay(model, trace):
    for op in trace:
        model = apply_operation(model, op)
    return model


def canonical_trace(base, model):
    """
    Rebuild a replayable operation trace that turns base into model: new states first, then
    relabels, added transitions, removed transitions and finally removed states.
    """
    diff = compute_diff(base, model)
    trace = [PrimitiveOp('PU4', s, model.labels[s]) for s in sorted(diff.added_states)]
    trace += [PrimitiveOp('PU3', s, model.labels[s]) for s in sorted(diff.relabeled_states)]
    trace += [PrimitiveOp('PU1', s, t) for (s, t) in sorted(diff.added_edges)]
    trace += [PrimitiveOp('PU2', s, t) for (s, t) in sorted(diff.removed_edges)]
    trace += [PrimitiveOp('PU5', s) for s in sorted(diff.removed_states)]
    return trace


def minimal_assignments(current, f, ap=(), cap=8):
    """
    Labels satisfying a propositional formula whose change from the current label is minimal.
    Only atoms of f are varied; any other atom keeps its current value.
    Args:
        current: the present label of the state
        f: propositional Formula
        ap: the atom universe of the model. Atoms of f missing from it are still allowed
        cap: int, maximum number of labels returned
    Returns:
        list of frozensets ordered by size of change, then by sorted label
    Raises:
        UnsatisfiableError if no label satisfies f
    """
    current = frozenset(current)
    varied = sorted(formula_atoms(f))
    fixed = current - frozenset(varied)
    options = []
    for bits in itertools.product((False, True), repeat=len(varied)):
        label = fixed | frozenset(a for a, b in zip(varied, bits) if b)
        if evaluate(f, label):
            options.append((label, label ^ current))
    if not options:
        raise UnsatisfiableError("Formula %s has no satisfying label" % format_formula(f))

    minimal = [
        (label, delta) for (label, delta) in options
        if not any(other < delta for (_l, other) in options)
    ]
    minimal.sort(key=lambda item: (len(item[1]), sorted(item[0])))
    return [label for (label, _delta) in minimal[:cap]]


def fresh_state_name(model, taken=()):
    index = 1
    while True:
        name = '%s%d' % (FRESH_PREFIX, index)
        if name not in model.labels and name not in taken:
            return name
        index += 1

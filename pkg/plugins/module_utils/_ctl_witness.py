# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import deque

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_checker import (
    enumerate_lassos,
    infinite_states,
    sat,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    AF, AG, AU, AX, EF, EG, EU, EX,
    classify_aeclass,
    evaluate,
    format_formula,
)


STATE_KINDS = (AX, EX)


def _forward_closure(model, sources, through=None):
    found = set(sources)
    queue = deque(sorted(sources))
    while queue:
        s = queue.popleft()
        for t in model.successors(s):
            if t not in found and (through is None or t in through):
                found.add(t)
                queue.append(t)
    return frozenset(found)


def _until_index_ok(sequence, left, right, label_of):
    for s in sequence:
        if evaluate(right, label_of(s)):
            return True
        if not evaluate(left, label_of(s)):
            return False
    return False


class WitnessEntry(object):
    """
    Valid states or valid paths of one atomic AEClass subformula.
    For AX/EX only valid_states is used. For the path kinds, heads holds the first states of
    valid paths and path_states every state lying on some valid path; paths() yields the valid
    simple lassos themselves.
    """

    def __init__(self, model, start, formula, valid_states=frozenset(), heads=frozenset(), path_states=frozenset()):
        self.model = model
        self.start = start
        self.formula = formula
        self.valid_states = frozenset(valid_states)
        self.heads = frozenset(heads)
        self.path_states = frozenset(path_states)

    @property
    def kind(self):
        return 'states' if isinstance(self.formula, STATE_KINDS) else 'paths'

    @property
    def has_witness(self):
        if self.kind == 'states':
            return bool(self.valid_states)
        return bool(self.heads)

    def is_valid_path(self, lasso):
        """
        Literal test of a lasso against the path clause for this formula.
        """
        f, m, s0 = self.formula, self.model, self.start
        label_of = m.label
        states = lasso.states()
        unfolded = lasso.unfold(len(lasso.stem) + len(lasso.loop))
        if isinstance(f, (AG, AF, AU)):
            if lasso.head != s0:
                return False
            if isinstance(f, AG):
                return all(evaluate(f.arg, label_of(s)) for s in states)
            if isinstance(f, AF):
                return any(evaluate(f.arg, label_of(s)) for s in lasso.later_states())
            return _until_index_ok(unfolded, f.left, f.right, label_of)

        if lasso.head == s0:
            return False
        if isinstance(f, EG):
            return evaluate(f.arg, label_of(s0)) and all(evaluate(f.arg, label_of(s)) for s in states)
        if isinstance(f, EF):
            return any(evaluate(f.arg, label_of(s)) for s in lasso.later_states())
        return evaluate(f.left, label_of(s0)) and _until_index_ok(unfolded, f.left, f.right, label_of)

    def paths(self):
        if self.kind == 'states':
            return
        for head in sorted(self.heads):
            for lasso in enumerate_lassos(self.model, head):
                if self.is_valid_path(lasso):
                    yield lasso

    def to_json(self):
        result = {'formula': format_formula(self.formula), 'kind': self.kind, 'has_witness': self.has_witness}
        if self.kind == 'states':
            result['valid_states'] = sorted(self.valid_states)
        else:
            result['heads'] = sorted(self.heads)
        return result


class WitnessReport(object):
    def __init__(self, entries):
        self.entries = list(entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def entry(self, formula):
        for e in self.entries:
            if e.formula == formula:
                return e
        raise KeyError(format_formula(formula))

    def complete(self):
        return all(e.has_witness for e in self.entries)

    def to_json(self):
        return [e.to_json() for e in self.entries]


def _witness_for(model, s0, f):
    everything = frozenset(model.states)
    inf = infinite_states(model)
    label_of = model.label

    if isinstance(f, AX):
        return WitnessEntry(model, s0, f, valid_states=[
            s for s in model.successors(s0) if evaluate(f.arg, label_of(s))])
    if isinstance(f, EX):
        return WitnessEntry(model, s0, f, valid_states=[
            s for s in model.states if evaluate(f.arg, label_of(s))])

    if isinstance(f, AG):
        good = sat(model, EG(f.arg))
        if s0 not in good:
            return WitnessEntry(model, s0, f)
        return WitnessEntry(model, s0, f, heads=[s0], path_states=_forward_closure(model, [s0], good))

    if isinstance(f, (AF, AU)):
        if isinstance(f, AF):
            prefix = everything
            targets = frozenset(s for s in model.states if evaluate(f.arg, label_of(s))) & inf
            # the target must sit at a position after the start
            after_start = _forward_closure(model, model.successors(s0))
            targets = targets & after_start
        else:
            prefix = frozenset(s for s in model.states if evaluate(f.left, label_of(s)))
            targets = frozenset(s for s in model.states if evaluate(f.right, label_of(s))) & inf
        reaching = set()
        queue = deque(sorted(targets))
        reaching |= targets
        while queue:
            s = queue.popleft()
            for p in model.predecessors(s):
                if p not in reaching and p in prefix:
                    reaching.add(p)
                    queue.append(p)
        if s0 not in reaching:
            return WitnessEntry(model, s0, f)
        before = _forward_closure(model, [s0], prefix) & frozenset(reaching) | frozenset([s0])
        after = _forward_closure(model, targets) & inf
        return WitnessEntry(model, s0, f, heads=[s0], path_states=before | after)

    if isinstance(f, EG):
        if not evaluate(f.arg, label_of(s0)):
            return WitnessEntry(model, s0, f)
        heads = sat(model, EG(f.arg)) - frozenset([s0])
        return WitnessEntry(model, s0, f, heads=heads)
    if isinstance(f, EF):
        heads = sat(model, EX(EF(f.arg))) - frozenset([s0])
        return WitnessEntry(model, s0, f, heads=heads)
    # EU
    if not evaluate(f.left, label_of(s0)):
        return WitnessEntry(model, s0, f)
    heads = sat(model, EU(f.left, f.right)) - frozenset([s0])
    return WitnessEntry(model, s0, f, heads=heads)


def find_witness(pm, f):
    """
    Valid states and valid paths for every atomic subformula of an AEClass formula.
    Each decision costs a constant number of labeling passes over the model; the lassos
    themselves are only produced on demand by WitnessEntry.paths().
    Args:
        pm: PointedModel
        f: AEClass Formula
    Returns:
        WitnessReport
    Raises:
        NotInClassError if f is not in AEClass
    """
    parts = classify_aeclass(f)
    return WitnessReport(_witness_for(pm.model, pm.start, part) for part in parts)

# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import itertools

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_checker import holds
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import ModelError
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import (
    compute_diff,
    diff_strictly_less,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import KripkeModel


def filter_admissible(candidates):
    """
    Keep the candidates that no other candidate beats on closeness to the base model.
    Order is preserved.
    Args:
        candidates: list of objects with a .diff DiffVector computed against the same base
    Returns:
        list
    """
    kept = []
    for c in candidates:
        if not any(o is not c and diff_strictly_less(o.diff, c.diff) for o in candidates):
            kept.append(c)
    return kept


def unchanged_reachable(base_pm, model, start):
    """
    States reachable in both models from their start states and labeled alike in both.
    """
    base = base_pm.model
    shared = base.reachable_states(base_pm.start) & model.reachable_states(start)
    return frozenset(s for s in shared if base.labels[s] == model.labels[s])


def preserves_unreachable(base, start, model):
    """
    True when every state of base that start cannot reach is still present with its label,
    and every state model adds is reachable from start.
    """
    hidden = frozenset(base.states) - base.reachable_states(start)
    for s in hidden:
        if s not in model.labels or model.labels[s] != base.labels[s]:
            return False
    added = frozenset(model.states) - frozenset(base.states)
    return added <= model.reachable_states(start)


def filter_committed(base_pm, candidates):
    """
    Among candidates, keep those whose unchanged reachable part is not strictly contained in
    the unchanged reachable part of another candidate.
    """
    preserved = [unchanged_reachable(base_pm, c.model, c.start) for c in candidates]
    kept = []
    for i, c in enumerate(candidates):
        if not any(preserved[i] < other for j, other in enumerate(preserved) if j != i):
            kept.append(c)
    return kept


def _change_units(base, model):
    diff = compute_diff(base, model)
    new_states = diff.added_states
    units = [('state', s) for s in sorted(new_states)]
    units += [
        ('add', e) for e in sorted(diff.added_edges)
        if e[0] not in new_states and e[1] not in new_states
    ]
    survivors = frozenset(model.states)
    units += [
        ('remove', e) for e in sorted(diff.removed_edges)
        if e[0] in survivors and e[1] in survivors
    ]
    for s in sorted(diff.relabeled_states):
        for atom in sorted(diff.label_deltas[s]):
            units.append(('flip', s, atom))
    return units, diff


def _rebuild(base, model, diff, kept_units):
    """
    The model obtained from base by applying the removed states of diff plus the kept units.
    """
    new_states = set(u[1] for u in kept_units if u[0] == 'state')
    states = [s for s in base.states if s not in diff.removed_states] + sorted(new_states)
    present = frozenset(states)

    transitions = set(e for e in base.transitions if e[0] in present and e[1] in present)
    labels = dict((s, set(base.labels[s])) for s in states if s in base.labels)
    for unit in kept_units:
        kind = unit[0]
        if kind == 'add':
            transitions.add(unit[1])
        elif kind == 'remove':
            transitions.discard(unit[1])
        elif kind == 'flip':
            labels[unit[1]] ^= set([unit[2]])
        else:
            s = unit[1]
            labels[s] = set(model.labels[s])
            for e in diff.added_edges:
                if s in e and e[0] in present and e[1] in present:
                    transitions.add(e)

    atoms = set(base.atoms)
    for label in labels.values():
        atoms |= label
    initial = [s for s in base.initial if s in present]
    return KripkeModel(states, atoms, transitions, labels, initial, has_dummy=base.has_dummy)


def minimize_candidate(base, model, start, goal, constraints=(), exhaustive_units=12):
    """
    Replace a candidate by its smallest sub-repairs: models made of a subset of its changes
    that still satisfy goal and every constraint at start, with no satisfying proper subset.
    A candidate with more than exhaustive_units change units is shrunk greedily instead, one
    unit at a time, which yields a single result.
    Args:
        base: KripkeModel the candidate was derived from
        model: KripkeModel, the candidate
        start: str
        goal: Formula
        constraints: sequence of Formula
        exhaustive_units: int
    Returns:
        list of KripkeModel, never empty
    """
    units, diff = _change_units(base, model)

    def _satisfies(indexes):
        try:
            m = _rebuild(base, model, diff, [units[i] for i in indexes])
        except ModelError:
            return None
        if start not in m.labels:
            return None
        if holds(m, start, goal) and all(holds(m, start, c) for c in constraints):
            return m
        return None

    if len(units) > exhaustive_units:
        kept = list(range(len(units)))
        for i in range(len(units)):
            trial = [k for k in kept if k != i]
            if _satisfies(trial) is not None:
                kept = trial
        result = _satisfies(kept)
        return [result if result is not None else model]

    found = []
    results = []
    for size in range(len(units)):
        for subset in itertools.combinations(range(len(units)), size):
            chosen = frozenset(subset)
            if any(f <= chosen for f in found):
                continue
            m = _satisfies(subset)
            if m is not None:
                found.append(chosen)
                results.append(m)
    return results or [model]

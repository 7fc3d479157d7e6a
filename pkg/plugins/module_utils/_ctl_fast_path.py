# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import Counter, deque

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_checker import (
    enumerate_lassos,
    holds,
    infinite_states,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    CtlRepairError,
    ModelError,
    PreconditionError,
    UnsatisfiableError,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    AF, AG, AU, AX, EX,
    And, Or,
    evaluate,
    format_formula,
    is_propositional,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_operations import (
    apply_pu2,
    apply_pu3,
    minimal_assignments,
)


MAX_FALSE_LASSOS = 512


def _back_edges(model, start, allowed):
    """
    Edges closing a cycle in a depth-first walk from start through allowed states. Without
    them no cycle inside allowed is reachable from start.
    """
    if start not in allowed:
        return []
    found = []
    visited, on_stack = set([start]), set([start])
    stack = [(start, iter(sorted(model.successors(start))))]
    while stack:
        u, successors = stack[-1]
        for v in successors:
            if v not in allowed:
                continue
            if v in on_stack:
                found.append((u, v))
            elif v not in visited:
                visited.add(v)
                on_stack.add(v)
                stack.append((v, iter(sorted(model.successors(v)))))
                break
        else:
            stack.pop()
            on_stack.discard(u)
    return found


def _edits_for(pm, entry):
    """
    Alternative edit sets for one atomic subformula. Each edit set is a frozenset of
    ('add', edge) / ('remove', edge) items.
    """
    model, s0, f = pm.model, pm.start, entry.formula
    if not entry.has_witness:
        return []

    if isinstance(f, AX):
        return [frozenset(
            ('remove', (s0, t)) for t in model.successors(s0) if t not in entry.valid_states
        )]

    if isinstance(f, EX):
        inf = infinite_states(model)
        return [
            frozenset([('add', (s0, t))]) for t in sorted(entry.valid_states)
            if t in inf and t != model.dummy and (s0, t) not in model.transitions
        ]

    if isinstance(f, AG):
        inf = infinite_states(model)
        region = entry.path_states
        return [frozenset(
            ('remove', (u, v)) for u in region for v in model.successors(u)
            if v not in region and v in inf
        )]

    if isinstance(f, (AF, AU)):
        valid = entry.path_states
        outside = model.reachable_states(s0) - valid
        cuts = set(
            ('remove', (u, v)) for u in valid for v in model.successors(u) if v in outside
        )
        # valid paths that loop before meeting the goal are broken up as well
        if isinstance(f, AF):
            avoiding = frozenset(s for s in valid if not evaluate(f.arg, model.label(s)))
        else:
            avoiding = frozenset(
                s for s in valid if evaluate(f.left, model.label(s)) and not evaluate(f.right, model.label(s))
            )
        cuts |= set(('remove', e) for e in _back_edges(model, s0, avoiding))
        return [frozenset(cuts)]

    # EG, EF, EU: connect the start to the head of a valid path
    return [
        frozenset([('add', (s0, h))]) for h in sorted(entry.heads)
        if (s0, h) not in model.transitions
    ]


def _combine(pm, f, per_atomic):
    if isinstance(f, And):
        left, right = _combine(pm, f.left, per_atomic), _combine(pm, f.right, per_atomic)
        combined = []
        for a in left:
            for b in right:
                merged = a | b
                added = set(e for k, e in merged if k == 'add')
                removed = set(e for k, e in merged if k == 'remove')
                if not added & removed:
                    combined.append(merged)
        return combined
    if isinstance(f, Or):
        return _combine(pm, f.left, per_atomic) + _combine(pm, f.right, per_atomic)
    return per_atomic.get(f, [])


def _apply_edits(model, edits):
    added = frozenset(e for k, e in edits if k == 'add')
    removed = frozenset(e for k, e in edits if k == 'remove')
    return model.evolve(transitions=(model.transitions - removed) | added)


def fast_path_aeclass(pm, f, report, max_candidates=None):
    """
    Repairs built from transition additions and removals only, for AEClass formulas whose
    atomic parts all have a valid witness.
    Args:
        pm: PointedModel
        f: AEClass Formula
        report: WitnessReport from find_witness(pm, f)
        max_candidates: optional int cap
    Returns:
        list of KripkeModel satisfying f at the start, empty when no witness or no edit set works
    """
    if not report.complete():
        return []
    per_atomic = dict((entry.formula, _edits_for(pm, entry)) for entry in report)
    seen, results = set(), []
    for edits in sorted(_combine(pm, f, per_atomic), key=lambda e: (len(e), sorted(e))):
        if edits in seen:
            continue
        seen.add(edits)
        try:
            model = _apply_edits(pm.model, edits)
        except ModelError:
            continue
        if holds(model, pm.start, f):
            results.append(model)
            if max_candidates and len(results) >= max_candidates:
                break
    return results


def _false_lassos(model, s0, f):
    found = []
    for lasso in enumerate_lassos(model, s0):
        if not any(evaluate(f, model.labels[s]) for s in lasso.later_states()):
            found.append(lasso)
            if len(found) >= MAX_FALSE_LASSOS:
                break
    return found


def _reach_after_valid(model, s0, f):
    """
    States that a path from s0 can visit after meeting an f-state at some later position.
    """
    queue = deque(sorted(model.successors(s0)))
    seen = set(queue)
    while queue:
        s = queue.popleft()
        for t in model.successors(s):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    hits = sorted(s for s in seen if evaluate(f, model.labels[s]))
    after = set(hits)
    queue = deque(hits)
    while queue:
        s = queue.popleft()
        for t in model.successors(s):
            if t not in after:
                after.add(t)
                queue.append(t)
    return after


def _committed_options(model, s0, f, cap):
    lassos = _false_lassos(model, s0, f)
    if not lassos:
        return []
    options = []

    shared = Counter()
    for lasso in lassos:
        for s in lasso.later_states():
            if s != model.dummy:
                shared[s] += 1
    if shared:
        best = max(shared.values())
        target = min(s for s, n in shared.items() if n == best)
        try:
            for label in minimal_assignments(model.labels[target], f, model.atoms, cap):
                options.append(apply_pu3(model, target, label))
        except UnsatisfiableError:
            pass

    after = _reach_after_valid(model, s0, f)
    for s1 in sorted(set(lasso.unfold(2)[1] for lasso in lassos)):
        if s1 in after:
            try:
                options.append(apply_pu2(model, (s0, s1)))
            except PreconditionError:
                continue
    return options


def update_af_committed(pm, f, cap=8, max_rounds=None):
    """
    AF repair that favours keeping reachable states untouched. Each round either relabels the
    state shared by the most false lassos, or removes a first transition (s0, s1) of a false
    lasso when s1 stays reachable through a path that already meets f.
    Args:
        pm: PointedModel
        f: AF Formula with a propositional argument
        cap: int, minimal assignments considered per relabel
        max_rounds: optional int, defaults to 2|S| + 2
    Returns:
        list of KripkeModel satisfying f
    """
    if not isinstance(f, AF) or not is_propositional(f.arg):
        raise CtlRepairError("update_af_committed needs AF with a propositional argument, got %s" % format_formula(f))
    s0, body = pm.start, f.arg
    rounds = max_rounds or 2 * len(pm.model.states) + 2

    results, seen = [], set()
    frontier = deque([(pm.model, 0)])
    while frontier:
        model, depth = frontier.popleft()
        if holds(model, s0, f):
            results.append(model)
            continue
        if depth >= rounds:
            continue
        for option in _committed_options(model, s0, body, cap):
            key = option.canonical_text()
            if key not in seen:
                seen.add(key)
                frontier.append((option, depth + 1))
    return results

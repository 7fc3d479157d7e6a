# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

# Exhaustive reference implementations used to cross-check the update engine and the checker
# on very small models. Everything here is exponential on purpose and guarded by size limits.

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import itertools

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_checker import enumerate_lassos, holds
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    CtlRepairError,
    OracleGuardError,
    PreconditionError,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    AF, AG, AU, AX, EF, EG, EU, EX,
    And, Atom, FalseFormula, Implies, Not, Or, TrueFormula,
    depth,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import (
    compute_diff,
    diff_strictly_less,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_operations import (
    apply_pu1,
    apply_pu2,
    apply_pu3,
    apply_pu4,
    apply_pu5,
    fresh_state_name,
)


MAX_ORACLE_STATES = 6
MAX_ORACLE_ATOMS = 3
MAX_CHECK_DEPTH = 4


class EditBudget(object):
    """
    Bounds of the exhaustive model search.
    Args:
        max_ops: int, primitive operations applied to the base
        allow_new_states: int, fresh states that may be added
        atom_universe: atoms that labels may range over, defaults to the base atoms
    """

    def __init__(self, max_ops=2, allow_new_states=0, atom_universe=None):
        self.max_ops = max_ops
        self.allow_new_states = allow_new_states
        self.atom_universe = None if atom_universe is None else frozenset(atom_universe)


def _real_states(model):
    return [s for s in model.states if s != model.dummy]


def _guard_search(base, budget):
    states = len(_real_states(base)) + budget.allow_new_states
    if states > MAX_ORACLE_STATES:
        raise OracleGuardError("The oracle handles at most %d states, the search would need %d"
                               % (MAX_ORACLE_STATES, states))
    universe = budget.atom_universe if budget.atom_universe is not None else base.atoms
    if len(universe) > MAX_ORACLE_ATOMS:
        raise OracleGuardError("The oracle handles at most %d atoms, got %d" % (MAX_ORACLE_ATOMS, len(universe)))
    return sorted(universe)


def _all_labels(universe):
    return [frozenset(c) for r in range(len(universe) + 1) for c in itertools.combinations(universe, r)]


def _neighbours(base, model, labels, budget):
    new_states = len(set(model.states) - set(base.states))
    for s in model.states:
        for t in model.states:
            if t == model.dummy or (s, t) in model.transitions:
                continue
            yield apply_pu1(model, (s, t))
    for edge in sorted(model.transitions):
        try:
            yield apply_pu2(model, edge)
        except PreconditionError:
            continue
    for s in _real_states(model):
        for label in labels:
            if label != model.labels[s]:
                yield apply_pu3(model, s, label)
    if new_states < budget.allow_new_states:
        name = fresh_state_name(model)
        for label in labels:
            yield apply_pu4(model, name, label)
    for s in _real_states(model):
        try:
            yield apply_pu5(model, s)
        except PreconditionError:
            continue


def enumerate_models(base, budget):
    """
    Every model reachable from base with at most budget.max_ops primitive operations, each
    listed once (base included), in breadth-first order.
    Raises:
        OracleGuardError if the search would exceed the oracle size limits
    """
    labels = _all_labels(_guard_search(base, budget))
    seen = set([base.canonical_text()])
    layer = [base]
    found = [base]
    for _step in range(budget.max_ops):
        following = []
        for model in layer:
            for neighbour in _neighbours(base, model, labels, budget):
                text = neighbour.canonical_text()
                if text not in seen:
                    seen.add(text)
                    following.append(neighbour)
        found.extend(following)
        layer = following
    return found


def brute_force_admissible(pm, f, budget):
    """
    Models within the edit budget that satisfy f at the base start and that no other such model
    beats on closeness to the base.
    Returns:
        list of (KripkeModel, DiffVector) pairs
    """
    base = pm.model
    satisfying = []
    for model in enumerate_models(base, budget):
        if pm.start in model.labels and holds(model, pm.start, f):
            satisfying.append((model, compute_diff(base, model)))
    return [
        (model, diff) for (model, diff) in satisfying
        if not any(diff_strictly_less(other, diff) for (_m, other) in satisfying)
    ]


def _sequence(lasso):
    return lasso.unfold(len(lasso.stem) + len(lasso.loop))


def _until(model, seq, left, right, memo):
    for s in seq:
        if _literal(model, s, right, memo):
            return True
        if not _literal(model, s, left, memo):
            return False
    return False


def _literal(model, s, f, memo):
    key = (s, f)
    if key in memo:
        return memo[key]
    if isinstance(f, TrueFormula):
        result = True
    elif isinstance(f, FalseFormula):
        result = False
    elif isinstance(f, Atom):
        result = f.name in model.labels[s]
    elif isinstance(f, Not):
        result = not _literal(model, s, f.arg, memo)
    elif isinstance(f, And):
        result = _literal(model, s, f.left, memo) and _literal(model, s, f.right, memo)
    elif isinstance(f, Or):
        result = _literal(model, s, f.left, memo) or _literal(model, s, f.right, memo)
    elif isinstance(f, Implies):
        result = not _literal(model, s, f.left, memo) or _literal(model, s, f.right, memo)
    else:
        lassos = list(enumerate_lassos(model, s))
        paths = [_sequence(lasso) for lasso in lassos]
        if isinstance(f, (EX, AX)):
            test = [_literal(model, lasso.unfold(2)[1], f.arg, memo) for lasso in lassos]
        elif isinstance(f, (EG, AG)):
            test = [all(_literal(model, t, f.arg, memo) for t in seq) for seq in paths]
        elif isinstance(f, (EF, AF)):
            test = [any(_literal(model, t, f.arg, memo) for t in seq) for seq in paths]
        elif isinstance(f, (EU, AU)):
            test = [_until(model, seq, f.left, f.right, memo) for seq in paths]
        else:
            raise CtlRepairError("Unsupported formula node %r" % (f,))
        result = any(test) if isinstance(f, (EX, EG, EF, EU)) else all(test)
    memo[key] = result
    return result


def brute_force_check(pm, f):
    """
    Decide (M, s0) |= f by unfolding every simple lasso, independently of the labeling
    checker. Every infinite path that matters for a CTL subformula has a lasso counterpart.
    Raises:
        OracleGuardError beyond MAX_ORACLE_STATES states or formula depth MAX_CHECK_DEPTH
    """
    if len(pm.model.states) > MAX_ORACLE_STATES:
        raise OracleGuardError("The oracle checks models with at most %d states" % MAX_ORACLE_STATES)
    if depth(f) > MAX_CHECK_DEPTH:
        raise OracleGuardError("The oracle checks formulas of depth at most %d" % MAX_CHECK_DEPTH)
    return _literal(pm.model, pm.start, f, {})

# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import itertools
from collections import deque

try:
    import networkx as nx
except ImportError:
    pass
    # handled by _kripke_model.check_requirements

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import CtlRepairError
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    AF, AG, AU, AX, EF, EG, EU, EX, FALSE, TRUE,
    And, Atom, FalseFormula, Implies, Not, Or, TrueFormula,
    atoms as formula_atoms,
    evaluate,
    format_formula,
    is_propositional,
    subformulas,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import (
    Lasso,
    check_requirements,
)


class SatLabeling(dict):
    """
    Maps each evaluated subformula to the frozenset of states satisfying it.
    """

    def states(self, f):
        return self[f]


def _backward_closure(model, targets, through):
    """
    States that reach targets along paths whose earlier states all lie in through.
    """
    found = set(targets)
    queue = deque(sorted(targets))
    while queue:
        s = queue.popleft()
        for p in model.predecessors(s):
            if p not in found and p in through:
                found.add(p)
                queue.append(p)
    return frozenset(found)


def _sat_eg(model, allowed):
    """
    States with an infinite path staying inside allowed: everything in allowed that reaches a
    cycle of the subgraph induced by allowed.
    """
    check_requirements()
    allowed = frozenset(allowed)
    if not allowed:
        return frozenset()
    sub = model.to_digraph().subgraph(allowed)
    core = set()
    for component in nx.strongly_connected_components(sub):
        if len(component) > 1:
            core |= component
        else:
            (s,) = tuple(component)
            if sub.has_edge(s, s):
                core.add(s)
    return _backward_closure(model, core, allowed)


def infinite_states(model):
    """
    Sat(EG true): states where some infinite path starts. Deadlocks and states that only lead
    to deadlocks have no paths at all.
    """
    return _sat_eg(model, model.states)


def _sat_eu(model, left, right, inf):
    return _backward_closure(model, frozenset(right) & inf, frozenset(left))


def _sat_ex(model, target, inf):
    found = set()
    for s in frozenset(target) & inf:
        found |= model.predecessors(s)
    return frozenset(found)


def sat_set(model, f, labeling=None):
    """
    Label every subformula of f with its satisfying states, bottom-up.
    A-quantified path formulas hold vacuously on states without infinite paths and
    E-quantified ones fail there.
    Args:
        model: KripkeModel
        f: Formula
        labeling: optional SatLabeling to extend; entries already present are reused
    Returns:
        SatLabeling
    """
    labeling = SatLabeling() if labeling is None else labeling
    everything = frozenset(model.states)
    if '__inf__' not in labeling:
        labeling['__inf__'] = infinite_states(model)
    inf = labeling['__inf__']

    def _sat(g):
        if g in labeling:
            return labeling[g]
        if isinstance(g, TrueFormula):
            result = everything
        elif isinstance(g, FalseFormula):
            result = frozenset()
        elif isinstance(g, Atom):
            result = frozenset(s for s in model.states if g.name in model.labels[s])
        elif isinstance(g, Not):
            result = everything - _sat(g.arg)
        elif isinstance(g, And):
            result = _sat(g.left) & _sat(g.right)
        elif isinstance(g, Or):
            result = _sat(g.left) | _sat(g.right)
        elif isinstance(g, Implies):
            result = (everything - _sat(g.left)) | _sat(g.right)
        elif isinstance(g, EX):
            result = _sat_ex(model, _sat(g.arg), inf)
        elif isinstance(g, AX):
            result = everything - _sat_ex(model, everything - _sat(g.arg), inf)
        elif isinstance(g, EU):
            result = _sat_eu(model, _sat(g.left), _sat(g.right), inf)
        elif isinstance(g, EF):
            result = _sat_eu(model, everything, _sat(g.arg), inf)
        elif isinstance(g, AG):
            result = everything - _sat_eu(model, everything, everything - _sat(g.arg), inf)
        elif isinstance(g, EG):
            result = _sat_eg(model, _sat(g.arg))
        elif isinstance(g, AF):
            result = everything - _sat_eg(model, everything - _sat(g.arg))
        elif isinstance(g, AU):
            left, right = _sat(g.left), _sat(g.right)
            not_right = everything - right
            result = everything - (
                _sat_eu(model, not_right, not_right - left, inf) | _sat_eg(model, not_right)
            )
        else:
            raise CtlRepairError("Unsupported formula node %r" % (g,))
        labeling[g] = result
        return result

    _sat(f)
    return labeling


def sat(model, f):
    return sat_set(model, f)[f]


def holds(model, state, f):
    return state in sat(model, f)


def check(pm, f):
    """
    Decide (M, s0) |= f for a PointedModel.
    """
    return holds(pm.model, pm.start, f)


def _invariant_body(f):
    if isinstance(f, AG):
        return f.arg
    if isinstance(f, Not) and isinstance(f.arg, EF):
        return Not(f.arg.arg)
    if isinstance(f, Not) and isinstance(f.arg, EU) and f.arg.left == TRUE:
        return Not(f.arg.right)
    return None


def false_states(model, start, f):
    """
    Reachable states violating the propositional body of an AG goal.
    Raises:
        CtlRepairError if f is not AG with a propositional argument
    """
    if not isinstance(f, AG) or not is_propositional(f.arg):
        raise CtlRepairError("false_states needs a goal of the form AG psi with propositional psi, got %s"
                             % format_formula(f))
    return frozenset(
        s for s in model.reachable_states(start)
        if not evaluate(f.arg, model.labels[s])
    )


def offending_states(model, start, f):
    """
    For invariant-shaped goals (AG psi, !EF chi, !E[true U chi]) return the reachable states
    where the invariant body fails, otherwise None.
    """
    body = _invariant_body(f)
    if body is None:
        return None
    good = sat(model, body)
    return frozenset(s for s in model.reachable_states(start) if s not in good)


def enumerate_lassos(model, start, allowed=None):
    """
    Yield every simple lasso (stem and loop without repeats, disjoint) starting at start, in
    a deterministic order. When allowed is given, only states in it are visited.
    """
    if allowed is not None and start not in allowed:
        return
    path = [start]
    on_path = {start: 0}

    def _extend():
        for v in sorted(model.successors(path[-1])):
            if allowed is not None and v not in allowed:
                continue
            if v in on_path:
                idx = on_path[v]
                yield Lasso(path[:idx], path[idx:])
                continue
            on_path[v] = len(path)
            path.append(v)
            for lasso in _extend():
                yield lasso
            path.pop()
            del on_path[v]

    for lasso in _extend():
        yield lasso


def _propositionally_satisfiable(f, max_atoms=16):
    names = sorted(formula_atoms(f))
    if len(names) > max_atoms:
        return None
    for bits in itertools.product((False, True), repeat=len(names)):
        if evaluate(f, frozenset(n for n, b in zip(names, bits) if b)):
            return True
    return False


def _deadlock_skeleton(f):
    """
    The propositional value f takes at a state without infinite paths, where E-quantified
    subformulas fail and A-quantified ones hold.
    """
    if isinstance(f, (EX, EF, EG, EU)):
        return FALSE
    if isinstance(f, (AX, AF, AG, AU)):
        return TRUE
    if isinstance(f, Not):
        return Not(_deadlock_skeleton(f.arg))
    if isinstance(f, And):
        return And(_deadlock_skeleton(f.left), _deadlock_skeleton(f.right))
    if isinstance(f, Or):
        return Or(_deadlock_skeleton(f.left), _deadlock_skeleton(f.right))
    if isinstance(f, Implies):
        return Implies(_deadlock_skeleton(f.left), _deadlock_skeleton(f.right))
    return f


def _neg(f):
    return f.arg if isinstance(f, Not) else Not(f)


def _core(f):
    """
    Rewrite f over true, atoms, !, &, EX, EU and AU only.
    """
    if isinstance(f, (TrueFormula, Atom)):
        return f
    if isinstance(f, FalseFormula):
        return Not(TRUE)
    if isinstance(f, Not):
        return _neg(_core(f.arg))
    if isinstance(f, And):
        return And(_core(f.left), _core(f.right))
    if isinstance(f, Or):
        return _neg(And(_neg(_core(f.left)), _neg(_core(f.right))))
    if isinstance(f, Implies):
        return _neg(And(_core(f.left), _neg(_core(f.right))))
    if isinstance(f, EX):
        return EX(_core(f.arg))
    if isinstance(f, AX):
        return _neg(EX(_neg(_core(f.arg))))
    if isinstance(f, EF):
        return EU(TRUE, _core(f.arg))
    if isinstance(f, AF):
        return AU(TRUE, _core(f.arg))
    if isinstance(f, AG):
        return _neg(EU(TRUE, _neg(_core(f.arg))))
    if isinstance(f, EG):
        return _neg(AU(TRUE, _neg(_core(f.arg))))
    if isinstance(f, EU):
        return EU(_core(f.left), _core(f.right))
    if isinstance(f, AU):
        return AU(_core(f.left), _core(f.right))
    raise CtlRepairError("Unsupported formula node %r" % (f,))


class _Tableau(object):
    """
    Candidate states of a model of a core formula, one per truth assignment to its atoms and
    to its next-step formulas EX g. Everything else is derived: E[a U b] holds when b holds or
    a holds and EX E[a U b] does, A[a U b] when b holds or a holds and EX !A[a U b] fails.
    EX true is fixed to hold, the structure being total.
    """

    def __init__(self, f):
        self.f = f
        nodes = subformulas(f)
        self.names = sorted(set(n.name for n in nodes if isinstance(n, Atom)))
        self.nexts = [TRUE]
        for n in nodes:
            if isinstance(n, EX):
                arg = n.arg
            elif isinstance(n, EU):
                arg = n
            elif isinstance(n, AU):
                arg = Not(n)
            else:
                continue
            if arg not in self.nexts:
                self.nexts.append(arg)
        self.index = dict((g, i) for i, g in enumerate(self.nexts))
        self.untils = [n for n in nodes if isinstance(n, (EU, AU))]
        self.free_bits = len(self.names) + len(self.nexts) - 1

    def _value(self, g, label, ex):
        if isinstance(g, TrueFormula):
            return True
        if isinstance(g, Atom):
            return g.name in label
        if isinstance(g, Not):
            return not self._value(g.arg, label, ex)
        if isinstance(g, And):
            return self._value(g.left, label, ex) and self._value(g.right, label, ex)
        if isinstance(g, EX):
            return bool(ex >> self.index[g.arg] & 1)
        if isinstance(g, EU):
            return self._value(g.right, label, ex) or (
                self._value(g.left, label, ex) and bool(ex >> self.index[g] & 1))
        if isinstance(g, AU):
            return self._value(g.right, label, ex) or (
                self._value(g.left, label, ex) and not ex >> self.index[Not(g)] & 1)
        raise CtlRepairError("Unsupported core node %r" % (g,))

    def states(self):
        """
        Yields (holds, required, forbidden, truth) per assignment: holds maps the goal and
        each until node to its value, required is the bitmask of EX g set, forbidden of EX g
        unset and truth of the next-step arguments g that hold.
        """
        width = len(self.nexts)
        full = (1 << width) - 1
        for bits in itertools.product((False, True), repeat=len(self.names)):
            label = frozenset(n for n, b in zip(self.names, bits) if b)
            for rest in range(1 << (width - 1)):
                ex = (rest << 1) | 1
                truth = 0
                for i, g in enumerate(self.nexts):
                    if self._value(g, label, ex):
                        truth |= 1 << i
                holds = dict((u, self._value(u, label, ex)) for u in self.untils)
                for u in self.untils:
                    holds[u.left] = self._value(u.left, label, ex)
                    holds[u.right] = self._value(u.right, label, ex)
                holds[self.f] = self._value(self.f, label, ex)
                yield holds, ex, full & ~ex, truth


def _fulfilled(table, alive, u):
    """
    States of alive where the until node u holds and is fulfilled: a finite fragment of
    alive states leads from them to states where u's right side holds.
    """
    universal = isinstance(u, AU)
    done = set(s for s in alive if table[s][0][u] and table[s][0][u.right])
    pending = [s for s in alive if table[s][0][u] and s not in done and table[s][0][u.left]]
    grew = True
    while grew and pending:
        grew = False
        masks = set(table[t][3] for t in done)
        rest = []
        for s in pending:
            _holds, required, forbidden, _truth = table[s]
            usable = [m for m in masks if not m & forbidden]
            if universal:
                covered = 0
                for m in usable:
                    covered |= m
                ok = not required & ~covered
            else:
                ok = bool(usable)
            if ok:
                done.add(s)
                grew = True
            else:
                rest.append(s)
        pending = rest
    return done


def _tableau_satisfiable(f, max_bits):
    tableau = _Tableau(f)
    if tableau.free_bits > max_bits:
        return None
    table = list(tableau.states())
    alive = set(range(len(table)))
    changed = True
    while changed:
        changed = False
        masks = set(table[t][3] for t in alive)
        for s in sorted(alive):
            _holds, required, forbidden, _truth = table[s]
            reach = 0
            for m in masks:
                if not m & forbidden:
                    reach |= m
            if required & ~reach:
                alive.discard(s)
                changed = True
        for u in tableau.untils:
            fulfilled = _fulfilled(table, alive, u)
            broken = [s for s in alive if table[s][0][u] and s not in fulfilled]
            if broken:
                alive.difference_update(broken)
                changed = True
    return any(table[s][0][f] for s in alive)


def is_satisfiable(f, max_bits=12):
    """
    Decide whether some pointed model satisfies f.
    A state without infinite paths sees every E-quantified subformula fail and every
    A-quantified one hold, so f is satisfiable there iff that propositional skeleton is.
    Otherwise f must hold in a total model, which is decided by eliminating candidate states
    over the atoms and next-step subformulas of f until every remaining state has the
    successors and fulfilled eventualities it promises.
    Args:
        f: Formula
        max_bits: int, the largest number of atoms plus next-step subformulas decided
    Returns:
        True or False, or None when f is too large to decide
    """
    if is_propositional(f):
        return _propositionally_satisfiable(f)
    skeleton = _propositionally_satisfiable(_deadlock_skeleton(f))
    if skeleton:
        return True
    verdict = _tableau_satisfiable(_core(f), max_bits)
    if verdict:
        return True
    if verdict is None or skeleton is None:
        return None
    return False

# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import deque
from itertools import islice

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_checker import (
    enumerate_lassos,
    is_satisfiable,
    sat_set,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    ConfigurationError,
    CtlRepairError,
    NotInClassError,
    PreconditionError,
    UnsatisfiableError,
    UpdateBudgetError,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_fast_path import (
    fast_path_aeclass,
    update_af_committed,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_filters import (
    minimize_candidate,
    preserves_unreachable,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    AF, AG, AU, AX, EF, EG, EU, EX, FALSE, TRUE,
    And, Atom, Implies, Not, Or,
    conjunction,
    format_formula,
    formula_size,
    is_propositional,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_witness import find_witness
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import compute_diff
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import PointedModel
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_operations import (
    apply_pu1,
    apply_pu2,
    apply_pu3,
    apply_pu4,
    canonical_trace,
    fresh_state_name,
    minimal_assignments,
)


MAX_EG_LASSOS = 256
SAT_CACHE_SIZE = 4096


class UpdateConfig(object):
    """
    Caps and switches for one update run.
    Args:
        max_new_states: int, fresh states a candidate may introduce. 0 forbids fresh states
        max_candidates: int or None, final candidate cap. None keeps everything
        recursion_cap: int or None, nesting limit of recursive updates. None means 3 * |f|
        committed: bool, use the committed AF repair for AF goals over propositional arguments
        constraints: formulas every emitted model must satisfy at the root start
        min_assignments_cap: int, labels tried per relabel
        max_steps: int, total branch expansions per run
        exhaustive_units: int, change units up to which minimisation is exhaustive
        fast_path: bool, try the transition-only AEClass repair first
        log: optional callable taking one message string
    """

    def __init__(self, max_new_states=2, max_candidates=256, recursion_cap=None, committed=False,
                 constraints=(), min_assignments_cap=8, max_steps=20000, exhaustive_units=12,
                 fast_path=False, log=None):
        if max_new_states is None or max_new_states < 0:
            raise ConfigurationError("max_new_states must be 0 or more, got %s" % max_new_states)
        for name, value in (('max_candidates', max_candidates), ('recursion_cap', recursion_cap),
                            ('min_assignments_cap', min_assignments_cap), ('max_steps', max_steps),
                            ('exhaustive_units', exhaustive_units)):
            if value is not None and value < 1:
                raise ConfigurationError("%s must be at least 1, got %s" % (name, value))
        self.max_new_states = max_new_states
        self.max_candidates = max_candidates
        self.recursion_cap = recursion_cap
        self.committed = committed
        self.constraints = tuple(constraints)
        self.min_assignments_cap = min_assignments_cap
        self.max_steps = max_steps
        self.exhaustive_units = exhaustive_units
        self.fast_path = fast_path
        self.log = log

    @classmethod
    def from_params(cls, params, formula, constraints=(), log=None):
        recursion_cap = params.get('recursion_cap')
        if recursion_cap is None:
            recursion_cap = 3 * formula_size(formula)
        return cls(
            max_new_states=params.get('max_new_states', 2),
            max_candidates=None if params.get('enumerate_all') else params.get('max_candidates', 256),
            recursion_cap=recursion_cap,
            committed=bool(params.get('committed')),
            constraints=constraints,
            min_assignments_cap=params.get('min_assignments_cap', 8),
            fast_path=params.get('fast_path') == 'auto',
            log=log,
        )


class UpdateCandidate(object):
    """
    A repaired model together with the start it is judged from, a replayable trace and its
    diff against the base model.
    """

    def __init__(self, model, start, trace, diff):
        self.model = model
        self.start = start
        self.trace = list(trace)
        self.diff = diff

    @classmethod
    def from_model(cls, base, model, start):
        return cls(model, start, canonical_trace(base, model), compute_diff(base, model))

    @property
    def is_identity(self):
        return self.diff.is_empty()

    def canonical_text(self):
        return self.model.canonical_text()

    def __repr__(self):
        return "UpdateCandidate(trace=%r)" % (self.trace,)


def negate(f):
    """
    One step of negation push-down. Returns Not(E[a U b]) unchanged since it has no dual
    primitive among the handlers.
    """
    if isinstance(f, Not):
        return f.arg
    if f == TRUE:
        return FALSE
    if f == FALSE:
        return TRUE
    if isinstance(f, And):
        return Or(negate(f.left), negate(f.right))
    if isinstance(f, Or):
        return And(negate(f.left), negate(f.right))
    if isinstance(f, Implies):
        return And(f.left, negate(f.right))
    if isinstance(f, AX):
        return EX(negate(f.arg))
    if isinstance(f, EX):
        return AX(negate(f.arg))
    if isinstance(f, AG):
        return EF(negate(f.arg))
    if isinstance(f, EF):
        return AG(negate(f.arg))
    if isinstance(f, AF):
        return EG(negate(f.arg))
    if isinstance(f, EG):
        return AF(negate(f.arg))
    if isinstance(f, AU):
        not_right = negate(f.right)
        return Or(EU(not_right, And(negate(f.left), not_right)), EG(not_right))
    return Not(f)


class CtlUpdater(object):
    """
    Recursive update engine for one pointed model and one goal.
    Handlers return lists of models. A model is emitted by update() only when the local goal
    holds at the local start, every guard (state, formula) pair holds and every configured
    constraint holds at the root start.
    """

    def __init__(self, pm, formula, config=None):
        self.pm = pm
        self.base = pm.model
        self.root = pm.start
        self.formula = formula
        self.config = config or UpdateConfig()
        self.cap = self.config.recursion_cap or 3 * formula_size(formula)
        self.stats = {
            'steps': 0,
            'generated': 0,
            'minimized': 0,
            'truncated': False,
            'budget_exhausted': False,
            'fast_path': False,
        }
        self._memo = {}
        self._sat_cache = {}
        self._inner_constraints = ()
        if all(self.holds(self.base, self.root, c) for c in self.config.constraints):
            # a base that already breaks a constraint is only filtered on the final models
            self._inner_constraints = self.config.constraints

    def _log(self, msg):
        if self.config.log:
            self.config.log(msg)

    def _tick(self):
        self.stats['steps'] += 1
        if self.stats['steps'] > self.config.max_steps:
            self.stats['budget_exhausted'] = True
            return False
        return True

    def holds(self, model, state, f):
        key = model.canonical_text()
        labeling = self._sat_cache.get(key)
        if labeling is None:
            if len(self._sat_cache) >= SAT_CACHE_SIZE:
                self._sat_cache.clear()
            labeling = self._sat_cache[key] = sat_set(model, TRUE)
        return state in sat_set(model, f, labeling)[f]

    def sat(self, model, f):
        key = model.canonical_text()
        labeling = self._sat_cache.get(key)
        if labeling is None:
            if len(self._sat_cache) >= SAT_CACHE_SIZE:
                self._sat_cache.clear()
            labeling = self._sat_cache[key] = sat_set(model, TRUE)
        return sat_set(model, f, labeling)[f]

    def admits(self, model, s0, f, guards):
        if s0 not in model.labels or not self.holds(model, s0, f):
            return False
        for state, g in guards:
            if not self.holds(model, state, g):
                return False
        return all(self.holds(model, self.root, c) for c in self._inner_constraints)

    def _can_add_state(self, model):
        added = len(set(model.states) - set(self.base.states))
        return added < self.config.max_new_states

    def _labels_for(self, current, f):
        try:
            return minimal_assignments(current, f, self.base.atoms, self.config.min_assignments_cap)
        except UnsatisfiableError:
            return []

    def update(self, model, s0, f, guards=(), depth=0):
        """
        All models derived from model in which f holds at s0, subject to guards and the
        configured constraints.
        """
        if self.admits(model, s0, f, guards):
            return [model]
        if self.holds(model, s0, f):
            return []
        if depth > self.cap:
            self.stats['budget_exhausted'] = True
            return []

        key = (model.canonical_text(), s0, f, guards, self.cap - depth)
        if key in self._memo:
            return self._memo[key]

        produced = self._dispatch(model, s0, f, guards, depth)
        seen, result = set(), []
        for m in produced:
            text = m.canonical_text()
            if text in seen:
                continue
            seen.add(text)
            if self.admits(m, s0, f, guards):
                result.append(m)
        self._memo[key] = result
        return result

    def _dispatch(self, model, s0, f, guards, depth):
        if is_propositional(f):
            return self._update_prop(model, s0, f)
        if isinstance(f, And):
            return self._update_and(model, s0, f, guards, depth)
        if isinstance(f, Or):
            return (self.update(model, s0, f.left, guards, depth + 1) +
                    self.update(model, s0, f.right, guards, depth + 1))
        if isinstance(f, Implies):
            return self.update(model, s0, Or(negate(f.left), f.right), guards, depth)
        if isinstance(f, Not):
            return self._update_not(model, s0, f, guards, depth)
        if isinstance(f, EX):
            return self._update_ex(model, s0, f.arg, guards, depth)
        if isinstance(f, AX):
            return self._update_all_next(model, s0, f.arg, guards, depth)
        if isinstance(f, EF):
            return self._update_eu(model, s0, TRUE, f.arg, guards, depth)
        if isinstance(f, EU):
            return self._update_eu(model, s0, f.left, f.right, guards, depth)
        if isinstance(f, AG):
            return self._update_never(model, s0, TRUE, negate(f.arg), guards, depth)
        if isinstance(f, EG):
            return self._update_eg(model, s0, f.arg, guards, depth)
        if isinstance(f, AF):
            if self.config.committed and is_propositional(f.arg):
                return update_af_committed(PointedModel(model, s0), f, cap=self.config.min_assignments_cap)
            return self._update_af(model, s0, f.arg, guards, depth)
        if isinstance(f, AU):
            not_right = negate(f.right)
            dual = And(Not(EU(not_right, And(negate(f.left), not_right))), AF(f.right))
            return self.update(model, s0, dual, guards, depth)
        raise CtlRepairError("Unsupported formula node %r" % (f,))

    def _fixpoint(self, model, s0, goal, expand, limit=None):
        """
        Breadth-first repeat of expand until goal holds; models that satisfy goal are
        returned and not expanded further.
        """
        limit = limit or 2 * len(model.states) + 2
        results, seen = [], set([model.canonical_text()])
        frontier = deque([(model, 0)])
        while frontier:
            current, rounds = frontier.popleft()
            if self.holds(current, s0, goal):
                results.append(current)
                continue
            if rounds >= limit or not self._tick():
                continue
            for option in expand(current):
                text = option.canonical_text()
                if text not in seen:
                    seen.add(text)
                    frontier.append((option, rounds + 1))
        return results

    def _update_prop(self, model, s0, f):
        if s0 == model.dummy:
            return []
        current = model.labels[s0]
        return [apply_pu3(model, s0, label) for label in self._labels_for(current, f) if label != current]

    def _update_and(self, model, s0, f, guards, depth):
        out = []
        for m1 in self.update(model, s0, f.left, guards, depth + 1):
            out += self.update(m1, s0, f.right, guards + ((s0, f.left),), depth + 1)
        if not out:
            for m2 in self.update(model, s0, f.right, guards, depth + 1):
                out += self.update(m2, s0, f.left, guards + ((s0, f.right),), depth + 1)
        return out

    def _update_not(self, model, s0, f, guards, depth):
        inner = f.arg
        if isinstance(inner, EU):
            return self._update_never(model, s0, inner.left, inner.right, guards, depth)
        return self.update(model, s0, negate(inner), guards, depth)

    def _fresh_options(self, model, g, guards, depth, connect):
        """
        Add a fresh state labeled for g and wire it with connect(model, name). Returns the
        resulting models, recursing on the fresh state when g is temporal.
        """
        if not self._can_add_state(model):
            return []
        name = fresh_state_name(model)
        if is_propositional(g):
            labels = self._labels_for(frozenset(), g)
        else:
            labels = [frozenset()]
        out = []
        for label in labels:
            try:
                wired = connect(apply_pu4(model, name, label), name)
            except PreconditionError:
                continue
            if is_propositional(g):
                out.append(wired)
            else:
                out += self.update(wired, name, g, guards, depth + 1)
        return out

    def _update_ex(self, model, s0, g, guards, depth):
        goal = EX(g)
        out = []
        for t in model.states:
            if t == model.dummy or (s0, t) in model.transitions:
                continue
            m2 = apply_pu1(model, (s0, t))
            if self.holds(m2, s0, goal):
                out.append(m2)

        continuation = EX(TRUE)
        for t in sorted(model.successors(s0)):
            for m2 in self.update(model, t, g, guards, depth + 1):
                if self.holds(m2, t, continuation):
                    out.append(m2)
                else:
                    out += self.update(m2, t, continuation, guards + ((t, g),), depth + 1)

        def _connect(m, name):
            return apply_pu1(apply_pu1(m, (name, name)), (s0, name))
        out += self._fresh_options(model, g, guards, depth, _connect)
        return out

    def _update_all_next(self, model, s0, g, guards, depth):
        goal = AX(g)

        def _expand(m):
            inf = self.sat(m, EG(TRUE))
            good = self.sat(m, g)
            failing = sorted(t for t in m.successors(s0) if t in inf and t not in good)
            if not failing:
                return []
            t = failing[0]
            options = []
            try:
                options.append(apply_pu2(m, (s0, t)))
            except PreconditionError:
                pass
            options += self.update(m, t, g, guards, depth + 1)
            return options

        return self._fixpoint(model, s0, goal, _expand)

    def _update_never(self, model, s0, g1, g2, guards, depth):
        """
        Repair towards !E[g1 U g2]: cut, fix or block the first exposed g2-state.
        """
        goal = Not(EU(g1, g2))

        def _expand(m):
            inf = self.sat(m, EG(TRUE))
            bad = self.sat(m, g2) & inf
            passable = self.sat(m, g1) - bad
            exposed = set()
            if s0 in passable:
                exposed.add(s0)
                queue = deque([s0])
                while queue:
                    s = queue.popleft()
                    for t in m.successors(s):
                        if t in passable and t not in exposed:
                            exposed.add(t)
                            queue.append(t)
            hits = sorted(x for x in bad if x == s0 or m.predecessors(x) & exposed)
            if not hits:
                return []
            x = hits[0]
            feeders = sorted(m.predecessors(x) & exposed)
            options = []
            if x != s0:
                try:
                    cut = m
                    for p in feeders:
                        cut = apply_pu2(cut, (p, x))
                    options.append(cut)
                except PreconditionError:
                    pass
            if x != m.dummy:
                options += self.update(m, x, negate(g2), guards, depth + 1)
            if g1 != TRUE:
                for p in feeders:
                    if p != m.dummy:
                        options += self.update(m, p, negate(g1), guards, depth + 1)
            return options

        return self._fixpoint(model, s0, goal, _expand)

    def _update_eg(self, model, s0, g, guards, depth):
        goal = EG(g)
        if self.holds(model, s0, g):
            starts = [model]
        else:
            starts = self.update(model, s0, g, guards, depth + 1)

        def _expand(m):
            good = self.sat(m, g)
            if s0 not in good:
                return self.update(m, s0, g, guards, depth + 1)
            region = set([s0])
            queue = deque([s0])
            while queue:
                s = queue.popleft()
                for t in m.successors(s):
                    if t in good and t not in region:
                        region.add(t)
                        queue.append(t)

            options = []
            for u in sorted(region):
                for v in sorted(good):
                    if v == m.dummy or (u, v) in m.transitions:
                        continue
                    m2 = apply_pu1(m, (u, v))
                    if self.holds(m2, s0, goal):
                        options.append(m2)

            for u in sorted(region):
                def _connect(m3, name, u=u):
                    return apply_pu1(apply_pu1(m3, (u, name)), (name, name))
                options += self._fresh_options(m, g, guards, depth, _connect)

            lassos = list(islice(enumerate_lassos(m, s0), MAX_EG_LASSOS))
            scored = [(len(lasso.states() - good), lasso) for lasso in lassos]
            scored = [(n, lasso) for (n, lasso) in scored if n > 0]
            if scored:
                fewest = min(n for n, _lasso in scored)
                for n, lasso in scored:
                    if n != fewest:
                        continue
                    models = [m]
                    for x in sorted(lasso.states() - good):
                        if x == m.dummy:
                            models = []
                            break
                        fixed = []
                        for mm in models:
                            fixed += self.update(mm, x, g, guards, depth + 1)
                        models = fixed
                    options += models
            return options

        out = []
        for m0 in starts:
            out += self._fixpoint(m0, s0, goal, _expand)
        return out

    def _update_af(self, model, s0, g, guards, depth):
        goal = AF(g)

        def _expand(m):
            good = self.sat(m, g)
            reachable = m.reachable_states(s0) | frozenset([s0])
            if not good:
                options = []
                for x in sorted(reachable):
                    if x != m.dummy:
                        options += self.update(m, x, g, guards, depth + 1)
                return options

            avoiding = self.sat(m, EG(negate(g)))
            lasso = next(enumerate_lassos(m, s0, allowed=avoiding), None)
            if lasso is None:
                return []
            options = []
            for x in sorted(lasso.states()):
                if x != m.dummy:
                    options += self.update(m, x, g, guards, depth + 1)

            keep = self._satisfying_region(m, s0, good, reachable)
            for edge in sorted(set(lasso.edges())):
                try:
                    m2 = apply_pu2(m, edge)
                except PreconditionError:
                    continue
                if keep <= (m2.reachable_states(s0) | frozenset([s0])):
                    options.append(m2)
            return options

        return self._fixpoint(model, s0, goal, _expand)

    def _satisfying_region(self, m, s0, good, reachable):
        """
        Reachable states lying on some path that meets a g-state: those leading to one and
        those reached from a reachable one.
        """
        leading = set(good)
        queue = deque(sorted(good))
        while queue:
            s = queue.popleft()
            for p in m.predecessors(s):
                if p not in leading:
                    leading.add(p)
                    queue.append(p)
        region = set(s for s in leading if s in reachable)
        queue = deque(sorted(s for s in good if s in reachable))
        while queue:
            s = queue.popleft()
            for t in m.successors(s):
                if t not in region:
                    region.add(t)
                    queue.append(t)
        region.discard(m.dummy)
        return frozenset(region)

    def _update_eu(self, model, s0, g1, g2, guards, depth):
        goal = EU(g1, g2)
        if not self.holds(model, s0, g1) and not self.holds(model, s0, g2):
            starts = (self.update(model, s0, g1, guards, depth + 1) +
                      self.update(model, s0, g2, guards, depth + 1))
        else:
            starts = [model]

        def _expand(m):
            left, right = self.sat(m, g1), self.sat(m, g2)
            inf = self.sat(m, EG(TRUE))
            region = set()
            if s0 in left:
                region.add(s0)
                queue = deque([s0])
                while queue:
                    s = queue.popleft()
                    for t in m.successors(s):
                        if t in left and t not in region:
                            region.add(t)
                            queue.append(t)
            frontier = set()
            for u in region:
                frontier |= set(t for t in m.successors(u) if t not in region)
            frontier.discard(m.dummy)

            options = []
            for u in sorted(region):
                for t in m.states:
                    if t == m.dummy or (u, t) in m.transitions:
                        continue
                    m2 = apply_pu1(m, (u, t))
                    if self.holds(m2, s0, goal):
                        options.append(m2)

            for x in sorted(region | frontier):
                if x != m.dummy and x not in right:
                    options += self.update(m, x, g2, guards, depth + 1)

            for u in sorted(region):
                onward = sorted(t for t in m.successors(u) if t in inf and t != m.dummy)

                def _connect(m3, name, u=u, onward=onward):
                    m3 = apply_pu1(m3, (u, name))
                    target = onward[0] if onward else name
                    return apply_pu1(m3, (name, target))
                options += self._fresh_options(m, g2, guards, depth, _connect)

            continuation = EX(TRUE)
            for x in sorted((region | frontier | set([s0])) & right):
                if x not in inf and x != m.dummy:
                    options += self.update(m, x, continuation, guards + ((x, g2),), depth + 1)
            return options

        out = []
        for m0 in starts:
            out += self._fixpoint(m0, s0, goal, _expand)
        return out

    def _try_fast_path(self):
        try:
            report = find_witness(self.pm, self.formula)
        except NotInClassError:
            return []
        models = fast_path_aeclass(self.pm, self.formula, report, self.config.max_candidates)
        models = [m for m in models if all(self.holds(m, self.root, c) for c in self.config.constraints)]
        if models:
            self.stats['fast_path'] = True
            self._log("fast path produced %d candidate(s)" % len(models))
        else:
            self._log("fast path found no witness-based repair, falling back to the full search")
        return models

    def package(self, models, minimize=True):
        """
        Turn raw models into ordered, deduplicated candidates.
        """
        self.stats['generated'] = len(models)
        models = [m for m in models if preserves_unreachable(self.base, self.root, m)]
        shrunk = []
        if minimize:
            constraints = self.config.constraints
            models = [m for m in models if all(self.holds(m, self.root, c) for c in constraints)]
            for m in models:
                shrunk += minimize_candidate(self.base, m, self.root, self.formula, constraints,
                                             self.config.exhaustive_units)
            shrunk = [m for m in shrunk if preserves_unreachable(self.base, self.root, m)]
        else:
            shrunk = list(models)

        seen, candidates = set(), []
        for m in shrunk:
            text = m.canonical_text()
            if text in seen:
                continue
            seen.add(text)
            candidates.append(UpdateCandidate.from_model(self.base, m, self.root))
        self.stats['minimized'] = len(candidates)
        candidates.sort(key=lambda c: (len(c.trace), c.canonical_text()))
        cap = self.config.max_candidates
        if cap is not None and len(candidates) > cap:
            self.stats['truncated'] = True
            candidates = candidates[:cap]
        return candidates

    def run(self):
        goals = [self.formula] + list(self.config.constraints)
        if all(self.holds(self.base, self.root, g) for g in goals):
            return [UpdateCandidate.from_model(self.base, self.base, self.root)]

        combined = conjunction(goals)
        # constraints the base already breaks are repaired alongside the goal
        goal = self.formula if self._inner_constraints else combined
        if is_satisfiable(combined) is False:
            raise UnsatisfiableError("Formula %s has no model" % format_formula(combined))

        models = self._try_fast_path() if self.config.fast_path else []
        if not models:
            self._log("searching repairs for %s (recursion cap %d)" % (format_formula(goal), self.cap))
            models = self.update(self.base, self.root, goal, (), 0)

        candidates = self.package(models)
        self._log("%d raw model(s), %d candidate(s) after minimisation" % (
            self.stats['generated'], self.stats['minimized']))
        if not candidates:
            raise UpdateBudgetError(
                "No repair for %s found within the configured caps (%d expansion steps used)"
                % (format_formula(self.formula), self.stats['steps']))
        return candidates


def ctl_update(pm, f, config=None):
    """
    Repair a pointed model so that it satisfies f.
    Args:
        pm: PointedModel
        f: Formula, normalized
        config: optional UpdateConfig
    Returns:
        list of UpdateCandidate ordered by (trace length, canonical model text). A model that
        already satisfies f yields exactly the identity candidate.
    Raises:
        UnsatisfiableError if f together with the constraints has no model
        UpdateBudgetError if the caps stop the search before any candidate is found
    """
    return CtlUpdater(pm, f, config).run()


def _run_handler(pm, f, config, expected, call):
    if not isinstance(f, expected):
        raise CtlRepairError("Formula %s does not have the shape this handler repairs" % format_formula(f))
    updater = CtlUpdater(pm, f, config)
    if updater.holds(pm.model, pm.start, f):
        return [UpdateCandidate.from_model(pm.model, pm.model, pm.start)]
    models = call(updater, pm.model, pm.start)
    models = [m for m in models if updater.admits(m, pm.start, f, ())]
    return updater.package(models, minimize=False)


def update_prop(pm, f, config=None):
    if not is_propositional(f):
        raise CtlRepairError("Formula %s is not propositional" % format_formula(f))
    return _run_handler(pm, f, config, (Atom, Not, And, Or, Implies, type(TRUE), type(FALSE)),
                        lambda u, m, s0: u._update_prop(m, s0, f))


def update_ex(pm, f, config=None):
    return _run_handler(pm, f, config, EX, lambda u, m, s0: u._update_ex(m, s0, f.arg, (), 0))


def update_ax(pm, f, config=None):
    return _run_handler(pm, f, config, AX, lambda u, m, s0: u._update_all_next(m, s0, f.arg, (), 0))


def update_af(pm, f, config=None):
    return _run_handler(pm, f, config, AF, lambda u, m, s0: u._dispatch(m, s0, f, (), 0))


def update_eg(pm, f, config=None):
    return _run_handler(pm, f, config, EG, lambda u, m, s0: u._update_eg(m, s0, f.arg, (), 0))


def update_eu(pm, f, config=None):
    return _run_handler(pm, f, config, EU, lambda u, m, s0: u._update_eu(m, s0, f.left, f.right, (), 0))


def update_ag(pm, f, config=None):
    return _run_handler(pm, f, config, AG,
                        lambda u, m, s0: u._update_never(m, s0, TRUE, negate(f.arg), (), 0))


def update_and(pm, f, config=None):
    return _run_handler(pm, f, config, And, lambda u, m, s0: u._dispatch(m, s0, f, (), 0))


def update_or(pm, f, config=None):
    return _run_handler(pm, f, config, Or, lambda u, m, s0: u._dispatch(m, s0, f, (), 0))


def update_not(pm, f, config=None):
    return _run_handler(pm, f, config, Not, lambda u, m, s0: u._dispatch(m, s0, f, (), 0))

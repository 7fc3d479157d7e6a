# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import DUMMY_STATE


class DiffVector(object):
    """
    The five change sets between a base model and another model, plus the per-state label changes.
    Args:
        added_edges: transitions only in the other model
        removed_edges: transitions only in the base model
        relabeled_states: states of both models whose labels differ
        added_states: states only in the other model
        removed_states: states only in the base model
        label_changes: dict state -> (atoms added, atoms removed) for each relabeled state
    """

    def __init__(self, added_edges=(), removed_edges=(), relabeled_states=(), added_states=(),
                 removed_states=(), label_changes=None):
        self.added_edges = frozenset(added_edges)
        self.removed_edges = frozenset(removed_edges)
        self.relabeled_states = frozenset(relabeled_states)
        self.added_states = frozenset(added_states)
        self.removed_states = frozenset(removed_states)
        self.label_changes = dict(
            (s, (frozenset(a), frozenset(r))) for s, (a, r) in (label_changes or {}).items()
        )

    @property
    def label_deltas(self):
        return dict((s, a | r) for s, (a, r) in self.label_changes.items())

    def components(self):
        return (self.added_edges, self.removed_edges, self.relabeled_states, self.added_states, self.removed_states)

    def size(self):
        return sum(len(c) for c in self.components())

    def is_empty(self):
        return not any(self.components())

    def __eq__(self, other):
        return (
            isinstance(other, DiffVector) and
            self.components() == other.components() and
            self.label_deltas == other.label_deltas
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.components())

    def __repr__(self):
        return "DiffVector(+E=%s, -E=%s, L=%s, +S=%s, -S=%s)" % tuple(sorted(c) for c in self.components())


def compute_diff(base, other):
    common = set(base.states) & set(other.states)
    label_changes = {}
    for s in common:
        before, after = base.labels[s], other.labels[s]
        if before != after:
            label_changes[s] = (after - before, before - after)
    return DiffVector(
        added_edges=other.transitions - base.transitions,
        removed_edges=base.transitions - other.transitions,
        relabeled_states=label_changes.keys(),
        added_states=set(other.states) - set(base.states),
        removed_states=set(base.states) - set(other.states),
        label_changes=label_changes,
    )


def diff_leq(d1, d2):
    """
    The closeness test on two diff vectors taken against the same base: every change set of d1 is
    contained in the matching set of d2, and when both relabel exactly the same states each
    per-state label change of d1 is contained in that of d2.
    """
    if not all(a <= b for a, b in zip(d1.components(), d2.components())):
        return False
    if d1.relabeled_states == d2.relabeled_states:
        deltas1, deltas2 = d1.label_deltas, d2.label_deltas
        return all(deltas1[s] <= deltas2[s] for s in d1.relabeled_states)
    return True


def closer_or_equal(base, m1, m2):
    return diff_leq(compute_diff(base, m1), compute_diff(base, m2))


def strictly_closer(base, m1, m2):
    d1, d2 = compute_diff(base, m1), compute_diff(base, m2)
    return diff_leq(d1, d2) and not diff_leq(d2, d1)


def diff_strictly_less(d1, d2):
    return diff_leq(d1, d2) and not diff_leq(d2, d1)


def _edge_list(edges):
    return [[s, t] for (s, t) in sorted(edges) if DUMMY_STATE not in (s, t)]


def diff_to_json(diff):
    """
    JSON rendering. Edges leaving the dummy root are initial-state switches and are reported
    under added_initial / removed_initial instead of as edges.
    """
    return {
        'added_edges': _edge_list(diff.added_edges),
        'removed_edges': _edge_list(diff.removed_edges),
        'relabeled': dict(
            (s, {'added': sorted(a), 'removed': sorted(r)})
            for s, (a, r) in sorted(diff.label_changes.items())
        ),
        'added_states': sorted(s for s in diff.added_states if s != DUMMY_STATE),
        'removed_states': sorted(s for s in diff.removed_states if s != DUMMY_STATE),
        'added_initial': sorted(t for (s, t) in diff.added_edges if s == DUMMY_STATE),
        'removed_initial': sorted(t for (s, t) in diff.removed_edges if s == DUMMY_STATE),
    }

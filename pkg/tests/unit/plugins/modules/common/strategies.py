from __future__ import absolute_import, division, print_function

__metaclass__ = type

from hypothesis import strategies as st

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    AF, AG, AU, AX, EF, EG, EU, EX, FALSE, TRUE,
    And, Atom, Implies, Not, Or,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import KripkeModel
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_operations import (
    apply_pu1,
    apply_pu2,
    apply_pu3,
)


ATOMS = ('p', 'q', 'r')


@st.composite
def labels(draw, atoms=ATOMS):
    return frozenset(draw(st.sets(st.sampled_from(atoms))))


@st.composite
def models(draw, max_states=4, atoms=ATOMS, min_states=1):
    """
    Small models over s0..sN with s0 as the only initial state.
    """
    count = draw(st.integers(min_value=min_states, max_value=max_states))
    states = ['s%d' % i for i in range(count)]
    pairs = [(a, b) for a in states for b in states]
    transitions = draw(st.sets(st.sampled_from(pairs)))
    state_labels = dict((s, draw(labels(atoms))) for s in states)
    return KripkeModel(states, atoms, transitions, state_labels, ['s0'])


@st.composite
def propositions(draw, atoms=ATOMS, max_depth=2):
    if max_depth == 0 or draw(st.booleans()):
        return draw(st.sampled_from([Atom(a) for a in atoms] + [TRUE, FALSE]))
    kind = draw(st.sampled_from(['not', 'and', 'or', 'implies']))
    if kind == 'not':
        return Not(draw(propositions(atoms, max_depth - 1)))
    left = draw(propositions(atoms, max_depth - 1))
    right = draw(propositions(atoms, max_depth - 1))
    return {'and': And, 'or': Or, 'implies': Implies}[kind](left, right)


@st.composite
def formulas(draw, atoms=ATOMS, max_depth=3):
    if max_depth == 0 or draw(st.integers(min_value=0, max_value=3)) == 0:
        return draw(st.sampled_from([Atom(a) for a in atoms] + [TRUE, FALSE]))
    kind = draw(st.sampled_from(['not', 'and', 'or', 'AX', 'EX', 'AG', 'EG', 'AF', 'EF', 'AU', 'EU']))
    if kind in ('and', 'or', 'AU', 'EU'):
        left = draw(formulas(atoms, max_depth - 1))
        right = draw(formulas(atoms, max_depth - 1))
        return {'and': And, 'or': Or, 'AU': AU, 'EU': EU}[kind](left, right)
    arg = draw(formulas(atoms, max_depth - 1))
    return {'not': Not, 'AX': AX, 'EX': EX, 'AG': AG, 'EG': EG, 'AF': AF, 'EF': EF}[kind](arg)


@st.composite
def single_atom_aeclass(draw, atoms=ATOMS):
    """
    One temporal operator applied to a literal, the shape the reference search is compared on.
    """
    atom = Atom(draw(st.sampled_from(atoms)))
    literal = draw(st.sampled_from([atom, Not(atom)]))
    kind = draw(st.sampled_from([AX, EX, AG, EG, AF, EF]))
    return kind(literal)


@st.composite
def edited(draw, base, max_edits=3, atoms=ATOMS):
    """
    A model derived from base by up to max_edits transition additions, removals and relabels.
    """
    model = base
    for _step in range(draw(st.integers(min_value=0, max_value=max_edits))):
        states = list(model.states)
        kind = draw(st.sampled_from(['add', 'remove', 'relabel']))
        if kind == 'add':
            edge = (draw(st.sampled_from(states)), draw(st.sampled_from(states)))
            if edge not in model.transitions:
                model = apply_pu1(model, edge)
        elif kind == 'remove' and model.transitions:
            model = apply_pu2(model, draw(st.sampled_from(sorted(model.transitions))))
        else:
            state = draw(st.sampled_from(states))
            label = draw(labels(atoms))
            if label != model.labels[state]:
                model = apply_pu3(model, state, label)
    return model


@st.composite
def literals(draw, atoms=ATOMS):
    atom = Atom(draw(st.sampled_from(atoms)))
    return draw(st.sampled_from([atom, Not(atom)]))


@st.composite
def until_of_literals(draw, atoms=ATOMS):
    kind = draw(st.sampled_from([AU, EU]))
    return kind(draw(literals(atoms)), draw(literals(atoms)))


@st.composite
def repair_goals(draw, atoms=ATOMS):
    """
    Single-operator goals, untils of literals, and conjunctions or disjunctions of two of them.
    """
    part = st.one_of(single_atom_aeclass(atoms), until_of_literals(atoms))
    kind = draw(st.sampled_from(['single', 'single', 'and', 'or']))
    if kind == 'single':
        return draw(part)
    return {'and': And, 'or': Or}[kind](draw(part), draw(part))

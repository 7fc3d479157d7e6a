# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import traceback

try:
    from lark import Lark, Transformer
    from lark.exceptions import LarkError, UnexpectedEOF, UnexpectedInput, VisitError
    LARK_IMP_ERR = None
except ImportError:
    LARK_IMP_ERR = traceback.format_exc()
    Transformer = object

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    CtlRepairError,
    FormulaSyntaxError,
    MissingLibError,
    NotInClassError
)


# keywords of the surface syntax, never usable as atom names
RESERVED_WORDS = frozenset([
    'A', 'E', 'U', 'AX', 'EX', 'AG', 'EG', 'AF', 'EF', 'true', 'false',
])

FORMULA_GRAMMAR = r'''
?start: implication

?implication: disjunction
    | disjunction _IMPLIES implication -> implies

?disjunction: conjunction
    | disjunction _OR conjunction -> or_

?conjunction: unary
    | conjunction _AND unary -> and_

?unary: _NOT unary -> not_
    | "AX" unary -> ax
    | "EX" unary -> ex
    | "AG" unary -> ag
    | "EG" unary -> eg
    | "AF" unary -> af
    | "EF" unary -> ef
    | "A" "[" implication "U" implication "]" -> au
    | "E" "[" implication "U" implication "]" -> eu
    | "(" implication ")"
    | "true" -> true
    | "false" -> false
    | NAME -> atom

NAME: /[A-Za-z0-9_.]+/
_IMPLIES: "->" | "→"
_OR: "|" | "∨"
_AND: "&" | "∧"
_NOT: "!" | "¬"

%import common.WS
%ignore WS
'''


class Formula(object):
    """
    Base class of the CTL abstract syntax tree. Nodes are immutable and compare by structure.
    """
    __slots__ = ()
    temporal = False

    def children(self):
        return ()

    def _key(self):
        return self.children()

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__,) + tuple(self._key()))

    def __lt__(self, other):
        return format_formula(self) < format_formula(other)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, ', '.join(repr(c) for c in self._key()))

    def __str__(self):
        return format_formula(self)


class TrueFormula(Formula):
    __slots__ = ()

    def __repr__(self):
        return 'TRUE'


class FalseFormula(Formula):
    __slots__ = ()

    def __repr__(self):
        return 'FALSE'


TRUE = TrueFormula()
FALSE = FalseFormula()


class Atom(Formula):
    __slots__ = ('name',)

    def __init__(self, name):
        self.name = name

    def _key(self):
        return (self.name,)


class _Unary(Formula):
    __slots__ = ('arg',)
    keyword = None

    def __init__(self, arg):
        self.arg = arg

    def children(self):
        return (self.arg,)


class _Binary(Formula):
    __slots__ = ('left', 'right')
    symbol = None

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def children(self):
        return (self.left, self.right)


class Not(_Unary):
    __slots__ = ()
    keyword = '!'


class AX(_Unary):
    __slots__ = ()
    keyword = 'AX'
    temporal = True


class EX(_Unary):
    __slots__ = ()
    keyword = 'EX'
    temporal = True


class AG(_Unary):
    __slots__ = ()
    keyword = 'AG'
    temporal = True


class EG(_Unary):
    __slots__ = ()
    keyword = 'EG'
    temporal = True


class AF(_Unary):
    __slots__ = ()
    keyword = 'AF'
    temporal = True


class EF(_Unary):
    __slots__ = ()
    keyword = 'EF'
    temporal = True


class And(_Binary):
    __slots__ = ()
    symbol = '&'


class Or(_Binary):
    __slots__ = ()
    symbol = '|'


class Implies(_Binary):
    __slots__ = ()
    symbol = '->'


class AU(_Binary):
    __slots__ = ()
    symbol = 'A'
    temporal = True


class EU(_Binary):
    __slots__ = ()
    symbol = 'E'
    temporal = True


class _FormulaBuilder(Transformer):
    def implies(self, items):
        return Implies(items[0], items[1])

    def or_(self, items):
        return Or(items[0], items[1])

    def and_(self, items):
        return And(items[0], items[1])

    def not_(self, items):
        return Not(items[0])

    def ax(self, items):
        return AX(items[0])

    def ex(self, items):
        return EX(items[0])

    def ag(self, items):
        return AG(items[0])

    def eg(self, items):
        return EG(items[0])

    def af(self, items):
        return AF(items[0])

    def ef(self, items):
        return EF(items[0])

    def au(self, items):
        return AU(items[0], items[1])

    def eu(self, items):
        return EU(items[0], items[1])

    def true(self, items):
        return TRUE

    def false(self, items):
        return FALSE

    def atom(self, items):
        name = str(items[0])
        if name in RESERVED_WORDS:
            raise FormulaSyntaxError("%s is a keyword and cannot name an atom" % name)
        return Atom(name)


_PARSER = None


def check_requirements():
    if LARK_IMP_ERR:
        raise MissingLibError('lark', LARK_IMP_ERR)


def _get_parser():
    global _PARSER
    check_requirements()
    if _PARSER is None:
        _PARSER = Lark(FORMULA_GRAMMAR, parser='lalr')
    return _PARSER


def parse(text):
    """
    Parse a formula written in the ASCII surface syntax (Unicode connectives are accepted too).
    Args:
        text: str, the formula text
    Returns:
        Formula
    Raises:
        FormulaSyntaxError if the text is empty or does not follow the grammar
    """
    if text is None or not text.strip():
        raise FormulaSyntaxError("Formula text is empty")

    parser = _get_parser()
    try:
        tree = parser.parse(text)
    except UnexpectedEOF:
        raise FormulaSyntaxError("Unexpected end of formula %r" % text)
    except UnexpectedInput as e:
        raise FormulaSyntaxError(
            "Unexpected input in formula %r" % text,
            line=getattr(e, 'line', None),
            column=getattr(e, 'column', None)
        )
    except LarkError as e:
        raise FormulaSyntaxError("Unable to parse formula %r: %s" % (text, e))

    try:
        return _FormulaBuilder().transform(tree)
    except VisitError as e:
        raise FormulaSyntaxError("Unable to build formula %r: %s" % (text, e.orig_exc))


def format_formula(f):
    """
    Canonical text of a formula. Binary operators are always bracketed so the output parses back
    to the same tree.
    """
    if isinstance(f, TrueFormula):
        return 'true'
    if isinstance(f, FalseFormula):
        return 'false'
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return '!%s' % format_formula(f.arg)
    if isinstance(f, _Unary):
        return '%s %s' % (f.keyword, format_formula(f.arg))
    if isinstance(f, (AU, EU)):
        return '%s[%s U %s]' % (f.symbol, format_formula(f.left), format_formula(f.right))
    return '(%s %s %s)' % (format_formula(f.left), f.symbol, format_formula(f.right))


def conjunction(formulas):
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return TRUE if result is None else result


def disjunction(formulas):
    result = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return FALSE if result is None else result


def is_propositional(f):
    if f.temporal:
        return False
    return all(is_propositional(c) for c in f.children())


def formula_size(f):
    return 1 + sum(formula_size(c) for c in f.children())


def depth(f):
    """
    Operator nesting depth; atoms and constants have depth 0.
    """
    kids = f.children()
    if not kids:
        return 0
    return 1 + max(depth(c) for c in kids)


def atoms(f):
    if isinstance(f, Atom):
        return frozenset([f.name])
    found = set()
    for c in f.children():
        found |= atoms(c)
    return frozenset(found)


def subformulas(f):
    """
    Returns the distinct subformulas of f in bottom-up (post) order, f itself last.
    """
    ordered = []
    seen = set()

    def _walk(node):
        for c in node.children():
            _walk(c)
        if node not in seen:
            seen.add(node)
            ordered.append(node)

    _walk(f)
    return ordered


def evaluate(f, label):
    """
    Evaluate a propositional formula against a set of true atoms.
    Raises:
        CtlRepairError if f contains a temporal operator
    """
    if isinstance(f, TrueFormula):
        return True
    if isinstance(f, FalseFormula):
        return False
    if isinstance(f, Atom):
        return f.name in label
    if isinstance(f, Not):
        return not evaluate(f.arg, label)
    if isinstance(f, And):
        return evaluate(f.left, label) and evaluate(f.right, label)
    if isinstance(f, Or):
        return evaluate(f.left, label) or evaluate(f.right, label)
    if isinstance(f, Implies):
        return (not evaluate(f.left, label)) or evaluate(f.right, label)
    raise CtlRepairError("Formula %s is not propositional" % format_formula(f))


def simplify(f):
    """
    Remove double negation, fold negated constants and drop constant units under & and |.
    Works bottom-up, so one pass reaches a fixed point.
    """
    if isinstance(f, _Unary):
        arg = simplify(f.arg)
        if isinstance(f, Not):
            if isinstance(arg, Not):
                return arg.arg
            if arg == TRUE:
                return FALSE
            if arg == FALSE:
                return TRUE
        return type(f)(arg)

    if isinstance(f, _Binary):
        left, right = simplify(f.left), simplify(f.right)
        if isinstance(f, And):
            if FALSE in (left, right):
                return FALSE
            if left == TRUE:
                return right
            if right == TRUE:
                return left
        elif isinstance(f, Or):
            if TRUE in (left, right):
                return TRUE
            if left == FALSE:
                return right
            if right == FALSE:
                return left
        return type(f)(left, right)

    return f


def _rewrite(f):
    if isinstance(f, (Atom, TrueFormula, FalseFormula)):
        return f
    if isinstance(f, Implies):
        return Or(Not(_rewrite(f.left)), _rewrite(f.right))
    if isinstance(f, AX):
        return Not(EX(Not(_rewrite(f.arg))))
    if isinstance(f, EF):
        return EU(TRUE, _rewrite(f.arg))
    if isinstance(f, EG):
        return Not(AF(Not(_rewrite(f.arg))))
    if isinstance(f, AG):
        return Not(EU(TRUE, Not(_rewrite(f.arg))))
    if isinstance(f, AU):
        left, right = _rewrite(f.left), _rewrite(f.right)
        return Not(Or(
            EU(Not(right), And(Not(left), Not(right))),
            Not(AF(Not(Not(right))))
        ))
    if isinstance(f, _Unary):
        return type(f)(_rewrite(f.arg))
    return type(f)(_rewrite(f.left), _rewrite(f.right))


def normalize(f):
    """
    Rewrite f into the core connectives (propositional, EX, E[U], AF and negation).
    The result is equivalent to f and normalize is idempotent.
    """
    return simplify(_rewrite(f))


def is_aeclass_atomic(f):
    if isinstance(f, _Unary) and f.temporal:
        return is_propositional(f.arg)
    if isinstance(f, (AU, EU)):
        return is_propositional(f.left) and is_propositional(f.right)
    return False


def classify_aeclass(f):
    """
    Split an AEClass formula into its atomic subformulas.
    Returns:
        tuple of atomic AEClass formulas, in first-occurrence order without repeats
    Raises:
        NotInClassError if f is not a conjunction/disjunction of atomic AEClass formulas
    """
    found = []

    def _collect(node):
        if is_aeclass_atomic(node):
            if node not in found:
                found.append(node)
        elif isinstance(node, (And, Or)):
            _collect(node.left)
            _collect(node.right)
        else:
            raise NotInClassError("Formula %s is not in AEClass" % format_formula(f))

    _collect(f)
    return tuple(found)

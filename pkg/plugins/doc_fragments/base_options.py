# -*- coding: utf-8 -*-

# Copyright: (c) 2024, Ansible Cloud Team (@ansible-collections)
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import absolute_import, division, print_function
__metaclass__ = type


class ModuleDocFragment(object):
    # This document fragment serves as a base for all ctlrepair modules that read a model and a goal formula.
    #
    # This ctlrepair.ctlrepair.base_options fragment covers the arg spec provided by the base_argument_spec() function
    DOCUMENTATION = r'''
notes:
  - State and atom names may contain letters, digits, underscores and dots. The name C(#) is reserved for the dummy root.
  - >-
      Formulas use the operators !, &, |, ->, AX, EX, AG, EG, AF, EF, A[f U g] and E[f U g], plus the constants
      true and false. Unicode connectives (¬ ∧ ∨ →) are accepted too.
  - Paths are infinite. A state without successors satisfies every A formula and no E formula.
requirements:
  - lark
  - networkx
options:
  model_path:
    description:
      - The path to the model document.
    type: path
    required: true
    aliases: [ model ]
  model_format:
    description:
      - The format of the model document.
      - V(auto) picks JSON for files ending in C(.json) and the text format otherwise.
    type: str
    default: auto
    choices: [ auto, text, json ]
  formula:
    description:
      - The CTL formula.
      - One of O(formula) or O(formula_path) must be specified.
    type: str
  formula_path:
    description:
      - The path to a file holding the CTL formula.
      - One of O(formula) or O(formula_path) must be specified.
    type: path
  start:
    description:
      - The state the formula is evaluated at.
      - If not set, the single initial state is used, or the dummy root when the model has several initial states.
    type: str
    required: false
  dummy_root:
    description:
      - Whether to root the model in a dummy state C(#) whose successors are the initial states.
      - With the dummy root the formula is evaluated at C(#), which carries an empty label.
      - V(auto) adds it when the model has more than one initial state and O(start) is not set.
      - V(never) requires a single initial state or O(start).
      - If the value is not specified in the task, the value of environment variable E(CTLREPAIR_DUMMY_ROOT) will be used instead.
    type: str
    default: auto
    choices: [ auto, always, never ]
'''

# -*- coding: utf-8 -*-

# Copyright: (c) 2024, Ansible Cloud Team (@ansible-collections)
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import absolute_import, division, print_function
__metaclass__ = type


class ModuleDocFragment(object):
    # This document fragment serves as a compliment to the ctlrepair.ctlrepair.base_options fragment for modules
    # that repair models. You must include the base fragment in addition to this
    #
    # This ctlrepair.ctlrepair.update_options fragment covers the options added by update_argument_spec()
    DOCUMENTATION = r'''
options:
  committed:
    description:
      - Keep only candidates whose unchanged reachable part is not strictly smaller than that of another candidate.
      - Goals of the form AF psi with propositional psi are repaired by relabeling the most shared state of the
        violating paths, or by cutting the first step of such a path when its target stays reachable.
    type: bool
    default: false
  constraints:
    description:
      - Formulas every candidate must satisfy at the start state, such as domain invariants.
    type: list
    elements: str
    default: []
  constraints_path:
    description:
      - A file with one constraint formula per line. Blank lines and lines starting with C(#) are skipped.
      - Combined with O(constraints).
    type: path
    required: false
  max_candidates:
    description:
      - The maximum number of candidates produced by the search.
      - If the value is not specified in the task, the value of environment variable E(CTLREPAIR_MAX_CANDIDATES) will be used instead.
    type: int
    default: 256
  enumerate_all:
    description:
      - Ignore O(max_candidates) and keep every candidate found.
    type: bool
    default: false
  max_new_states:
    description:
      - The maximum number of fresh states a candidate may introduce. V(0) forbids fresh states.
      - If the value is not specified in the task, the value of environment variable E(CTLREPAIR_MAX_NEW_STATES) will be used instead.
    type: int
    default: 2
  recursion_cap:
    description:
      - The nesting limit of recursive updates. Defaults to three times the size of the formula.
      - If the value is not specified in the task, the value of environment variable E(CTLREPAIR_RECURSION_CAP) will be used instead.
    type: int
    required: false
  min_assignments_cap:
    description:
      - The maximum number of labels tried when a state is relabeled.
      - If the value is not specified in the task, the value of environment variable E(CTLREPAIR_MIN_ASSIGNMENTS_CAP) will be used instead.
    type: int
    default: 8
  fast_path:
    description:
      - V(auto) first tries a repair made of transition additions and removals only, for formulas whose temporal
        parts are built from AX, EX, AG, EG, AF, EF, AU and EU over propositional arguments.
      - The full search runs when the fast path finds nothing.
    type: str
    default: never
    choices: [ auto, never ]
  out_dir:
    description:
      - The directory candidate documents are written to. It is created when missing.
      - If not set, candidates are only returned.
    type: path
    required: false
  output_format:
    description:
      - The format of the files written to O(out_dir).
    type: str
    default: json
    choices: [ json, dot ]
  report_path:
    description:
      - A file the run report is written to as JSON.
    type: path
    required: false
'''

#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2024, Ansible Cloud Team (@ansible-collections)
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import absolute_import, division, print_function
__metaclass__ = type


DOCUMENTATION = r'''
---
module: ctl_oracle
short_description: Exhaustive reference search for very small models
description:
    - A debugging aid. Enumerates every model within a small edit budget of the given model and returns the
      ones that satisfy the formula and that no other satisfying model beats on closeness.
    - Also decides the formula by unfolding every simple lasso, independently of the labeling checker.
    - The search is exponential. Models with more than 6 states or 3 atoms, and formulas nested deeper
      than 4 operators, are refused.
author:
    - Ansible Cloud Team (@ansible-collections)

options:
    max_ops:
        description:
            - The number of primitive operations applied to the model during the search.
        type: int
        default: 2
    allow_new_states:
        description:
            - The number of fresh states the search may add.
        type: int
        default: 0
    atoms:
        description:
            - The atoms that labels may range over. Defaults to the atoms declared by the model.
        type: list
        elements: str
        required: false

extends_documentation_fragment:
    - ctlrepair.ctlrepair.base_options
'''

EXAMPLES = r'''
- name: Compare With The Reference Search
  ctlrepair.ctlrepair.ctl_oracle:
    model_path: files/small.kripke
    formula: AG p
    max_ops: 2
'''

RETURN = r'''
admissible:
    description:
        - The closest satisfying models found within the budget, each with its diff against the input model.
    returned: always
    type: list
    elements: dict
    sample: [{
        "model": {"atoms": ["p"], "init": ["s0"], "states": {"s0": ["p"], "s1": ["p"]}, "trans": [["s0", "s1"], ["s1", "s1"]]},
        "diff": {"added_edges": [], "removed_edges": [], "relabeled": {"s1": {"added": ["p"], "removed": []}}}
    }]
brute_force_satisfied:
    description:
        - Whether the formula holds at the start state according to the lasso unfolding.
    returned: always
    type: bool
    sample: false
models_examined:
    description:
        - How many distinct models the search enumerated.
    returned: always
    type: int
    sample: 41
'''

from ansible.module_utils.basic import AnsibleModule

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._module_ctl_base import (
    ModuleCtlBase
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_argument_spec import (
    base_argument_spec
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import ConfigurationError
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_oracle import (
    EditBudget,
    brute_force_admissible,
    brute_force_check,
    enumerate_models,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import diff_to_json
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import model_to_json


class CtlOracle(ModuleCtlBase):
    def run(self):
        if self.params['max_ops'] < 0 or self.params['allow_new_states'] < 0:
            raise ConfigurationError("max_ops and allow_new_states must be 0 or more")
        formula = self.load_formula()
        pm = self.pointed_model(self.load_model(self.params['model_path']))
        budget = EditBudget(
            max_ops=self.params['max_ops'],
            allow_new_states=self.params['allow_new_states'],
            atom_universe=self.params.get('atoms'),
        )

        satisfied = brute_force_check(pm, formula)
        examined = len(enumerate_models(pm.model, budget))
        admissible = brute_force_admissible(pm, formula, budget)
        return dict(
            changed=False,
            brute_force_satisfied=satisfied,
            models_examined=examined,
            admissible=[
                {'model': model_to_json(model), 'diff': diff_to_json(diff)}
                for model, diff in admissible
            ],
        )


def main():
    module = AnsibleModule(
        argument_spec={
            **base_argument_spec(), **dict(
                max_ops=dict(type='int', default=2),
                allow_new_states=dict(type='int', default=0),
                atoms=dict(type='list', elements='str', required=False),
            )
        },
        supports_check_mode=True,
        required_one_of=[
            ('formula', 'formula_path')
        ],
        mutually_exclusive=[
            ('formula', 'formula_path')
        ],
    )

    result = CtlOracle(module).execute()
    module.exit_json(**result)


if __name__ == '__main__':
    main()

#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2024, Ansible Cloud Team (@ansible-collections)
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import absolute_import, division, print_function
__metaclass__ = type


DOCUMENTATION = r'''
---
module: ctl_check
short_description: Check a CTL formula against a Kripke model
description:
    - Decides whether a CTL formula holds at the start state of a Kripke model.
    - Models are read from a text or JSON model document, see the collection README for both formats.
    - This module never changes anything.
author:
    - Ansible Cloud Team (@ansible-collections)

options: {}

extends_documentation_fragment:
    - ctlrepair.ctlrepair.base_options
'''

EXAMPLES = r'''
- name: Check That The Oven Never Starts Without Heating
  ctlrepair.ctlrepair.ctl_check:
    model_path: files/microwave.kripke
    formula: "!EF(Start & EG !Heat)"
  register: _check

- name: Read The Formula From A File And Check It From State s3
  ctlrepair.ctlrepair.ctl_check:
    model_path: files/microwave.json
    formula_path: files/property.ctl
    start: s3
'''

RETURN = r'''
satisfied:
    description:
        - Whether the formula holds at the start state.
    returned: always
    type: bool
    sample: false
rc:
    description:
        - 0 when the formula holds, 1 when it does not.
    returned: always
    type: int
    sample: 1
start:
    description:
        - The state the formula was evaluated at. The value C(#) names the dummy root.
    returned: always
    type: str
    sample: s1
sat_states:
    description:
        - Every state of the model satisfying the formula, sorted.
    returned: always
    type: list
    elements: str
    sample: ["s3", "s4"]
false_states:
    description:
        - For goals of the form AG psi with propositional psi, the reachable states violating psi.
    returned: when the goal has that form
    type: list
    elements: str
    sample: ["s2", "s5"]
offending_states:
    description:
        - For invariant shaped goals (AG psi, !EF chi, !E[true U chi]), the reachable states where the invariant body fails.
    returned: when the goal has that form
    type: list
    elements: str
    sample: ["s2", "s5"]
size:
    description:
        - The size of the formula, counting operators and atoms.
    returned: always
    type: int
    sample: 7
normalized:
    description:
        - The formula rewritten over the core operators, in canonical text.
    returned: always
    type: str
    sample: "!E[true U (Start & !AF Heat)]"
'''

from ansible.module_utils.basic import AnsibleModule

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._module_ctl_base import (
    ModuleCtlBase,
    RC_REPAIRED,
    RC_SATISFIED,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_argument_spec import (
    base_argument_spec
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_checker import (
    false_states,
    offending_states,
    sat,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import CtlRepairError
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    format_formula,
    formula_size,
    normalize,
)


class CtlCheck(ModuleCtlBase):
    def run(self):
        with self.report.phase('parse'):
            formula = self.load_formula()
            pm = self.pointed_model(self.load_model(self.params['model_path']))

        with self.report.phase('check'):
            satisfying = sat(pm.model, formula)
        satisfied = pm.start in satisfying

        result = dict(
            changed=False,
            satisfied=satisfied,
            rc=RC_SATISFIED if satisfied else RC_REPAIRED,
            start=pm.start,
            sat_states=sorted(s for s in satisfying if s != pm.model.dummy),
            size=formula_size(formula),
            normalized=format_formula(normalize(formula)),
        )
        try:
            result['false_states'] = sorted(false_states(pm.model, pm.start, formula))
        except CtlRepairError:
            pass
        offending = offending_states(pm.model, pm.start, formula)
        if offending is not None:
            result['offending_states'] = sorted(offending)
        self.module.debug("ctl_check timings: %s" % self.report.timings)
        return result


def main():
    module = AnsibleModule(
        argument_spec=base_argument_spec(),
        supports_check_mode=True,
        required_one_of=[
            ('formula', 'formula_path')
        ],
        mutually_exclusive=[
            ('formula', 'formula_path')
        ],
    )

    result = CtlCheck(module).execute()
    module.exit_json(**result)


if __name__ == '__main__':
    main()

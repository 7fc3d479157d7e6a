#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2024, Ansible Cloud Team (@ansible-collections)
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import absolute_import, division, print_function
__metaclass__ = type


DOCUMENTATION = r'''
---
module: kripke_diff
short_description: Compare two Kripke models
description:
    - Computes the change sets between a base Kripke model and another model, the added and removed transitions,
      the relabeled states with their per-atom changes, and the added and removed states.
    - Differences in the initial states are reported separately as O(added_initial) and O(removed_initial).
author:
    - Ansible Cloud Team (@ansible-collections)

options:
    base_path:
        description:
            - The path to the base model document.
        type: path
        required: true
    other_path:
        description:
            - The path to the model document compared against the base.
            - Candidate documents written by M(ctlrepair.ctlrepair.ctl_update) cannot be read directly, extract
              their C(model) key first.
        type: path
        required: true
    model_format:
        description:
            - The format of both documents. V(auto) picks JSON for files ending in C(.json) and text otherwise.
        type: str
        default: auto
        choices: [auto, text, json]
'''

EXAMPLES = r'''
- name: Show What A Repair Changed
  ctlrepair.ctlrepair.kripke_diff:
    base_path: files/microwave.kripke
    other_path: /tmp/repairs/oven_cut.kripke
  register: _diff

- name: A Model Compared With Itself Is Identical
  ctlrepair.ctlrepair.kripke_diff:
    base_path: files/microwave.json
    other_path: files/microwave.json
'''

RETURN = r'''
diff:
    description:
        - The change sets, transitions given as [source, target] pairs.
        - When the initial states differ, both models are rooted in the dummy state C(#). Its transitions
          are not listed under C(added_edges) or C(removed_edges), the initial states they lead to are
          listed under C(added_initial) and C(removed_initial) instead. They still count towards O(size).
    returned: always
    type: dict
    sample: {
        "added_edges": [],
        "removed_edges": [["s0", "s2"]],
        "relabeled": {"s1": {"added": ["q"], "removed": []}},
        "added_states": [],
        "removed_states": [],
        "added_initial": [],
        "removed_initial": []
    }
identical:
    description:
        - Whether the two models are the same.
    returned: always
    type: bool
    sample: false
size:
    description:
        - The total number of changed transitions and states.
    returned: always
    type: int
    sample: 2
'''

from ansible.module_utils.basic import AnsibleModule

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._module_ctl_base import (
    ModuleCtlBase
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import (
    compute_diff,
    diff_to_json,
)


class KripkeDiff(ModuleCtlBase):
    def run(self):
        base = self.load_model(self.params['base_path'], allow_fresh_names=True)
        other = self.load_model(self.params['other_path'], allow_fresh_names=True)
        if base.initial != other.initial:
            # initial state switches show up as edges leaving the dummy root
            base, other = base.with_dummy(), other.with_dummy()
        diff = compute_diff(base, other)
        return dict(
            changed=False,
            diff=diff_to_json(diff),
            identical=diff.is_empty(),
            size=diff.size(),
        )


def main():
    module = AnsibleModule(
        argument_spec=dict(
            base_path=dict(type='path', required=True),
            other_path=dict(type='path', required=True),
            model_format=dict(type='str', default='auto', choices=['auto', 'text', 'json']),
        ),
        supports_check_mode=True,
    )

    result = KripkeDiff(module).execute()
    module.exit_json(**result)


if __name__ == '__main__':
    main()

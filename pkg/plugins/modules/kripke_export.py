#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2024, Ansible Cloud Team (@ansible-collections)
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import absolute_import, division, print_function
__metaclass__ = type


DOCUMENTATION = r'''
---
module: kripke_export
short_description: Render a Kripke model as a DOT graph
description:
    - Renders a Kripke model as a Graphviz DOT digraph. Initial states are drawn with a double circle.
    - When O(diff_base_path) is given, the changes against that base are highlighted. Added states and
      transitions are green and relabeled states orange. Removed states and transitions are drawn dashed grey.
author:
    - Ansible Cloud Team (@ansible-collections)

options:
    model_path:
        description:
            - The path to the model document to render.
        type: path
        required: true
        aliases: [model]
    model_format:
        description:
            - The format of the model documents. V(auto) picks JSON for files ending in C(.json) and text otherwise.
        type: str
        default: auto
        choices: [auto, text, json]
    diff_base_path:
        description:
            - An optional base model. Changes from it to O(model_path) are highlighted.
        type: path
        required: false
    dest:
        description:
            - If set, the DOT text is also written to this file.
            - The module reports a change only when the file content changes.
        type: path
        required: false
'''

EXAMPLES = r'''
- name: Render A Repair With Its Changes Highlighted
  ctlrepair.ctlrepair.kripke_export:
    model_path: /tmp/repairs/oven_relabeled.kripke
    diff_base_path: files/microwave.kripke
    dest: /tmp/repairs/oven_relabeled.dot
'''

RETURN = r'''
dot:
    description:
        - The DOT text.
    returned: always
    type: str
    sample: "digraph \"kripke\" {\n  rankdir=LR;\n  \"s1\" [label=\"s1\\n{}\", shape=doublecircle];\n}\n"
'''

import os

from ansible.module_utils.basic import AnsibleModule

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._module_ctl_base import (
    ModuleCtlBase
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_reports import write_text
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import compute_diff
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import export_dot


class KripkeExport(ModuleCtlBase):
    def run(self):
        model = self.load_model(self.params['model_path'], allow_fresh_names=True)
        highlight = None
        if self.params.get('diff_base_path'):
            base = self.load_model(self.params['diff_base_path'], allow_fresh_names=True)
            highlight = compute_diff(base, model)

        name = os.path.splitext(os.path.basename(self.params['model_path']))[0] or 'kripke'
        dot = export_dot(model, highlight=highlight, name=name)

        changed = False
        if self.params.get('dest'):
            changed = write_text(self.params['dest'], dot, check_mode=self.module.check_mode)
        return dict(changed=changed, dot=dot)


def main():
    module = AnsibleModule(
        argument_spec=dict(
            model_path=dict(type='path', required=True, aliases=['model']),
            model_format=dict(type='str', default='auto', choices=['auto', 'text', 'json']),
            diff_base_path=dict(type='path', required=False),
            dest=dict(type='path', required=False),
        ),
        supports_check_mode=True,
    )

    result = KripkeExport(module).execute()
    module.exit_json(**result)


if __name__ == '__main__':
    main()

#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2024, Ansible Cloud Team (@ansible-collections)
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import absolute_import, division, print_function
__metaclass__ = type


DOCUMENTATION = r'''
---
module: ctl_update
short_description: Repair a Kripke model so that it satisfies a CTL formula
description:
    - Computes minimally changed models in which a CTL formula holds at the start state.
    - Changes are built from five primitive operations, adding a transition, removing a transition,
      relabeling a state, adding an isolated state and removing an isolated state.
    - Candidates that another candidate beats on closeness to the original model are dropped. With
      O(committed=true) only candidates that keep the largest unchanged reachable part survive.
    - Every surviving candidate is returned as a document and, when O(out_dir) is set, written to
      C(candidate_NNN.json) or C(candidate_NNN.dot) in that directory.
    - The task fails with rc 3 when the formula together with the constraints has no model at all, and with
      rc 4 when the search caps stop the engine before it finds a candidate.
author:
    - Ansible Cloud Team (@ansible-collections)

options: {}

notes:
  - In check mode candidates are computed but no file is written.
  - The report written to O(report_path) includes timings, so it changes on every run.

extends_documentation_fragment:
    - ctlrepair.ctlrepair.base_options
    - ctlrepair.ctlrepair.update_options
'''

EXAMPLES = r'''
- name: Repair The Microwave Model
  ctlrepair.ctlrepair.ctl_update:
    model_path: files/microwave.kripke
    formula: "!EF(Start & EG !Heat)"
    out_dir: "{{ playbook_dir }}/repairs"
  register: _repairs

- name: Enumerate Every Admissible Repair Of The File System Model Under A Domain Constraint
  ctlrepair.ctlrepair.ctl_update:
    model_path: files/file_protocol.json
    formula: AG(Server.belief_valid -> Client.belief_valid)
    constraints:
      - AG(Server.out_val -> Server.belief_valid)
    enumerate_all: true
    committed: true
    output_format: dot
    out_dir: /tmp/file_protocol
    report_path: /tmp/file_protocol/report.json
'''

RETURN = r'''
rc:
    description:
        - 0 when the formula already held, 1 when repairs were produced.
    returned: on success
    type: int
    sample: 1
verdict:
    description:
        - C(satisfied) when the model already satisfied the formula, C(repaired) otherwise.
    returned: on success
    type: str
    sample: repaired
candidates:
    description:
        - One document per surviving candidate, in the order trace length then canonical model text.
        - When the formula already held this is the single identity candidate.
        - In C(diff), transitions leaving the dummy root C(#) of a model with several initial states are
          reported as initial state switches under C(added_initial) and C(removed_initial), not as edges.
    returned: on success
    type: list
    elements: dict
    sample: [{
        "index": 1,
        "formula": "!EF (Start & EG !Heat)",
        "base_model_hash": "3c5e...",
        "start": "s1",
        "model": {"atoms": ["Close", "Error", "Heat", "Start"], "init": ["s1"], "states": {}, "trans": []},
        "trace": [{"op": "PU2", "args": ["s1", "s2"]}],
        "diff": {"added_edges": [], "removed_edges": [["s1", "s2"]], "relabeled": {}, "added_states": [],
                 "removed_states": [], "added_initial": [], "removed_initial": []},
        "admissible": true,
        "committed": false,
        "unchanged_reachable": ["s1", "s3", "s4", "s6", "s7"]
    }]
report:
    description:
        - Timings per phase, candidate counts per stage and the artifacts written.
    returned: on success
    type: dict
    sample: {
        "counts": {"generated": 12, "minimized": 4, "admissible": 2, "emitted": 2},
        "timings": {"parse": 0.001, "check": 0.0002, "update": 0.05},
        "artifacts": ["/tmp/repairs/candidate_001.json"],
        "fast_path": false,
        "truncated": false
    }
written:
    description:
        - Paths of the files that were written, or would be written in check mode.
    returned: on success
    type: list
    elements: str
    sample: ["/tmp/repairs/candidate_001.json", "/tmp/repairs/candidate_002.json"]
'''

import json
import os

from ansible.module_utils.basic import AnsibleModule
from ansible.module_utils.common.text.converters import to_native

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._module_ctl_base import (
    ModuleCtlBase,
    RC_REPAIRED,
    RC_SATISFIED,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_argument_spec import (
    update_argument_spec
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import ModelError
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_filters import (
    filter_admissible,
    filter_committed,
    unchanged_reachable,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import format_formula
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_reports import (
    base_model_hash,
    candidate_document,
    candidate_file_name,
    render_candidate,
    write_text,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_update import (
    CtlUpdater,
    UpdateCandidate,
    UpdateConfig,
)


class CtlUpdate(ModuleCtlBase):
    def __init__(self, module):
        super().__init__(module)
        self.written = []
        self.changed = False

    def compute(self):
        """
        Parse the inputs and run the update engine followed by the filters.
        Returns:
            (verdict, list of UpdateCandidate, PointedModel, formula)
        """
        with self.report.phase('parse'):
            formula = self.load_formula()
            constraints = self.load_constraints()
            pm = self.pointed_model(self.load_model(self.params['model_path']))

        with self.report.phase('check'):
            updater = CtlUpdater(pm, formula, UpdateConfig.from_params(
                self.params, formula, constraints=constraints, log=self.module.debug))
            satisfied = updater.holds(pm.model, pm.start, formula)
        if satisfied:
            self.report.details['verdict'] = 'satisfied'
            self.report.count('emitted', 1)
            return 'satisfied', [UpdateCandidate.from_model(pm.model, pm.model, pm.start)], pm, formula

        with self.report.phase('update'):
            candidates = updater.run()
        for key in ('generated', 'minimized'):
            self.report.count(key, updater.stats[key])
        self.report.count('emitted', len(candidates))
        self.report.details.update(
            fast_path=updater.stats['fast_path'],
            truncated=updater.stats['truncated'],
            budget_exhausted=updater.stats['budget_exhausted'],
            steps=updater.stats['steps'],
        )
        self.warn_about_caps(updater)

        with self.report.phase('admissible'):
            candidates = filter_admissible(candidates)
        self.report.count('admissible', len(candidates))

        if self.params['committed']:
            with self.report.phase('committed'):
                candidates = filter_committed(pm, candidates)
            self.report.count('committed', len(candidates))

        self.report.details['verdict'] = 'repaired'
        return 'repaired', candidates, pm, formula

    def warn_about_caps(self, updater):
        if updater.stats['truncated']:
            self.module.warn(
                "The candidate list was cut to max_candidates=%s; raise it or set enumerate_all to see every repair"
                % self.params['max_candidates'])
        if updater.stats['budget_exhausted']:
            self.module.warn(
                "The search reached its recursion or expansion budget, some repairs may be missing")
        if self.params['fast_path'] == 'auto' and not updater.stats['fast_path']:
            self.module.warn("The transition-only fast path found no repair and the full search was used")

    def write_candidates(self, documents, candidates):
        out_dir = self.params.get('out_dir')
        if not out_dir:
            return
        if not os.path.isdir(out_dir) and not self.module.check_mode:
            try:
                os.makedirs(out_dir)
            except OSError as e:
                raise ModelError("Unable to create output directory %s: %s" % (out_dir, to_native(e)))
        fmt = self.params['output_format']
        for document, candidate in zip(documents, candidates):
            path = os.path.join(out_dir, candidate_file_name(document['index'], fmt))
            self.record_write(path, render_candidate(candidate, document, fmt))

    def record_write(self, path, text):
        if write_text(path, text, check_mode=self.module.check_mode):
            self.changed = True
        self.written.append(path)
        self.report.add_artifact(path)

    def run(self):
        verdict, candidates, pm, formula = self.compute()
        formula_text = format_formula(formula)
        base_hash = base_model_hash(pm.model)
        committed = bool(self.params['committed']) and verdict == 'repaired'
        documents = [
            candidate_document(c, i, formula_text, base_hash, admissible=True, committed=committed,
                               unchanged=unchanged_reachable(pm, c.model, c.start))
            for i, c in enumerate(candidates, start=1)
        ]

        with self.report.phase('write'):
            if verdict == 'repaired':
                self.write_candidates(documents, candidates)
            if self.params.get('report_path'):
                self.record_write(
                    self.params['report_path'],
                    json.dumps(self.report.to_dict(), sort_keys=True, indent=2) + '\n')
        self.module.debug("ctl_update timings: %s" % self.report.timings)

        return dict(
            changed=self.changed,
            rc=RC_SATISFIED if verdict == 'satisfied' else RC_REPAIRED,
            verdict=verdict,
            candidates=documents,
            report=self.report.to_dict(),
            written=self.written,
        )


def main():
    module = AnsibleModule(
        argument_spec=update_argument_spec(),
        supports_check_mode=True,
        required_one_of=[
            ('formula', 'formula_path')
        ],
        mutually_exclusive=[
            ('formula', 'formula_path'),
        ],
    )

    result = CtlUpdate(module).execute()
    module.exit_json(**result)


if __name__ == '__main__':
    main()

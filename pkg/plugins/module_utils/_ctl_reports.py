# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import hashlib
import json
import os
import time
from contextlib import contextmanager

from ansible.module_utils._text import to_native

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import ModelError
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_diff import diff_to_json
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import (
    DUMMY_STATE,
    dump_model_json,
    export_dot,
    model_to_json,
)


class RunReport(object):
    """
    Summary of one module run: per-phase timings, candidate counts per stage and the paths of
    every artifact written.
    """

    def __init__(self):
        self.timings = {}
        self.counts = {}
        self.artifacts = []
        self.details = {}

    @contextmanager
    def phase(self, name):
        started = time.time()
        try:
            yield
        finally:
            self.timings[name] = round(self.timings.get(name, 0.0) + time.time() - started, 6)

    def count(self, stage, value):
        self.counts[stage] = value

    def add_artifact(self, path):
        self.artifacts.append(path)

    def to_dict(self):
        result = dict(self.details)
        result.update({
            'timings': dict(self.timings),
            'counts': dict(self.counts),
            'artifacts': list(self.artifacts),
        })
        return result

    def dump(self, path):
        try:
            with open(path, 'w') as f:
                f.write(json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n')
        except (IOError, OSError) as e:
            raise ModelError("Unable to write report %s: %s" % (path, to_native(e)))


def base_model_hash(model):
    return hashlib.sha256(dump_model_json(model).encode('utf-8')).hexdigest()


def candidate_document(candidate, index, formula_text, base_hash, admissible=True, committed=False,
                       unchanged=()):
    """
    The JSON document describing one candidate. Transitions leaving the dummy root are
    reported as initial-state changes in the diff and as the init list of the model.
    unchanged lists the reachable states the repair left untouched.
    """
    return {
        'index': index,
        'formula': formula_text,
        'base_model_hash': base_hash,
        'start': None if candidate.start == DUMMY_STATE else candidate.start,
        'model': model_to_json(candidate.model),
        'trace': [op.to_json() for op in candidate.trace],
        'diff': diff_to_json(candidate.diff),
        'admissible': admissible,
        'committed': committed,
        'unchanged_reachable': sorted(s for s in unchanged if s != DUMMY_STATE),
    }


def candidate_file_name(index, output_format):
    return 'candidate_%03d.%s' % (index, output_format)


def render_candidate(candidate, document, output_format):
    if output_format == 'dot':
        return export_dot(candidate.model, highlight=candidate.diff, name='candidate_%03d' % document['index'])
    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def write_text(path, text, check_mode=False):
    """
    Write text to path unless it already holds exactly that text. In check mode nothing is
    written. Returns True when the file would change.
    """
    if os.path.exists(path):
        with open(path, 'r') as f:
            if f.read() == text:
                return False
    if check_mode:
        return True
    try:
        with open(path, 'w') as f:
            f.write(text)
    except (IOError, OSError) as e:
        raise ModelError("Unable to write %s: %s" % (path, to_native(e)))
    return True

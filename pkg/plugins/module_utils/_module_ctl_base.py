# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from ansible.module_utils.common.text.converters import to_native

from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils import _ctl_formula, _kripke_model
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_errors import (
    CtlRepairError,
    FormulaSyntaxError,
    MissingLibError,
    ModelError,
    UnsatisfiableError,
    UpdateBudgetError,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_formula import (
    parse,
    simplify,
)
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._ctl_reports import RunReport
from ansible_collections.ctlrepair.ctlrepair.plugins.module_utils._kripke_model import (
    DUMMY_STATE,
    PointedModel,
    load_model,
)


RC_SATISFIED = 0
RC_REPAIRED = 1
RC_INPUT_ERROR = 2
RC_UNSATISFIABLE = 3
RC_BUDGET = 4


def error_class(error):
    """
    Map an exception to its outcome code and a short class name for the failure message.
    """
    if isinstance(error, UnsatisfiableError):
        return RC_UNSATISFIABLE, 'unsatisfiable'
    if isinstance(error, UpdateBudgetError):
        return RC_BUDGET, 'budget exhausted'
    return RC_INPUT_ERROR, 'input error'


class ModuleCtlBase(object):
    def __init__(self, module):
        self.module = module
        self.params = module.params
        self.report = RunReport()

    def check_requirements(self):
        _ctl_formula.check_requirements()
        _kripke_model.check_requirements()

    def fail(self, error):
        rc, label = error_class(error)
        self.module.fail_json(msg="%s: %s" % (label, to_native(error)), rc=rc)

    def load_model(self, path, allow_fresh_names=False):
        return load_model(path, self.params.get('model_format') or 'auto', allow_fresh_names=allow_fresh_names)

    def load_formula(self, text=None, path_param='formula_path', text_param='formula'):
        """
        Read the goal formula from the formula option, or from the file named by formula_path.
        Returns:
            the parsed and simplified Formula
        """
        if text is None:
            text = self.params.get(text_param)
        if text is None and self.params.get(path_param):
            path = self.params[path_param]
            try:
                with open(path, 'r') as f:
                    text = f.read()
            except (IOError, OSError) as e:
                raise ModelError("Unable to read formula file %s: %s" % (path, to_native(e)))
        if text is None:
            raise FormulaSyntaxError("No formula given")
        return simplify(parse(text.strip()))

    def load_constraints(self):
        """
        Constraint formulas from the constraints list and the constraints_path file, where
        blank lines and lines starting with # are skipped.
        """
        texts = list(self.params.get('constraints') or [])
        path = self.params.get('constraints_path')
        if path:
            try:
                with open(path, 'r') as f:
                    lines = f.read().splitlines()
            except (IOError, OSError) as e:
                raise ModelError("Unable to read constraints file %s: %s" % (path, to_native(e)))
            texts += [line for line in (raw.strip() for raw in lines) if line and not line.startswith('#')]
        return [simplify(parse(t)) for t in texts]

    def pointed_model(self, model):
        """
        Apply the dummy_root policy and pick the start state.
        auto adds the dummy root when the model has several initial states, always adds it in
        every case, never requires a single initial state or an explicit start.
        """
        policy = self.params.get('dummy_root') or 'auto'
        start = self.params.get('start')
        if policy == 'always' or (policy == 'auto' and len(model.initial) > 1 and start is None):
            model = model.with_dummy()
            return PointedModel(model, start or DUMMY_STATE)
        if start is None:
            if len(model.initial) != 1:
                raise ModelError(
                    "The model has %d initial states; give a start state or allow the dummy root"
                    % len(model.initial))
            (start,) = tuple(model.initial)
        return PointedModel(model, start)

    def run(self):
        raise NotImplementedError()

    def execute(self):
        """
        Run the module work and turn every private error into a failed result with its
        outcome code.
        """
        try:
            self.check_requirements()
            return self.run()
        except (CtlRepairError, MissingLibError) as e:
            self.fail(e)

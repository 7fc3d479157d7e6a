# Copyright: (c) 2024, Ansible Cloud Team
# GNU General Public License v3.0+ (see LICENSES/GPL-3.0-or-later.txt or https://www.gnu.org/licenses/gpl-3.0.txt)
# SPDX-License-Identifier: GPL-3.0-or-later

# Note: This utility is considered private, and can only be referenced from inside the ctlrepair.ctlrepair collection.
#       It may be made public at a later date

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from ansible.module_utils.basic import missing_required_lib


class CtlRepairError(Exception):
    def __init__(self, *args, **kwargs):
        super(CtlRepairError, self).__init__(*args, **kwargs)


class FormulaSyntaxError(CtlRepairError):
    def __init__(self, msg, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            msg = "%s (line %s, column %s)" % (msg, line, column)
        super(FormulaSyntaxError, self).__init__(msg)


class ModelError(CtlRepairError):
    def __init__(self, *args, **kwargs):
        super(ModelError, self).__init__(*args, **kwargs)


class PreconditionError(CtlRepairError):
    def __init__(self, *args, **kwargs):
        super(PreconditionError, self).__init__(*args, **kwargs)


class EdgeExistsError(PreconditionError):
    def __init__(self, *args, **kwargs):
        super(EdgeExistsError, self).__init__(*args, **kwargs)


class EdgeMissingError(PreconditionError):
    def __init__(self, *args, **kwargs):
        super(EdgeMissingError, self).__init__(*args, **kwargs)


class UnchangedLabelError(PreconditionError):
    def __init__(self, *args, **kwargs):
        super(UnchangedLabelError, self).__init__(*args, **kwargs)


class StateExistsError(PreconditionError):
    def __init__(self, *args, **kwargs):
        super(StateExistsError, self).__init__(*args, **kwargs)


class StateNotIsolatedError(PreconditionError):
    def __init__(self, *args, **kwargs):
        super(StateNotIsolatedError, self).__init__(*args, **kwargs)


class DummyStateError(PreconditionError):
    def __init__(self, *args, **kwargs):
        super(DummyStateError, self).__init__(*args, **kwargs)


class UnsatisfiableError(CtlRepairError):
    def __init__(self, *args, **kwargs):
        super(UnsatisfiableError, self).__init__(*args, **kwargs)


class UpdateBudgetError(CtlRepairError):
    def __init__(self, *args, **kwargs):
        super(UpdateBudgetError, self).__init__(*args, **kwargs)


class ConfigurationError(CtlRepairError):
    def __init__(self, *args, **kwargs):
        super(ConfigurationError, self).__init__(*args, **kwargs)


class OracleGuardError(CtlRepairError):
    def __init__(self, *args, **kwargs):
        super(OracleGuardError, self).__init__(*args, **kwargs)


class NotInClassError(CtlRepairError):
    def __init__(self, *args, **kwargs):
        super(NotInClassError, self).__init__(*args, **kwargs)


class MissingLibError(Exception):
    def __init__(self, library, exception, url=None):
        self.exception = exception
        self.library = library
        self.url = url
        super().__init__(missing_required_lib(self.library, url=self.url))

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import json

import pytest
from ansible.module_utils import basic
from ansible.module_utils._text import to_bytes

import mock


def set_module_args(**args):
    args.setdefault('_ansible_remote_tmp', '/tmp')
    args.setdefault('_ansible_keep_remote_files', False)
    basic._ANSIBLE_ARGS = to_bytes(json.dumps({'ANSIBLE_MODULE_ARGS': args}))


class AnsibleExitJson(Exception):
    """Raised by module.exit_json, carries the result dict."""
    pass


class AnsibleFailJson(Exception):
    """Raised by module.fail_json, carries the failure dict including rc."""
    pass


def exit_json(*args, **kwargs):
    kwargs.setdefault('changed', False)
    raise AnsibleExitJson(kwargs)


def fail_json(*args, **kwargs):
    kwargs['failed'] = True
    raise AnsibleFailJson(kwargs)


def run_module(module_main, expect=AnsibleExitJson):
    """
    Run a module main() and return the dict it exited or failed with.
    """
    with pytest.raises(expect) as c:
        module_main()
    return c.value.args[0]


class ModuleTestCase:
    def setup_method(self):
        self.warnings = []

        def warn(module, message):
            self.warnings.append(message)

        self.mock_module = mock.patch.multiple(
            basic.AnsibleModule, exit_json=exit_json, fail_json=fail_json, warn=warn,
        )
        self.mock_module.start()

    def teardown_method(self):
        self.mock_module.stop()

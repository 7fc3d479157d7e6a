from __future__ import absolute_import, division, print_function
__metaclass__ = type

import sys
import pytest

from ansible_collections.ctlrepair.ctlrepair.plugins.modules.kripke_diff import (
    main as module_main
)
from .common.kripke_fixtures import (
    EXAMPLE_ONE,
    EXAMPLE_TWO_BASE,
    EXAMPLE_TWO_M2,
    write_fixture,
)
from .common.utils import (
    AnsibleExitJson, AnsibleFailJson, ModuleTestCase, set_module_args,
)

pytestmark = pytest.mark.skipif(
    sys.version_info < (2, 7), reason="requires python2.7 or higher"
)


class TestKripkeDiff(ModuleTestCase):

    def test_diff(self, tmp_path):
        set_module_args(
            base_path=write_fixture(tmp_path, 'base.kripke', EXAMPLE_TWO_BASE),
            other_path=write_fixture(tmp_path, 'm2.kripke', EXAMPLE_TWO_M2),
        )

        with pytest.raises(AnsibleExitJson) as c:
            module_main()

        result = c.value.args[0]
        assert result["changed"] is False
        assert result["identical"] is False
        assert result["size"] == 5
        assert result["diff"]["removed_states"] == ['s3']
        assert result["diff"]["added_edges"] == [['s0', 's2'], ['s1', 's0']]

    def test_identical(self, tmp_path):
        path = write_fixture(tmp_path, 'example.kripke', EXAMPLE_ONE)
        set_module_args(base_path=path, other_path=path)

        with pytest.raises(AnsibleExitJson) as c:
            module_main()

        assert c.value.args[0]["identical"] is True
        assert c.value.args[0]["size"] == 0

    def test_initial_switch(self, tmp_path):
        set_module_args(
            base_path=write_fixture(tmp_path, 'example.kripke', EXAMPLE_ONE),
            other_path=write_fixture(tmp_path, 'moved.kripke', EXAMPLE_ONE.replace('init: s0', 'init: s0 s1')),
        )

        with pytest.raises(AnsibleExitJson) as c:
            module_main()

        assert c.value.args[0]["diff"]["added_initial"] == ['s1']
        assert c.value.args[0]["diff"]["added_edges"] == []

    def test_bad_document(self, tmp_path):
        set_module_args(
            base_path=write_fixture(tmp_path, 'example.kripke', EXAMPLE_ONE),
            other_path=write_fixture(tmp_path, 'broken.json', '{"states": '),
        )

        with pytest.raises(AnsibleFailJson) as c:
            module_main()

        assert c.value.args[0]["rc"] == 2

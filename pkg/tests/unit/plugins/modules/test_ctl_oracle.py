from __future__ import absolute_import, division, print_function
__metaclass__ = type

import sys
import pytest

from ansible_collections.ctlrepair.ctlrepair.plugins.modules.ctl_oracle import (
    main as module_main
)
from .common.kripke_fixtures import (
    EXAMPLE_ONE,
    MICROWAVE,
    write_fixture,
)
from .common.utils import (
    AnsibleExitJson, AnsibleFailJson, ModuleTestCase, set_module_args,
)

pytestmark = pytest.mark.skipif(
    sys.version_info < (2, 7), reason="requires python2.7 or higher"
)


class TestCtlOracle(ModuleTestCase):

    def test_satisfied(self, tmp_path):
        set_module_args(
            model_path=write_fixture(tmp_path, 'example.kripke', EXAMPLE_ONE),
            formula="EG p",
            max_ops=1,
        )

        with pytest.raises(AnsibleExitJson) as c:
            module_main()

        result = c.value.args[0]
        assert result["changed"] is False
        assert result["brute_force_satisfied"] is True
        # three additions, six removals and seven relabels for each of the three states
        assert result["models_examined"] == 31
        assert len(result["admissible"]) == 1
        assert result["admissible"][0]["diff"]["added_edges"] == []

    def test_repairs(self, tmp_path):
        set_module_args(
            model_path=write_fixture(tmp_path, 'example.kripke', EXAMPLE_ONE),
            formula="AG p",
        )

        with pytest.raises(AnsibleExitJson) as c:
            module_main()

        result = c.value.args[0]
        assert result["brute_force_satisfied"] is False
        removed = [d["diff"]["removed_edges"] for d in result["admissible"]]
        assert [['s0', 's1'], ['s0', 's2']] in removed

    def test_guard(self, tmp_path):
        set_module_args(
            model_path=write_fixture(tmp_path, 'microwave.kripke', MICROWAVE),
            formula="AG Start",
        )

        with pytest.raises(AnsibleFailJson) as c:
            module_main()

        assert c.value.args[0]["rc"] == 2

    def test_negative_budget(self, tmp_path):
        set_module_args(
            model_path=write_fixture(tmp_path, 'example.kripke', EXAMPLE_ONE),
            formula="AG p",
            max_ops=-1,
        )

        with pytest.raises(AnsibleFailJson) as c:
            module_main()

        assert c.value.args[0]["rc"] == 2

from unittest.mock import MagicMock, patch

import pytest

from .. import lemma_checks
from ..experiment_config import ExperimentConfig
from ..lemma_checks import check_pv_quadrature, check_strict_modulus_fit
from ..suite_result import SuiteResult
from ...modulus import STRICT_GAP


@pytest.mark.harness
class TestStrictModulusFit:
    @pytest.mark.parametrize("margin, passed", [(2 * STRICT_GAP, True),
                                                (STRICT_GAP, True),
                                                (STRICT_GAP / 2, False),
                                                (0.0, False)])
    def test_against_fit_gap(self, small_config: ExperimentConfig,
                             margin: float, passed: bool):
        tm = MagicMock(B=2.0)
        with patch.object(lemma_checks, "time_modulus", return_value=tm), \
                patch.object(lemma_checks, "strict_margin",
                             return_value=margin):
            report = check_strict_modulus_fit(small_config, SuiteResult())
        assert report.passed is passed
        assert report.margin == pytest.approx(margin - STRICT_GAP)
        assert report.detail == {"B": 2.0}


@pytest.mark.harness
@pytest.mark.slow
class TestPvQuadrature:
    def test_closed_form_and_big_box(self, small_config: ExperimentConfig):
        group = check_pv_quadrature(small_config, SuiteResult())
        assert [check.name for check in group] == [
            "pv_gaussian_d1_a0.1", "pv_gaussian_d1_a0.25",
            "pv_gaussian_d2_a0.1", "pv_gaussian_d2_a0.25",
            "pv_big_box_d1_a0.25"]
        assert group.passed, group
        assert group["pv_big_box_d1_a0.25"].lhs <= 1e-3

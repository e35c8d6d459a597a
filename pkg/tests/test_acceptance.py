"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The criteria live in :mod:`qclassfun.acceptance` (they also back the CLI
``report`` subcommand); here every one is executed at its stated tolerance
and asserted.
"""

import json

from qclassfun import acceptance


def _run(check):
    outcome = check()
    status = "PASS" if outcome["passed"] else "FAIL"
    print(f"{status} criterion {outcome['id']}: {outcome['name']}")
    if not outcome["passed"]:
        print(json.dumps(outcome["details"], indent=2, default=str))
    assert outcome["passed"], outcome["name"]
    return outcome


def test_criterion_01_threshold_dim2():
    _run(acceptance.criterion_1_threshold_dim2)


def test_criterion_02_threshold_ratio_dimge3():
    _run(acceptance.criterion_2_threshold_ratio)


def test_criterion_03_threshold_remark_and_block_sums():
    _run(acceptance.criterion_3_threshold_remark)


def test_criterion_04_modular_norm_identities():
    _run(acceptance.criterion_4_modular_norms)


def test_criterion_05_dimension_additivity():
    _run(acceptance.criterion_5_dimension_additivity)


def test_criterion_06_word_calculus_oracle():
    _run(acceptance.criterion_6_word_calculus)


def test_criterion_07_decay_and_quasi_split_grid():
    outcome = _run(acceptance.criterion_7_decay_and_quasi_split)
    # the two grid points whose quantum dimension would undercut the
    # classical one define no family and must be reported as skipped
    assert outcome["details"]["skipped_invalid_families"] == [
        "o-plus N=4 qq=0.3",
        "o-plus N=5 qq=0.3",
    ]


def test_criterion_08_moment_oracles():
    _run(acceptance.criterion_8_moment_oracles)


def test_criterion_09_operator_model_shadows():
    _run(acceptance.criterion_9_operator_model)


def test_criterion_10_bicrossed_decision_table():
    _run(acceptance.criterion_10_bicrossed_table)


def test_criterion_11_kac_degeneration():
    _run(acceptance.criterion_11_kac_degeneration)


def test_aggregate_report_all_passed():
    grid = acceptance.run_all()
    assert grid["all_passed"]
    assert [entry["id"] for entry in grid["criteria"]] == list(range(1, 12))

"""Acceptance battery: each test replays one criterion at full scale and
prints a single pass/fail line (visible with `pytest -s` or on failure)."""

import pytest

from slnfusion.suite import (
    check_ffol,
    check_fusion,
    check_large,
    check_pieri,
    check_poset,
    check_rectangular,
    check_sandwich,
    check_schur,
    check_sl2,
    check_weyl,
)


def report(result, budget=None):
    print(result.line())
    assert result.passed, result.detail
    if budget is not None:
        assert result.elapsed < budget, (
            f"{result.name} took {result.elapsed:.1f}s, budget {budget}s"
        )


@pytest.fixture(scope="module")
def fusion_sweep():
    # criterion 6 produces the collapse data criterion 7 consumes
    return check_fusion()


def test_criterion_01_sl2():
    report(check_sl2(m_max=6), budget=10)


def test_criterion_02_rectangular():
    report(check_rectangular(n_values=(3, 4, 5), m_max=3), budget=60)


def test_criterion_03_pieri():
    report(check_pieri(n_values=(3, 4), coord_max=3, k_max=4), budget=60)


def test_criterion_04_large_pairs():
    report(check_large(n_values=(3, 4), coord_max=3), budget=60)


def test_criterion_05_ffol_counts():
    report(check_ffol(n_max=4, coord_max=2))


def test_criterion_06_fusion_oracle(fusion_sweep):
    result, _ = fusion_sweep
    report(result, budget=300)


def test_criterion_07_sandwich(fusion_sweep):
    _, collapses = fusion_sweep
    report(check_sandwich(collapses))


def test_criterion_08_poset():
    report(check_poset(n_max=4, coord_max=3))


def test_criterion_09_schur_positivity():
    report(check_schur(n_max=4, coord_max=3))


def test_criterion_10_weyl_prediction():
    report(check_weyl(n_max=4, coord_max=3))

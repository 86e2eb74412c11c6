"""Acceptance suite: every criterion at its stated tolerance, one line each.

Criteria 1 through 9 are computed once through the library (single
core); criterion 10 runs the installed CLI twice and compares bytes.
All arithmetic is exact, so every tolerance is zero unless a runtime
budget is part of the criterion.
"""

import subprocess
import sys
import time

import pytest

from quintic_trinomials.report import run_criteria, render_report


@pytest.fixture(scope="module")
def criteria():
    results = {r.index: r for r in run_criteria(jobs=1)}
    return results


def _report(result):
    status = "PASS" if result.passed else "FAIL"
    print(f"{status}  criterion {result.index}: {result.name} -- {result.detail}")
    assert result.passed, f"criterion {result.index}: {result.detail}"


def test_criterion_1_equivalence_parameter(criteria):
    _report(criteria[1])


def test_criterion_2_point_recovery_height_200(criteria):
    _report(criteria[2])


def test_criterion_3_root_certificates(criteria):
    _report(criteria[3])


def test_criterion_4_pair_identity(criteria):
    _report(criteria[4])


def test_criterion_5_discriminant_closed_form(criteria):
    _report(criteria[5])


def test_criterion_6_family_cycle_types(criteria):
    _report(criteria[6])


def test_criterion_7_surface(criteria):
    _report(criteria[7])


def test_criterion_8_elliptic_facts(criteria):
    _report(criteria[8])


def test_criterion_9_power_sum_conditions(criteria):
    _report(criteria[9])


def test_criterion_10_determinism():
    start = time.monotonic()
    cmd = [sys.executable, "-m", "quintic_trinomials.cli", "verify", "paper"]
    first = subprocess.run(cmd, capture_output=True, timeout=1200)
    second = subprocess.run(cmd, capture_output=True, timeout=1200)
    assert first.returncode == 0, first.stdout.decode() + first.stderr.decode()
    assert second.returncode == 0
    identical = first.stdout == second.stdout
    status = "PASS" if identical else "FAIL"
    print(f"{status}  criterion 10: byte-identical verify-paper runs "
          f"-- {len(first.stdout)} bytes each")
    assert identical
    assert b"10/10 criteria passed" in first.stdout
    assert (time.monotonic() - start) < 1200

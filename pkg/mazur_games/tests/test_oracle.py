import pytest

from helpers import product_ball
from mazur.errors import OracleSizeError, UsageError
from mazur.geometry.space import Space, to_scalar, UNIT_INTERVAL
from mazur.oracle import brute_force
from mazur.oracle.brute_force import (
    enumerate_compacts,
    HausdorffTable,
    MAX_FAILURES,
    OracleReport,
    run_oracles,
    unit_metric,
    verify_characterization,
    verify_hausdorff_axioms,
    verify_nesting_soundness,
    WORKED_GRID,
    worked_nesting_pairs,
)

WORKED = Space.with_points(map(to_scalar, WORKED_GRID))


def test_enumerate_compacts():
    compacts = enumerate_compacts(Space.finite_grid(3))
    assert len(compacts) == 8 and len(set(compacts)) == 8
    assert not compacts[0]
    with pytest.raises(OracleSizeError):
        enumerate_compacts(Space.finite_grid(17))
    with pytest.raises(UsageError):
        enumerate_compacts(UNIT_INTERVAL)


def test_hausdorff_axioms_hold_on_small_grids():
    report = verify_hausdorff_axioms(Space.finite_grid(4))
    assert report.passed, report.failures
    assert report.checked > 16 * 16
    with pytest.raises(OracleSizeError):
        verify_hausdorff_axioms(Space.finite_grid(9))


def test_a_broken_metric_is_caught():
    grid = Space.with_points(Space.finite_grid(3).grid, metric=unit_metric)
    report = verify_hausdorff_axioms(grid)
    assert not report.passed
    assert report.failures[0].startswith("identity")


def test_characterization():
    assert verify_characterization(Space.finite_grid(4)).passed
    with pytest.raises(UsageError):
        verify_characterization(Space.finite_grid(4), radii=["0"])


def test_nesting_soundness_on_the_worked_grid():
    report = verify_nesting_soundness(WORKED, worked_nesting_pairs())
    assert report.passed, report.failures
    assert report.checked > 0


def test_nesting_soundness_catches_an_unsound_judge(monkeypatch):
    monkeypatch.setattr(brute_force, "legal_nesting", lambda inner, outer, space: True)
    pair = (product_ball("[{1/20},{1/2}] 2 1/20"), product_ball("[{0},{1/2}] 2 1/40"))
    report = verify_nesting_soundness(WORKED, [pair])
    assert not report.passed


def test_nesting_soundness_bounds_the_index():
    deep = product_ball("[{0},{1/2},{11/20}] 3 1/100")
    with pytest.raises(OracleSizeError):
        verify_nesting_soundness(WORKED, [(deep, deep)])


def test_run_oracles():
    reports = run_oracles(5)
    assert [r.name for r in reports] == ["hausdorff_axioms", "characterization", "nesting_soundness"]
    assert all(r.passed for r in reports)
    faulty = {r.name: r.passed for r in run_oracles(5, ["metric"])}
    assert not faulty["hausdorff_axioms"]


def test_report_caps_failures():
    report = OracleReport("capped")
    for i in range(MAX_FAILURES + 5):
        report.fail(f"failure {i}")
    assert len(report.failures) == MAX_FAILURES + 1
    assert report.failures[-1] == "... further failures omitted"
    assert report.to_dict()["passed"] is False


def test_table_is_shared_between_checks():
    grid = Space.finite_grid(4)
    table = HausdorffTable.build(grid)
    assert table.scale == 3 and table.threshold(to_scalar("1/2")) == 1
    assert (table.reference() == table.scaled).all()
    assert verify_hausdorff_axioms(grid, table).passed
    assert verify_characterization(grid, table=table).passed


def test_run_oracles_on_the_largest_grid():
    reports = run_oracles(8)
    assert all(r.passed for r in reports), [r.failures for r in reports]
    assert reports[0].checked > 2**16

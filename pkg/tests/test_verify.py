import json
from fractions import Fraction as F

import pytest

from biortho import ModelParams, verifyBoundary, verifyCase, verifyMeasureAgainstOracle, verifyODEandLinkage
from biortho import verifyOrthogonalityExact, verifyStructure
from biortho.verify import REPORT_SCHEMA, Check, VerificationReport

from conftest import model_params

PRINTED_VARIANTS = ["III.1", "III.1-lim1", "III.2", "IV.1", "IV.2", "VI.2"]


@pytest.fixture(scope="module")
def reports(case_ids):
    return {c: verifyCase(c) for c in case_ids}


def test_every_case_passes(reports):
    for c, rep in reports.items():
        assert rep.passed, rep.to_text()
        assert rep.counts()["pass"] > 10


def test_report_categories_cover_pipeline(reports):
    for c, rep in reports.items():
        cats = set(rep.worstRelativeError)
        assert {"exact", "structure", "moments", "mass", "ode", "linkage", "boundary"} <= cats, c


def test_vi1_records_convention(reports):
    rep = reports["VI.1"]
    sel = [c for c in rep.checks if c.name.startswith("sign convention")]
    assert len(sel) == 1 and sel[0].status == "pass" and sel[0].measured == "minus"
    assert any(c.status == "skipped" and "[plus]" in c.name for c in rep.checks)


def test_reports_deterministic():
    assert verifyCase("I.2").to_json() == verifyCase("I.2").to_json()


def test_report_json_schema():
    d = json.loads(verifyCase("IV.2").to_json())
    assert d["schema"] == REPORT_SCHEMA and d["passed"] is True
    assert {"name", "status", "measured", "threshold", "category", "where"} == set(d["checks"][0])


@pytest.mark.parametrize("name", PRINTED_VARIANTS)
def test_printed_variants_fail_with_location(name):
    rep = verifyCase(name, variant="printed")
    assert not rep.passed
    for c in rep.failures:
        assert c.where, c.name


def test_exact_orthogonality_airy():
    checks = verifyOrthogonalityExact(ModelParams(0, 0, 0, 0, 1), 14)
    assert all(c.status == "pass" for c in checks)


def test_exact_orthogonality_regularity_skip():
    checks = verifyOrthogonalityExact(ModelParams(0, 0, 0, 1, 0), 14)
    assert checks and all(c.status == "skipped" for c in checks)


def test_structure_two_symmetry():
    names = [c.name for c in verifyStructure(ModelParams(0, 0, 0, 0, 1))]
    assert any(n.startswith("2-symmetry") for n in names)


def test_measure_ode_boundary_individually():
    for fn in (verifyMeasureAgainstOracle, verifyODEandLinkage, verifyBoundary):
        checks = fn("III.2")
        assert checks and all(c.status == "pass" for c in checks), fn.__name__


def test_failed_check_reports_indices():
    rep = VerificationReport("x", [Check("a", "fail", 1.0, 0.0, "exact", "n=3,m=0,k=1")])
    assert not rep.passed and rep.failures[0].where == "n=3,m=0,k=1"
    assert "at n=3,m=0,k=1" in rep.to_text()

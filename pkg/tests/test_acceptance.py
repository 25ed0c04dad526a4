"""End-to-end acceptance checks, one summary line per criterion."""
import subprocess
import sys
import time
from pathlib import Path

import pytest

from liecheck.cli import main
from liecheck.rootsys import Weight, build_root_system, parse_weight
from liecheck.tables import ALL_MULT_ONE, table_weights
from liecheck.verify import verify_re1, verify_rr4, verify_sa1, verify_th1
from liecheck.weightcalc import freudenthal_multiplicity, weight_system, weyl_dimension
from liecheck.witness import list_cases, run_all

TESTS = Path(__file__).parent

DIMENSIONS = [("G2", "w1", 7), ("G2", "w2", 14), ("F4", "w4", 26), ("B4", "w4", 16),
              ("C3", "w3", 14), ("E6", "w1", 27), ("E7", "w7", 56), ("D5", "w4", 16),
              ("A7", "w2", 28)]


def test_criterion_1_dimensions(acceptance):
    start, bad = time.perf_counter(), []
    for name, lam, dim in DIMENSIONS:
        rs = build_root_system(name)
        w = parse_weight(lam, rs.rank)
        total = sum(weight_system(rs, w).table.values())
        if not weyl_dimension(rs, w) == total == dim:
            bad.append(f"{name}({lam}) weyl={weyl_dimension(rs, w)} sum={total}")
    secs = time.perf_counter() - start
    ok = not bad and secs < 10
    acceptance(1, ok, f"{len(DIMENSIONS)} dimension pairs in {secs:.1f}s" + "".join(
        f", {b}" for b in bad))
    assert ok


RANK_LE_7 = ([f"A{n}" for n in range(1, 8)] + [f"B{n}" for n in range(3, 8)]
             + [f"C{n}" for n in range(2, 8)] + [f"D{n}" for n in range(4, 8)]
             + ["E6", "E7", "F4", "G2"])


def test_criterion_2_multiplicity_one_rows(acceptance):
    start, n_rows, bad = time.perf_counter(), 0, []
    for name in RANK_LE_7:
        rs = build_root_system(name)
        for e in table_weights(rs.group_type, 0, 2):
            if e.kind != ALL_MULT_ONE:
                continue
            n_rows += 1
            if set(weight_system(rs, e.weight).table.values()) != {1}:
                bad.append(f"{name}({e.weight})")
    secs = time.perf_counter() - start
    ok = n_rows > 0 and not bad and secs < 60
    acceptance(2, ok, f"{n_rows} all-multiplicity-one instances over {len(RANK_LE_7)} types "
                      f"in {secs:.1f}s" + "".join(f", {b} fails" for b in bad))
    assert ok


ZERO_ROWS = [("A3", "w1+w3", 3), ("A3", "2*w2", 2), ("B3", "w2", 3), ("B3", "2*w1", 4),
             ("C3", "w2", 2), ("C2", "2*w2", 2), ("C4", "w4", 2), ("D4", "2*w1", 3),
             ("D4", "w2", 4), ("E6", "w2", 6), ("E7", "w1", 7), ("E8", "w8", 8),
             ("F4", "w1", 4), ("F4", "w4", 2), ("G2", "w2", 2)]


def _zero_mult(name, lam):
    rs = build_root_system(name)
    return freudenthal_multiplicity(rs, parse_weight(lam, rs.rank), Weight.zero(rs.rank))


@pytest.mark.parametrize("name,lam,want", [r for r in ZERO_ROWS if r[:2] != ("B3", "2*w1")])
def test_criterion_3_zero_weight_rows(acceptance, name, lam, want):
    got = _zero_mult(name, lam)
    acceptance(3, got == want, f"{name}({lam})={got}")
    assert got == want


# The listed value is one too large: S^2 of the 7-dim module is V(2w1) + trivial.
@pytest.mark.xfail(strict=True, reason="listed B3(2w1) zero multiplicity is 4; the module has 3")
def test_criterion_3_b3_symmetric_square(acceptance):
    got = _zero_mult("B3", "2*w1")
    acceptance(3, got == 4, f"B3(2*w1)={got}, listed 4; the module itself has 3")
    assert got == 4


def test_criterion_4_witness_suite(acceptance, capsys):
    start = time.perf_counter()
    code = main(["witness", "--all", "--json"])
    out = capsys.readouterr().out.splitlines()
    secs = time.perf_counter() - start
    reports = run_all()
    groups = {r.group for r in reports}
    ok = (code == 0 and len(out) == len(list_cases()) >= 18 and all(r.passed for r in reports)
          and secs < 60)
    acceptance(4, ok, f"{sum(r.passed for r in reports)}/{len(reports)} cases pass over "
                      f"{len(groups)} groups in {secs:.1f}s")
    assert ok


@pytest.mark.parametrize("group", ["A1", "A2", "C2", "G2"])
def test_criterion_5_theorem_scans(acceptance, group):
    for fn in (verify_th1, verify_re1):
        start = time.perf_counter()
        rep = fn(group, 0, 12)
        secs = time.perf_counter() - start
        ok = rep.passed and secs < 300
        acceptance(5, ok, f"{rep.theorem} {group}: {rep.counterexample_count} counterexamples, "
                          f"{rep.witness_count} witnesses, {secs:.1f}s")
        assert ok


@pytest.mark.parametrize("group", ["A2", "C2", "G2"])
def test_criterion_5_strong_regularity_equivalence(acceptance, group):
    rep = verify_sa1(group, 0, 12)
    ok = rep.passed and rep.checked + rep.central == 144
    acceptance(5, ok, f"sa1 {group}: {rep.checked} non-central elements agree")
    assert ok


PROPERTY_SUITES = [
    "test_weightcalc.py::test_type_a_dominance_lemma",
    "test_weightcalc.py::test_type_c_dominance_lemma",
    "test_weightcalc.py::test_weight_sets_grow_with_dominance",
    "test_torus.py::test_strongly_regular_implies_regular",
    "test_verify.py::test_tensor_almost_cyclic_forces_cyclic_factors",
    "test_verify.py::test_steinberg_tensor_spectrum",
]


def test_criterion_6_property_suites(acceptance):
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                           *[str(TESTS / s) for s in PROPERTY_SUITES]],
                          capture_output=True, text=True, cwd=TESTS.parent, check=False)
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr
    acceptance(6, proc.returncode == 0, f"{len(PROPERTY_SUITES)} property suites: {tail}")
    assert proc.returncode == 0


def test_criterion_7_scope_is_labelled(acceptance):
    # claims over the whole torus are not checked; every report states what was
    ok = (verify_th1("A1", 0, 6).label == "verified over mu_N-points (N=6)"
          and verify_rr4().label == "constructive witnesses")
    acceptance(7, ok, "whole-torus classification not reproducible at finite scale; "
                      "reports carry the mu_N or witness label")
    assert ok

import json
from itertools import product

import pytest

from liecheck import verify as V
from liecheck.errors import InvalidInput, UnsupportedCharacteristic
from liecheck.rootsys import GroupType, Weight, build_root_system, parse_weight
from liecheck.torus import (
    TorusElement, ValueGroup, evaluate, is_almost_cyclic, is_cyclic, is_regular,
    is_strongly_regular, spectrum,
)
from liecheck.verify import (
    ScanSpec, frobenius_twist_spectrum, parse_pipeline, scan, tensor_spectrum, td4_exclusions,
    verify_re1, verify_sa1, verify_td2, verify_th1,
)
from liecheck.weightcalc import weight_system

W = parse_weight


def _spec(group, n, lams, pipeline, **kw):
    rank = GroupType.parse(group).rank
    require, conclude = parse_pipeline(pipeline)
    mods = tuple((W(x, rank),) for x in lams)
    return ScanSpec(group, kw.pop("p", 0), n, mods, require, conclude, **kw)


# -- scan engine -----------------------------------------------------------------


def test_scan_examples():
    rep = scan(_spec("A1", 8, ["3*w1"], "cyclic => strongly_regular"))
    assert rep.counterexample_count == 0 and rep.checked + rep.central == 8
    rep = scan(_spec("G2", 7, ["w1"], "find regular & cyclic & !strongly_regular"))
    assert rep.witness_count >= 1
    rep = scan(ScanSpec("B3", 0, 2))
    assert rep.checked + rep.central == 8
    assert rep.central >= 1 and rep.witness_count == rep.checked


def _brute_count(group, n, lam, pred):
    rs = build_root_system(group)
    ws = weight_system(rs, W(lam, rs.rank))
    hits = 0
    for x in product(range(n), repeat=rs.rank):
        s = V.element_from_exponents(rs.group_type, n, x)
        if all(evaluate(s, a).is_identity() for a in rs.simple_roots):
            continue
        hits += pred(rs, ws, s)
    return hits


@pytest.mark.parametrize("group,n,lam", [("A2", 6, "w1+w2"), ("C2", 8, "w2"), ("G2", 7, "w2")])
def test_vectorised_predicates_match_exact_ones(group, n, lam):
    cases = {
        "find regular": lambda rs, ws, s: is_regular(rs, s),
        "find strongly_regular": lambda rs, ws, s: is_strongly_regular(rs, s),
        "find cyclic": lambda rs, ws, s: is_cyclic(ws, s),
        "find almost_cyclic & !strongly_regular":
            lambda rs, ws, s: is_almost_cyclic(ws, s) and not is_strongly_regular(rs, s),
    }
    for pipe, pred in cases.items():
        assert scan(_spec(group, n, [lam], pipe)).witness_count == _brute_count(group, n, lam, pred)


def test_report_is_replayable_and_independent_of_chunking(monkeypatch):
    spec = _spec("C2", 12, ["w2", "2*w1"], "regular & almost_cyclic[0] => cyclic[1]")
    first = json.dumps(scan(spec).to_json(), sort_keys=True)
    assert json.dumps(scan(spec).to_json(), sort_keys=True) == first
    assert json.dumps(scan(spec, threads=4).to_json(), sort_keys=True) == first
    monkeypatch.setattr(V, "_CELL_BUDGET", 97)
    assert json.dumps(scan(spec, threads=3).to_json(), sort_keys=True) == first


def test_sampled_mode_is_seeded(monkeypatch):
    spec = _spec("B4", 12, ["w1"], "find regular & !strongly_regular", mode="sampled", count=40000,
                 seed=7)
    a = scan(spec).to_json()
    monkeypatch.setattr(V, "_CELL_BUDGET", 1000)  # no effect on draws
    assert scan(spec, threads=2).to_json() == a
    assert a["checked"] + a["central"] == 40000
    other = _spec("B4", 12, ["w1"], "find regular & !strongly_regular", mode="sampled",
                  count=40000, seed=8)
    assert scan(other).to_json() != a


def test_counterexamples_replay_through_exact_predicates():
    rep = scan(_spec("A2", 12, ["w1+w2"], "regular => strongly_regular", record_limit=50))
    assert rep.counterexample_count > 0 and len(rep.counterexamples) == 50
    rs = build_root_system("A2")
    for rec in rep.counterexamples:
        s = TorusElement.from_json(rec["torus"])
        assert is_regular(rs, s) and not is_strongly_regular(rs, s)
        a, b = (W(x, 2) for x in rec["root_pairs"][0])
        assert evaluate(s, a) == evaluate(s, b)
    keys = [tuple(r["element"]) for r in rep.counterexamples]
    assert keys == sorted(keys)


@pytest.mark.parametrize("group,lam", [("A2", "w1"), ("C2", "w2"), ("G2", "w1")])
def test_divisor_moduli_are_consistent(group, lam):
    pipe = "find regular & almost_cyclic & !strongly_regular"
    big = scan(_spec(group, 12, [lam], pipe, record_limit=10 ** 6))
    for d in (2, 3, 4, 6):
        small = scan(_spec(group, d, [lam], pipe, record_limit=10 ** 6))
        k = 12 // d
        embedded = {tuple(k * x for x in r["element"]) for r in small.witnesses}
        from_big = {tuple(r["element"]) for r in big.witnesses
                    if all(x % k == 0 for x in r["element"])}
        assert embedded == from_big


def test_scan_errors():
    with pytest.raises(UnsupportedCharacteristic):
        scan(_spec("B3", 8, ["w1+w2"], "find cyclic", p=5))
    with pytest.raises(InvalidInput):
        _spec("A2", 12, ["w1"], "find cyclic[3]")
    with pytest.raises(InvalidInput):
        _spec("A2", 12, ["w1"], "find wobbly")
    with pytest.raises(InvalidInput):
        ScanSpec("A2", 0, 1)
    with pytest.raises(InvalidInput):
        ScanSpec("A2", 0, 4, mode="random")
    with pytest.raises(InvalidInput):
        parse_pipeline("cyclic")


def test_non_p_prime_elements_are_filtered():
    rep = scan(_spec("A1", 12, ["w1"], "find regular", p=3))
    assert rep.non_p_prime == 8 and rep.checked + rep.central == 4
    rep = scan(_spec("A1", 12, ["w1"], "find regular", p=3, p_prime_only=False))
    assert rep.non_p_prime == 0 and rep.checked + rep.central == 12


# -- lemma-level properties, exhaustive over small moduli ----------------------


@pytest.mark.parametrize("group", ["A1", "A2", "C2", "G2"])
def test_cyclic_implies_regular(group):
    rank = GroupType.parse(group).rank
    for i in range(1, rank + 1):
        rep = scan(_spec(group, 12, [f"w{i}"], "cyclic => regular"))
        assert rep.counterexample_count == 0


@pytest.mark.parametrize("group,n", [("A2", 12), ("C2", 12), ("G2", 12), ("B3", 8), ("C3", 8)])
def test_regular_elements_fix_only_the_zero_weight_space(group, n):
    rs = build_root_system(group)
    short = max((r for r in rs.roots if rs.norm2(r) == min(rs.norm2(x) for x in rs.roots)),
                key=lambda r: (rs.height(r), r.coeffs))
    spec = ScanSpec(group, 0, n, ((rs.highest_root,), (short,)),
                    ("regular",), "fixed_eq_zero[0]")
    assert scan(spec).counterexample_count == 0
    spec = ScanSpec(group, 0, n, ((rs.highest_root,), (short,)),
                    ("regular",), "fixed_eq_zero[1]")
    assert scan(spec).counterexample_count == 0


def test_tensor_almost_cyclic_forces_cyclic_factors():
    rep = verify_td2("A1", modulus=12)
    assert rep.passed and rep.checked == 10 and rep.matched > 0
    assert verify_td2("A2", modulus=6).passed


# -- theorem drivers -------------------------------------------------------------


@pytest.mark.parametrize("group", ["A1", "A2", "C2", "G2"])
def test_theorem_scans_at_modulus_twelve(group):
    for fn in (verify_th1, verify_re1):
        rep = fn(group, 0, 12)
        assert rep.counterexample_count == 0 and not rep.missing_witnesses
        assert rep.label == "verified over mu_N-points (N=12)"
        exc = [i for i in rep.instances if i["role"] == "exception"]
        assert exc and all("witness_source" in i for i in exc)


def test_theorem_scan_examples():
    c2 = verify_th1("C2", 0, 12)
    assert {i["lambda"] for i in c2.instances if i["role"] == "exception"} == {"w1", "w2"}
    g2 = verify_th1("G2", 0, 12)
    assert "w2" in {s["lambda"] for s in g2.skipped}
    re = verify_re1("C2", 0, 12)
    row = [i for i in re.instances if i["lambda"] == "2*w2"][0]
    assert row["role"] == "check" and row["counterexamples"] == 0
    a3 = verify_re1("A3", 0, 12, max_coeff=2)
    row = [i for i in a3.instances if i["lambda"] == "2*w1"][0]
    assert row["role"] == "exception" and "witness_source" in row
    g2re = verify_re1("G2", 0, 12)
    assert [i["role"] for i in g2re.instances if i["lambda"] == "w2"] == ["check"]


def test_missing_scan_witness_falls_back_to_catalogue():
    # at N=2 no A2 element is regular, so the catalogue supplies the witness
    rep = verify_th1("A2", 0, 2, max_coeff=1)
    srcs = {i["lambda"]: i.get("witness_source") for i in rep.instances}
    assert srcs == {"w1": "witness:an-fund:A2", "w2": "witness:an-fund:A2"}
    assert rep.passed


def test_positive_characteristic_scan():
    rep = verify_th1("G2", 3, 8)
    assert rep.passed
    assert {i["lambda"] for i in rep.instances} == {"w1", "w2"}
    rep = verify_re1("C4", 0, 6, mode="sampled", count=2000, max_coeff=1)
    assert rep.passed and rep.mode.startswith("sampled")


@pytest.mark.parametrize("group,n,central", [("A2", 12, 3), ("C2", 12, 2), ("G2", 12, 1),
                                             ("C2", 10, 2), ("G2", 13, 1)])
def test_strong_regularity_equivalence(group, n, central):
    rep = verify_sa1(group, 0, n)
    assert rep.passed and rep.central == central
    assert rep.checked + rep.central == n ** 2


def test_equivalence_is_nontrivial_where_strongly_regular_points_exist():
    assert verify_sa1("G2", 0, 13).matched > 0
    assert verify_sa1("A2", 0, 12).matched > 0
    assert verify_sa1("B3", 0, 8).passed


def test_equivalence_fails_outside_hypotheses():
    rep = verify_sa1("A2", 3, 8)
    assert not rep.passed and "hypotheses" in rep.notes
    rs = build_root_system("A2")
    ws = weight_system(rs, rs.highest_root, 3)
    for rec in rep.counterexamples:
        s = TorusElement.from_json(rec["torus"])
        assert is_almost_cyclic(ws, s) != is_strongly_regular(rs, s)
    assert not verify_sa1("A1", 0, 12).passed
    assert verify_sa1("A1", 2, 9).passed
    # at N = 12 the needed element (a^4 != 1 and a^6 != +-1) does not exist
    assert verify_sa1("A2", 3, 12, p_prime_only=False).passed


# -- spectra of tensor products and twists ---------------------------------------


def _generic_a1(order=0):
    vg = ValueGroup.of(c=order)
    return TorusElement(GroupType.parse("A1"), vg, (vg.gen("c"),)), vg


def test_tensor_spectrum_examples():
    s, vg = _generic_a1()
    rs = build_root_system("A1")
    sp = spectrum(weight_system(rs, W("w1", 1)), s)
    triv = spectrum(weight_system(rs, Weight.zero(1)), s)
    assert tensor_spectrum(sp, triv) == sp
    got = {str(v): m for v, m in tensor_spectrum(sp, sp)}
    assert got == {"c^2": 1, "1": 2, "c^-2": 1}
    other, _ = _generic_a1(5)
    with pytest.raises(InvalidInput):
        tensor_spectrum(sp, spectrum(weight_system(rs, W("w1", 1)), other))


def test_frobenius_twist():
    rs = build_root_system("A1")
    ws = weight_system(rs, W("w1", 1), 2)
    assert frobenius_twist_spectrum(ws, 0, 2).table == ws.table
    assert set(frobenius_twist_spectrum(ws, 1, 2).table) == {Weight((2,)), Weight((-2,))}
    with pytest.raises(InvalidInput):
        frobenius_twist_spectrum(ws, -1, 2)
    with pytest.raises(InvalidInput):
        frobenius_twist_spectrum(ws, 1, 0)


@pytest.mark.parametrize("group,l0,l1,p", [("A1", "w1", "w1", 3), ("A1", "2*w1", "w1", 3),
                                           ("A2", "w1", "w2", 2), ("A2", "w1+w2", "w1", 5)])
def test_steinberg_tensor_spectrum(group, l0, l1, p):
    rs = build_root_system(group)
    vg = ValueGroup.of(a=0, b=0)
    s = TorusElement.from_exponents(rs.group_type, vg, [(1, 0), (2, 1)][:rs.rank])
    v0 = weight_system(rs, W(l0, rs.rank), p)
    v1 = weight_system(rs, W(l1, rs.rank), p)
    twisted = frobenius_twist_spectrum(v1, 1, p)
    # direct side: the weights of the product are the sums mu0 + p*mu1
    direct = {}
    for m0, k0 in v0.items():
        for m1, k1 in v1.items():
            val = evaluate(s, m0 + m1 * p)
            direct[val] = direct.get(val, 0) + k0 * k1
    conv = tensor_spectrum(spectrum(v0, s), spectrum(twisted, s))
    assert dict(conv) == direct


def test_td4_exclusion_data():
    g = GroupType.parse
    assert td4_exclusions(g("C3"), 2) == [(W("w3", 3), W("w1", 3))]
    assert td4_exclusions(g("G2"), 3) == [(W("w2", 2), W("w1", 2))]
    assert td4_exclusions(g("G2"), 2) == [(W("w1", 2), W("w1", 2))]
    assert td4_exclusions(g("A5"), 5) == []
    rep = V.verify_td4_exclusions("C4", 2)
    assert rep.to_json()["instances"] == [{"pair": ["w4", "w1"]}]


def test_witness_catalogue_report():
    rep = V.verify_rr4()
    assert rep.passed and rep.checked >= 18
    assert V.verify_rr4("G2").checked == 3
    assert not V.verify_rr4(concrete=True).passed


def test_timing_only_on_request():
    rep = verify_sa1("A2", 0, 6)
    assert "wall_time_ms" not in rep.to_json()
    assert isinstance(rep.to_json(timing=True)["wall_time_ms"], int)

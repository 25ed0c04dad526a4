"""Brute-force checks of the classification theorems over finite-order torus points.

A scan enumerates homomorphisms from the weight lattice to Z/N, written as
exponent vectors x in (Z/N)^rank (x_i is the exponent of a fixed order-N
generator z on w_i). Predicates are evaluated for a whole chunk of vectors at
once with numpy; chunks are fixed-size so the merged report does not depend
on the number of worker threads.

Results only cover the N-torsion points of the torus, and every report says
so in its ``label``.
"""

from __future__ import annotations

import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd

import numpy as np

from .errors import InvalidInput, UnsupportedCharacteristic
from .rootsys import GroupType, Weight, build_root_system, format_weight
from .tables import (
    ALL_MULT_ONE, NOT_LISTED, re1_exception, table_lookup, td4_exclusions, th1_exception,
)
from .torus import (
    TorusElement, ValueGroup, is_almost_cyclic, is_cyclic, root_collisions, weight_collisions,
)
from .weightcalc import WeightSystem, check_char, weight_system

__all__ = [
    "ScanSpec", "TheoremReport", "scan", "parse_pipeline", "default_modulus", "default_mode",
    "verify_th1", "verify_re1", "verify_sa1", "verify_td2", "verify_rr4",
    "verify_td4_exclusions", "sa1_hypotheses", "tensor_spectrum",
    "frobenius_twist_spectrum", "td4_exclusions", "element_from_exponents",
]

THEOREMS = ("th1", "re1", "rr4", "sa1", "td2", "td4-exclusions")
_PRED = re.compile(r"(!?)(regular|strongly_regular|central|cyclic|almost_cyclic|separates"
                   r"|fixed_eq_zero)(?:\[(\d+)\])?")
_MODULE_PREDS = ("cyclic", "almost_cyclic", "separates", "fixed_eq_zero")
_CELL_BUDGET = 1 << 21   # chunk rows * widest per-row array
_SAMPLE_BLOCK = 1 << 14   # draws per seeded rng stream; part of the replay contract
_RECORD_LIMIT = 5


def default_modulus(t: GroupType) -> int:
    return 8 if t.rank == 3 else 12


def default_mode(t: GroupType) -> str:
    return "exhaustive" if t.rank <= 3 else "sampled"


@dataclass(frozen=True)
class ScanSpec:
    """What to enumerate and which predicates to apply.

    ``require`` is an ordered list of filters; with ``conclude`` set, every
    element passing the filters but failing ``conclude`` is a counterexample,
    otherwise every element passing the filters is a witness. Predicates are
    ``regular``, ``strongly_regular``, ``central`` or a module predicate
    ``cyclic[i]``, ``almost_cyclic[i]``, ``separates[i]``, ``fixed_eq_zero[i]``
    on ``modules[i]``; a leading ``!`` negates.
    """

    group_type: GroupType
    p: int = 0
    modulus: int = 12
    modules: tuple = ()
    require: tuple = ()
    conclude: str | None = None
    mode: str = "exhaustive"
    count: int = 10 ** 6
    seed: int = 0
    p_prime_only: bool = True
    record_limit: int = _RECORD_LIMIT

    def __post_init__(self):
        if isinstance(self.group_type, str):
            object.__setattr__(self, "group_type", GroupType.parse(self.group_type))
        check_char(self.p)
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise InvalidInput(f"modulus must be an integer >= 2, got {self.modulus!r}")
        if self.mode not in ("exhaustive", "sampled"):
            raise InvalidInput(f"mode must be exhaustive or sampled, got {self.mode!r}")
        if self.mode == "sampled" and self.count < 1:
            raise InvalidInput("sampled mode needs count >= 1")
        mods = tuple(tuple(m) if not isinstance(m, Weight) else (m,) for m in self.modules)
        object.__setattr__(self, "modules", mods)
        object.__setattr__(self, "require", tuple(self.require))
        for pred in self.require + ((self.conclude,) if self.conclude else ()):
            _parse_pred(pred, len(mods))

    @property
    def space_size(self):
        return self.modulus ** self.group_type.rank if self.mode == "exhaustive" else self.count


def _parse_pred(text, n_modules):
    m = _PRED.fullmatch(text.replace(" ", ""))
    if not m:
        raise InvalidInput(f"unknown predicate {text!r}")
    neg, name, idx = m.group(1) == "!", m.group(2), m.group(3)
    if name in _MODULE_PREDS:
        i = int(idx or 0)
        if i >= n_modules:
            raise InvalidInput(f"predicate {text!r} refers to module {i}, only {n_modules} given")
        return neg, name, i
    if idx is not None:
        raise InvalidInput(f"predicate {name} takes no module index")
    return neg, name, None


def parse_pipeline(text: str):
    """``"cyclic => strongly_regular"`` or ``"find regular & !strongly_regular"``.

    Returns ``(require, conclude)``.
    """
    s = text.strip()
    if s.startswith("find "):
        return tuple(x.strip() for x in s[5:].split("&") if x.strip()), None
    if "=>" in s:
        lhs, rhs = s.split("=>", 1)
        return tuple(x.strip() for x in lhs.split("&") if x.strip()), rhs.strip()
    raise InvalidInput(f"pipeline must be 'A & B => C' or 'find A & B', got {text!r}")


@dataclass
class TheoremReport:
    theorem: str
    group: str
    p: int
    modulus: int | None
    mode: str
    checked: int = 0
    central: int = 0
    non_p_prime: int = 0
    matched: int = 0
    skipped: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    counterexample_count: int = 0
    witnesses: list = field(default_factory=list)
    witness_count: int = 0
    missing_witnesses: list = field(default_factory=list)
    instances: list = field(default_factory=list)
    notes: str = ""
    wall_time_ms: int | None = None

    @property
    def passed(self):
        return self.counterexample_count == 0 and not self.missing_witnesses

    @property
    def label(self):
        if self.modulus is None:
            return "static data" if self.mode == "data" else "constructive witnesses"
        return f"verified over mu_N-points (N={self.modulus})"

    def to_json(self, timing: bool = False):
        out = {
            "theorem": self.theorem, "group": self.group, "p": self.p,
            "modulus": self.modulus, "mode": self.mode, "label": self.label,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked, "central": self.central,
            "non_p_prime": self.non_p_prime, "matched": self.matched,
            "skipped": self.skipped,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "witness_count": self.witness_count, "witnesses": self.witnesses,
            "missing_witnesses": self.missing_witnesses,
            "instances": self.instances,
        }
        if self.notes:
            out["notes"] = self.notes
        if timing and self.wall_time_ms is not None:
            out["wall_time_ms"] = self.wall_time_ms
        return out


# -- scanning ---------------------------------------------------------------


def element_from_exponents(t: GroupType, modulus: int, x) -> TorusElement:
    """Torus element w_i -> z^{x_i} with z of order ``modulus``."""
    vg = ValueGroup((("z", modulus),))
    return TorusElement.from_exponents(t, vg, [(int(e),) for e in x])


class _Evaluator:
    def __init__(self, spec: ScanSpec):
        self.spec = spec
        t = spec.group_type
        self.rs = build_root_system(t)
        self.roots = np.array([r.coeffs for r in self.rs.roots], dtype=np.int64)
        self.simple = np.array([r.coeffs for r in self.rs.simple_roots], dtype=np.int64)
        # Builds every module up front so uncomputable ones fail before enumeration.
        self.systems = [weight_system(self.rs, list(m), spec.p) for m in spec.modules]
        self.mods = []
        for ws in self.systems:
            items = ws.items()
            w = np.array([x.coeffs for x, _ in items], dtype=np.int64).reshape(-1, t.rank)
            m = np.array([k for _, k in items], dtype=np.int64)
            self.mods.append((w, m, ws.mult(Weight.zero(t.rank))))
        self.require = [_parse_pred(s, len(self.mods)) for s in spec.require]
        self.conclude = _parse_pred(spec.conclude, len(self.mods)) if spec.conclude else None
        widest = max([len(self.roots), spec.modulus] + [len(w) for w, _, _ in self.mods])
        if spec.mode == "sampled":
            self.chunk = _SAMPLE_BLOCK
        else:
            self.chunk = max(1, _CELL_BUDGET // widest)

    def chunk_vectors(self, index):
        spec, n = self.spec, self.spec.group_type.rank
        lo = index * self.chunk
        hi = min(lo + self.chunk, spec.space_size)
        if spec.mode == "sampled":
            rng = np.random.default_rng([spec.seed, index])
            return rng.integers(0, spec.modulus, size=(hi - lo, n), dtype=np.int64)
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = np.empty((hi - lo, n), dtype=np.int64)
        for j in range(n - 1, -1, -1):   # lexicographic: last coordinate fastest
            digits[:, j] = idx % spec.modulus
            idx //= spec.modulus
        return digits

    def _module_pred(self, name, i, x, cache):
        if (name, i) in cache:
            return cache[(name, i)]
        n_mod = self.spec.modulus
        w, m, zero = self.mods[i]
        vals = (x @ w.T) % n_mod
        offs = (np.arange(len(x), dtype=np.int64)[:, None] * n_mod + vals).ravel()
        if name == "separates":
            hits = np.bincount(offs, minlength=len(x) * n_mod).reshape(len(x), n_mod)
            res = (hits <= 1).all(axis=1)
        else:
            spec_ = np.bincount(offs, weights=np.broadcast_to(m, vals.shape).ravel(),
                                minlength=len(x) * n_mod).reshape(len(x), n_mod)
            if name == "cyclic":
                res = (spec_ <= 1).all(axis=1)
            elif name == "almost_cyclic":
                res = (spec_ > 1).sum(axis=1) <= 1
            else:
                res = spec_[:, 0] == zero
        cache[(name, i)] = res
        return res

    def _pred(self, pred, x, rootvals, cache):
        neg, name, i = pred
        if name == "regular":
            res = (rootvals != 0).all(axis=1)
        elif name == "strongly_regular":
            srt = np.sort(rootvals, axis=1)
            res = (np.diff(srt, axis=1) != 0).all(axis=1)
        elif name == "central":
            res = np.zeros(len(x), dtype=bool)
        else:
            res = self._module_pred(name, i, x, cache)
        return ~res if neg else res

    def run_chunk(self, index):
        spec = self.spec
        x = self.chunk_vectors(index)
        out = {"central": 0, "non_p_prime": 0, "checked": 0, "matched": 0,
               "hits": 0, "records": []}
        if spec.p and spec.p_prime_only:
            g = np.gcd.reduce(np.concatenate([x, np.full((len(x), 1), spec.modulus)], axis=1),
                              axis=1)
            keep = (spec.modulus // g) % spec.p != 0
            out["non_p_prime"] = int((~keep).sum())
            x = x[keep]
        central = ((x @ self.simple.T) % spec.modulus == 0).all(axis=1)
        out["central"] = int(central.sum())
        x = x[~central]
        out["checked"] = len(x)
        rootvals = (x @ self.roots.T) % spec.modulus
        cache = {}
        mask = np.ones(len(x), dtype=bool)
        for pred in self.require:
            mask &= self._pred(pred, x, rootvals, cache)
        out["matched"] = int(mask.sum())
        if self.conclude is not None:
            mask &= ~self._pred(self.conclude, x, rootvals, cache)
        out["hits"] = int(mask.sum())
        sel = x[mask]
        if len(sel):
            keys = sorted({tuple(int(v) for v in row) for row in sel})
            out["records"] = keys[:spec.record_limit]
        return out

    def n_chunks(self):
        return -(-self.spec.space_size // self.chunk)

    def describe(self, x):
        """Replayable record for one exponent vector."""
        spec = self.spec
        s = element_from_exponents(spec.group_type, spec.modulus, x)
        rec = {"element": list(x), "torus": s.to_json()}
        pairs = root_collisions(self.rs, s)
        if pairs:
            rec["root_pairs"] = [[format_weight(a), format_weight(b)] for a, b in pairs[:4]]
        preds = self.require + ([self.conclude] if self.conclude else [])
        mods = sorted({i for _, name, i in preds if i is not None})
        for i in mods:
            wc = weight_collisions(self.systems[i], s)
            if wc:
                rec.setdefault("weight_pairs", {})[str(i)] = [
                    [format_weight(a), format_weight(b)] for a, b in wc[:4]]
        return rec


def scan(spec: ScanSpec, threads: int = 1, theorem: str = "scan") -> TheoremReport:
    """Enumerate the scan space, apply the pipeline and merge chunk results."""
    start = time.perf_counter()
    ev = _Evaluator(spec)
    indices = range(ev.n_chunks())
    if threads and threads > 1 and len(indices) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(ev.run_chunk, indices))
    else:
        parts = [ev.run_chunk(i) for i in indices]
    rep = TheoremReport(theorem, str(spec.group_type), spec.p, spec.modulus,
                        spec.mode if spec.mode == "exhaustive"
                        else f"sampled(count={spec.count}, seed={spec.seed})")
    records = set()
    hits = 0
    for part in parts:
        rep.checked += part["checked"]
        rep.central += part["central"]
        rep.non_p_prime += part["non_p_prime"]
        rep.matched += part["matched"]
        hits += part["hits"]
        records.update(part["records"])
    described = [ev.describe(x) for x in sorted(records)[:spec.record_limit]]
    if spec.conclude is None:
        rep.witness_count, rep.witnesses = hits, described
    else:
        rep.counterexample_count, rep.counterexamples = hits, described
    rep.wall_time_ms = int(1000 * (time.perf_counter() - start))
    return rep


# -- theorem drivers --------------------------------------------------------


def _setup(t, p, modulus, mode):
    t = GroupType.parse(t) if isinstance(t, str) else t
    check_char(p)
    return t, (modulus or default_modulus(t)), (mode or default_mode(t))


def _candidate_weights(t, p, max_coeff):
    bound = max_coeff if p == 0 else min(max_coeff, p - 1)
    for lam in product(range(bound + 1), repeat=t.rank):
        w = Weight(lam)
        if not w.is_zero():
            yield w


def _catalogue_witness(t, p, lam, require_regular):
    """A passing witness-module case exhibiting an exception for (t, p, lam)."""
    from .witness import list_cases, verify_witness
    key = "almost_cyclic" if require_regular else "cyclic"
    for case in list_cases():
        if case.group_type != t or case.p != p or case.expect.get("strongly_regular") is not False:
            continue
        if require_regular and case.expect.get("regular") is not True:
            continue
        for tgt in case.targets:
            if tgt.lambdas == (lam,) and (tgt.expect.get(key) or tgt.expect.get("cyclic")):
                if verify_witness(build_root_system(t), case).passed:
                    return case.id
    return None


def _merge(total: TheoremReport, part: TheoremReport, lam: Weight, role: str):
    total.checked += part.checked
    total.central = max(total.central, part.central)
    total.non_p_prime = max(total.non_p_prime, part.non_p_prime)
    total.matched += part.matched
    total.counterexample_count += part.counterexample_count
    total.witness_count += part.witness_count
    name = format_weight(lam)
    total.counterexamples += [dict(rec, **{"lambda": name}) for rec in part.counterexamples]
    return {"lambda": name, "role": role, "checked": part.checked, "matched": part.matched,
            "counterexamples": part.counterexample_count}


def _theorem_scan(theorem, t, p, modulus, mode, count, seed, threads, max_coeff,
                  select, exception, hypotheses, find):
    t, modulus, mode = _setup(t, p, modulus, mode)
    start = time.perf_counter()
    rep = TheoremReport(theorem, str(t), p, modulus,
                        mode if mode == "exhaustive" else f"sampled(count={count}, seed={seed})")
    for lam in _candidate_weights(t, p, max_coeff):
        entry = table_lookup(t, p, lam)
        reason = select(entry)
        if reason:
            rep.skipped.append({"lambda": format_weight(lam), "reason": reason})
            continue
        exc = exception(t, p, lam)
        base = dict(group_type=t, p=p, modulus=modulus, modules=((lam,),), mode=mode,
                    count=count, seed=seed)
        try:
            if exc:
                part = scan(ScanSpec(require=find, **base), threads, theorem)
            else:
                part = scan(ScanSpec(require=hypotheses, conclude="strongly_regular", **base),
                            threads, theorem)
        except UnsupportedCharacteristic as err:
            rep.skipped.append({"lambda": format_weight(lam), "reason": str(err)})
            continue
        inst = _merge(rep, part, lam, "exception" if exc else "check")
        if exc:
            if part.witnesses:
                inst["witness_source"] = "scan"
                rep.witnesses.append(dict(part.witnesses[0], **{"lambda": format_weight(lam),
                                                                 "source": "scan"}))
            else:
                cid = _catalogue_witness(t, p, lam, require_regular=(theorem == "re1"))
                if cid:
                    inst["witness_source"] = f"witness:{cid}"
                    rep.witnesses.append({"lambda": format_weight(lam), "source": f"witness:{cid}"})
                else:
                    rep.missing_witnesses.append(format_weight(lam))
        rep.instances.append(inst)
    rep.wall_time_ms = int(1000 * (time.perf_counter() - start))
    return rep


def verify_th1(t, p: int = 0, modulus: int | None = None, *, mode=None, count=10 ** 6,
               seed=0, threads=1, max_coeff=3) -> TheoremReport:
    """Cyclic on V_lam implies strongly regular, outside the listed exceptions.

    Weights whose module has a repeated weight cannot carry a cyclic element
    and are listed under ``skipped``.
    """
    def select(entry):
        if entry.kind != ALL_MULT_ONE:
            return ("some weight has multiplicity > 1; no element is cyclic"
                    if entry.kind != NOT_LISTED else "not listed; some weight has multiplicity > 1")
        return None
    return _theorem_scan("th1", t, p, modulus, mode, count, seed, threads, max_coeff, select,
                         th1_exception, ("cyclic[0]",),
                         ("cyclic[0]", "!strongly_regular"))


def verify_re1(t, p: int = 0, modulus: int | None = None, *, mode=None, count=10 ** 6,
               seed=0, threads=1, max_coeff=3) -> TheoremReport:
    """Regular and almost cyclic on V_lam implies strongly regular, outside the exceptions."""
    def select(entry):
        return "not listed in the multiplicity tables" if entry.kind == NOT_LISTED else None
    return _theorem_scan("re1", t, p, modulus, mode, count, seed, threads, max_coeff, select,
                         re1_exception, ("regular", "almost_cyclic[0]"),
                         ("regular", "almost_cyclic[0]", "!strongly_regular"))


def sa1_hypotheses(t, p: int) -> bool:
    t = GroupType.parse(t) if isinstance(t, str) else t
    if t.family == "A" and t.rank == 1:
        return p == 2
    if (t.family == "A" and t.rank == 2) or t.family == "G":
        return p != 3
    if t.family in "BCF":
        return p != 2
    return True


def verify_sa1(t, p: int = 0, modulus: int | None = None, *, mode=None, count=10 ** 6,
               seed=0, threads=1, p_prime_only=True) -> TheoremReport:
    """Non-central s: strongly regular iff almost cyclic on the highest-root module.

    Runs even when the hypotheses fail (``notes`` says so); counterexamples
    are then expected.
    """
    t, modulus, mode = _setup(t, p, modulus, mode)
    rs = build_root_system(t)
    base = dict(group_type=t, p=p, modulus=modulus, modules=((rs.highest_root,),), mode=mode,
                count=count, seed=seed, p_prime_only=p_prime_only)
    fwd = scan(ScanSpec(require=("strongly_regular",), conclude="almost_cyclic[0]", **base),
               threads, "sa1")
    back = scan(ScanSpec(require=("almost_cyclic[0]",), conclude="strongly_regular", **base),
                threads, "sa1")
    rep = fwd
    rep.instances = [
        {"direction": "strongly_regular => almost_cyclic", "matched": fwd.matched,
         "counterexamples": fwd.counterexample_count},
        {"direction": "almost_cyclic => strongly_regular", "matched": back.matched,
         "counterexamples": back.counterexample_count},
    ]
    rep.matched = fwd.matched
    rep.counterexample_count += back.counterexample_count
    rep.counterexamples = fwd.counterexamples + back.counterexamples
    rep.wall_time_ms = fwd.wall_time_ms + back.wall_time_ms
    notes = [] if sa1_hypotheses(t, p) else ["hypotheses of the equivalence do not hold"]
    if not p_prime_only:
        notes.append("elements of order divisible by p included")
    rep.notes = "; ".join(notes)
    return rep


def tensor_spectrum(sp1, sp2):
    """Convolution of two spectra given as (GroupValue, mult) lists."""
    if not sp1 or not sp2:
        return []
    g1, g2 = sp1[0][0].group, sp2[0][0].group
    if any(v.group != g1 for v, _ in sp1) or any(v.group != g2 for v, _ in sp2) or g1 != g2:
        raise InvalidInput("spectra live in different value groups")
    acc = {}
    for v1, m1 in sp1:
        for v2, m2 in sp2:
            v = v1 * v2
            acc[v] = acc.get(v, 0) + m1 * m2
    return sorted(acc.items(), key=lambda kv: kv[0].exponents)


def frobenius_twist_spectrum(ws: WeightSystem, k: int, p: int) -> WeightSystem:
    """Weights of the k-th Frobenius twist: every weight times p^k."""
    if not isinstance(k, int) or k < 0:
        raise InvalidInput(f"twist exponent must be a nonnegative integer, got {k!r}")
    if check_char(p) == 0:
        raise InvalidInput("Frobenius twist needs a prime characteristic")
    q = p ** k
    table = {Weight(tuple(q * c for c in w.coeffs)): m for w, m in ws.table.items()}
    return WeightSystem(ws.group_type, ws.p, [Weight(tuple(q * c for c in w.coeffs))
                                               for w in ws.pieces], table)


def verify_td2(t, lams=None, modulus: int | None = None, p: int = 0) -> TheoremReport:
    """Almost cyclic on V_1 (x) V_2 (sumset spectrum) implies cyclic on both factors.

    Exhaustive over non-central elements, for every pair drawn from ``lams``
    (default: a*w1, a = 1..3 for rank 1, fundamental weights otherwise).
    """
    t, modulus, _ = _setup(t, p, modulus, "exhaustive")
    rs = build_root_system(t)
    if lams is None:
        lams = ([Weight((a,)) for a in (1, 2, 3)] if t.rank == 1
                else [Weight.fundamental(t.rank, i) for i in range(1, t.rank + 1)])
    systems = {lam: weight_system(rs, lam, p) for lam in lams}
    rep = TheoremReport("td2", str(t), p, modulus, "exhaustive")
    simple = [r.coeffs for r in rs.simple_roots]
    from .torus import spectrum
    for x in product(range(modulus), repeat=t.rank):
        if p and (modulus // gcd(modulus, *x)) % p == 0:
            rep.non_p_prime += 1
            continue
        if all(sum(a * b for a, b in zip(r, x)) % modulus == 0 for r in simple):
            rep.central += 1
            continue
        rep.checked += 1
        s = element_from_exponents(t, modulus, x)
        specs = {lam: spectrum(ws, s) for lam, ws in systems.items()}
        for i, l1 in enumerate(lams):
            for l2 in lams[i:]:
                tens = tensor_spectrum(specs[l1], specs[l2])
                if sum(1 for _, m in tens if m > 1) > 1:
                    continue
                rep.matched += 1
                if not (is_cyclic(systems[l1], s) and is_cyclic(systems[l2], s)):
                    rep.counterexample_count += 1
                    if len(rep.counterexamples) < _RECORD_LIMIT:
                        rep.counterexamples.append({
                            "element": list(x), "torus": s.to_json(),
                            "lambda": [format_weight(l1), format_weight(l2)]})
    return rep


def verify_rr4(t=None, concrete: bool = False) -> TheoremReport:
    """Run the witness catalogue (optionally only cases for group ``t``)."""
    from .witness import run_all
    t = GroupType.parse(t) if isinstance(t, str) else t
    rep = TheoremReport("rr4", str(t) if t else "all", 0, None, "constructive")
    for r in run_all(concrete):
        if t is not None and r.group != str(t):
            continue
        rep.checked += 1
        rep.instances.append({"case": r.id, "group": r.group, "p": r.p, "status": r.status})
        if r.passed:
            rep.witness_count += 1
            rep.witnesses.append({"case": r.id, "source": f"witness:{r.id}"})
        else:
            rep.counterexample_count += 1
            rep.counterexamples.append(r.to_json())
    return rep


def verify_td4_exclusions(t, p: int) -> TheoremReport:
    t = GroupType.parse(t) if isinstance(t, str) else t
    check_char(p)
    rep = TheoremReport("td4-exclusions", str(t), p, None, "data")
    rep.instances = [{"pair": [format_weight(a), format_weight(b)]}
                     for a, b in td4_exclusions(t, p)]
    rep.checked = len(rep.instances)
    return rep


def replay(record: dict):
    """Rebuild the torus element of a report record."""
    return TorusElement.from_json(record["torus"])


def recheck_counterexample(record: dict, lam: Weight, p: int, hypotheses=("cyclic",)):
    """True iff the recorded element really satisfies the hypotheses and is not strongly regular."""
    from .torus import is_regular, is_strongly_regular
    s = replay(record)
    rs = build_root_system(s.group_type)
    ws = weight_system(rs, lam, p)
    checks = {"cyclic": lambda: is_cyclic(ws, s), "almost_cyclic": lambda: is_almost_cyclic(ws, s),
              "regular": lambda: is_regular(rs, s)}
    return all(checks[h]() for h in hypotheses) and not is_strongly_regular(rs, s)

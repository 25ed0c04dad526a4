"""``liecheck`` command line.

Exit codes: 0 success, 1 usage error or invalid input, 2 counterexample or
witness mismatch, 3 any other library error (e.g. an unsupported modular
case). Errors are also written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .errors import InvalidInput, LiecheckError
from .rootsys import GroupType, Weight, build_root_system, format_weight, parse_weight
from .torus import (
    TorusElement, element_order, fixed_multiplicity, is_almost_cyclic, is_central, is_cyclic,
    is_regular, is_strongly_regular, root_collisions, separates_weights, spectrum,
    weight_collisions,
)
from .verify import (
    THEOREMS, ScanSpec, default_mode, default_modulus, parse_pipeline, scan, verify_re1,
    verify_rr4, verify_sa1, verify_td2, verify_td4_exclusions, verify_th1,
)
from .weightcalc import weight_system
from .witness import find_cases, list_cases, verify_witness


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _env_threads():
    raw = os.environ.get("LIECHECK_THREADS", "") or "1"
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"LIECHECK_THREADS must be an integer, got {raw!r}") from None


def _build_parser():
    ap = _Parser(prog="liecheck", description="Exact torus-element checks for simple groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument("--group", help="group type such as C3 or G2")
        p.add_argument("--json", action="store_true", help="emit JSON Lines")
        p.add_argument("--out", help="write output to this file")
        return p

    r = common(sub.add_parser("roots", help="list the roots of a group"))
    r.add_argument("group_pos", nargs="?", metavar="GROUP")

    w = common(sub.add_parser("weights", help="weights and multiplicities of V_lambda"))
    w.add_argument("--lambda", dest="lam", required=True, action="append")
    w.add_argument("--p", type=int, default=0)

    s = common(sub.add_parser("spectrum", help="eigenvalues of a torus element on V_lambda"),
               group=False)
    s.add_argument("--torus", required=True, help="JSON file or inline JSON")
    s.add_argument("--lambda", dest="lam", required=True, action="append")
    s.add_argument("--p", type=int, default=0)

    c = common(sub.add_parser("check", help="predicates of a torus element"), group=False)
    c.add_argument("--torus", required=True)
    c.add_argument("--lambda", dest="lam", action="append")
    c.add_argument("--p", type=int, default=0)

    wi = common(sub.add_parser("witness", help="verify catalogue witnesses"), group=False)
    pick = wi.add_mutually_exclusive_group(required=True)
    pick.add_argument("--case", help="case id or family")
    pick.add_argument("--all", action="store_true")
    wi.add_argument("--concrete", action="store_true",
                    help="use the concrete finite-order instantiations")

    v = common(sub.add_parser("verify", help="scan a theorem over N-torsion points"))
    v.add_argument("--theorem", required=True, choices=THEOREMS + ("scan",))
    v.add_argument("--p", type=int, default=0)
    v.add_argument("--modulus", type=int)
    v.add_argument("--mode", choices=("exhaustive", "sampled"))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=10 ** 6)
    v.add_argument("--max-coeff", type=int, default=3)
    v.add_argument("--lambda", dest="lam", action="append",
                   help="module highest weight (scan, td2); repeat or join with ','")
    v.add_argument("--pipeline", help="scan only: 'A & B => C' or 'find A & B'")
    v.add_argument("--all-orders", action="store_true",
                   help="include elements whose order is divisible by p")
    v.add_argument("--concrete", action="store_true", help="rr4 only")
    v.add_argument("--threads", type=int,
                   default=_env_threads())
    v.add_argument("--timing", action="store_true", help="include wall_time_ms")
    return ap


def _group(args):
    name = getattr(args, "group_pos", None) or args.group
    if not name:
        raise _UsageError("--group is required")
    return GroupType.parse(name)


def _lambdas(args, rank):
    out = []
    for chunk in args.lam or []:
        out += [parse_weight(x, rank) for x in chunk.split(",") if x.strip()]
    return out


def _torus(text):
    path = Path(text)
    try:
        raw = path.read_text(encoding="utf-8") if path.is_file() else text
        doc = json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"--torus is neither a readable JSON file nor inline JSON: {exc}")
    return TorusElement.from_json(doc)


def _fmt_frac(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _table(rows, header):
    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(len(header))]
    line = lambda r: "  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()
    return [line(header)] + [line(r) for r in rows]


# -- commands: each returns (records, human lines, exit code) ------------------


def _cmd_roots(args):
    t = _group(args)
    rs = build_root_system(t)
    recs = []
    for r in rs.roots:
        recs.append({"group": str(t), "omega": list(r.coeffs),
                     "eps": [_fmt_frac(x) for x in rs.to_eps(r)], "height": int(rs.height(r)),
                     "simple": r in rs.simple_roots})
    rows = [(" ".join(x["eps"]), format_weight(Weight(tuple(x["omega"]))), x["height"])
            for x in recs]
    lines = [f"{t}: {len(recs)} roots"] + _table(rows, ("eps", "omega", "height"))
    return recs, lines, 0


def _cmd_weights(args):
    t = _group(args)
    rs = build_root_system(t)
    ws = weight_system(rs, _lambdas(args, t.rank), args.p)
    doc = ws.to_json()
    doc["dim"] = ws.dim
    rows = [(format_weight(w), " ".join(_fmt_frac(x) for x in rs.to_eps(w)), m)
            for w, m in ws.items()]
    lines = [f"{t} V({' + '.join(doc['pieces'])}) p={args.p}: dim {ws.dim}, "
             f"{len(rows)} distinct weights"] + _table(rows, ("weight", "eps", "mult"))
    return [doc], lines, 0


def _cmd_spectrum(args):
    s = _torus(args.torus)
    rs = build_root_system(s.group_type)
    ws = weight_system(rs, _lambdas(args, rs.rank), args.p)
    sp = spectrum(ws, s)
    doc = {"group": str(s.group_type), "p": args.p, "pieces": [str(w) for w in ws.pieces],
           "dim": ws.dim, "spectrum": [{"value": str(v), "mult": m} for v, m in sp],
           "cyclic": is_cyclic(ws, s), "almost_cyclic": is_almost_cyclic(ws, s)}
    lines = [f"{s.group_type} V({' + '.join(doc['pieces'])}) p={args.p}: dim {ws.dim}, "
             f"cyclic={doc['cyclic']} almost_cyclic={doc['almost_cyclic']}"]
    lines += _table([(x["value"], x["mult"]) for x in doc["spectrum"]], ("value", "mult"))
    return [doc], lines, 0


def _cmd_check(args):
    s = _torus(args.torus)
    rs = build_root_system(s.group_type)
    pairs = root_collisions(rs, s)
    doc = {"group": str(s.group_type), "element": s.to_json(), "order": element_order(s),
           "central": is_central(rs, s), "regular": is_regular(rs, s),
           "strongly_regular": is_strongly_regular(rs, s),
           "root_pairs": [[format_weight(a), format_weight(b)] for a, b in pairs],
           "modules": []}
    for lam in _lambdas(args, rs.rank):
        ws = weight_system(rs, lam, args.p)
        zero = ws.mult(Weight.zero(rs.rank))
        doc["modules"].append({
            "lambda": format_weight(lam), "p": args.p, "dim": ws.dim,
            "cyclic": is_cyclic(ws, s), "almost_cyclic": is_almost_cyclic(ws, s),
            "separates": separates_weights(ws, s),
            "fixed_eq_zero": fixed_multiplicity(ws, s) == zero,
            "weight_pairs": [[format_weight(a), format_weight(b)]
                             for a, b in weight_collisions(ws, s)[:8]]})
    lines = [f"{doc['group']} element {json.dumps(doc['element']['values'])}",
             f"  order={doc['order'] or 'infinite'} central={doc['central']} "
             f"regular={doc['regular']} strongly_regular={doc['strongly_regular']}"]
    for m in doc["modules"]:
        lines.append(f"  V({m['lambda']}): cyclic={m['cyclic']} almost_cyclic={m['almost_cyclic']}"
                     f" separates={m['separates']} fixed_eq_zero={m['fixed_eq_zero']}")
    return [doc], lines, 0


def _cmd_witness(args):
    cases = list_cases(args.concrete) if args.all else find_cases(args.case, args.concrete)
    reports = [verify_witness(build_root_system(c.group_type), c) for c in cases]
    recs = [r.to_json() for r in reports]
    rows = [(r.id, r.group, r.p, r.instantiation, r.status, r.reason) for r in reports]
    npass = sum(r.passed for r in reports)
    lines = _table(rows, ("case", "group", "p", "params", "status", "reason"))
    lines.append(f"{npass}/{len(reports)} cases pass")
    return recs, lines, 0 if npass == len(reports) else 2


def _cmd_verify(args):
    start = time.perf_counter()
    th = args.theorem
    if th == "rr4":
        rep = verify_rr4(GroupType.parse(args.group) if args.group else None, args.concrete)
    else:
        t = _group(args)
        mod = args.modulus or default_modulus(t)
        mode = args.mode or default_mode(t)
        kw = dict(mode=mode, count=args.count, seed=args.seed, threads=args.threads)
        if th == "th1":
            rep = verify_th1(t, args.p, mod, max_coeff=args.max_coeff, **kw)
        elif th == "re1":
            rep = verify_re1(t, args.p, mod, max_coeff=args.max_coeff, **kw)
        elif th == "sa1":
            rep = verify_sa1(t, args.p, mod, p_prime_only=not args.all_orders, **kw)
        elif th == "td2":
            lams = _lambdas(args, t.rank) or None
            rep = verify_td2(t, lams, mod, args.p)
        elif th == "td4-exclusions":
            rep = verify_td4_exclusions(t, args.p)
        else:
            if not args.pipeline:
                raise _UsageError("--theorem scan needs --pipeline")
            require, conclude = parse_pipeline(args.pipeline)
            mods = tuple((lam,) for lam in _lambdas(args, t.rank))
            spec = ScanSpec(t, args.p, mod, mods, require, conclude, mode, args.count,
                            args.seed, not args.all_orders)
            rep = scan(spec, args.threads)
    doc = rep.to_json(timing=args.timing)
    if args.timing:
        doc.setdefault("wall_time_ms", int(1000 * (time.perf_counter() - start)))
    lines = [f"{doc['theorem']} {doc['group']} p={doc['p']} {doc['label']} mode={doc['mode']}: "
             f"{doc['status']}",
             f"  checked={doc['checked']} central={doc['central']} matched={doc['matched']} "
             f"counterexamples={doc['counterexample_count']} witnesses={doc['witness_count']}"]
    for inst in doc["instances"]:
        lines.append("  " + " ".join(f"{k}={v}" for k, v in inst.items()))
    for sk in doc["skipped"]:
        lines.append(f"  skipped {sk['lambda']}: {sk['reason']}")
    for ce in doc["counterexamples"]:
        lines.append(f"  counterexample {json.dumps(ce, sort_keys=True)}")
    if doc["missing_witnesses"]:
        lines.append(f"  missing witnesses: {', '.join(doc['missing_witnesses'])}")
    if args.timing and "wall_time_ms" in doc:
        lines.append(f"  wall_time_ms={doc['wall_time_ms']}")
    return [doc], lines, 0 if rep.passed else 2


_COMMANDS = {"roots": _cmd_roots, "weights": _cmd_weights, "spectrum": _cmd_spectrum,
             "check": _cmd_check, "witness": _cmd_witness, "verify": _cmd_verify}


def _error(kind, exc, code):
    print(json.dumps({"error": kind, "message": str(exc), "exit_code": code}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        if getattr(args, "threads", 1) is not None and getattr(args, "threads", 1) < 1:
            raise _UsageError("--threads must be >= 1")
        recs, lines, code = _COMMANDS[args.command](args)
    except _UsageError as exc:
        return _error("usage", exc, 1)
    except InvalidInput as exc:
        return _error(type(exc).__name__, exc, 1)
    except LiecheckError as exc:
        return _error(type(exc).__name__, exc, 3)
    text = ("\n".join(json.dumps(r) for r in recs) if args.json else "\n".join(lines)) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

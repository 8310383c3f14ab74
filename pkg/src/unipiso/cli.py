"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 domain or
hypothesis error.
"""

from __future__ import annotations

import argparse
import csv
import datetime as dt
import io
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import blocks as B
from . import degrees as D
from . import gfpoly as G
from . import isometry as I
from . import partitions as P
from .errors import DomainError, NotUnitaryFlavor
from .numtheory import Flavor, flavor_of, prime_power, require_odd_prime, require_unitary
from .report import VerificationReport

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


@dataclass
class SweepConfig:
    n_max: int = 6
    q_list: list[int] = field(default_factory=lambda: [3])
    l_list: list[int] = field(default_factory=lambda: [7])
    e_cap: int = 5
    a_max: int = 1
    skip_linear: bool = False
    output: str | None = None
    format: str = "json"

    def __post_init__(self):
        for name in ("n_max", "e_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.a_max < 0:
            raise ValueError("a_max must be non-negative")
        for q in self.q_list:
            prime_power(q)
        for l in self.l_list:
            require_odd_prime(l)


# -- argument types --------------------------------------------------------------------

def _partition(text: str) -> P.Partition:
    try:
        return P.Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


# -- rendering ---------------------------------------------------------------------------

def _flatten(rec: dict) -> dict:
    return {k: json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v
            for k, v in rec.items()}


def render(doc: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    flat = [_flatten(r) for r in rows]
    columns: list[str] = []
    for r in flat:
        for k in r:
            if k not in columns:
                columns.append(k)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        for r in flat:
            w.writerow(r)
        return buf.getvalue()
    cells = [[str(r.get(c, "")) for c in columns] for r in flat]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _document(args, command: str, body: dict) -> dict:
    doc = {"schema": SCHEMA, "command": command}
    if not args.deterministic:
        doc["generated_at"] = dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds")
    doc.update(body)
    return doc


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _records(args, command: str, records: list[dict], extra: dict | None = None) -> int:
    body = dict(extra or {})
    body["records"] = records
    _emit(args, render(_document(args, command, body), records, args.format))
    return EXIT_OK


# -- simple commands ------------------------------------------------------------------------

def cmd_blocks(args) -> int:
    group = B.GroupSpec(B.GroupKind.parse(args.kind), args.n, args.q)
    labels = B.unipotent_block_labels(group, args.l)
    return _records(args, "blocks", [b.to_json() for b in labels])


def cmd_degrees(args) -> int:
    lam = args.partition
    prime_power(args.q)
    if args.l is not None:
        require_odd_prime(args.l)
    return _records(args, "degrees", D.degree_records(lam, args.q, args.l))


def cmd_core(args) -> int:
    lam, e = args.partition, args.e
    rec = {"partition": str(lam), "e": e, "core": str(P.e_core(lam, e)),
           "weight": P.e_weight(lam, e), "beta_set": list(P.beta_set(lam))}
    return _records(args, "core", [rec])


def cmd_hooks(args) -> int:
    lam = args.partition
    rec = {"partition": str(lam), "conjugate": str(lam.conjugate),
           "hooks": list(P.hook_multiset(lam)), "d": P.d_statistic(lam)}
    if args.e is not None:
        rec["e"] = args.e
        rec["rim_hook_additions"] = [
            {"mu": str(mu), "u": ext.u, "v": ext.v} for mu, ext in P.add_rim_hooks(lam, args.e).items()]
    return _records(args, "hooks", [rec])


def cmd_pieri(args) -> int:
    pat = I.pieri_pattern(args.partition)
    report = I.verify_pieri_degree_identity(args.partition, args.q)
    rec = {**pat.to_json(), "q": args.q, "identity_holds": report.overall}
    _records(args, "pieri", [rec], {"report": report.to_dict()})
    return EXIT_OK if report.overall else EXIT_FAIL


def cmd_map(args) -> int:
    sc = I.shintani_unipotent_map(args.partition, args.q)
    rec = {"partition": str(sc.label), "q": args.q, "sign": sc.sign, "image": str(sc)}
    return _records(args, "map", [rec])


def cmd_polys(args) -> int:
    if args.l is not None:
        records = []
        for a in range(args.a + 1) if args.all_a else [args.a]:
            for o in G.cyclotomic_l_orbits(args.q, args.l, a):
                cls = G.classify_orbit(o, args.q)
                records.append({"orbit": str(o), "a": a, "degree": o.degree,
                                "class": cls.tag, "tilde": str(G.orbit_tilde(o, args.q))})
        return _records(args, "polys", records, {"q": args.q, "l": args.l})
    if args.d is None:
        raise argparse.ArgumentTypeError("polys needs --d or --l/--a")
    F = G.get_field(args.q)
    records = []
    for g in G.enumerate_irreducibles(F, args.d):
        cls = G.classify(g, check=False)
        records.append({"poly": str(g), "degree": g.degree, "class": cls.tag, "tilde": str(G.tilde(g))})
    return _records(args, "polys", records, {"q": args.q, "field": F.describe()})


# -- theorem checks ---------------------------------------------------------------------------

def _thm3_items(cfg: SweepConfig, pairs) -> list[tuple[str, tuple]]:
    items = []
    for q, l in pairs:
        items.append(("la_fixed", (q, l, cfg.a_max)))
        for n in range(1, cfg.n_max + 1):
            items.append(("lpart_degrees", (n, q, l)))
            items.append(("group_lpart", (n, q, l)))
            items.append(("sigma_stability", (n, q, l, cfg.a_max)))
    for q in cfg.q_list:
        for n in range(2, cfg.n_max + 1):
            items.append(("pieri", (n, q)))
    return items


def _thm4_items(cfg: SweepConfig, pairs) -> list[tuple[str, tuple]]:
    items = []
    for n in range(0, cfg.n_max + 1):
        items.append(("straight_tables", (n, cfg.e_cap)))
        items.append(("deformation", (n, cfg.e_cap)))
    for q, l in pairs:
        for n in range(0, cfg.n_max + 1):
            items.append(("hook_step", (n, q, l, cfg.n_max)))
        for n in range(1, cfg.n_max + 1):
            items.append(("ratio_constant", (n, q, l)))
    return items


def _run_item(item: tuple[str, tuple]) -> VerificationReport:
    kind, a = item
    r = VerificationReport()
    if kind == "la_fixed":
        return G.verify_la_fixed(*a)
    if kind == "lpart_degrees":
        n, q, l = a
        for lam in P.partitions_of(n):
            r.add("lpart_equality", {"lambda": lam, "q": q, "l": l}, True, D.check_lpart_equality(lam, q, l))
        return r
    if kind == "group_lpart":
        n, q, l = a
        r.add("group_lpart", {"n": n, "q": q, "l": l}, True, B.check_group_lpart(n, q, l))
        return r
    if kind == "sigma_stability":
        n, q, l, a_max = a
        for block in B.unipotent_block_labels(B.GroupSpec(B.GroupKind.GL2, n, q), l):
            r.extend(I.verify_block_sigma_stability(block, a_max))
        return r
    if kind == "pieri":
        n, q = a
        for lam in P.partitions_of(n - 2):
            r.extend(I.verify_pieri_degree_identity(lam, q))
        return r
    if kind == "straight_tables":
        n, e_cap = a
        for lam in P.partitions_of(n):
            for e in range(1, e_cap + 1):
                for _, s in P.straight_placements(lam, e):
                    r.extend(P.verify_straight_hook_tables(lam, s.r, s.a, e))
        return r
    if kind == "deformation":
        n, e_cap = a
        for lam in P.partitions_of(n):
            for e in range(1, e_cap + 1):
                for mu, row, col in P.deformation_steps(lam, e):
                    r.extend(P.verify_deformation_step(lam, mu, row, col, e))
        return r
    if kind == "hook_step":
        n, q, l, n_max = a
        e = require_unitary(q, l)
        if n + e <= n_max:
            for lam in P.partitions_of(n):
                for mu in P.add_rim_hooks(lam, e):
                    r.extend(I.verify_hook_step_congruence(lam, mu, q, l))
        return r
    if kind == "ratio_constant":
        return I.verify_ratio_constant_on_blocks(*a)
    raise ValueError(kind)


def run_sweep(items, jobs: int = 1) -> VerificationReport:
    report = VerificationReport()
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_item, items))
    else:
        parts = [_run_item(it) for it in items]
    for part in parts:
        report.extend(part)
    return report


def _summary(report: VerificationReport) -> list[dict]:
    total, failed = Counter(), Counter()
    for c in report.checks:
        total[c.name] += 1
        failed[c.name] += not c.passed
    return [{"check": k, "count": total[k], "failed": failed[k], "pass": failed[k] == 0}
            for k in sorted(total)]


def cmd_check(args) -> int:
    cfg = SweepConfig(n_max=args.n_max, q_list=args.q, l_list=args.l, e_cap=args.e_cap,
                      a_max=args.a_max, skip_linear=args.skip_linear,
                      output=args.output, format=args.format)
    pairs = []
    for q in cfg.q_list:
        for l in cfg.l_list:
            if q % l == 0:
                continue
            if flavor_of(q, l) is not Flavor.UNITARY:
                if cfg.skip_linear:
                    continue
                raise NotUnitaryFlavor(f"l={l} is linear for q={q} (order of -q is even)")
            pairs.append((q, l))
    items = (_thm3_items if args.theorem == "thm3" else _thm4_items)(cfg, pairs)
    report = run_sweep(items, args.jobs)
    summary = _summary(report)
    body = {
        "theorem": args.theorem,
        "config": {"n_max": cfg.n_max, "q": cfg.q_list, "l": cfg.l_list, "e_cap": cfg.e_cap,
                   "a_max": cfg.a_max, "pairs": [list(p) for p in pairs]},
        "overall": report.overall,
        "n_checks": len(report.checks),
        "summary": summary,
        "failures": [c.to_dict() for c in report.failures],
    }
    if args.full:
        body["checks"] = [c.to_dict() for c in report.checks]
    _emit(args, render(_document(args, "check", body), summary, args.format))
    return EXIT_OK if report.overall else EXIT_FAIL


# -- parser -------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS, help="write to PATH instead of stdout")
    common.add_argument("--deterministic", action="store_true", default=argparse.SUPPRESS,
                        help="omit the timestamp")
    common.add_argument("--jobs", type=_positive, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="unipiso", description=__doc__.splitlines()[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("blocks", parents=[common], help="unipotent block labels")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--kind", default="U", choices=("U", "GL", "GL2"))
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("degrees", parents=[common], help="unipotent degrees of GL_n(q^2) and U_n(q)")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("core", parents=[common], help="e-core and e-weight")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--e", type=_positive, required=True)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("hooks", parents=[common], help="hook lengths and rim-hook additions")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--e", type=_positive)
    p.set_defaults(func=cmd_hooks)

    p = sub.add_parser("pieri", parents=[common], help="induction pattern from GL_1 x GL_{n-2} x GL_1")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("map", parents=[common], help="signed unipotent correspondence")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("polys", parents=[common], help="irreducibles over F_{q^2} or l-power orbits")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=_positive)
    p.add_argument("--l", type=int)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--all-a", action="store_true", help="list every a from 0 up to --a")
    p.set_defaults(func=cmd_polys)

    p = sub.add_parser("check", parents=[common], help="sweep the verifiers for a theorem")
    p.add_argument("theorem", choices=("thm3", "thm4"))
    p.add_argument("--n-max", type=_positive, default=6)
    p.add_argument("--q", type=int, nargs="+", default=[3])
    p.add_argument("--l", type=int, nargs="+", default=[7])
    p.add_argument("--e-cap", type=_positive, default=5)
    p.add_argument("--a-max", type=int, default=1)
    p.add_argument("--skip-linear", action="store_true",
                   help="drop linear (q, l) pairs instead of failing")
    p.add_argument("--full", action="store_true", help="include every check in the output")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "json"), ("output", None), ("deterministic", False), ("jobs", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (DomainError, ValueError) as exc:
        reason = exc.reason if isinstance(exc, DomainError) else type(exc).__name__
        doc = {"schema": SCHEMA, "command": args.command, "error": reason, "message": str(exc)}
        sys.stderr.write(f"error: {reason}: {exc}\n")
        _emit(args, json.dumps(doc, indent=2) + "\n")
        return EXIT_DOMAIN
    return EXIT_OK  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

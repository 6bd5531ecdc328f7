"""Command-line front end: ``apstab <command> [options]``.

Every command prints plain text by default, or a JSON document
(``--format json``) of the shape::

    {"schema_version": 1, "version": ..., "command": ..., "config": {...},
     "results": {...}, "checks": [{"anchor", "expected", "got", "pass"}, ...]}

or CSV rows (``--format csv``).  Exit codes: 0 all checks pass, 1 a
mathematical check failed, 2 usage error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .apalgebra import (APAlgebra, bar_tor_module, bar_tor_trivial, example_module, h_number,
                        parse_group, quotient_by_element, verify_regularity_lemma)
from .apalgebra import parse_presentation as parse_module
from .boundprop import Flags, propagate, verify_closed_forms
from .complexes import (boundary_rbs, matching_complex, order_complex, parse_complex, parse_poset,
                        rbs_poset, x_poset)
from .exactalg import ResourceError, parse_domain
from .grouppres import (FGT_E_ACTION, SWAN_E_ACTION, abelianize, builtin_fgt_sl, builtin_swan_sl2,
                        gl_extension, paper_table, parse_presentation)
from .jwcdga import jw_homology, partition_formula_dim
from .verify import CRITERIA, RunConfig, check, criterion_rbs, report, verify_all

THREADS_ENV = "APSTAB_THREADS"

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    results: dict
    checks: list = field(default_factory=list)
    text: str = ""
    rows: list = field(default_factory=list)  # CSV rows, header first


def _group(text):
    try:
        return parse_group(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _domain(text):
    try:
        return parse_domain(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _homology_rows(h):
    rows = [["degree", "rank", "torsion", "group"]]
    for d in sorted(h.free):
        rows.append([d, h.dim(d), " ".join(map(str, h.torsion_at(d))), h.group_str(d)])
    return rows


# ---------------------------------------------------------------- commands

def cmd_koszul(args, cfg) -> Outcome:
    G, k = _group(args.group), _domain(args.field)
    if not k.is_field:
        raise UsageError("Tor over A_P needs a field: use Q or F<p>")
    t = bar_tor_trivial(APAlgebra(G, k), args.max)
    off = [[n, d] for n, d in t.nonzero() if n != d]
    rows = [["d"] + [f"n={n}" for n in range(args.max + 1)]] + [[d] + r for d, r in enumerate(t.as_rows())]
    text = "\n".join(" ".join(f"{x:>6}" for x in r) for r in rows)
    text += "\noff-diagonal Tor: " + ("none (Koszul in this range)" if not off else str(off))
    return Outcome({"group": args.group, "field": str(k), "max": args.max, "tor": t.as_rows()},
                   [check(f"Koszul P={args.group} k={k} n<={args.max} off-diagonal Tor", [], off)], text, rows)


def _load_module(spec: str, G):
    if spec == "example":
        return example_module()
    if spec.startswith("quotient"):
        try:
            rho = int(spec.split(":", 1)[1]) if ":" in spec else 0
        except ValueError:
            raise UsageError(f"bad module spec {spec!r}") from None
        if not 0 <= rho < len(G):
            raise UsageError(f"group element index {rho} out of range")
        return quotient_by_element(G, rho)
    try:
        return parse_module(_read(spec))
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_tor(args, cfg) -> Outcome:
    G, k = _group(args.group), _domain(args.field)
    if not k.is_field:
        raise UsageError("Tor over A_P needs a field: use Q or F<p>")
    alg = APAlgebra(G, k)
    pres = _load_module(args.module, G)
    t = bar_tor_module(alg, pres, args.max, args.dmax)
    h = {str(d): h_number(t, d).value for d in range(args.dmax + 1)}
    rows = [["d"] + [f"n={n}" for n in range(args.max + 1)] + ["h_d"]]
    rows += [[d] + r + [str(h_number(t, d))] for d, r in enumerate(t.as_rows())]
    text = "\n".join(" ".join(f"{x:>6}" for x in r) for r in rows)
    checks = []
    if args.regularity:
        rep = verify_regularity_lemma(pres, alg, d_max=max(args.dmax, 2), N=args.max)
        status = {str(d): s for d, s in sorted(rep.status.items())}
        checks.append(check(f"regularity lemma for {pres.name or args.module}",
                            {d: "holds" for d in status}, status))
        text += "\nregularity: " + ", ".join(f"d={d} {s}" for d, s in status.items())
    return Outcome({"group": args.group, "field": str(k), "module": pres.name or args.module,
                    "tor": t.as_rows(), "h": h}, checks, text, rows)


def cmd_jw(args, cfg) -> Outcome:
    k = _domain(args.coeff)
    h = jw_homology(args.m, args.n, k, cap=cfg.cap, squarefree_only=args.squarefree, threads=cfg.threads)
    checks = []
    if k.characteristic == 0 and k.is_field and not args.squarefree:
        for d in sorted(h.free):
            checks.append(check(f"JW H_{{{args.n},{d}}} m={args.m} = partition formula",
                                partition_formula_dim(args.m, args.n, d), h.dim(d)))
    block = " (squarefree block)" if args.squarefree else ""
    return Outcome({"m": args.m, "n": args.n, "coeff": str(k), "squarefree": args.squarefree,
                    "homology": h.as_dict()}, checks, _jw_text(h, args, k, block), _homology_rows(h))


def _jw_text(h, args, k, block):
    lines = [f"JW complex m={args.m} n={args.n} over {k}{block}"]
    lines += [f"H_{{{args.n},{d}}} = {h.group_str(d)}" for d in sorted(h.free)]
    return "\n".join(lines)


def cmd_matching(args, cfg) -> Outcome:
    if args.n < 2:
        raise UsageError("matching complex needs n >= 2")
    k = _domain(args.coeff)
    h = matching_complex(args.n).homology(k, cap=cfg.cap)
    text = "\n".join(f"H~_{d} = {h.group_str(d)}" for d in sorted(h.free))
    return Outcome({"n": args.n, "coeff": str(k), "reduced_homology": h.as_dict()}, [], text, _homology_rows(h))


def cmd_poset(args, cfg) -> Outcome:
    k = _domain(args.coeff)
    chosen = [x for x in (args.file, args.complex, args.x, args.rbs) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --file, --complex, --x, --rbs")
    try:
        if args.complex is not None:
            cx = parse_complex(_read(args.complex))
            label = args.complex
        else:
            if args.file is not None:
                p, label = parse_poset(_read(args.file)), args.file
            else:
                G = _group(args.group)
                if args.x is not None:
                    p, label = x_poset(args.x, G), f"X_{args.x}({args.group})"
                else:
                    if not 0 <= args.rho < len(G):
                        raise UsageError(f"group element index {args.rho} out of range")
                    make = boundary_rbs if args.boundary else rbs_poset
                    p = make(args.rbs, args.rho, G)
                    label = f"{'boundary ' if args.boundary else ''}RBS({args.rbs}, {args.rho}) over {args.group}"
            cx = order_complex(p)
    except ValueError as e:
        raise UsageError(str(e)) from None
    h = cx.homology(k, cap=cfg.cap)
    text = f"{label}: {len(cx.vertices)} vertices, {len(cx.facets)} facets\n"
    text += "\n".join(f"H~_{d} = {h.group_str(d)}" for d in sorted(h.free))
    return Outcome({"input": label, "vertices": len(cx.vertices), "facets": len(cx.facets),
                    "reduced_homology": h.as_dict()}, [], text, _homology_rows(h))


def cmd_rbs_check(args, cfg) -> Outcome:
    checks = criterion_rbs(cfg, n_max=args.max)
    text = "\n".join(f"{'PASS' if c.passed else 'FAIL'}  {c.anchor}" for c in checks)
    return Outcome({"max": args.max}, checks, text)


def cmd_bounds(args, cfg) -> Outcome:
    try:
        flags = Flags.parse(args.flags.replace(",", "+"))
    except ValueError as e:
        raise UsageError(str(e)) from None
    table = propagate(flags, args.tmax, args.smax)
    rep = verify_closed_forms(flags, max(args.tmax, 1), max(args.smax, 1))
    checks = [check(f"closed forms flags={flags.label} t<={max(args.tmax, 1)}", [],
                    [list(v) for v in rep.violations])]
    rows = [["t"] + [f"s={s}" for s in range(args.smax + 1)]]
    rows += [[t] + [table.entry_str(s, t) for s in range(args.smax + 1)] for t in range(args.tmax + 1)]
    return Outcome(table.as_dict(), checks, table.render(), rows)


def cmd_abelianize(args, cfg) -> Outcome:
    if (args.file is None) == (args.builtin is None):
        raise UsageError("give exactly one of --file or --builtin")
    if args.file is not None:
        if args.gl:
            raise UsageError("--gl applies to builtin presentations only")
        try:
            p = parse_presentation(_read(args.file))
        except ValueError as e:
            raise UsageError(str(e)) from None
        name = args.file
    else:
        mp, act = (builtin_swan_sl2(), SWAN_E_ACTION) if args.builtin == "swan" else (builtin_fgt_sl(), FGT_E_ACTION)
        p = gl_extension(mp, act) if args.gl else mp.presentation
        name = p.name
    a = abelianize(p)
    return Outcome({"presentation": name, "generators": len(p.generators), "relators": len(p.relators),
                    "abelianization": a.as_dict()}, [], str(a),
                   [["rank", "torsion", "group"], [a.free_rank, " ".join(map(str, a.torsion)), str(a)]])


def cmd_table(args, cfg) -> Outcome:
    entries = paper_table(args.max)
    rows = [["rank", "module", "abelianization", "source"]]
    rows += [[e.rank, e.column, e.group, e.source] for e in entries]
    width = max(len(e.group) for e in entries)
    text = "\n".join(f"n={e.rank}  GL({e.column:<9}) ab = {e.group:<{width}}  [{e.source}]" for e in entries)
    return Outcome({"entries": [dict(zip(rows[0], r)) for r in rows[1:]]}, [], text, rows)


def cmd_verify_all(args, cfg) -> Outcome:
    numbers = sorted(CRITERIA)
    if args.only:
        try:
            numbers = sorted({int(x) for x in args.only.split(",")})
        except ValueError:
            raise UsageError("--only takes comma-separated criterion numbers") from None
        if any(n not in CRITERIA for n in numbers):
            raise UsageError(f"criteria are numbered {min(CRITERIA)}..{max(CRITERIA)}")
    progress = None
    if args.progress:
        def progress(r):
            print(r.summary_line(), file=sys.stderr, flush=True)
    res = verify_all(cfg, numbers, progress)
    checks = [c for r in res for c in r.checks]
    text = "\n".join(r.summary_line() for r in res)
    failing = [c for c in checks if not c.passed]
    if failing:
        text += "\nfailing checks:\n" + "\n".join(f"  {c.anchor}: expected {c.expected}, got {c.got}"
                                                  for c in failing)
    summary = {str(r.number): {"title": r.title, "pass": r.passed, "checks": len(r.checks)} for r in res}
    return Outcome({"criteria": summary}, checks, text)


# ---------------------------------------------------------------- plumbing

def _common(p):
    g = p.add_argument_group("common options")
    g.add_argument("--format", choices=("plain", "json", "csv"), default=argparse.SUPPRESS)
    g.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                   help=f"worker threads for block computations (default: ${THREADS_ENV} or 1)")
    g.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                   help="largest chain complex (total basis size) to attempt; 0 disables")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized instances")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="apstab", description=__doc__.split("\n\n")[0])
    _common(ap)
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        _common(p)
        p.set_defaults(func=func)
        return p

    p = add("koszul", cmd_koszul, "Tor^A(k, k) via the bar complex; passes iff it is diagonal")
    p.add_argument("--group", default="Z2", help="finite abelian group, e.g. 1, Z3, Z2xZ2")
    p.add_argument("--field", default="Q", help="Q or F<p>")
    p.add_argument("--max", type=int, default=6, help="largest grading n")

    p = add("tor", cmd_tor, "Tor^A(k, M) for a finitely presented graded module")
    p.add_argument("--group", default="Z2")
    p.add_argument("--field", default="F2")
    p.add_argument("--module", default="example",
                   help="'example', 'quotient[:rho]' (A/rho) or a presentation file")
    p.add_argument("--max", type=int, default=8, help="window: gradings n <= max")
    p.add_argument("--dmax", type=int, default=3, help="homological degrees d <= dmax")
    p.add_argument("--regularity", action="store_true", help="also check h_d <= d - 1 + h_1")

    p = add("jw", cmd_jw, "homology of the JW cdga with dim V = m in grading n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coeff", default="Q", help="Z, Q or F<p>")
    p.add_argument("--squarefree", action="store_true", help="only the squarefree multiset block")

    p = add("matching", cmd_matching, "reduced homology of the matching complex M(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coeff", default="Z")

    p = add("poset", cmd_poset, "reduced homology of an order complex (or a facet-list complex)")
    p.add_argument("--file", help="poset file ('element X' / 'le A B' lines)")
    p.add_argument("--complex", help="simplicial complex file (one facet per line)")
    p.add_argument("--x", type=int, help="the poset X_m(P) for this m")
    p.add_argument("--rbs", type=int, help="the RBS poset for this n")
    p.add_argument("--rho", type=int, default=0, help="group element index for --rbs")
    p.add_argument("--boundary", action="store_true", help="drop the terminal element (with --rbs)")
    p.add_argument("--group", default="Z2")
    p.add_argument("--coeff", default="Z")

    p = add("rbs-check", cmd_rbs_check, "RBS contractibility, the chain dictionary and X_m(P) homology")
    p.add_argument("--max", type=int, default=4, help="largest n")

    p = add("bounds", cmd_bounds, "propagate support bounds through the bar spectral sequence chart")
    p.add_argument("--flags", default="none", help="none, III, or III,IV")
    p.add_argument("--tmax", type=int, default=3)
    p.add_argument("--smax", type=int, default=4)

    p = add("abelianize", cmd_abelianize, "abelianization of a finitely presented group")
    p.add_argument("--file", help="presentation file ('gens: ...' then one relator per line)")
    p.add_argument("--builtin", choices=("swan", "fgt"), help="SL_2(O) or SL(O + l) over Z[sqrt(-5)]")
    p.add_argument("--gl", action="store_true", help="adjoin E = diag(-1, 1) (builtin only)")

    p = add("table", cmd_table, "abelianizations of GL over Z[sqrt(-5)], ranks 1..max, with sources")
    p.add_argument("--max", type=int, default=4)

    p = add("verify-all", cmd_verify_all, "run the whole acceptance suite")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--progress", action="store_true", help="print each criterion to stderr as it finishes")
    return ap


def _config(args) -> RunConfig:
    threads = getattr(args, "threads", None)
    if threads is None:
        env = os.environ.get(THREADS_ENV, "")
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise UsageError(f"${THREADS_ENV} must be an integer") from None
    if threads is None:
        threads = 1
    if threads < 1:
        raise UsageError("--threads must be >= 1")
    cap = getattr(args, "cap", RunConfig.cap)
    if cap is not None and cap < 0:
        raise UsageError("--cap must be >= 0")
    return RunConfig(seed=getattr(args, "seed", 0), cap=cap or None, threads=threads)


def _emit(fmt, command, cfg, out: Outcome, stream):
    if fmt == "json":
        doc = report(command, cfg, out.results, out.checks)
        stream.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if out.rows:
            w.writerows(out.rows)
        else:
            w.writerow(["anchor", "expected", "got", "pass"])
            for c in out.checks:
                w.writerow([c.anchor, json.dumps(c.expected), json.dumps(c.got), c.passed])
        stream.write(buf.getvalue())
    else:
        stream.write(out.text.rstrip("\n") + "\n")
        if out.checks and command != "verify-all":
            for c in out.checks:
                stream.write(f"{'PASS' if c.passed else 'FAIL'}  {c.anchor}\n")


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = _config(args)
        out = args.func(args, cfg)
    except UsageError as e:
        print(f"apstab {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as e:
        print(f"apstab {args.command}: resource cap exceeded: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    _emit(getattr(args, "format", "plain"), args.command, cfg, out, stdout)
    return EXIT_OK if all(c.passed for c in out.checks) else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())

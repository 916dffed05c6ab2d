"""Command-line front end.

Subcommands cover the computation surfaces (roots, kostant, microsupport,
simplex, satake) and the verification registry (verify).  Reports are
deterministic: identical inputs produce byte-identical documents.  Output
formats are json (structured entries), tsv (tables), and text (human
readable, with ASCII dot/line diagrams for low rank).

Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from .kostant import is_self_contragredient, kostant_decomposition
from .microsupport import micro_support
from .posetmod import ic_module, local_complex, subsets
from .roots import (
    build_root_system,
    codim_and_perversity,
    dim_nilradical,
    parabolic,
)
from .satake import (
    SatakeDatum,
    baily_borel,
    is_saturated,
    kappa_zeta,
    p_dagger,
)
from .suites import DEFAULT_SUITES, SUITES, UnknownSuiteError, run_suite
from .threads import PROFILES
from math import inf

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    """Validated invocation parameters shared by the subcommands."""

    cartan_type: str | None = None
    rank: int | None = None
    levi: frozenset = frozenset()
    lam: tuple = ()
    family: str | None = None
    perversity: str | None = None
    weight_profile: str | None = None
    mu_support: frozenset | None = None
    suites: list = field(default_factory=list)
    fmt: str = "text"
    jobs: int = 1

    def validate(self):
        if self.perversity and self.family not in (None, "ic"):
            raise UsageError("--perversity only applies to the ic family")
        if self.weight_profile and self.family not in (None, "wc"):
            raise UsageError("--weight-profile only applies to the wc family")
        if self.family == "ic" and not self.perversity:
            raise UsageError("the ic family needs --perversity m|n")
        if self.family == "wc" and not self.weight_profile:
            raise UsageError("the wc family needs --weight-profile mu|nu")


def _parse_indices(text: str, rank: int) -> frozenset:
    """Simple-root list like 'a1,a3', 'α1,α3', or '1,3' (1-based)."""
    out = set()
    for tok in text.split(","):
        tok = tok.strip().lstrip("α").lstrip("a")
        if not tok.isdigit():
            raise UsageError(f"bad simple-root token {tok!r}")
        i = int(tok)
        if not 1 <= i <= rank:
            raise UsageError(f"simple-root index {i} outside 1..{rank}")
        out.add(i - 1)
    return frozenset(out)


def _parse_lambda(text: str, rank: int) -> tuple:
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad weight coordinates {text!r}")
    if len(coords) != rank or any(c < 0 for c in coords):
        raise UsageError(
            f"need {rank} nonnegative fundamental coordinates, got {text!r}"
        )
    return coords


def _face_name(a) -> str:
    return "-" if not a else "".join(f"a{i + 1}" for i in sorted(a))


# -- document rendering ----------------------------------------------------


def _emit(doc: dict, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, default=str) + "\n")
        return
    header = doc.get("columns", [])
    rows = doc.get("rows", [])
    if fmt == "tsv":
        out.write("\t".join(header) + "\n")
        for r in rows:
            out.write("\t".join(str(x) for x in r) + "\n")
        return
    for line in doc.get("preamble", []):
        out.write(line + "\n")
    if rows:
        widths = [
            max(len(str(h)), *(len(str(r[i])) for r in rows))
            for i, h in enumerate(header)
        ]
        out.write(
            "  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()
            + "\n"
        )
        for r in rows:
            out.write(
                "  ".join(
                    str(x).ljust(w) for x, w in zip(r, widths)
                ).rstrip()
                + "\n"
            )


# -- subcommands -----------------------------------------------------------


def cmd_roots(cfg: RunConfig, out) -> int:
    system = build_root_system(cfg.cartan_type, cfg.rank)
    rows = []
    levis = (
        [cfg.levi]
        if cfg.levi
        else [frozenset(s) for s in subsets(range(cfg.rank))]
    )
    for levi in sorted(levis, key=lambda s: (len(s), sorted(s))):
        P = parabolic(system, levi)
        if P.is_full:
            codim = pm = pn = "-"
        else:
            codim, pm = codim_and_perversity(P, "m")
            _, pn = codim_and_perversity(P, "n")
        rows.append(
            [
                _face_name(levi),
                _face_name(P.restricted_indices),
                dim_nilradical(P),
                codim,
                pm,
                pn,
            ]
        )
    doc = {
        "command": "roots",
        "group": f"{cfg.cartan_type}{cfg.rank}",
        "columns": ["levi", "restricted", "dim-nilradical", "codim", "p-m", "p-n"],
        "rows": rows,
        "preamble": [
            f"{cfg.cartan_type}{cfg.rank}: "
            f"{len(system.positive_roots)} positive roots"
        ],
    }
    _emit(doc, cfg.fmt, out)
    return EXIT_OK


def cmd_kostant(cfg: RunConfig, out) -> int:
    system = build_root_system(cfg.cartan_type, cfg.rank)
    P = parabolic(system, cfg.levi)
    rows = []
    for c in kostant_decomposition(cfg.lam, P):
        signs = []
        for i in P.restricted_indices:
            v = c.pairing(i)
            signs.append("0" if v == 0 else ("+" if v > 0 else "-"))
        rows.append(
            [
                "".join(str(x + 1) for x in c.w.reduced_word()) or "e",
                c.degree,
                ",".join(str(x) for x in c.mu),
                "".join(signs),
                "yes" if is_self_contragredient(c) else "no",
            ]
        )
    doc = {
        "command": "kostant",
        "group": f"{cfg.cartan_type}{cfg.rank}",
        "levi": _face_name(cfg.levi),
        "lambda": list(cfg.lam),
        "columns": ["word", "length", "mu", "pairing-signs", "self-dual"],
        "rows": rows,
        "preamble": [
            f"{len(rows)} classes for levi {_face_name(cfg.levi)}, "
            f"lambda {','.join(str(x) for x in cfg.lam)}"
        ],
    }
    _emit(doc, cfg.fmt, out)
    return EXIT_OK


def cmd_microsupport(cfg: RunConfig, out) -> int:
    system = build_root_system(cfg.cartan_type, cfg.rank)
    entries = micro_support(
        cfg.family,
        cfg.lam,
        system,
        kind=cfg.perversity,
        profile=cfg.weight_profile,
    )
    rows = []
    for e in entries:
        rows.append(
            [
                _face_name(e.P.levi),
                "".join(str(x + 1) for x in e.cls.w.reduced_word()) or "e",
                e.cls.degree,
                e.c,
                e.d,
                "yes" if e.essential else "no",
                "yes" if e.fundamental else "no",
                "; ".join(f"{_face_name(a)}:{g}" for a, g in e.window),
            ]
        )
    doc = {
        "command": "microsupport",
        "group": f"{cfg.cartan_type}{cfg.rank}",
        "family": cfg.family,
        "perversity": cfg.perversity,
        "weight_profile": cfg.weight_profile,
        "lambda": list(cfg.lam),
        "columns": [
            "levi", "word", "length", "c", "d", "essential", "fundamental",
            "window",
        ],
        "rows": rows,
        "preamble": [f"{len(rows)} detected classes"],
    }
    _emit(doc, cfg.fmt, out)
    return EXIT_OK


def _simplex_diagram(n: int, marked: set) -> list[str]:
    def v(i):
        return "*" if frozenset({i}) in marked else "o"

    def e(i, j, mark_char, plain_char):
        return mark_char if frozenset({i, j}) in marked else plain_char

    if n == 1:
        return [f"  {v(0)} a1"]
    if n == 2:
        return [f"  a1 {v(0)}{e(0, 1, '===', '---')}{v(1)} a2"]
    if n == 3:
        return [
            f"        {v(0)} a1",
            f"       {e(0, 1, '/', '.')} {e(0, 2, chr(92), '.')}",
            f"  a2 {v(1)}{e(1, 2, '===', '---')}{v(2)} a3",
        ]
    return []


def cmd_simplex(args, cfg: RunConfig, out) -> int:
    n = args.rank
    if not 1 <= n <= 6:
        raise UsageError("simplex rank must be between 1 and 6")
    marked = set()
    if args.cut:
        for tok in args.cut.split(","):
            tok = tok.strip()
            verts = set()
            for piece in tok.replace("α", "a").split("a"):
                if piece:
                    verts.add(int(piece) - 1)
            if not verts or not all(0 <= i < n for i in verts):
                raise UsageError(f"bad face token {tok!r}")
            marked.add(frozenset(verts))
    full = frozenset(range(n))
    if full in marked:
        raise UsageError("the open face cannot be cut")
    cutoffs = {
        a: (-inf if a in marked else inf) for a in subsets(range(n)) if a != full
    }
    mod = ic_module(tuple(range(n)), cutoffs)
    cx, _ = local_complex(mod, frozenset())
    h = cx.cohomology()
    rows = [
        [d, h.free_rank(d), ",".join(str(t) for t in h.torsion(d)) or "-"]
        for d in h.degrees()
    ]
    preamble = []
    if cfg.fmt == "text" and n <= 3:
        preamble = _simplex_diagram(n, marked) + [""]
    preamble += (
        [f"degree {d}: rank {h.free_rank(d)}" for d in h.degrees()]
        if h.degrees()
        else ["zero"]
    )
    doc = {
        "command": "simplex",
        "rank": n,
        "cut": sorted(sorted(a) for a in marked),
        "value": str(h),
        "columns": ["degree", "rank", "torsion"],
        "rows": rows,
        "preamble": preamble,
    }
    _emit(doc, cfg.fmt, out)
    return EXIT_OK


def cmd_satake(cfg: RunConfig, out) -> int:
    system = build_root_system(cfg.cartan_type, cfg.rank)
    if cfg.mu_support is None:
        datum = baily_borel(system)
    else:
        datum = SatakeDatum(system, cfg.mu_support)
    levis = (
        [cfg.levi]
        if cfg.levi
        else [frozenset(s) for s in subsets(range(cfg.rank))]
    )
    rows = []
    for levi in sorted(levis, key=lambda s: (len(s), sorted(s))):
        P = parabolic(system, levi)
        kappa, zeta = kappa_zeta(datum, levi)
        dag = p_dagger(datum, P)
        rows.append(
            [
                _face_name(levi),
                _face_name(kappa),
                _face_name(zeta),
                _face_name(dag.levi),
                "yes" if is_saturated(datum, P) else "no",
            ]
        )
    doc = {
        "command": "satake",
        "group": f"{cfg.cartan_type}{cfg.rank}",
        "mu_support": sorted(i + 1 for i in datum.mu_support),
        "columns": ["levi", "kappa", "zeta", "dagger", "saturated"],
        "rows": rows,
        "preamble": [
            f"weight support: "
            f"{','.join('a' + str(i + 1) for i in sorted(datum.mu_support))}"
        ],
    }
    _emit(doc, cfg.fmt, out)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out) -> int:
    names = cfg.suites or list(DEFAULT_SUITES)
    for n in names:
        if n not in SUITES:
            raise UnknownSuiteError(n)
    progress = (
        (lambda s: print(s, file=sys.stderr, flush=True))
        if args.progress
        else None
    )
    t0 = time.perf_counter()
    results = []
    if cfg.jobs > 1 and len(names) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            futs = {
                n: pool.submit(run_suite, n, progress, args.checkpoint)
                for n in names
            }
        results = [futs[n].result() for n in names]  # canonical order
    else:
        results = [
            run_suite(n, progress=progress, checkpoint=args.checkpoint)
            for n in names
        ]
    passed = all(r.passed for r in results)
    doc = {
        "command": "verify",
        "passed": passed,
        "elapsed": round(time.perf_counter() - t0, 3),
        "suites": [r.to_dict() for r in results],
    }
    if cfg.fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    elif cfg.fmt == "tsv":
        out.write("suite\tcheck\ttag\texpected\tgot\tpassed\n")
        for r in results:
            for c in r.checks:
                out.write(
                    f"{r.suite}\t{c.name}\t{c.tag}\t{c.expected}\t{c.got}\t"
                    f"{'pass' if c.passed else 'FAIL'}\n"
                )
    else:
        for r in results:
            out.write(
                f"suite {r.suite}: {'PASS' if r.passed else 'FAIL'} "
                f"({r.elapsed:.2f}s)\n"
            )
            for c in r.checks:
                mark = "ok" if c.passed else "FAIL"
                out.write(
                    f"  [{mark:4}] {c.name} [{c.tag}]"
                    + (
                        ""
                        if c.passed
                        else f"  expected: {c.expected}  got: {c.got}"
                    )
                    + "\n"
                )
        out.write("all suites passed\n" if passed else "FAILURES present\n")
    return EXIT_OK if passed else EXIT_FAIL


# -- argument plumbing -----------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="weylcoh",
        description="exact verification engine for parabolic stratum posets",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, needs_group=True):
        p.add_argument(
            "--format", choices=("json", "tsv", "text"), default="text"
        )
        if needs_group:
            p.add_argument("--type", required=True, help="Cartan type letter")
            p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("roots", help="parabolic and perversity bookkeeping")
    common(p)
    p.add_argument("--levi", default=None)

    p = sub.add_parser("kostant", help="isotypical classes of a parabolic")
    common(p)
    p.add_argument("--levi", default="", help="empty for the minimal parabolic")
    p.add_argument("--lambda", dest="lam", required=True)

    p = sub.add_parser("microsupport", help="detected classes of a family")
    common(p)
    p.add_argument(
        "--family", choices=("pushforward", "ic", "wc"), required=True
    )
    p.add_argument("--perversity", choices=("m", "n"), default=None)
    p.add_argument("--weight-profile", choices=PROFILES, default=None)
    p.add_argument("--lambda", dest="lam", required=True)

    p = sub.add_parser("simplex", help="truncation profile on a simplex cone")
    p.add_argument(
        "--format", choices=("json", "tsv", "text"), default="text"
    )
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--cut", default="", help="faces to cut, e.g. a1,a1a2")

    p = sub.add_parser("satake", help="connectivity splits and saturations")
    common(p)
    p.add_argument("--levi", default=None)
    p.add_argument(
        "--mu-support",
        default=None,
        help="simple roots touching the weight; default: type C long-root end",
    )

    p = sub.add_parser("verify", help="run registered verification suites")
    p.add_argument(
        "--format", choices=("json", "tsv", "text"), default="text"
    )
    p.add_argument("suites", nargs="*", help="suite names; default: all fast")
    p.add_argument("--list", action="store_true", help="list registered suites")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--jobs", type=int, default=1)
    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        cfg = RunConfig(fmt=args.format)
        if hasattr(args, "type"):
            cfg.cartan_type = args.type
            cfg.rank = args.rank
        if getattr(args, "levi", None):
            cfg.levi = _parse_indices(args.levi, cfg.rank)
        if getattr(args, "lam", None):
            cfg.lam = _parse_lambda(args.lam, cfg.rank)
        if getattr(args, "mu_support", None):
            cfg.mu_support = _parse_indices(args.mu_support, cfg.rank)
        cfg.family = getattr(args, "family", None)
        cfg.perversity = getattr(args, "perversity", None)
        cfg.weight_profile = getattr(args, "weight_profile", None)
        cfg.validate()
        if args.command == "verify":
            if args.list:
                for name in sorted(SUITES):
                    out.write(f"{name}\t{SUITES[name][1]}\n")
                return EXIT_OK
            cfg.suites = list(args.suites)
            jobs = os.environ.get("WEYLCOH_JOBS")
            cfg.jobs = int(jobs) if jobs else args.jobs
            return cmd_verify(args, cfg, out)
        if args.command == "roots":
            return cmd_roots(cfg, out)
        if args.command == "kostant":
            return cmd_kostant(cfg, out)
        if args.command == "microsupport":
            return cmd_microsupport(cfg, out)
        if args.command == "simplex":
            return cmd_simplex(args, cfg, out)
        if args.command == "satake":
            return cmd_satake(cfg, out)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, UnknownSuiteError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``shortchords <command> [args] [flags]``.

Every command produces a JSON-ready dict.  ``--format csv`` flattens the
command's main table (see README for columns) and ``--format text`` prints a
short human-readable summary.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import bessel, bijection, knuth, patterns, schreier, tableaux, verify
from .matchings import (
    Matching,
    MatchingError,
    count_matchings,
    double_factorial,
    enumerate_matchings,
    parse_matching,
    short_mask,
    short_set,
)
from .symfunc import SchurExpansion, complement_vector, descent_vector, schur_expand, sparse_criterion_vector

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    """A user-facing failure; the message is printed and the exit code is 2."""


@dataclass
class RunConfig:
    command: str
    args: dict[str, Any] = field(default_factory=dict)
    cache_dir: str | None = None
    threads: int = 1
    output_format: str = "json"
    seed: int = 0
    max_n: int | None = None
    max_2n: int | None = None
    timings: bool = False


@dataclass
class Report:
    data: dict
    rows: list[dict] = field(default_factory=list)
    text: str = ""
    exit_code: int = EXIT_OK


def _expansion_json(e) -> dict:
    if isinstance(e, SchurExpansion):
        return {"symmetric": True, "expansion": str(e), "coeffs": e.to_dict()["coeffs"],
                "schur_positive": e.is_schur_positive}
    return {"symmetric": False, "expansion": None, "residual": e.residual.to_dict()["counts"]}


def _sets(mask_or_set) -> list[int]:
    return sorted(mask_or_set)


def _guard_n(cfg: RunConfig, n: int, f: int | None = None) -> None:
    limit = verify.HARD_MAX_N if cfg.max_n is None else cfg.max_n
    if n > limit:
        size = count_matchings(n, f) if f is not None else sum(count_matchings(n, g) for g in range(n + 1))
        raise CliError(f"N={n} exceeds the bound {limit}; the run would enumerate {size} matchings")


def _guard_2n(cfg: RunConfig, n2: int) -> None:
    limit = verify.HARD_MAX_2N if cfg.max_2n is None else cfg.max_2n
    if n2 > limit:
        raise CliError(f"2n={n2} exceeds the bound {limit}; the graph would have "
                       f"{double_factorial(n2 - 1)} vertices")


def _matching(text: str) -> Matching:
    try:
        return parse_matching(text)
    except MatchingError as exc:
        raise CliError(str(exc)) from None


def cmd_enumerate(cfg: RunConfig) -> Report:
    n, f = cfg.args["N"], cfg.args["f"]
    _guard_n(cfg, n, f)
    ms = list(enumerate_matchings(n, f))
    rows = [{"index": i, "matching": str(m), "short": " ".join(map(str, _sets(short_set(m))))}
            for i, m in enumerate(ms)]
    data = {"op": "matchings.enumerate_matchings", "N": n, "f": f, "count": len(ms),
            "matchings": [str(m) for m in ms]}
    return Report(data, rows, "\n".join(str(m) for m in ms))


def cmd_short(cfg: RunConfig) -> Report:
    m = _matching(cfg.args["matching"])
    s = _sets(short_set(m))
    return Report({"op": "matchings.short_set", "matching": str(m), "short": s},
                  [{"matching": str(m), "short": " ".join(map(str, s))}], f"Short = {set(s) or '{}'}")


def cmd_core(cfg: RunConfig) -> Report:
    m = _matching(cfg.args["matching"])
    r = bijection.reduce(m)
    data = {"op": "bijection.reduce", "matching": str(m), "core": str(r.core), "stable": list(r.stable),
            "unstable_chords": [list(c) for c in r.unstable_chords], "k": r.k}
    row = {"matching": str(m), "core": str(r.core), "stable": " ".join(map(str, r.stable)), "k": r.k}
    return Report(data, [row], f"core {r.core}\nstable {list(r.stable)}")


def cmd_forward(cfg: RunConfig) -> Report:
    m = _matching(cfg.args["matching"])
    core, t = bijection.forward(m)
    data = {"op": "bijection.forward", "matching": str(m), "core": str(core), "tableau": str(t),
            "shape": list(t.shape), "descents": _sets(tableaux.descent_set(t))}
    return Report(data, [{"matching": str(m), "core": str(core), "tableau": str(t)}], f"{core}\n{t}")


def cmd_inverse(cfg: RunConfig) -> Report:
    core = _matching(cfg.args["core"])
    try:
        if cfg.args.get("row2") is not None:
            n = cfg.args.get("N")
            if n is None:
                raise CliError("--row2 needs --N (total vertex count)")
            row2 = [int(x) for x in cfg.args["row2"].split(",") if x.strip()]
            t = tableaux.two_row_tableau(n, row2)
        elif cfg.args.get("tableau"):
            t = tableaux.parse_tableau(cfg.args["tableau"])
        else:
            raise CliError("give a tableau such as 1,2,3/4 or --row2 with --N")
        m = bijection.inverse(core, t)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    data = {"op": "bijection.inverse", "core": str(core), "tableau": str(t), "matching": str(m)}
    return Report(data, [{"core": str(core), "tableau": str(t), "matching": str(m)}], str(m))


def cmd_classes(cfg: RunConfig) -> Report:
    n, f = cfg.args["N"], cfg.args["f"]
    _guard_n(cfg, n, f)
    infos = knuth.knuth_classes(n, f)
    rows = [{"core": str(c.core), "size": c.size, "shape": ",".join(map(str, c.shape))} for c in infos]
    data = {"op": "knuth.knuth_classes", "N": n, "f": f, "classes": [
        {"core": str(c.core), "size": c.size, "shape": list(c.shape),
         "generating_function": str(knuth.class_generating_function(c.members))} for c in infos]}
    return Report(data, rows, "\n".join(f"{r['core']}  size {r['size']}  s[{r['shape']}]" for r in rows))


def _parse_shape(text: str) -> tuple[int, ...]:
    try:
        shape = tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError:
        raise CliError(f"cannot read shape {text!r}") from None
    if not tableaux.is_partition(shape):
        raise CliError(f"{shape} is not a partition")
    return shape


def cmd_expand(cfg: RunConfig) -> Report:
    kind = cfg.args["set"]
    if kind == "matchings":
        n, f = cfg.args.get("N"), cfg.args.get("f")
        if n is None or f is None:
            raise CliError("--set matchings needs --N and --f")
        _guard_n(cfg, n, f)
        v = descent_vector(enumerate_matchings(n, f), short_mask, n)
        if cfg.args.get("complement"):
            v = complement_vector(v)
        source = {"set": "matchings", "N": n, "f": f, "statistic": "complement" if cfg.args.get("complement") else "short"}
    else:
        if not cfg.args.get("shape"):
            raise CliError("--set shape needs --shape, e.g. 4,2")
        shape = _parse_shape(cfg.args["shape"])
        _guard_n(cfg, sum(shape))
        v = tableaux.descent_vector_of_shape(shape)
        source = {"set": "shape", "shape": list(shape)}
    e = schur_expand(v)
    crit = sparse_criterion_vector(v)
    data = {"op": "symfunc.schur_expand", "source": source, **_expansion_json(e),
            "sparse_criterion": {"holds": crit.holds, "coefficients": list(crit.coefficients)}}
    rows = [{"shape": ",".join(map(str, c["shape"])), "coefficient": c["c"]} for c in data.get("coeffs") or []]
    return Report(data, rows, str(e) if isinstance(e, SchurExpansion) else "not symmetric")


def cmd_bessel(cfg: RunConfig) -> Report:
    n = cfg.args["n"]
    if n < 0:
        raise CliError("n must be nonnegative")
    theta = bessel.bessel_theta(n)
    h = bessel.h_vector(n)
    h = list(h) + [0] * (n + 1 - len(h))
    data = {"op": "bessel.bessel_theta / bessel.shift_expand", "n": n, "theta": str(theta),
            "theta_coeffs": list(theta.coeffs), "h": h}
    if 2 * n <= (verify.HARD_MAX_N if cfg.max_n is None else cfg.max_n):
        data["h_brute_force"] = list(bessel.short_chord_distribution(n))
    rows = [{"i": i, "h": c} for i, c in enumerate(h)]
    return Report(data, rows, f"theta_{n}(x) = {theta}\nh(P_{2 * n}) = {tuple(h)}")


def cmd_avoid(cfg: RunConfig) -> Report:
    n, f = cfg.args["N"], cfg.args["f"]
    _guard_n(cfg, n, f)
    pats = [_matching(p) for p in cfg.args.get("pattern") or []]
    keep = patterns.avoiders(n, f, pats)
    e = schur_expand(descent_vector(keep, short_mask, n))
    data = {"op": "patterns.avoiders", "N": n, "f": f, "patterns": [str(p) for p in pats],
            "count": len(keep), **_expansion_json(e)}
    rows = [{"matching": str(m)} for m in keep]
    return Report(data, rows, f"{len(keep)} avoiders; {e if isinstance(e, SchurExpansion) else 'not symmetric'}")


def _key_text(value) -> str:
    return "-".join(map(str, value)) if isinstance(value, tuple) else str(value)


def cmd_refine(cfg: RunConfig) -> Report:
    n, f, key = cfg.args["N"], cfg.args["f"], cfg.args["key"]
    _guard_n(cfg, n, f)
    try:
        cells = patterns.refine_by(n, f, key)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    sizes = patterns.cell_sizes(n, f, key)
    out, rows = [], []
    for value, e in cells.items():
        out.append({"value": _key_text(value), "size": sizes[value], **_expansion_json(e)})
        rows.append({"value": _key_text(value), "size": sizes[value],
                     "expansion": str(e) if isinstance(e, SchurExpansion) else "", "schur_positive":
                     isinstance(e, SchurExpansion) and e.is_schur_positive})
    data = {"op": "patterns.refine_by", "N": n, "f": f, "key": key, "cells": out}
    return Report(data, rows, "\n".join(f"{r['value']}: {r['expansion']}" for r in rows))


def cmd_schreier(cfg: RunConfig) -> Report:
    n2 = cfg.args["n2"]
    _guard_2n(cfg, n2)
    try:
        g = schreier.build_graph(n2, max_2n=verify.HARD_MAX_2N)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if cfg.args.get("export") == "dot":
        return Report({}, [], schreier.to_dot(g, loops=cfg.args.get("loops", False)))
    data = {"op": "schreier.build_graph", "2n": n2, "vertices": g.size, "layer_sizes": g.layer_sizes(),
            "bipartite_ignoring_loops": g.is_bipartite_ignoring_loops(), "graded": g.is_graded()}
    rows = [{"layer": i, "size": s} for i, s in enumerate(g.layer_sizes())]
    return Report(data, rows, f"{g.size} vertices, layers {g.layer_sizes()}")


def cmd_conjecture(cfg: RunConfig) -> Report:
    n2 = cfg.args["n2"]
    _guard_2n(cfg, n2)
    try:
        res = schreier.check_conjecture(n2, max_2n=verify.HARD_MAX_2N)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    data = {"op": "schreier.check_conjecture", "2n": n2, "equidistributed": res.equidistributed,
            "asc": _expansion_json(res.asc_expansion), "des": _expansion_json(res.des_expansion)}
    rows = [{"statistic": name, "expansion": d["expansion"] or "", "schur_positive": d.get("schur_positive", False)}
            for name, d in (("asc", data["asc"]), ("des", data["des"]))]
    text = f"equidistributed: {res.equidistributed}\nAsc: {res.asc_expansion}\nDes: {res.des_expansion}"
    return Report(data, rows, text)


def cmd_verify(cfg: RunConfig) -> Report:
    try:
        vc = verify.RunConfig(max_n=cfg.max_n, max_2n=cfg.max_2n, seed=cfg.seed, threads=cfg.threads,
                              timings=cfg.timings, checks=tuple(cfg.args.get("check") or ()))
        data = verify.run_verify_all(vc)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    rows = [{"check": c["name"], "criterion": c["criterion"], "passed": c["passed"],
             "counts": json.dumps(c["counts"], sort_keys=True)} for c in data["checks"]]
    text = "\n".join(f"{'PASS' if c['passed'] else 'FAIL'} {c['criterion']} {c['name']} {c['counts']}"
                     for c in data["checks"])
    return Report(data, rows, text, EXIT_OK if data["passed"] else EXIT_FAIL)


COMMANDS: dict[str, Callable[[RunConfig], Report]] = {
    "enumerate": cmd_enumerate,
    "short": cmd_short,
    "core": cmd_core,
    "forward": cmd_forward,
    "inverse": cmd_inverse,
    "classes": cmd_classes,
    "expand": cmd_expand,
    "bessel": cmd_bessel,
    "avoid": cmd_avoid,
    "refine": cmd_refine,
    "schreier": cmd_schreier,
    "conjecture": cmd_conjecture,
    "verify": cmd_verify,
}


def prepare_cache(path: str | None) -> Path | None:
    """Create and probe the cache directory; raise CliError if it is unusable."""
    path = path or os.environ.get(tableaux.CACHE_ENV)
    if not path:
        tableaux.set_cache_dir(None)
        return None
    root = Path(path)
    try:
        root.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(dir=root, prefix=".probe-"):
            pass
    except OSError as exc:
        raise CliError(f"cache directory {path!r} is not writable: {exc.strerror or exc}") from None
    tableaux.set_cache_dir(root)
    return root


def run_single(cfg: RunConfig) -> Report:
    """Dispatch one command; parse errors and bound violations become CliError."""
    if cfg.command not in COMMANDS:
        raise CliError(f"unknown command {cfg.command!r}")
    if cfg.max_n is not None and cfg.max_n > verify.HARD_MAX_N:
        raise CliError(f"--max-n {cfg.max_n} exceeds the hard limit {verify.HARD_MAX_N}")
    if cfg.max_2n is not None and cfg.max_2n > verify.HARD_MAX_2N:
        raise CliError(f"--max-2n {cfg.max_2n} exceeds the hard limit {verify.HARD_MAX_2N}")
    prepare_cache(cfg.cache_dir)
    return COMMANDS[cfg.command](cfg)


def run_verify_all(cfg: RunConfig) -> Report:
    prepare_cache(cfg.cache_dir)
    return cmd_verify(cfg)


def render(report: Report, fmt: str) -> str:
    if fmt == "text" or not report.data:
        return report.text if report.text.endswith("\n") else report.text + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if report.rows:
            writer = csv.DictWriter(buf, fieldnames=list(report.rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(report.rows)
        return buf.getvalue()
    return json.dumps(report.data, sort_keys=True, indent=2) + "\n"


def _threads(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'auto', got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("thread count must be positive")
    return value


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--cache-dir", default=d(None), help=f"shape cache directory (env {tableaux.CACHE_ENV})")
    parser.add_argument("--threads", type=_threads, default=d(1), help="worker processes, or 'auto'")
    parser.add_argument("--format", dest="output_format", choices=("json", "csv", "text"), default=d("json"))
    parser.add_argument("--seed", type=int, default=d(0))
    parser.add_argument("--max-n", type=int, default=d(None), help=f"N bound (hard limit {verify.HARD_MAX_N})")
    parser.add_argument("--max-2n", type=int, default=d(None), help=f"2n bound (hard limit {verify.HARD_MAX_2N})")
    parser.add_argument("--timings", action="store_true", default=d(False), help="add wall times to verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shortchords", description="Short chords in matchings: exact experiments.")
    _global_flags(parser, suppress=False)
    flags = argparse.ArgumentParser(add_help=False)
    _global_flags(flags, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_, parents=[flags])

    p = add("enumerate", "list M_{N,f}")
    p.add_argument("N", type=int)
    p.add_argument("f", type=int)
    for name, help_ in (("short", "short chord set"), ("core", "core and stable set"),
                        ("forward", "core and tableau")):
        add(name, help_).add_argument("matching")
    p = add("inverse", "rebuild a matching from a core and a tableau")
    p.add_argument("core")
    p.add_argument("tableau", nargs="?", help="rows separated by '/', e.g. 1,2,3/4,5")
    p.add_argument("--row2", help="second row of a two-row tableau, e.g. 4,5")
    p.add_argument("--N", type=int)
    p = add("classes", "Knuth-like equivalence classes of M_{N,f}")
    p.add_argument("N", type=int)
    p.add_argument("f", type=int)
    p = add("expand", "Schur expansion of a descent generating function")
    p.add_argument("--set", choices=("matchings", "shape"), default="matchings")
    p.add_argument("--N", type=int)
    p.add_argument("--f", type=int)
    p.add_argument("--shape")
    p.add_argument("--complement", action="store_true", help="use [N-1] minus Short")
    add("bessel", "theta_n and the short chord distribution").add_argument("n", type=int)
    p = add("avoid", "matchings avoiding patterns")
    p.add_argument("N", type=int)
    p.add_argument("f", type=int)
    p.add_argument("--pattern", action="append", default=[])
    p = add("refine", "split M_{N,f} by an intersection statistic")
    p.add_argument("N", type=int)
    p.add_argument("f", type=int)
    p.add_argument("--key", choices=sorted(patterns.REFINEMENT_KEYS), required=True)
    p = add("schreier", "Schreier graph of PM_2n")
    p.add_argument("n2", type=int, metavar="2n")
    p.add_argument("--export", choices=("dot",))
    p.add_argument("--loops", action="store_true", help="keep loops in the DOT export")
    add("conjecture", "compare Asc and Des over PM_2n").add_argument("n2", type=int, metavar="2n")
    p = add("verify", "run the exhaustive verification suite")
    p.add_argument("--check", action="append", choices=sorted(verify.CHECKS))
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    common = {"command", "cache_dir", "threads", "output_format", "seed", "max_n", "max_2n", "timings"}
    args = {k: v for k, v in vars(ns).items() if k not in common}
    return RunConfig(command=ns.command, args=args, cache_dir=ns.cache_dir, threads=ns.threads,
                     output_format=ns.output_format, seed=ns.seed, max_n=ns.max_n, max_2n=ns.max_2n,
                     timings=ns.timings)


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = config_from_args(ns)
    try:
        report = run_single(cfg)
    except CliError as exc:
        print(f"shortchords: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(report, cfg.output_format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())

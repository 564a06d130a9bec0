"""Exhaustive verification suite behind ``shortchords verify``.

Each check enumerates every object up to its bounds and returns a plain dict
(JSON-ready, deterministic for a given configuration and seed).  Timings are
kept out of the dict unless asked for, so reports compare byte for byte.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bessel, bijection, knuth, patterns, schreier
from .descents import DescentVector
from .matchings import (
    Matching,
    count_matchings,
    double_factorial,
    enumerate_all,
    enumerate_matchings,
    short_mask,
)
from .symfunc import (
    SchurExpansion,
    descent_vector,
    hook_criterion_vector,
    hook_shape,
    is_symmetric_by_compositions,
    schur_expand,
    sparse_criterion_vector,
)
from .tableaux import descent_mask, descent_vector_of_shape, enumerate_syt

HARD_MAX_N = 16
HARD_MAX_2N = 14
MAX_FAILURES = 5

DEFAULT_BOUNDS = {
    "two_row": 12,
    "sparse": 10,
    "bijection": 12,
    "bijection_random": 9,
    "knuth": 9,
    "bessel_n": 7,
    "bessel_N": 12,
    "pattern_size": 5,
    "pattern_ambient": 9,
    "refine": 9,
    "schreier_2n": 12,
    "hook": 8,
}


class BoundError(ValueError):
    pass


@dataclass
class RunConfig:
    max_n: int | None = None
    max_2n: int | None = None
    seed: int = 0
    threads: int = 1
    random_orders: int = 20
    timings: bool = False
    checks: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.max_n is not None and self.max_n > HARD_MAX_N:
            raise BoundError(
                f"--max-n {self.max_n} exceeds the hard limit {HARD_MAX_N}; "
                f"a full sweep would enumerate {sum(count_matchings(self.max_n, f) for f in range(self.max_n + 1))} "
                f"matchings at N={self.max_n} alone")
        if self.max_2n is not None and self.max_2n > HARD_MAX_2N:
            raise BoundError(
                f"--max-2n {self.max_2n} exceeds the hard limit {HARD_MAX_2N}; "
                f"the graph would have {double_factorial(self.max_2n - 1)} vertices")
        if self.threads < 1:
            raise BoundError("--threads must be positive")

    def bound(self, name: str) -> int:
        """Default bound for a check, capped by --max-n / --max-2n."""
        b = DEFAULT_BOUNDS[name]
        if name == "schreier_2n":
            return b if self.max_2n is None else self.max_2n
        if self.max_n is None:
            return b
        return min(b, self.max_n // 2 if name == "bessel_n" else self.max_n)


def _report(name, criterion, op, bounds, failures, counts, **extra) -> dict:
    out = {
        "name": name,
        "criterion": criterion,
        "passed": not failures,
        "provenance": {"op": op, "bounds": bounds},
        "counts": counts,
        "failures": failures[:MAX_FAILURES],
    }
    out.update(extra)
    return out


def _valid_f(n: int):
    return range(n % 2, n + 1, 2)


def _two_row(n: int, k: int) -> tuple[int, ...]:
    return tuple(p for p in (n - k, k) if p)


def check_two_row(cfg: RunConfig) -> dict:
    """Schur expansion of M_{N,f} under Short, against the short-chord-free counts."""
    top = cfg.bound("two_row")
    failures, table = [], []
    checked = 0
    for n in range(top + 1):
        for f in _valid_f(n):
            v = descent_vector(enumerate_matchings(n, f), short_mask, n)
            result = schur_expand(v)
            expected = {_two_row(n, k): bessel.short_free_count(n - 2 * k, f) for k in range((n - f) // 2 + 1)}
            expected = SchurExpansion(n, expected)
            checked += 1
            if not isinstance(result, SchurExpansion):
                failures.append(f"M_{n},{f}: not symmetric")
                continue
            if not result.is_schur_positive or not result.is_two_row() or result != expected:
                failures.append(f"M_{n},{f}: got {result}, expected {expected}")
            table.append({"N": n, "f": f, "expansion": str(result), "coeffs": result.to_dict()["coeffs"]})
    return _report("two_row", 1, "symfunc.schur_expand(descent_vector(M_{N,f}, short_set))",
                   {"N": top}, failures, {"cells": checked}, expansions=table)


def check_sparse(cfg: RunConfig) -> dict:
    """Sparse two-row criterion in both directions, plus rejected negatives."""
    top = cfg.bound("sparse")
    failures = []
    cells = 0
    for n in range(top + 1):
        for f in _valid_f(n):
            v = descent_vector(enumerate_matchings(n, f), short_mask, n)
            crit = sparse_criterion_vector(v)
            result = schur_expand(v)
            cells += 1
            if not crit.holds:
                failures.append(f"M_{n},{f}: criterion fails ({crit.reason})")
            if not isinstance(result, SchurExpansion) or not result.is_two_row():
                failures.append(f"M_{n},{f}: expansion is not two-row")
                continue
            got = tuple(result[_two_row(n, k)] for k in range(n // 2 + 1))
            if got != crit.coefficients:
                failures.append(f"M_{n},{f}: criterion coefficients {crit.coefficients} vs expansion {got}")
            if is_symmetric_by_compositions(v) != isinstance(result, SchurExpansion):
                failures.append(f"M_{n},{f}: symmetry tests disagree")
    negatives = [
        ("single {1} at N=3", DescentVector.from_sets(3, {(1,): 1})),
        ("superset counts vary at N=4", DescentVector.from_sets(4, {(): 1, (1,): 1, (3,): 2})),
        ("Syt(2,1,1)", descent_vector_of_shape((2, 1, 1))),
    ]
    for label, v in negatives:
        crit = sparse_criterion_vector(v)
        result = schur_expand(v)
        two_row = isinstance(result, SchurExpansion) and result.is_two_row()
        if crit.holds or two_row:
            failures.append(f"negative instance {label} was accepted")
        if is_symmetric_by_compositions(v) != isinstance(result, SchurExpansion):
            failures.append(f"negative instance {label}: symmetry tests disagree")
    return _report("sparse", 2, "symfunc.sparse_criterion vs symfunc.schur_expand",
                   {"N": top}, failures, {"cells": cells, "negatives": len(negatives)})


def check_bijection(cfg: RunConfig) -> dict:
    top, rtop = cfg.bound("bijection"), cfg.bound("bijection_random")
    rng = random.Random(cfg.seed)
    failures = []
    forward_count = backward_count = random_count = 0
    for n in range(top + 1):
        for m in enumerate_all(n):
            core, t = bijection.forward(m)
            forward_count += 1
            if descent_mask(t) != short_mask(m):
                failures.append(f"Des(T(m)) != Short(m) for {m}")
            if bijection.inverse(core, t) != m:
                failures.append(f"inverse(forward(m)) != m for {m}")
            if n <= rtop:
                base = bijection.reduce(m)
                for _ in range(cfg.random_orders):
                    other = bijection.reduce(m, rng)
                    random_count += 1
                    if (other.core, other.stable) != (base.core, base.stable):
                        failures.append(f"reduction depends on order for {m}")
                        break
        for f in _valid_f(n):
            for k in range((n - f) // 2 + 1):
                cores = [c for c in enumerate_matchings(n - 2 * k, f) if not short_mask(c)]
                if not cores:
                    continue
                for t in enumerate_syt(_two_row(n, k)):
                    for c in cores:
                        backward_count += 1
                        if bijection.forward(bijection.inverse(c, t)) != (c, t):
                            failures.append(f"forward(inverse) fails for core {c}, T={t}")
    return _report("bijection", 3, "bijection.forward / bijection.inverse / bijection.reduce",
                   {"N": top, "N_random": rtop, "orders": cfg.random_orders, "seed": cfg.seed},
                   failures, {"forward": forward_count, "backward": backward_count, "random_reductions": random_count})


def check_knuth(cfg: RunConfig) -> dict:
    top = cfg.bound("knuth")
    failures = []
    classes = 0
    for n in range(top + 1):
        for f in _valid_f(n):
            fibres: dict[Matching, set] = {}
            for m in enumerate_matchings(n, f):
                fibres.setdefault(bijection.reduce(m).core, set()).add(m)
            infos = knuth.knuth_classes(n, f)
            classes += len(infos)
            if len(infos) != len(fibres):
                failures.append(f"M_{n},{f}: {len(infos)} classes vs {len(fibres)} core fibres")
            for info in infos:
                if fibres.get(info.core) != set(info.members):
                    failures.append(f"M_{n},{f}: class of core {info.core} differs from its fibre")
                gf = knuth.class_generating_function(info.members)
                if gf != SchurExpansion(n, {info.shape: 1}):
                    failures.append(f"class of core {info.core}: generating function {gf}")
    return _report("knuth", 4, "knuth.equivalence_class vs bijection.reduce",
                   {"N": top}, failures, {"classes": classes})


def check_bessel(cfg: RunConfig) -> dict:
    nb, top = cfg.bound("bessel_n"), cfg.bound("bessel_N")
    failures = []
    table = []
    for n in range(nb + 1):
        h = bessel.short_chord_distribution(n)
        shifted = bessel.shift_expand(bessel.bessel_theta(n), -1).coeffs
        if tuple(shifted) != h:
            failures.append(f"theta_{n}(x-1) = {shifted} but brute force gives {h}")
        if sum(h) != double_factorial(2 * n - 1):
            failures.append(f"sum of h(P_{2 * n}) = {sum(h)} != {double_factorial(2 * n - 1)}")
        table.append({"n": n, "h": list(h)})
    for n in range(top + 1):
        for f in _valid_f(n):
            via = bessel.schur_coeffs_via_bessel(n, f)
            direct = tuple(bessel.short_free_count(n - 2 * k, f) for k in range((n - f) // 2 + 1))
            if via != direct:
                failures.append(f"(N,f)=({n},{f}): Bessel {via} vs counts {direct}")
    return _report("bessel", 5, "bessel.shift_expand(bessel_theta) vs bessel.short_chord_distribution",
                   {"n": nb, "N": top}, failures, {"h_vectors": len(table)}, h=table)


def check_patterns(cfg: RunConfig) -> dict:
    size, ambient = cfg.bound("pattern_size"), cfg.bound("pattern_ambient")
    failures = []
    pool = {n: [(f, list(enumerate_matchings(n, f))) for f in _valid_f(n)] for n in range(ambient + 1)}
    checked = 0
    verdicts = []
    for k in range(size + 1):
        for pat in enumerate_all(k):
            positive = True
            witness = None
            for n in range(ambient + 1):
                for f, ms in pool[n]:
                    keep = [m for m in ms if not patterns.contains_pattern(m, pat)]
                    result = schur_expand(descent_vector(keep, short_mask, n))
                    if not isinstance(result, SchurExpansion) or not result.is_schur_positive:
                        positive = False
                        witness = (n, f)
                        break
                if not positive:
                    break
            checked += 1
            predicted = patterns.singleton_pattern_schur_positive(pat)
            if predicted != positive:
                failures.append(f"pattern {pat}: predicted {predicted}, exhaustive {positive}")
            verdicts.append({"pattern": str(pat), "schur_positive": positive,
                             "witness": list(witness) if witness else None})
    return _report("patterns", 6, "patterns.avoiders + symfunc.schur_expand vs singleton_pattern_schur_positive",
                   {"pattern_N": size, "ambient_N": ambient}, failures, {"patterns": checked}, verdicts=verdicts)


def check_refinements(cfg: RunConfig) -> dict:
    top = cfg.bound("refine")
    failures = []
    cells = moves = 0
    for n in range(top + 1):
        for f in _valid_f(n):
            for key in patterns.REFINEMENT_KEYS:
                for value, result in patterns.refine_by(n, f, key).items():
                    cells += 1
                    if not isinstance(result, SchurExpansion) or not result.is_schur_positive:
                        failures.append(f"M_{n},{f} key {key}={value}: {result}")
            for m in enumerate_matchings(n, f):
                label = patterns.intersection_graph(m).canonical_label
                for other in knuth.elementary_moves(m):
                    moves += 1
                    if patterns.intersection_graph(other).canonical_label != label:
                        failures.append(f"move {m} -> {other} changes the intersection graph")
    return _report("refinements", 7, "patterns.refine_by + knuth.elementary_moves",
                   {"N": top, "keys": list(patterns.REFINEMENT_KEYS)}, failures, {"cells": cells, "moves": moves})


def check_schreier(cfg: RunConfig) -> dict:
    top = cfg.bound("schreier_2n")
    failures = []
    table = []
    for n2 in range(0, top + 1, 2):
        g = schreier.build_graph(n2, max_2n=HARD_MAX_2N)
        if not g.is_bipartite_ignoring_loops():
            failures.append(f"2n={n2}: not bipartite")
        if not g.is_graded():
            failures.append(f"2n={n2}: an edge skips or stays in a layer")
        asc, des, loop = schreier.stat_masks(g)
        for idx, m in enumerate(g.vertices):
            if int(loop[idx]) != short_mask(m):
                failures.append(f"2n={n2}: Loop != Short at {m}")
                break
            inv = 0
            for i in schreier.involution_ascents(m):
                inv |= 1 << (i - 1)
            if int(asc[idx]) != inv:
                failures.append(f"2n={n2}: Asc differs from involution ascents at {m}")
                break
        res = schreier.check_conjecture(n2, g)
        if not res.equidistributed:
            failures.append(f"2n={n2}: Asc and Des are not equidistributed")
        if not res.asc_schur_positive:
            failures.append(f"2n={n2}: Asc is not Schur-positive")
        if not res.des_schur_positive:
            failures.append(f"2n={n2}: Des is not Schur-positive")
        table.append({"2n": n2, "vertices": g.size, "layers": g.layer_sizes(),
                      "equidistributed": res.equidistributed, "des_expansion": str(res.des_expansion)})
    return _report("schreier", 8, "schreier.build_graph + schreier.check_conjecture",
                   {"2n": top}, failures, {"graphs": len(table)}, graphs=table)


def check_hook(cfg: RunConfig) -> dict:
    top = cfg.bound("hook")
    rng = random.Random(cfg.seed)
    failures = []
    cases = 0
    for n in range(1, top + 1):
        everything = list(range(1 << (n - 1)))
        crit = hook_criterion_vector(descent_vector(everything, lambda s: s, n))
        expansion = schur_expand(descent_vector(everything, lambda s: s, n))
        cases += 1
        if not crit.holds or crit.coefficients != (1,) * n:
            failures.append(f"N={n}: all subsets once gives {crit}")
        if expansion != SchurExpansion(n, {hook_shape(n, k): 1 for k in range(n)}):
            failures.append(f"N={n}: all subsets once expands to {expansion}")
        for _ in range(3):
            cs = tuple(rng.randrange(0, 4) for _ in range(n))
            v = DescentVector(n)
            for k, c in enumerate(cs):
                v = v + descent_vector_of_shape(hook_shape(n, k)) * c
            crit = hook_criterion_vector(v)
            expansion = schur_expand(v)
            cases += 1
            if not crit.holds or crit.coefficients != cs:
                failures.append(f"N={n}: synthetic {cs} gives {crit}")
            if expansion != SchurExpansion(n, {hook_shape(n, k): c for k, c in enumerate(cs)}):
                failures.append(f"N={n}: synthetic {cs} expands to {expansion}")
    return _report("hook", 9, "symfunc.hook_criterion vs symfunc.schur_expand",
                   {"N": top, "seed": cfg.seed}, failures, {"cases": cases})


CHECKS = {
    "two_row": check_two_row,
    "sparse": check_sparse,
    "bijection": check_bijection,
    "knuth": check_knuth,
    "bessel": check_bessel,
    "patterns": check_patterns,
    "refinements": check_refinements,
    "schreier": check_schreier,
    "hook": check_hook,
}


def _run_one(args: tuple[str, RunConfig]) -> tuple[dict, float]:
    name, cfg = args
    start = time.perf_counter()
    out = CHECKS[name](cfg)
    return out, time.perf_counter() - start


def run_verify_all(cfg: RunConfig) -> dict:
    """Run every selected check; ``passed`` is true iff all of them pass."""
    names = list(cfg.checks) or list(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; choose from {list(CHECKS)}")
    jobs = [(n, cfg) for n in names]
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    checks = []
    for out, seconds in results:
        if cfg.timings:
            out = dict(out, seconds=round(seconds, 3))
        checks.append(out)
    return {
        "passed": all(c["passed"] for c in checks),
        "config": {"max_n": cfg.max_n, "max_2n": cfg.max_2n, "seed": cfg.seed,
                   "random_orders": cfg.random_orders},
        "checks": checks,
    }

"""Run named checks over graph catalogs and aggregate the verdicts."""

from __future__ import annotations

import csv
import json
import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import chromatic, logderiv, monotonicity, roots
from .graph import (Graph, enumerate_labeled_graphs, generate, max_degree, read_graph6_file,
                    structural_queries, to_graph6)
from .poly import IntPolynomial


class SuiteError(ValueError):
    """Bad suite configuration, raised before any work starts."""


@dataclass(frozen=True)
class SuiteParams:
    k_values: tuple = (2, 3, 4)
    orderings: int = 20
    samples: int = 10
    window_points: int = 50
    use_claw_free: bool = False


@dataclass
class VerificationReport:
    check: str
    graph6: str
    parameters: dict
    verdict: str  # "pass" | "fail" | "skip"
    witness: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def key(self) -> tuple:
        """Everything except timing; used for canonical ordering and equality."""
        return (self.check, self.graph6, json.dumps(self.parameters, sort_keys=True),
                self.verdict, json.dumps(self.witness, sort_keys=True))

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _frac(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)


def _skip(reason: str) -> tuple[str, dict]:
    return "skip", {"reason": reason}


def _caps(g: Graph) -> str | None:
    if g.n > chromatic.MAX_ENGINE_ORDER:
        return f"cap: n > {chromatic.MAX_ENGINE_ORDER}"
    return None


# checks ------------------------------------------------------------------------------

def check_oracle_eq(g, params, seed):
    if g.m > chromatic.MAX_SUBSET_EDGES:
        return _skip(f"cap: |E| > {chromatic.MAX_SUBSET_EDGES}")
    p = chromatic.chromatic_deletion_contraction(g)
    ie = chromatic.chromatic_inclusion_exclusion(g)
    bc = chromatic.chromatic_broken_cycle(g)
    eta_ok = chromatic.eta_independent(g, params.orderings, seed)
    evals_ok = True
    checked = []
    for q in range(g.n + 2):
        if q ** g.n > chromatic.ENUMERATION_BUDGET:
            break
        checked.append(q)
        if chromatic.count_colorings_bruteforce(g, q) != p(q):
            evals_ok = False
    ok = p == ie == bc and eta_ok and evals_ok
    witness = {"dc": [str(c) for c in p.coeffs], "ie_equal": p == ie, "bc_equal": p == bc,
               "eta_independent": eta_ok, "bruteforce_q": checked, "bruteforce_equal": evals_ok}
    return ("pass" if ok else "fail"), witness


def check_lemma22(g, params, seed):
    s = structural_queries(g)
    c = monotonicity.laurent_coeffs(g, 2)
    ok = c[1] == -s.edge_count and c[2] == -s.triangle_count - Fraction(s.edge_count, 2)
    return ("pass" if ok else "fail"), {"c1": _frac(c[1]), "c2": _frac(c[2]),
                                        "m": s.edge_count, "t": s.triangle_count}


def check_thm13(g, params, seed):
    p = chromatic.chromatic_polynomial(g)
    delta = max_degree(g)
    tight = None
    failures = []
    for x in monotonicity.thm13_sample_points(delta, params.samples):
        lhs, rhs = monotonicity.ratio_inequality_poly(p, g.n, x)
        if lhs < rhs:
            failures.append(_frac(x))
        # rhs > 0 beyond the threshold; keep the smallest relative margin
        rel = Fraction(lhs - rhs, rhs)
        if tight is None or rel < tight[0]:
            tight = (rel, x, lhs, rhs)
    _, x, lhs, rhs = tight
    witness = {"delta": delta, "x": _frac(x), "lhs_digits": str(lhs), "rhs_digits": str(rhs),
               "margin_digits": str(lhs - rhs), "failures": failures}
    return ("fail" if failures else "pass"), witness


def check_shameful(g, params, seed):
    n = g.n
    p = chromatic.chromatic_polynomial(g)
    holds = monotonicity.shameful_holds(p, n)
    ratio = monotonicity.shameful_ratio(p, n) if n >= 1 else None
    seymour = ratio is None or ratio >= monotonicity.SEYMOUR_BOUND
    witness = {"n": n, "ratio": None if ratio is None else _frac(ratio),
               "lhs_digits": str((n - 1) ** n * p(n)), "rhs_digits": str(n ** n * p(n - 1))}
    return ("pass" if holds and seymour else "fail"), witness


def check_lemma24(g, params, seed):
    s = structural_queries(g)
    if not s.is_connected or s.is_tree:
        return _skip("not applicable: needs a connected graph that is not a tree")
    p = chromatic.chromatic_polynomial(g)
    rs = roots.find_roots(p)
    x_zero = monotonicity.x0(rs.rho)
    xs = lemma24_samples(x_zero, params.samples)
    signs = [monotonicity.fprime_sign_poly(p, x) for x in xs]
    ok = all(v > 0 for v in signs) and rs.max_residual <= roots.DEFAULT_TOL
    return ("pass" if ok else "fail"), {"rho": rs.rho, "x0": x_zero, "max_residual": rs.max_residual,
                                        "samples": [_frac(x) for x in xs], "signs": signs}


def lemma24_samples(x_zero: float, count: int = 10) -> list[Fraction]:
    """``count`` points spread over (x0 + 0.01, x0 + 50]."""
    start = Fraction(math.floor((x_zero + 0.01) * 100) + 1, 100)
    step = Fraction(45, max(count - 1, 1))
    return [start + j * step for j in range(count)]


def _threshold_check(g, params, which):
    p = chromatic.chromatic_polynomial(g)
    delta = max_degree(g)
    claw = params.use_claw_free and structural_queries(g).is_claw_free
    per_k = {}
    ok = True
    for k in params.k_values:
        if which == "thm33":
            T = logderiv.thm33_threshold(delta, k, claw)
        else:
            T = logderiv.thm15_threshold(delta, k)
        v = logderiv._verify_at(p, k, T, params.samples)
        nearest = logderiv.log_deriv_poly(p, k, v.samples[0])
        per_k[str(k)] = {"threshold": float(T), "first_x": _frac(v.samples[0]),
                         "value_at_first_x": float(nearest), "verdict": v.verdict}
        ok = ok and v.verdict
    return ("pass" if ok else "fail"), {"delta": delta, "claw_free_bound": claw, "k": per_k}


def check_thm33(g, params, seed):
    return _threshold_check(g, params, "thm33")


def check_thm15(g, params, seed):
    return _threshold_check(g, params, "thm15")


def _epsilon_n(p: IntPolynomial, n: int) -> Fraction:
    return n + logderiv.epsilon_poly(p, -1)


def check_epsilon_order(g, params, seed):
    if g.m > chromatic.MAX_SUBSET_EDGES:
        return _skip(f"cap: |E| > {chromatic.MAX_SUBSET_EDGES}")
    s = structural_queries(g)
    p = chromatic.chromatic_polynomial(g)
    eps = _epsilon_n(p, g.n)
    mean = logderiv.epsilon_mean_subgraph(g)
    witness = {"epsilon_roots": _frac(eps), "epsilon_subgraph": _frac(mean), "identity": eps == mean}
    ok = eps == mean
    complete = s.edge_count == g.n * (g.n - 1) // 2
    if s.is_connected and not s.is_tree and not complete:
        tree = _epsilon_n(chromatic.chromatic_polynomial(generate("path", g.n)), g.n)
        kn = _epsilon_n(chromatic.chromatic_polynomial(generate("complete", g.n)), g.n)
        ordered = tree < eps < kn
        witness.update(epsilon_tree=_frac(tree), epsilon_complete=_frac(kn), ordered=ordered)
        ok = ok and ordered
    return ("pass" if ok else "fail"), witness


def check_conj14_scan(g, params, seed):
    out = {}
    for k in params.k_values:
        grid = logderiv.window_grid(max_degree(g), k, params.window_points)
        scan = logderiv.conjecture_window_scan(g, k, grid)
        out[str(k)] = {"window": _frac(scan.window), "negative": scan.negatives,
                       "nonnegative": scan.nonnegatives, "poles": scan.poles}
    # exploratory: completion is the verdict, signs are only reported
    return "pass", {"k": out}


def check_cycle_roots(g, params, seed):
    s = structural_queries(g)
    if not (s.is_connected and g.n >= 3 and all(d == 2 for d in g.degrees)):
        return _skip("not applicable: not a cycle")
    rs = roots.find_roots(chromatic.chromatic_polynomial(g))
    err = match_roots(rs.roots, roots.cycle_roots_closed_form(g.n))
    rho_ok = abs(rs.rho - 2) <= 1e-9 if g.n % 2 else rs.rho < 2 - 1e-9
    ok = err <= 1e-9 and rho_ok
    return ("pass" if ok else "fail"), {"rho": rs.rho, "max_root_error": err}


def match_roots(found, expected) -> float:
    """Largest distance in a greedy nearest-neighbour matching."""
    pool = list(found)
    worst = 0.0
    for z in expected:
        j = min(range(len(pool)), key=lambda i: abs(pool[i] - z))
        worst = max(worst, abs(pool.pop(j) - z))
    return worst


CHECKS: dict[str, Callable] = {
    "oracle_eq": check_oracle_eq,
    "lemma22": check_lemma22,
    "thm13": check_thm13,
    "shameful": check_shameful,
    "lemma24": check_lemma24,
    "thm33": check_thm33,
    "thm15": check_thm15,
    "epsilon_order": check_epsilon_order,
    "conj14_scan": check_conj14_scan,
    "cycle_roots": check_cycle_roots,
}


# suite --------------------------------------------------------------------------------

@dataclass(frozen=True)
class Catalog:
    kind: str  # "generated" | "graph6_file" | "graphs"
    n: int = 0
    connected_only: bool = False
    path: str = ""
    graphs: tuple = ()

    @classmethod
    def generated(cls, n: int, connected_only: bool = False) -> Catalog:
        return cls("generated", n=n, connected_only=connected_only)

    @classmethod
    def graph6_file(cls, path) -> Catalog:
        return cls("graph6_file", path=str(path))

    @classmethod
    def of(cls, graphs: Iterable[Graph]) -> Catalog:
        return cls("graphs", graphs=tuple(graphs))

    def load(self) -> list[Graph]:
        if self.kind == "generated":
            return list(enumerate_labeled_graphs(self.n, self.connected_only))
        if self.kind == "graph6_file":
            try:
                return read_graph6_file(self.path)
            except OSError as exc:
                raise SuiteError(f"cannot read catalog {self.path}: {exc}") from exc
        if self.kind == "graphs":
            return list(self.graphs)
        raise SuiteError(f"unknown catalog kind {self.kind!r}")


def unit_seed(seed: int, index: int, check: str) -> int:
    return zlib.crc32(f"{seed}:{index}:{check}".encode())


def _params_dict(check: str, params: SuiteParams) -> dict:
    d = {}
    if check in ("thm33", "thm15", "conj14_scan"):
        d["k"] = list(params.k_values)
    if check in ("thm13", "lemma24", "thm33", "thm15"):
        d["samples"] = params.samples
    if check == "oracle_eq":
        d["orderings"] = params.orderings
    if check == "thm33":
        d["use_claw_free"] = params.use_claw_free
    if check == "conj14_scan":
        d["window_points"] = params.window_points
    return d


def run_unit(unit) -> VerificationReport:
    index, g, check, params, seed = unit
    t0 = time.perf_counter()
    cap = _caps(g)
    if cap:
        verdict, witness = _skip(cap)
    else:
        verdict, witness = CHECKS[check](g, params, unit_seed(seed, index, check))
    return VerificationReport(check, to_graph6(g), _params_dict(check, params), verdict, witness,
                              time.perf_counter() - t0)


def run_suite(catalog: Catalog, checks: list[str], params: SuiteParams = SuiteParams(),
              workers: int = 1, seed: int | None = None) -> Iterator[VerificationReport]:
    """One report per (graph, check), in catalog order."""
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise SuiteError(f"unknown check id(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    if seed is None:
        seed = logderiv.default_seed()
    graphs = catalog.load()
    units = [(i, g, c, params, seed) for i, g in enumerate(graphs) for c in checks]
    return _execute(units, workers)


def _execute(units, workers):
    if workers <= 1:
        for u in units:
            yield run_unit(u)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(run_unit, units, chunksize=max(1, len(units) // (workers * 8)))


def canonical(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=VerificationReport.key)


@dataclass
class Summary:
    counts: dict
    extremals: dict

    def to_dict(self) -> dict:
        return {"counts": self.counts, "extremals": self.extremals}

    @property
    def all_passed(self) -> bool:
        return all(c["fail"] == 0 for c in self.counts.values())


def summarize(reports: Iterable[VerificationReport]) -> Summary:
    counts: dict = {}
    ext: dict = {}
    for r in canonical(reports):
        c = counts.setdefault(r.check, {"pass": 0, "fail": 0, "skip": 0})
        c[r.verdict] += 1
        w = r.witness
        if r.check == "shameful" and w.get("ratio") is not None:
            ratio = Fraction(w["ratio"])
            best = ext.get("shameful_min_ratio")
            if best is None or ratio < Fraction(best["ratio"]):
                ext["shameful_min_ratio"] = {"ratio": w["ratio"], "float": float(ratio),
                                             "graph6": r.graph6,
                                             "at_least_685_252": ratio >= monotonicity.SEYMOUR_BOUND,
                                             "above_e": ratio > math.e}
        elif r.check == "thm13" and "margin_digits" in w:
            margin = int(w["margin_digits"])
            best = ext.get("thm13_min_margin")
            if best is None or margin < int(best["margin_digits"]):
                ext["thm13_min_margin"] = {"margin_digits": w["margin_digits"], "x": w["x"],
                                           "graph6": r.graph6, "nonnegative": margin >= 0}
        elif r.check in ("thm15", "thm33") and "k" in w:
            for k, info in w["k"].items():
                name = f"{r.check}_tightest"
                best = ext.get(name)
                if best is None or info["value_at_first_x"] > best["value"]:
                    ext[name] = {"value": info["value_at_first_x"], "k": int(k), "x": info["first_x"],
                                 "graph6": r.graph6}
    return Summary(counts, ext)


def write_jsonl(reports: Iterable[VerificationReport], path) -> int:
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for r in reports:
            fh.write(r.to_json() + "\n")
            n += 1
    return n


def read_jsonl(path) -> list[VerificationReport]:
    with open(path, encoding="utf-8") as fh:
        return [VerificationReport(**json.loads(line)) for line in fh if line.strip()]


def write_summary_csv(summary: Summary, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["check", "pass", "fail", "skip"])
        for check, c in sorted(summary.counts.items()):
            w.writerow([check, c["pass"], c["fail"], c["skip"]])
        w.writerow([])
        w.writerow(["extremal", "field", "value"])
        for name, info in sorted(summary.extremals.items()):
            for key, value in info.items():
                w.writerow([name, key, value])

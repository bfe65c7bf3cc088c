"""Theorem checker and verification campaigns.

Every analysis runs both pipelines (eigenvalues and the Coulson-type
integral) and classifies the graph against the k mod 4 sign trichotomy.
A sign disagreement *between* the pipelines is reported as a cross-check
failure, distinct from a theorem violation: it flags an artifact bug, not
a counterexample.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .coulson import QuadratureParams, ThetaClosedForm, delta_even, delta_integral, theta_closed
from .errors import BadParameters, TooLarge
from .graphs import (
    Graph,
    classify_unicyclic,
    cycle_graph,
    edge_bit_table,
    enumerate_unicyclic_masks,
    graph_from_mask,
    random_unicyclic,
)
from .matchpoly import (
    LEVERRIER_MAX_N,
    char_poly_leverrier,
    matching_counts,
    poly_from_matching_counts,
)
from .spectrum import eigenvalues_symmetric, square_energies, theta_eigen

THETA_GRID = (0.1, 0.5, 1.0, 2.0, 10.0)

TOLERANCES = {
    "even_sum_rel": 1e-8,       # |s+ - n| <= tol * n for even k
    "min_gap": 1e-9,            # strict inequalities need |delta| above this
    "crosscheck_rel": 1e-6,     # |delta_integral - delta_eigen| budget ...
    "crosscheck_abs": 1e-8,     # ... rel * max(1,|delta|) + abs
    "sum_identity_rel": 1e-8,   # |s+ + s- - 2n| <= tol * n
}

VERDICTS = ("CASE_EVEN_OK", "CASE_3MOD4_OK", "CASE_1MOD4_OK", "VIOLATION")

CSV_COLUMNS = ("graph_id", "n", "k", "residue", "s_plus", "s_minus",
               "delta_eigen", "delta_integral", "verdict")


@dataclass(frozen=True)
class AnalysisReport:
    graph_id: str
    n: int
    k: int
    residue: int
    s_plus: float
    s_minus: float
    delta_eigen: float
    delta_integral: float
    poly_identity_ok: bool | None  # None when the exact oracle is out of range
    theta_agreement: float | None  # None for even k (no closed form)
    delta_crosscheck: float
    sum_identity_gap: float
    crosscheck_ok: bool
    verdict: str
    tolerances: dict

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    def csv_row(self):
        return [getattr(self, c) for c in CSV_COLUMNS]


@dataclass
class CampaignSummary:
    graphs_tested: int
    violations: int
    crosscheck_failures: int
    worst_theta_agreement: float
    worst_delta_crosscheck: float
    worst_sum_identity_gap: float
    min_abs_delta_eigen: float
    wall_time: float
    parameters: dict

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.crosscheck_failures == 0

    def to_json(self) -> str:
        d = asdict(self)
        return json.dumps(d, separators=(",", ":"))


def graph_id(g: Graph) -> str:
    payload = f"{g.n}:" + ";".join(f"{u},{v}" for u, v in g.edges)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def analyze(g: Graph, qp: QuadratureParams | None = None) -> AnalysisReport:
    """Run both pipelines on a unicyclic graph and classify it."""
    d = classify_unicyclic(g)
    n, k = g.n, d.k
    spec = eigenvalues_symmetric(g)
    se = square_energies(spec)
    sum_gap = abs(se.s_plus + se.s_minus - 2.0 * n)

    counts_g = matching_counts(g)
    counts_f = matching_counts(d.forest)
    if n <= LEVERRIER_MAX_N:
        mu_g = poly_from_matching_counts(counts_g)
        mu_f = poly_from_matching_counts(counts_f)
        poly_ok = (mu_g - mu_f.scaled(2)) == char_poly_leverrier(g)
    else:
        poly_ok = None

    if k % 2 == 0:
        d_int = delta_even(k)
        theta_dev = None
    else:
        cf = ThetaClosedForm(counts_g, counts_f, k)
        d_int = delta_integral(cf, qp)
        theta_dev = max(abs(theta_closed(cf, t) - theta_eigen(spec, t))
                        for t in THETA_GRID)

    cross = abs(d_int - se.delta)
    cross_budget = (TOLERANCES["crosscheck_rel"] * max(1.0, abs(se.delta))
                    + TOLERANCES["crosscheck_abs"])
    crosscheck_ok = (cross <= cross_budget
                     and sum_gap <= TOLERANCES["sum_identity_rel"] * n
                     and poly_ok is not False)

    if k % 2 == 0:
        verdict = ("CASE_EVEN_OK"
                   if abs(se.s_plus - n) <= TOLERANCES["even_sum_rel"] * n
                   else "VIOLATION")
    else:
        expected = 1.0 if k % 4 == 3 else -1.0
        gap_ok = abs(se.delta) > TOLERANCES["min_gap"]
        signs_ok = (se.delta * expected > 0) and (d_int * expected > 0)
        verdict = ("CASE_3MOD4_OK" if k % 4 == 3 else "CASE_1MOD4_OK") \
            if (gap_ok and signs_ok) else "VIOLATION"

    return AnalysisReport(
        graph_id=graph_id(g),
        n=n,
        k=k,
        residue=d.residue,
        s_plus=se.s_plus,
        s_minus=se.s_minus,
        delta_eigen=se.delta,
        delta_integral=d_int,
        poly_identity_ok=poly_ok,
        theta_agreement=theta_dev,
        delta_crosscheck=cross,
        sum_identity_gap=sum_gap,
        crosscheck_ok=crosscheck_ok,
        verdict=verdict,
        tolerances=TOLERANCES,
    )


class _Aggregate:
    def __init__(self):
        self.graphs = 0
        self.violations = 0
        self.crosscheck_failures = 0
        self.worst_theta = 0.0
        self.worst_cross = 0.0
        self.worst_sum = 0.0
        self.min_abs_delta = float("inf")

    def add(self, r: AnalysisReport):
        self.graphs += 1
        if r.verdict == "VIOLATION":
            self.violations += 1
        if not r.crosscheck_ok:
            self.crosscheck_failures += 1
        if r.theta_agreement is not None:
            self.worst_theta = max(self.worst_theta, r.theta_agreement)
        self.worst_cross = max(self.worst_cross, r.delta_crosscheck)
        self.worst_sum = max(self.worst_sum, r.sum_identity_gap)
        if r.k % 2 == 1:
            self.min_abs_delta = min(self.min_abs_delta, abs(r.delta_eigen))

    def summary(self, parameters: dict, wall: float) -> CampaignSummary:
        return CampaignSummary(
            graphs_tested=self.graphs,
            violations=self.violations,
            crosscheck_failures=self.crosscheck_failures,
            worst_theta_agreement=self.worst_theta,
            worst_delta_crosscheck=self.worst_cross,
            worst_sum_identity_gap=self.worst_sum,
            min_abs_delta_eigen=self.min_abs_delta,
            wall_time=wall,
            parameters=parameters,
        )


# --- worker-pool plumbing (chunks are analyzed independently and merged in
# --- submission order, so results do not depend on the worker count) ---

def _analyze_mask_chunk(args):
    n, masks, qp = args
    pairs, _ = edge_bit_table(n)
    return [analyze(graph_from_mask(n, m, pairs), qp) for m in masks]

def _analyze_trial_chunk(args):
    trials, qp = args
    return [analyze(random_unicyclic(n, k, sub), qp) for n, k, sub in trials]


def _run_chunks(fn, chunks, workers):
    if workers <= 1:
        for chunk in chunks:
            yield from fn(chunk)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for reports in pool.map(fn, chunks):
            yield from reports


def resolve_workers(workers: int) -> int:
    return workers if workers > 0 else (os.cpu_count() or 1)


def _chunked(items, size):
    for i in range(0, len(items), size):
        yield items[i:i + size]


# --- campaigns ---

def sweep_cycles(k_max: int, qp: QuadratureParams | None = None,
                 sink=None) -> CampaignSummary:
    """Check both pipelines against the odd-cycle secant closed form."""
    if k_max < 3:
        raise BadParameters(f"k_max must be >= 3, got {k_max}")
    import math
    t0 = time.perf_counter()
    agg = _Aggregate()
    worst_closed = 0.0
    for k in range(3, k_max + 1):
        r = analyze(cycle_graph(k), qp)
        agg.add(r)
        if k % 2 == 1:
            sign = 1.0 if k % 4 == 3 else -1.0
            closed = sign * 2.0 * (1.0 / math.cos(math.pi / k) - 1.0)
            dev_eig = abs(r.delta_eigen - closed)
            dev_int = abs(r.delta_integral - closed)
            worst_closed = max(worst_closed, dev_eig, dev_int)
            if dev_eig > 1e-9 or dev_int > 1e-6:
                agg.violations += 1
        else:
            if abs(r.delta_eigen) > 1e-9:
                agg.violations += 1
        if sink is not None:
            sink(r)
    s = agg.summary({"command": "cycles", "k_max": k_max,
                     "worst_closed_form_dev": worst_closed}, time.perf_counter() - t0)
    return s


def exhaustive_campaign(n_max: int, qp: QuadratureParams | None = None,
                        sink=None, workers: int = 1) -> CampaignSummary:
    """Analyze every deduplicated labeled unicyclic graph of order <= n_max."""
    if n_max > 8:
        raise TooLarge(f"exhaustive campaign capped at n=8, got {n_max}")
    if n_max < 3:
        raise BadParameters(f"n_max must be >= 3, got {n_max}")
    workers = resolve_workers(workers)
    t0 = time.perf_counter()
    agg = _Aggregate()
    for n in range(3, n_max + 1):
        masks = sorted(set(enumerate_unicyclic_masks(n)))
        size = max(256, len(masks) // (workers * 8) + 1)
        chunks = [(n, c, qp) for c in _chunked(masks, size)]
        for r in _run_chunks(_analyze_mask_chunk, chunks, workers):
            agg.add(r)
            if sink is not None:
                sink(r)
    return agg.summary({"command": "exhaustive", "n_max": n_max},
                       time.perf_counter() - t0)


def random_campaign(n_range, k_policy, trials: int, seed: int,
                    qp: QuadratureParams | None = None,
                    sink=None, workers: int = 1) -> CampaignSummary:
    """Randomized sweep; deterministic in (parameters, seed)."""
    n_min, n_max = n_range
    if not (3 <= n_min <= n_max <= 2000):
        raise BadParameters(f"n_range must lie in [3, 2000], got {n_range}")
    if trials < 1:
        raise BadParameters(f"trials must be >= 1, got {trials}")
    workers = resolve_workers(workers)
    rng = random.Random(seed)
    plan = []
    for _ in range(trials):
        n = rng.randint(n_min, n_max)
        if isinstance(k_policy, int):
            k = k_policy
            if k < 3 or k > n:
                raise BadParameters(f"fixed k={k} outside [3, n={n}]")
        elif k_policy == "odd":
            k = rng.choice(range(3, n + 1, 2))
        elif k_policy == "any":
            k = rng.randint(3, n)
        else:
            raise BadParameters(f"unknown k policy {k_policy!r}")
        plan.append((n, k, rng.getrandbits(64)))
    t0 = time.perf_counter()
    agg = _Aggregate()
    size = max(8, len(plan) // (workers * 8) + 1)
    chunks = [(c, qp) for c in _chunked(plan, size)]
    for r in _run_chunks(_analyze_trial_chunk, chunks, workers):
        agg.add(r)
        if sink is not None:
            sink(r)
    return agg.summary(
        {"command": "random", "n_min": n_min, "n_max": n_max,
         "k_policy": k_policy, "trials": trials, "seed": seed},
        time.perf_counter() - t0)


def report_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()

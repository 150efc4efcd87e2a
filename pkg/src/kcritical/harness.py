"""Instance-level audit of the size and spectral sufficient conditions.

A graph is classified against the hypotheses ((k+1)-connected, n = k mod 2,
n above the threshold for delta = delta(G)), the bound (e(G) >= e(G*) or
rho(G) >= rho(G*)), and finally k-criticality. A COUNTEREXAMPLE would be a
graph passing everything that is neither critical nor G*.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .errors import CapacityError, ParameterError, PreconditionError, SamplingError
from .factors import (
    DEFICIENCY_CAP,
    DeficiencyCertificate,
    FactorParams,
    is_k_critical,
    witness_certificate,
)
from .families import ExtremalParams, build_G_star, edge_count_star
from .graph import Graph, build_graph, is_k_connected, mask_of
from .graph6 import graph6_str, parse_graph6
from .identities import size_threshold_terms
from .spectral import char_cubic, spectral_radius

CONSISTENT = "consistent"
EXTREMAL = "extremal-equality"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
MODES = ("size", "spectral")

RHO_TOL = 1e-8


@dataclass(frozen=True)
class ThresholdReport:
    b: int
    k: int
    delta: int
    thm11_terms: tuple[Fraction, Fraction]
    n_min_thm11: Fraction
    thm12_terms: tuple[int, int]
    n_min_thm12: int
    smallest_n_thm11: int
    smallest_n_thm12: int

    def bound(self, mode: str) -> Fraction:
        return self.n_min_thm11 if mode == "size" else Fraction(self.n_min_thm12)

    def smallest_n(self, mode: str) -> int:
        return self.smallest_n_thm11 if mode == "size" else self.smallest_n_thm12

    def to_json(self) -> dict:
        return {
            "b": self.b, "k": self.k, "delta": self.delta,
            "thm11Terms": [str(t) for t in self.thm11_terms],
            "nMinThm11": str(self.n_min_thm11),
            "thm12Terms": list(self.thm12_terms),
            "nMinThm12": self.n_min_thm12,
            "smallestNThm11": self.smallest_n_thm11,
            "smallestNThm12": self.smallest_n_thm12,
        }


def _smallest_n(bound: Fraction, b: int, k: int, delta: int) -> int:
    # G* needs a nonempty big clique: n >= (b+1)delta - bk + 2
    n = max(math.ceil(bound), (b + 1) * delta - b * k + 2, k + 2)
    if (n - k) % 2:
        n += 1
    return n


def thresholds(b: int, k: int, delta: int) -> ThresholdReport:
    """Both lower bounds on n, evaluated exactly, with the smallest admissible n."""
    if b < 1 or b % 2 == 0:
        raise ParameterError(f"b must be a positive odd integer, got {b}")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if delta < k + 1:
        raise ParameterError(f"delta must be >= k+1, got {delta}")
    t11 = size_threshold_terms(b, k, delta)
    t12 = (b * delta * delta - b * k, (2 * b + 3) * delta - b * k + 1)
    n11, n12 = max(t11), max(t12)
    return ThresholdReport(b, k, delta, t11, n11, t12, n12,
                           _smallest_n(n11, b, k, delta), _smallest_n(Fraction(n12), b, k, delta))


def star_hub(g: Graph, b: int, k: int) -> tuple[int, ...] | None:
    """Hub of G* if ``g`` is isomorphic to K_delta v (K_q u m K_1), else None.

    delta is read off as delta(G). The check: some degree-delta vertex has a
    clique neighbourhood N; the vertices sharing exactly that neighbourhood
    are the m singletons; the rest is a clique of size q joined to N; and the
    edge count matches, which rules out any further edge.
    """
    if g.n == 0:
        return None
    delta = g.min_degree()
    try:
        p = ExtremalParams(g.n, b, k, delta)
    except ParameterError:
        return None
    if g.e != edge_count_star(p):
        return None
    v = g.degrees().index(delta)
    hub_mask = g.rows[v]
    hub = [u for u in range(g.n) if hub_mask >> u & 1]
    if any((g.rows[u] | 1 << u) & hub_mask != hub_mask for u in hub):
        return None
    twins = [u for u in range(g.n) if g.rows[u] == hub_mask]
    rest = [u for u in range(g.n) if not hub_mask >> u & 1 and g.rows[u] != hub_mask]
    q, m = p.big_part, p.singletons
    if not ((len(twins) == m and len(rest) == q) or (q == 1 and len(twins) == m + 1 and not rest)):
        return None
    rest_mask = mask_of(rest)
    for u in rest:
        if g.rows[u] != (hub_mask | rest_mask) & ~(1 << u):
            return None
    return tuple(hub)


@dataclass
class InstanceVerdict:
    graph6: str
    b: int
    k: int
    mode: str
    n: int
    delta: int
    hypotheses: dict
    e: int
    e_star: int | None
    rho: float | None
    rho_star: float | None
    bound_holds: bool
    extremal_shape: bool
    critical: bool | None
    certificate: DeficiencyCertificate | None
    classification: str
    thresholds: dict = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypotheses.values())

    def to_json(self) -> dict:
        out = asdict(self)
        out["certificate"] = None if self.certificate is None else self.certificate.to_json()
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: Mapping | str) -> InstanceVerdict:
        if isinstance(obj, str):
            obj = json.loads(obj)
        obj = dict(obj)
        if obj.get("certificate") is not None:
            obj["certificate"] = DeficiencyCertificate.from_json(obj["certificate"])
        return cls(**obj)


def rho_star(p: ExtremalParams, tol: float = 1e-12) -> float:
    """rho(G*) as the largest root of the B* cubic."""
    return char_cubic("Bstar", p.n, p.b, p.k, p.delta).largest_root(tol)


def classify_instance(g: Graph, b: int, k: int, mode: str = "size",
                      tol: float = RHO_TOL, cap: int = DEFICIENCY_CAP) -> InstanceVerdict:
    """Check hypotheses, the bound and criticality for one graph."""
    if mode not in MODES:
        raise ParameterError(f"mode must be one of {MODES}")
    params = FactorParams(b, k)
    n = g.n
    delta = g.min_degree() if n else 0
    star = None
    report = None
    if delta >= k + 1:
        report = thresholds(b, k, delta)
        try:
            star = ExtremalParams(n, b, k, delta)
        except ParameterError:
            star = None
    hypotheses = {
        "connectivity": is_k_connected(g, k + 1),
        "parity": (n - k) % 2 == 0,
        "order": report is not None and n >= report.bound(mode) and n >= k + 2,
        "minDegree": star is not None,
    }
    e_star = edge_count_star(star) if star else None
    rho = rs = None
    if mode == "size":
        bound_holds = star is not None and g.e >= e_star
    else:
        rho = spectral_radius(g) if n else None
        rs = rho_star(star) if star else None
        bound_holds = star is not None and rho >= rs - tol
    hub = star_hub(g, b, k) if star else None
    extremal = hub is not None
    cert = None
    if extremal:
        # one violating S settles non-criticality; no enumeration needed
        cert = witness_certificate(g, params, hub)
        critical = not cert.deficiency > 0
    elif n <= cap and n >= k + 2:
        critical, cert = is_k_critical(g, params, cap)
    elif all(hypotheses.values()) and bound_holds:
        raise CapacityError(f"criticality of n={n} exceeds cap {cap}")
    else:
        critical = None
    if extremal and bound_holds:
        cls = EXTREMAL
    elif all(hypotheses.values()) and bound_holds and critical is False:
        cls = COUNTEREXAMPLE
    else:
        cls = CONSISTENT
    return InstanceVerdict(graph6_str(g), b, k, mode, n, delta, hypotheses, g.e, e_star, rho, rs,
                           bound_holds, extremal, critical, cert, cls,
                           report.to_json() if report else {})


def replay(record: Mapping | str | InstanceVerdict, cap: int = DEFICIENCY_CAP) -> InstanceVerdict:
    """Re-run the instance described by a verdict (or its JSON)."""
    if not isinstance(record, InstanceVerdict):
        record = InstanceVerdict.from_json(record)
    return classify_instance(parse_graph6(record.graph6), record.b, record.k, record.mode, cap=cap)


def tightness(b: int, k: int, delta: int, mode: str,
              n: int | None = None, tol: float = RHO_TOL) -> dict:
    """Classify G* at the smallest admissible n (or a given n)."""
    report = thresholds(b, k, delta)
    n = report.smallest_n(mode) if n is None else n
    p = ExtremalParams(n, b, k, delta)
    g = build_G_star(p)
    verdict = classify_instance(g, b, k, mode, tol)
    out = {
        "b": b, "k": k, "delta": delta, "n": n, "mode": mode,
        "classification": verdict.classification,
        "edgesEqual": g.e == edge_count_star(p),
        "hubWitness": list(p.hub),
        "hubDeficiency": verdict.certificate.deficiency if verdict.certificate else None,
        "critical": verdict.critical,
    }
    if mode == "spectral":
        out["rhoGap"] = abs(spectral_radius(g) - rho_star(p))
    return out


# Sampling.

def _instance_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _sample_candidate(rng: np.random.Generator, p: ExtremalParams) -> Graph:
    """One random graph near G*; may violate the conditions (caller rejects)."""
    n, delta = p.n, p.delta
    base = build_G_star(p)
    edges = set(base.edges())
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    strategy = rng.choice(3, p=[0.5, 0.3, 0.2])
    if strategy == 0:
        # augment G* while one singleton keeps degree delta
        keep = n - 1
        pool = [e for e in non_edges if keep not in e]
        r = int(rng.integers(0, len(pool) + 1)) if pool else 0
        chosen = [pool[i] for i in rng.choice(len(pool), size=r, replace=False)] if r else []
        edges |= set(chosen)
    elif strategy == 1:
        # rewire: drop a few edges, add at least as many
        cur = sorted(edges)
        drop = int(rng.integers(1, min(len(cur), 2 * delta + 2) + 1))
        for i in rng.choice(len(cur), size=drop, replace=False):
            edges.discard(cur[i])
        add = min(len(non_edges), drop + int(rng.integers(0, len(non_edges) + 1)))
        for i in rng.choice(len(non_edges), size=add, replace=False):
            edges.add(non_edges[i])
    else:
        # dense random graph with one vertex pinned to degree delta
        prob = rng.uniform(0.75, 1.0)
        edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob}
        pinned = int(rng.integers(n))
        edges = {e for e in edges if pinned not in e}
        others = [u for u in range(n) if u != pinned]
        for u in rng.choice(others, size=delta, replace=False):
            u = int(u)
            edges.add((min(u, pinned), max(u, pinned)))
    g = build_graph(n, edges)
    perm = [int(x) for x in rng.permutation(n)]
    return g.relabel(perm)


def _admissible(g: Graph, p: ExtremalParams, mode: str, bound_rho: float | None, tol: float) -> bool:
    if g.min_degree() != p.delta:
        return False
    if mode == "size":
        if g.e < edge_count_star(p):
            return False
    elif spectral_radius(g) < bound_rho - tol:
        return False
    return is_k_connected(g, p.k + 1)


def sweep(b: int, k: int, delta: int, n: int, mode: str, sample_count: int, seed: int,
          retry_budget: int = 2000, cap: int = DEFICIENCY_CAP, tol: float = RHO_TOL) -> list[InstanceVerdict]:
    """Classify ``sample_count`` random graphs satisfying hypotheses and bound.

    Instance ``i`` draws from its own generator seeded by ``(seed, i)``.
    Counterexamples are listed first, the rest sorted by graph6.
    """
    if mode not in MODES:
        raise ParameterError(f"mode must be one of {MODES}")
    report = thresholds(b, k, delta)
    if n < report.bound(mode):
        raise PreconditionError(f"n={n} below the threshold {report.bound(mode)}")
    if (n - k) % 2:
        raise PreconditionError("n and k must have the same parity")
    if n > cap:
        raise CapacityError(f"sweep criticality at n={n} exceeds cap {cap}")
    p = ExtremalParams(n, b, k, delta)
    bound_rho = rho_star(p) if mode == "spectral" else None
    out = []
    for i in range(sample_count):
        rng = _instance_rng(seed, i)
        for _ in range(retry_budget):
            g = _sample_candidate(rng, p)
            if _admissible(g, p, mode, bound_rho, tol):
                break
        else:
            raise SamplingError(f"no admissible graph for instance {i} after {retry_budget} tries")
        out.append(classify_instance(g, b, k, mode, tol, cap))
    out.sort(key=lambda v: (v.classification != COUNTEREXAMPLE, v.graph6))
    return out


def summary(verdicts: Iterable[InstanceVerdict]) -> dict:
    counts = Counter(v.classification for v in verdicts)
    return {c: counts.get(c, 0) for c in (CONSISTENT, EXTREMAL, COUNTEREXAMPLE)}


def write_jsonl(verdicts: Iterable[InstanceVerdict], fh) -> None:
    for v in verdicts:
        fh.write(v.dumps() + "\n")


def summary_csv(rows: Iterable[dict]) -> str:
    """CSV with one line per (params, counts) summary row."""
    cols = ["mode", "b", "k", "delta", "n", "samples", CONSISTENT, EXTREMAL, COUNTEREXAMPLE]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({c: r.get(c) for c in cols})
    return buf.getvalue()

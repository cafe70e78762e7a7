"""Deciding whether Visscher's complex resolves a weighted edge ideal.

Two independent routes:

* :func:`bs_oracle` checks every restriction C_{<=f} for acyclicity, with f
  running over the lcm lattice of the generators.  C_{<=f} only depends on
  which generators divide f, and those are exactly the generators dividing
  g = lcm{f_i : f_i | f}, an element of the lattice, so the lattice suffices.
* :func:`theorem_predicate` is the inductive vertex-deletion test.

:func:`survey` runs both over every weighting in a box and compares them.
"""
from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .chains import build_edge_weighted, is_minimal
from .graphs import (EdgeWeighting, VertexLabeling, VertexWeighting, delete_vertex,
                     edge_weight_labels, min_weight, vertex_weight_labels)
from .homology import HomologyProfile, reduced_homology, tor_ranks
from .monomials import Monomial, lcm
from .visscher import LabeledComplex, visscher_complex

log = logging.getLogger(__name__)


def lcm_lattice(labels: VertexLabeling | Iterable[Monomial]) -> list[Monomial]:
    """All lcms of nonempty sets of generators, by total degree then exponents."""
    gens = labels.generators() if isinstance(labels, VertexLabeling) else list(labels)
    if not gens:
        raise ValueError("empty generating set")
    lattice: set[Monomial] = set()
    for g in gens:
        lattice |= {lcm(g, x) for x in lattice}
        lattice.add(g)
    return sorted(lattice, key=lambda f: f.sort_key())


@dataclass
class ResolutionVerdict:
    is_resolution: bool
    method: str
    witness: Monomial | None = None
    witness_profile: HomologyProfile | None = None
    torsion: list[tuple[Monomial, HomologyProfile]] = field(default_factory=list)
    checked: int = 0


def bs_oracle(C: LabeledComplex | VertexLabeling, characteristic: int = 0,
              generators_first: bool = False, stop_at_first: bool = True) -> ResolutionVerdict:
    """Acyclicity of every nonempty C_{<=f}, f in the lcm lattice.

    The first failing f in lattice order is the witness.  With
    ``generators_first`` the generators themselves are scanned before the
    rest of the lattice (the verdict cannot change, only the witness).
    Torsion met along the way is collected, so pass ``stop_at_first=False``
    to scan the whole lattice.
    """
    if isinstance(C, VertexLabeling):
        C = visscher_complex(C)
    gens = [C.vertex_labels[v] for v in sorted(C.vertex_labels)]
    order = lcm_lattice(gens)
    if generators_first:
        gen_set = set(gens)
        order = [f for f in order if f in gen_set] + [f for f in order if f not in gen_set]
    verdict = ResolutionVerdict(True, "oracle")
    for f in order:
        sub = C.restrict(f)
        if sub.is_empty():
            continue
        profile = reduced_homology(sub, characteristic)
        verdict.checked += 1
        if profile.torsion:
            verdict.torsion.append((f, profile))
        if not profile.is_acyclic() and verdict.is_resolution:
            verdict.is_resolution = False
            verdict.witness = f
            verdict.witness_profile = profile
            if stop_at_first:
                break
    return verdict


@dataclass
class TraceStep:
    alpha: int
    vertex: str          # original name of the deleted vertex, e.g. "X1"
    shape: tuple[int, int]


@dataclass
class TheoremTrace:
    steps: list[TraceStep] = field(default_factory=list)
    base: tuple[int, int] | None = None
    failure: EdgeWeighting | None = None
    failure_alpha: int | None = None

    def describe(self) -> str:
        parts = [f"v={s.vertex}" for s in self.steps]
        if self.base is not None:
            parts.append("base")
        else:
            parts.append(f"no vertex at alpha={self.failure_alpha}")
        return " → ".join(parts)


def qualifying_vertices(w: EdgeWeighting) -> list[tuple[str, int]]:
    """Vertices all of whose incident edges carry the minimum weight; X side first."""
    alpha = min_weight(w)
    out = [("X", i) for i in range(1, w.m + 1) if all(x == alpha for x in w.omega[i - 1])]
    out += [("Y", j) for j in range(1, w.n + 1) if all(row[j - 1] == alpha for row in w.omega)]
    return out


def theorem_predicate(w: EdgeWeighting) -> tuple[bool, TheoremTrace]:
    """The recursive vertex-deletion characterization.

    True when m = 1 or n = 1, or when some vertex has every incident weight
    equal to the current minimum and the predicate holds after deleting it.
    The minimum is recomputed on each smaller graph.  The first qualifying
    vertex is taken; the outcome does not depend on the choice.
    """
    trace = TheoremTrace()
    xs = list(range(1, w.m + 1))
    ys = list(range(1, w.n + 1))
    while True:
        if w.m == 1 or w.n == 1:
            trace.base = (w.m, w.n)
            return True, trace
        candidates = qualifying_vertices(w)
        if not candidates:
            trace.failure = w
            trace.failure_alpha = min_weight(w)
            return False, trace
        side, idx = candidates[0]
        names = xs if side == "X" else ys
        trace.steps.append(TraceStep(min_weight(w), f"{side}{names[idx - 1]}", (w.m, w.n)))
        del names[idx - 1]
        w = delete_vertex(w, side, idx)


def betti_formula(m: int, n: int, k: int) -> int:
    """Closed form for the (k+1)st Betti number: sum_j C(n, j) C(m, k-j+2)."""
    if m < 1 or n < 1 or k < 0:
        raise ValueError("need m, n >= 1 and k >= 0")
    return sum(comb(n, j) * comb(m, k - j + 2) for j in range(1, k + 2))


# -- survey ---------------------------------------------------------------------

@dataclass
class WeightingResult:
    weights: tuple[tuple[int, ...], ...]
    theorem: bool
    oracle: bool
    witness: str | None
    torsion: int
    betti_ok: bool | None
    minimal: bool


@dataclass
class SurveyReport:
    m: int
    n: int
    max_weight: int
    characteristic: int
    total: int = 0
    agreements: int = 0
    disagreements: list[tuple] = field(default_factory=list)
    torsion_sightings: list[tuple] = field(default_factory=list)
    predicate_true: int = 0
    betti_checked: int = 0
    betti_mismatches: list[tuple] = field(default_factory=list)
    minimality_failures: list[tuple] = field(default_factory=list)
    results: list[WeightingResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.betti_mismatches and not self.minimality_failures

    def summary_line(self) -> str:
        return f"{self.agreements}/{self.total} agree"

    def to_json(self, include_verdicts: bool = False) -> dict:
        out = {
            "m": self.m, "n": self.n, "max_weight": self.max_weight,
            "characteristic": self.characteristic,
            "total": self.total, "agreements": self.agreements,
            "disagreements": [list(map(list, w)) for w in self.disagreements],
            "torsion_sightings": len(self.torsion_sightings),
            "predicate_true": self.predicate_true,
            "betti_checked": self.betti_checked,
            "betti_mismatches": [list(map(list, w)) for w in self.betti_mismatches],
            "minimality_failures": [list(map(list, w)) for w in self.minimality_failures],
        }
        if include_verdicts:
            out["verdicts"] = [
                {"edge_weights": [list(r) for r in r_.weights], "theorem": r_.theorem,
                 "oracle": r_.oracle, "witness": r_.witness}
                for r_ in self.results]
        return out


def all_weightings(m: int, n: int, max_weight: int) -> Iterable[EdgeWeighting]:
    for flat in itertools.product(range(1, max_weight + 1), repeat=m * n):
        yield EdgeWeighting(m, n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(m)))


def examine(w: EdgeWeighting, characteristic: int = 0) -> WeightingResult:
    """Theorem vs oracle on one weighting, plus Betti and minimality checks."""
    theorem, _ = theorem_predicate(w)
    verdict = bs_oracle(visscher_complex(edge_weight_labels(w)), characteristic, stop_at_first=False)
    F = build_edge_weighted(w)
    minimal, _ = is_minimal(F)
    betti_ok = None
    if theorem:
        tor = tor_ranks(F, characteristic)
        expected = [1] + [betti_formula(w.m, w.n, k) for k in range(F.top)]
        betti_ok = tor == expected == F.ranks()
    return WeightingResult(w.omega, theorem, verdict.is_resolution,
                           str(verdict.witness) if verdict.witness else None,
                           len(verdict.torsion), betti_ok, minimal)


def _examine_star(args):
    return examine(*args)


def survey(m: int, n: int, max_weight: int, characteristic: int = 0,
           workers: int | None = None, keep_results: bool = False) -> SurveyReport:
    """Compare the predicate with the oracle on all max_weight^(mn) weightings."""
    if workers is None:
        workers = int(os.environ.get("CELLRES_THREADS", "1") or 1)
    report = SurveyReport(m, n, max_weight, characteristic)
    jobs = [(w, characteristic) for w in all_weightings(m, n, max_weight)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_examine_star, jobs, chunksize=16))
    else:
        results = [examine(*job) for job in jobs]
    for res in results:
        report.total += 1
        if res.theorem == res.oracle:
            report.agreements += 1
        else:
            report.disagreements.append(res.weights)
            log.warning("disagreement at %s: theorem=%s oracle=%s", res.weights, res.theorem, res.oracle)
        if res.torsion:
            report.torsion_sightings.append(res.weights)
        if not res.minimal:
            report.minimality_failures.append(res.weights)
        if res.theorem:
            report.predicate_true += 1
            report.betti_checked += 1
            if not res.betti_ok:
                report.betti_mismatches.append(res.weights)
        if keep_results:
            report.results.append(res)
    return report


def vertex_weighted_verdict(v: VertexWeighting, characteristic: int = 0) -> ResolutionVerdict:
    return bs_oracle(visscher_complex(vertex_weight_labels(v)), characteristic)

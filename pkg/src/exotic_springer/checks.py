"""End-to-end verification suite behind ``exotic-springer check``.

Each check returns a :class:`CheckResult`; size bounds can be lowered with
``m_max`` for a quick run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable

from .circles import (
    SEED,
    EmptyIntersection,
    SpherePoint,
    all_diagrams,
    intersect,
    km_dimension,
    member_of,
    orientations,
    orientations_bruteforce,
    random_sphere_point,
    sample_point,
    witness_point,
)
from .cohomology import RingElement, cell_generating_function, monomial_basis, poincare_polynomial
from .diagrams import (
    CupDiagram,
    diagram_count,
    enumerate_diagrams,
    from_bitableau,
    to_bitableau,
)
from .errors import ExoticError
from .homology import (
    EnrichedCupDiagram,
    LineDiagramVector,
    beta_map,
    betti_numbers,
    line_diagram_sum,
    rank_check,
    standard_enriched,
)
from .weyl import inner_product, verify_generator_relations


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None = None

    @property
    def in_time(self) -> bool:
        return self.limit is None or self.seconds < self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.in_time

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        budget = f" (limit {self.limit:g}s)" if self.limit is not None else ""
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} [{self.seconds:.2f}s{budget}]"

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "name": self.name,
            "passed": self.ok,
            "detail": self.detail,
            "seconds": round(self.seconds, 4),
            "limit": self.limit,
        }


def _cap(bound: int, m_max: int | None) -> int:
    return bound if m_max is None else min(bound, m_max)


def check_component_counts(m_max: int | None = None) -> str:
    top = _cap(10, m_max)
    total = 0
    for m in range(0, top + 1):
        for k in range(m + 1):
            ds = enumerate_diagrams(m, k)
            assert len(ds) == comb(m, m - k) == diagram_count(m, k), (m, k, len(ds))
            assert len(set(ds)) == len(ds)
            for a in ds:
                t = to_bitableau(a)
                assert t.shape == (k, m - k) and from_bitableau(t) == a, a
            total += len(ds)
    return f"{total} diagrams for m <= {top}, bitableau round trip exact"


GOLDEN_4_3 = ["()||", "|()|", "||()", "|||>"]


def check_enumeration_golden(m_max: int | None = None) -> str:
    got = [a.word for a in enumerate_diagrams(4, 3)]
    assert got == GOLDEN_4_3, got
    return "enumerate(4,3) = " + " ".join(got)


def check_intersection_agreement(m_max: int | None = None) -> str:
    top = _cap(6, m_max)
    pairs = nonempty = 0
    for m in range(1, top + 1):
        ds = all_diagrams(m)
        for a in ds:
            for b in ds:
                crit = intersect(a, b).nonempty
                orient = bool(orientations_bruteforce(a, b))
                wit = witness_point(a, b)
                assert crit == orient == bool(wit), (a, b, crit, orient, wit)
                if crit:
                    assert member_of(wit, a) and member_of(wit, b)
                    nonempty += 1
                pairs += 1
    return f"{pairs} ordered pairs for m <= {top} ({nonempty} nonempty), three methods agree"


def check_witness_golden(m_max: int | None = None) -> str:
    a, b, c = (CupDiagram.from_word(w) for w in ("()||", "|()|", "||()"))
    rep = intersect(a, b)
    assert rep.nonempty and rep.cohomology_dim == 1
    p = SpherePoint(0, 0, 1)
    assert witness_point(a, b) == (p, -p, p, p)
    empty = witness_point(a, c)
    assert isinstance(empty, EmptyIntersection) and not intersect(a, c).nonempty
    return "S_a cap S_b = {(p,-p,p,p)}, S_a cap S_c empty"


def check_orientation_counts(m_max: int | None = None) -> str:
    top = _cap(6, m_max)
    pairs = 0
    for m in range(1, top + 1):
        ds = all_diagrams(m)
        for a in ds:
            for b in ds:
                rep = intersect(a, b)
                fast = orientations(a, b)
                assert len(fast) in (0, 2**rep.K) and len(fast) == rep.cohomology_dim, (a, b)
                assert fast == orientations_bruteforce(a, b), (a, b)
                pairs += 1
    ds = enumerate_diagrams(4, 3)
    brute = sum(len(orientations_bruteforce(a, b)) for a in ds for b in ds)
    km = km_dimension(4, 3)
    assert km == brute == 14, (km, brute)
    return f"{pairs} pairs give 0 or 2^K orientations; kmDimension(4,3) = {km}"


def check_paving(m_max: int | None = None) -> str:
    top = _cap(10, m_max)
    for m in range(1, top + 1):
        for k in range(m + 1):
            cells = cell_generating_function(m, k)
            assert cells == poincare_polynomial(m, k) == betti_numbers(m, k), (m, k, cells)
    assert cell_generating_function(4, 3) == poincare_polynomial(4, 3) == [1, 4]
    return f"cells = Poincare = Betti for m <= {top}; (4,3) gives 1 + 4q^2"


def check_lm_golden(m_max: int | None = None) -> str:
    d = EnrichedCupDiagram.from_word("(.)|.()>()>.")
    want = LineDiagramVector(9, {(4, 6, 7): 1, (4, 6, 8): -1, (5, 6, 7): -1, (5, 6, 8): 1})
    got = line_diagram_sum(d)
    assert got == want, str(got)
    return f"L_M = {got}"


BETA_GOLDEN = {"|||||": "|.|.|.>.>.", "||()|": "|.|.()>.", "(())|": "(())|."}
STANDARD_4_3 = ["|.|.|.>.", "()|.|.", "|.()|.", "|.|.()", "|.|.|.>"]


def check_beta_golden(m_max: int | None = None) -> str:
    for src, want in BETA_GOLDEN.items():
        got = beta_map(CupDiagram.from_word(src), 3).word
        assert got == want, (src, got)
    got = [d.word for d in standard_enriched(4, 3)]
    assert got == STANDARD_4_3, got
    return "three beta images and the five standard diagrams for (4,3) match"


def check_linear_independence(m_max: int | None = None) -> str:
    top = _cap(8, m_max)
    count = 0
    for m in range(1, top + 1):
        for k in range(m + 1):
            for l in range(m - k + 1):
                r = rank_check(m, k, l)
                assert r == comb(m, l), (m, k, l, r)
                count += 1
    return f"{count} rank computations for m <= {top} equal C(m,l)"


def check_ring_axioms(m_max: int | None = None) -> str:
    top = _cap(6, m_max)
    triples = 0
    for m in range(1, top + 1):
        for k in range(m + 1):
            basis = monomial_basis(m, k)
            elems = {u: RingElement.monomial(m, k, u) for u in basis}
            # structure constants from the ring multiplication, each 0 or a single monomial
            table: dict[tuple, tuple | None] = {}
            for u in basis:
                for v in basis:
                    prod = elems[u] * elems[v]
                    assert prod == elems[v] * elems[u], (m, k, u, v)
                    if prod.is_zero():
                        table[u, v] = None
                    else:
                        ((w, c),) = prod.terms.items()
                        assert c == 1
                        table[u, v] = w
            for u in basis:
                for v in basis:
                    uv = table[u, v]
                    for w in basis:
                        vw = table[v, w]
                        left = None if uv is None else table[uv, w]
                        right = None if vw is None else table[u, vw]
                        assert left == right, (m, k, u, v, w)
                        triples += 1
            gens = [RingElement.generator(m, k, i) for i in range(1, m + 1)]
            assert all((g * g).is_zero() for g in gens)
            for idx in combinations(range(m), m - k + 1):
                prod = RingElement.one(m, k)
                for i in idx:
                    prod = prod * gens[i]
                assert prod.is_zero(), (m, k, idx)
    return f"{triples} monomial triples associative, products commute, relations vanish for m <= {top}"


def check_representations(m_max: int | None = None) -> str:
    top = _cap(6, m_max)
    pairs = 0
    for m in range(1, top + 1):
        report = verify_generator_relations(m)
        assert report, report.failures
        for k in range(m + 1):
            for l in range(m - k + 1):
                for l2 in range(m - k + 1):
                    assert inner_product(m, k, l, l2) == (1 if l == l2 else 0), (m, k, l, l2)
                    pairs += 1
    return f"Coxeter relations hold; {pairs} character inner products orthonormal for m <= {top}"


def check_random_points(m_max: int | None = None, samples: int = 500, seed: int = 20261016) -> str:
    top = _cap(5, m_max)
    rng = random.Random(seed)
    points = 0
    for m in range(1, top + 1):
        ds = all_diagrams(m)
        for a in ds:
            for _ in range(samples):
                x = sample_point(a, rng)
                assert member_of(x, a)
                # relation-by-relation reading must agree with member_of
                rays_ok = all(x[r - 1] == SpherePoint(0, 0, 1) for r in a.rays)
                cups_ok = all(x[j - 1] == -x[i - 1] for i, j in a.cups)
                assert rays_ok and cups_ok
                # moving one constrained coordinate off its relation must leave S_a
                if a.cups or a.rays:
                    v = rng.choice([j for _, j in a.cups] + list(a.rays))
                    y = list(x)
                    y[v - 1] = random_sphere_point(rng)
                    expect = y[v - 1] == x[v - 1]
                    assert member_of(tuple(y), a) == expect
                points += 1
        for a in ds:
            for b in ds:
                if not intersect(a, b).nonempty:
                    continue
                seeds = [SEED] + [random_sphere_point(rng) for _ in range(3)]
                for s in seeds:
                    w = witness_point(a, b, seed=s)
                    assert member_of(w, a) and member_of(w, b)
    return f"{points} sampled points consistent for m <= {top}; witness families lie in both"


CRITERIA: list[tuple[str, Callable[..., str], float | None]] = [
    ("component counts and bijection", check_component_counts, 5.0),
    ("enumerate(4,3) golden", check_enumeration_golden, None),
    ("intersection triple agreement", check_intersection_agreement, 60.0),
    ("witness golden", check_witness_golden, None),
    ("orientation counts", check_orientation_counts, None),
    ("paving consistency", check_paving, None),
    ("L_M golden", check_lm_golden, None),
    ("beta map golden", check_beta_golden, None),
    ("linear independence", check_linear_independence, 120.0),
    ("ring axioms", check_ring_axioms, None),
    ("representation theory", check_representations, 60.0),
    ("random sphere points", check_random_points, None),
]


def run_check(number: int, m_max: int | None = None) -> CheckResult:
    name, fn, limit = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        detail = fn(m_max)
        passed = True
    except AssertionError as exc:
        detail = f"assertion failed: {exc}"
        passed = False
    except ExoticError as exc:
        detail = f"{exc.code}: {exc}"
        passed = False
    return CheckResult(number, name, passed, detail, time.perf_counter() - start, limit)


def run_all(m_max: int | None = None) -> list[CheckResult]:
    return [run_check(n, m_max) for n in range(1, len(CRITERIA) + 1)]

import random

import pytest
from hypothesis import given

from conftest import diagram_pairs
from exotic_springer.circles import (
    HALF_HALF,
    NORTH,
    RAY_HALF,
    RAY_RAY,
    EmptyIntersection,
    SpherePoint,
    all_diagrams,
    component_orientation,
    glue,
    intersect,
    km_dimension,
    member_of,
    orientations,
    orientations_bruteforce,
    orients,
    sample_point,
    witness_point,
)
from exotic_springer.diagrams import CupDiagram, Weight, enumerate_diagrams
from exotic_springer.errors import BadPointError, SizeMismatchError
from oracles import orienting_weights, sign_system, word_to_table

D = CupDiagram.from_word
p = NORTH


def test_golden_pair_is_a_point():
    rep = intersect(D("()||"), D("|()|"))
    assert rep.nonempty and rep.K == 0 and rep.cohomology_dim == 1
    assert witness_point(D("()||"), D("|()|")) == (p, -p, p, p)


def test_golden_pair_is_empty():
    rep = intersect(D("()||"), D("||()"))
    assert not rep.nonempty and rep.cohomology_dim == 0
    assert sorted(sorted(c.vertices) for c in rep.offending) == [[1, 2], [3, 4]]
    w = witness_point(D("()||"), D("||()"))
    assert isinstance(w, EmptyIntersection) and not w
    assert w.to_json() == {"empty": True, "offending": [[1, 2], [3, 4]]}


def test_report_json_schema():
    rep = intersect(D("()>"), D("()>"))
    assert set(rep.to_json()) == {"nonempty", "circles", "hhLines", "K", "dim", "offending"}


def test_component_census():
    cd = glue(D("()|||>>>"), D("()()|>>>"))
    census = [(c.kind, tuple(sorted(c.vertices)), c.propagating) for c in cd.components]
    assert census == [
        ("circle", (1, 2), False),
        (RAY_RAY, (3, 4), False),
        (RAY_RAY, (5,), True),
        (HALF_HALF, (6,), True),
        (HALF_HALF, (7,), True),
        (HALF_HALF, (8,), True),
    ]
    assert not intersect(D("()|||>>>"), D("()()|>>>")).nonempty


@pytest.mark.parametrize("m", range(1, 7))
def test_intersection_matches_sign_system(m):
    ds = all_diagrams(m)
    for a in ds:
        for b in ds:
            consistent, free = sign_system(word_to_table(a.word), word_to_table(b.word))
            rep = intersect(a, b)
            assert rep.nonempty == consistent
            if consistent:
                assert rep.K == free


@pytest.mark.parametrize("m", range(1, 7))
def test_orientations_match_exhaustive_oracle(m):
    ds = all_diagrams(m)
    for a in ds:
        for b in ds:
            want = orienting_weights(word_to_table(a.word), word_to_table(b.word))
            got = [w.symbols for w in orientations(a, b)]
            assert sorted(got) == sorted(want)
            rep = intersect(a, b)
            assert len(got) == rep.cohomology_dim


def test_self_orientations():
    assert [w.symbols for w in orientations(D("()||"), D("()||"))] == ["^v^^", "v^^^"]


@given(diagram_pairs())
def test_witness_lies_in_both(pair):
    a, b = pair
    w = witness_point(a, b)
    assert bool(w) == intersect(a, b).nonempty == bool(orientations_bruteforce(a, b))
    if w:
        assert member_of(w, a) and member_of(w, b)


@given(diagram_pairs())
def test_line_kinds_and_propagation(pair):
    a, b = pair
    cd = glue(a, b)
    seen = sorted(v for c in cd.components for v in c.vertices)
    assert seen == list(range(1, a.m + 1))
    for c in cd.lines:
        assert c.kind in (RAY_RAY, RAY_HALF, HALF_HALF)
        assert len(c.ends) == 2


def test_km_dimension_against_pair_oracle():
    for m, k in [(2, 1), (3, 3), (4, 2), (4, 3), (5, 4)]:
        ds = enumerate_diagrams(m, k)
        oracle = sum(len(orienting_weights(word_to_table(a.word), word_to_table(b.word))) for a in ds for b in ds)
        assert km_dimension(m, k) == oracle
    assert km_dimension(4, 3) == 14
    assert km_dimension(2, 1) == 6


def test_orients_and_clockwise_tags():
    a = D("(())")
    assert orients(Weight("v^v^"), a) and orients(Weight("vv^^"), a)
    assert not orients(Weight("vvvv"), a)
    cd = glue(a, D("()()"))
    tags = component_orientation(cd, Weight("^v^v"))
    assert [t for _, t in tags] == ["clockwise"]
    with pytest.raises(SizeMismatchError):
        orients(Weight("v^"), a)


def test_sphere_points():
    x = SpherePoint.from_stereographic(1, 2)
    assert x.a * x.a + x.b * x.b + x.c * x.c == 1
    assert SpherePoint.from_stereographic(0, 0) == -p
    assert x.to_json() == ["1/3", "2/3", "2/3"]
    with pytest.raises(BadPointError):
        SpherePoint(1, 1, 0)


def test_member_of_rejects_bad_input():
    with pytest.raises(SizeMismatchError):
        member_of((p,), D("()"))
    with pytest.raises(BadPointError):
        member_of((p, (0, 0, -1)), D("()"))
    assert member_of((p, -p), D("()")) and not member_of((p, p), D("()"))


def test_sampled_points_are_members():
    rng = random.Random(7)
    for a in all_diagrams(4):
        for _ in range(20):
            assert member_of(sample_point(a, rng), a)


def test_member_of_examples():
    q = SpherePoint(1, 0, 0)
    assert member_of((q, -q, p, p), D("()||"))
    assert not member_of((p, p, p, p), D("()||"))
    x = SpherePoint.from_stereographic(3, -1)
    assert member_of((p, p, p, x), D("|||>"))
    assert not member_of((p, p, x, x), D("|||>"))


def test_all_rays_witness_and_degenerate_dimension():
    rays = D("||||")
    assert witness_point(rays, rays) == (p,) * 4
    assert km_dimension(3, 3) == 1

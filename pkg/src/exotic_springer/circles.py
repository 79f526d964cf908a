"""Gluing two cup diagrams into a circle diagram, and what the result says about the intersection.

Gluing the reflection of ``a`` on top of ``b`` gives each vertex one top
connection and one bottom connection. Components are traversed by
alternating between the two sides; loose ends (rays and half-cups) are
never joined to one another.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Union

from . import kernels
from .diagrams import DOWN, UP, CupDiagram, Weight, enumerate_diagrams
from .errors import BadParametersError, BadPointError, SizeMismatchError

TOP = "top"
BOTTOM = "bottom"

CIRCLE = "circle"
RAY_RAY = "ray-ray"
RAY_HALF = "ray-half"
HALF_HALF = "half-half"


@dataclass(frozen=True)
class LooseEnd:
    vertex: int
    kind: str  # "ray" | "half"
    side: str  # TOP | BOTTOM

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "kind": self.kind, "side": self.side}


@dataclass(frozen=True)
class Component:
    """A connected component of a circle diagram.

    ``vertices`` is in traversal order, starting from a loose end for lines
    and from the leftmost vertex for circles.
    """

    vertices: tuple[int, ...]
    kind: str
    ends: tuple[LooseEnd, ...] = ()

    @property
    def leftmost(self) -> int:
        return min(self.vertices)

    @property
    def is_circle(self) -> bool:
        return self.kind == CIRCLE

    @property
    def propagating(self) -> bool:
        return len(self.ends) == 2 and self.ends[0].side != self.ends[1].side

    @property
    def free(self) -> bool:
        """True for circles and half-cup/half-cup lines (one sphere factor each)."""
        return self.kind in (CIRCLE, HALF_HALF)

    def to_json(self) -> dict:
        out = {"vertices": sorted(self.vertices), "kind": self.kind}
        if self.kind != CIRCLE:
            out["ends"] = [e.to_json() for e in self.ends]
            out["propagating"] = self.propagating
        return out

    def describe(self) -> str:
        verts = "{" + ",".join(map(str, sorted(self.vertices))) + "}"
        if self.is_circle:
            return f"circle {verts}"
        prop = "propagating" if self.propagating else "non-propagating"
        return f"{self.kind} line {verts} ({prop})"


@dataclass(frozen=True)
class CircleDiagram:
    top: CupDiagram
    bottom: CupDiagram
    components: tuple[Component, ...]

    @property
    def m(self) -> int:
        return self.top.m

    @property
    def circles(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.is_circle)

    @property
    def lines(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if not c.is_circle)

    def component_of(self, vertex: int) -> Component:
        for c in self.components:
            if vertex in c.vertices:
                return c
        raise KeyError(vertex)


def _check_sizes(a: CupDiagram, b: CupDiagram) -> None:
    if a.m != b.m:
        raise SizeMismatchError(f"diagrams have {a.m} and {b.m} vertices")


def _loose(diagram: CupDiagram, v: int, side: str) -> LooseEnd | None:
    if diagram.is_ray(v):
        return LooseEnd(v, "ray", side)
    if diagram.is_halfcup(v):
        return LooseEnd(v, "half", side)
    return None


def _walk(a: CupDiagram, b: CupDiagram, start: int, side: str) -> tuple[list[int], str]:
    """Follow cups from ``start``, leaving on ``side`` and alternating sides.

    Returns the vertex path and the side of the loose end where the walk
    stopped (for a circle: the side of the cup that closes it).
    """
    path = [start]
    v = start
    while True:
        diagram = a if side == TOP else b
        nxt = diagram.partner(v)
        if nxt is None or nxt == start:
            return path, side
        path.append(nxt)
        v = nxt
        side = BOTTOM if side == TOP else TOP


def glue(a: CupDiagram, b: CupDiagram) -> CircleDiagram:
    """The circle diagram with reflected ``a`` on top of ``b``."""
    _check_sizes(a, b)
    seen: set[int] = set()
    comps: list[Component] = []
    for v in range(1, a.m + 1):
        for diagram, side, other in ((a, TOP, BOTTOM), (b, BOTTOM, TOP)):
            if v in seen:
                break
            end = _loose(diagram, v, side)
            if end is None:
                continue
            path, last_side = _walk(a, b, v, other)
            far = _loose(a if last_side == TOP else b, path[-1], last_side)
            assert far is not None, (v, path)
            kinds = {end.kind, far.kind}
            kind = RAY_RAY if kinds == {"ray"} else HALF_HALF if kinds == {"half"} else RAY_HALF
            seen.update(path)
            comps.append(Component(tuple(path), kind, (end, far)))
    for v in range(1, a.m + 1):
        if v in seen:
            continue
        path, _ = _walk(a, b, v, TOP)
        assert len(path) % 2 == 0, path
        seen.update(path)
        comps.append(Component(tuple(path), CIRCLE))
    comps.sort(key=lambda c: c.leftmost)
    return CircleDiagram(a, b, tuple(comps))


# -- intersection report ------------------------------------------------------

@dataclass(frozen=True)
class IntersectionReport:
    nonempty: bool
    circles: int
    hh_lines: int
    offending: tuple[Component, ...] = ()

    @property
    def K(self) -> int:
        return self.circles + self.hh_lines

    @property
    def cohomology_dim(self) -> int:
        return 2 ** self.K if self.nonempty else 0

    def to_json(self) -> dict:
        return {
            "nonempty": self.nonempty,
            "circles": self.circles,
            "hhLines": self.hh_lines,
            "K": self.K,
            "dim": self.cohomology_dim,
            "offending": [sorted(c.vertices) for c in self.offending],
        }


def intersect(a: CupDiagram, b: CupDiagram) -> IntersectionReport:
    """Non-emptiness and sphere count of the intersection of the two components.

    Empty exactly when some ray/ray line has both rays on the same side.
    """
    cd = glue(a, b)
    offending = tuple(c for c in cd.lines if c.kind == RAY_RAY and not c.propagating)
    return IntersectionReport(
        nonempty=not offending,
        circles=len(cd.circles),
        hh_lines=sum(1 for c in cd.lines if c.kind == HALF_HALF),
        offending=offending,
    )


# -- orientations -------------------------------------------------------------

def _flip(s: str) -> str:
    return DOWN if s == UP else UP


def _orient_component(cd: CircleDiagram, comp: Component, first: str) -> dict[int, str]:
    """Alternate symbols along the traversal; every cup joins consecutive vertices."""
    out = {}
    s = first
    for v in comp.vertices:
        out[v] = s
        s = _flip(s)
    return out


def orientations(a: CupDiagram, b: CupDiagram) -> list[Weight]:
    """All weights orienting both ``a`` and ``b``, sorted with ``^`` < ``v``.

    Each free component (circle or half-cup/half-cup line) contributes a
    binary choice; every component containing a ray is forced.
    """
    cd = glue(a, b)
    if not intersect(a, b).nonempty:
        return []
    forced: dict[int, str] = {}
    free_choices: list[tuple[dict[int, str], dict[int, str]]] = []
    for comp in cd.components:
        if comp.free:
            free_choices.append((_orient_component(cd, comp, UP), _orient_component(cd, comp, DOWN)))
            continue
        ray_end = next(e for e in comp.ends if e.kind == "ray")
        start_symbol = UP
        # comp.vertices begins at ends[0]; re-anchor on the ray vertex
        idx = comp.vertices.index(ray_end.vertex)
        if idx % 2:
            start_symbol = DOWN
        assignment = _orient_component(cd, comp, start_symbol)
        for e in comp.ends:
            if e.kind == "ray":
                assert assignment[e.vertex] == UP, (comp, assignment)
        forced.update(assignment)
    out = []
    for pick in product(*free_choices):
        sym = dict(forced)
        for part in pick:
            sym.update(part)
        out.append(Weight("".join(sym[v] for v in range(1, a.m + 1))))
    out.sort()
    return out


def orients(gamma: Weight, a: CupDiagram) -> bool:
    """``gamma`` alternates across every cup of ``a`` and is ``^`` at every ray."""
    if gamma.m != a.m:
        raise SizeMismatchError(f"weight has length {gamma.m}, diagram has {a.m} vertices")
    if any(gamma[r] != UP for r in a.rays):
        return False
    return all(gamma[i] != gamma[j] for i, j in a.cups)


def orientations_bruteforce(a: CupDiagram, b: CupDiagram) -> list[Weight]:
    """Exhaustive filter over all 2^m weights (independent of the traversal)."""
    _check_sizes(a, b)
    pairs = [(i - 1, j - 1) for i, j in a.cups + b.cups]
    ray_mask = 0
    for r in set(a.rays) | set(b.rays):
        ray_mask |= 1 << (r - 1)
    masks = kernels.orienting_masks(a.m, pairs, ray_mask)
    out = [Weight("".join(DOWN if g >> v & 1 else UP for v in range(a.m))) for g in masks]
    out.sort()
    return out


def component_orientation(cd: CircleDiagram, gamma: Weight) -> list[tuple[Component, str]]:
    """Tag each component clockwise (leftmost vertex ``^``) or counterclockwise."""
    if not (orients(gamma, cd.top) and orients(gamma, cd.bottom)):
        raise BadParametersError(f"{gamma} does not orient the circle diagram")
    return [(c, "clockwise" if gamma[c.leftmost] == UP else "counterclockwise") for c in cd.components]


def km_dimension(m: int, k: int) -> int:
    """Sum over ordered pairs of components of dim H*(intersection)."""
    diagrams = enumerate_diagrams(m, k)
    return sum(len(orientations(a, b)) for a in diagrams for b in diagrams)


# -- sphere model -------------------------------------------------------------

@dataclass(frozen=True)
class SpherePoint:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a * self.a + self.b * self.b + self.c * self.c != 1:
            raise BadPointError(f"{self} is not on the unit sphere")

    def __neg__(self) -> "SpherePoint":
        return SpherePoint(-self.a, -self.b, -self.c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    @classmethod
    def from_stereographic(cls, u, v) -> "SpherePoint":
        """Inverse stereographic projection from the north pole."""
        u, v = Fraction(u), Fraction(v)
        n = u * u + v * v
        return cls(2 * u / (n + 1), 2 * v / (n + 1), (n - 1) / (n + 1))

    def to_json(self) -> list[str]:
        return [f"{x.numerator}/{x.denominator}" for x in self]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self) + ")"


NORTH = SpherePoint(0, 0, 1)
SEED = SpherePoint(1, 0, 0)


@dataclass(frozen=True)
class EmptyIntersection:
    offending: tuple[Component, ...] = field(default=())

    def __bool__(self) -> bool:
        return False

    def to_json(self) -> dict:
        return {"empty": True, "offending": [sorted(c.vertices) for c in self.offending]}


Witness = Union[tuple[SpherePoint, ...], EmptyIntersection]


def member_of(x, a: CupDiagram) -> bool:
    """Exact check of the cup relations x_j = -x_i and ray relations x_i = p."""
    if len(x) != a.m:
        raise SizeMismatchError(f"point has {len(x)} coordinates, diagram has {a.m} vertices")
    for pt in x:
        if not isinstance(pt, SpherePoint):
            raise BadPointError(f"{pt!r} is not a SpherePoint")
    if any(x[r - 1] != NORTH for r in a.rays):
        return False
    return all(x[j - 1] == -x[i - 1] for i, j in a.cups)


def witness_point(a: CupDiagram, b: CupDiagram, seed: SpherePoint = SEED) -> Witness:
    """An exact point in both sphere models, or the obstruction.

    Forced components are anchored at ``p``; every free component gets
    ``seed`` at its leftmost vertex. Signs propagate along cups.
    """
    report = intersect(a, b)
    if not report.nonempty:
        return EmptyIntersection(report.offending)
    cd = glue(a, b)
    x: dict[int, SpherePoint] = {}
    for comp in cd.components:
        if comp.free:
            anchor, value = comp.leftmost, seed
        else:
            anchor = next(e.vertex for e in comp.ends if e.kind == "ray")
            value = NORTH
        idx = comp.vertices.index(anchor)
        for pos, v in enumerate(comp.vertices):
            x[v] = value if (pos - idx) % 2 == 0 else -value
        if comp.is_circle:
            # closing cup joins last and first: the sign must flip once more
            assert x[comp.vertices[-1]] == -x[comp.vertices[0]]
    point = tuple(x[v] for v in range(1, a.m + 1))
    assert member_of(point, a) and member_of(point, b)
    return point


def all_diagrams(m: int) -> list[CupDiagram]:
    """Every cup diagram on m vertices, all k together."""
    out = []
    for k in range(m + 1):
        out.extend(enumerate_diagrams(m, k))
    return out



def random_sphere_point(rng: random.Random, bound: int = 20) -> SpherePoint:
    """Exact rational point from random rational stereographic coordinates."""
    u = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return SpherePoint.from_stereographic(u, v)


def sample_point(a: CupDiagram, rng: random.Random) -> tuple[SpherePoint, ...]:
    """A random point of the sphere model of ``a``: free choices at openers, ``p`` on rays."""
    x: list[SpherePoint] = [NORTH] * a.m
    for v in a.openers:
        x[v - 1] = random_sphere_point(rng)
    for i, j in a.cups:
        x[j - 1] = -x[i - 1]
    return tuple(x)

"""Static SVG and TikZ drawings of single or glued cup diagrams.

Vertices sit on a horizontal line inside a dotted frame, with cups hanging
below it; deeper nesting means a taller cup. Half-cups leave through the
right edge and dots are drawn as open circles. In a glued diagram the
first diagram is reflected above the line.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagrams import CupDiagram
from .errors import BadParametersError
from .homology import EnrichedCupDiagram

Point = tuple[float, float]

STEP = 0.5  # height per nesting level, in vertex spacings
SCALE = 40  # SVG pixels per unit
FORMATS = ("svg", "tikz")


def nesting_depths(a: CupDiagram) -> dict[int, int]:
    """Depth of each cup (keyed by left end) and half-cup (keyed by its vertex); innermost is 1."""
    depth: dict[int, int] = {}
    for i, j in sorted(a.cups, key=lambda c: c[1] - c[0]):
        inner = [depth[p] for p, q in a.cups if i < p and q < j]
        depth[i] = 1 + max(inner, default=0)
    for v in sorted(a.halfcups, reverse=True):
        inner = [depth[p] for p, _ in a.cups if p > v] + [depth[h] for h in a.halfcups if h > v]
        depth[v] = 1 + max(inner, default=0)
    return depth


@dataclass
class Scene:
    m: int
    height_below: float
    height_above: float = 0.0
    has_halfcups: bool = False
    paths: list[tuple[Point, list[tuple]]] = field(default_factory=list)
    dots: list[Point] = field(default_factory=list)

    @property
    def left(self) -> float:
        return 0.5

    @property
    def right(self) -> float:
        # extra room so half-cups visibly bend before leaving the frame
        return self.m + (1.0 if self.has_halfcups else 0.5)

    def add_diagram(self, a: CupDiagram, flip: bool = False, dotted: frozenset[int] = frozenset()) -> None:
        """Draw ``a`` below the line, or above it when ``flip`` is set."""
        s = 1.0 if flip else -1.0
        depth = nesting_depths(a)
        edge = self.height_above if flip else -self.height_below
        for i, j in a.cups:
            h = STEP * depth[i]
            c = s * h / 0.75  # a cubic through these controls peaks at 3/4 of c
            self.paths.append(((i, 0.0), [("C", (i, c), (j, c), (j, 0.0))]))
            if i in dotted:
                self.dots.append(((i + j) / 2, s * h))
        for v in a.rays:
            self.paths.append(((v, 0.0), [("L", (v, edge))]))
            if v in dotted:
                self.dots.append((v, edge / 2))
        for v in a.halfcups:
            y = s * STEP * depth[v]
            bend = (v + 0.5, y)
            self.paths.append(((v, 0.0), [("C", (v, y), (v, y), bend), ("L", (self.right, y))]))
            if v in dotted:
                self.dots.append(((bend[0] + self.right) / 2, y))

    # -- emitters -----------------------------------------------------------
    def svg(self) -> str:
        pad = 0.25
        x0, x1 = self.left - pad, self.right + pad
        y0, y1 = -self.height_above - pad, self.height_below + pad
        width, height = (x1 - x0) * SCALE, (y1 - y0) * SCALE

        def pt(p: Point) -> str:
            return f"{p[0] * SCALE:g},{-p[1] * SCALE + 0.0:g}"

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
            f'viewBox="{x0 * SCALE:g} {y0 * SCALE:g} {width:g} {height:g}">',
            f'<rect x="{self.left * SCALE:g}" y="{-self.height_above * SCALE + 0.0:g}" '
            f'width="{(self.right - self.left) * SCALE:g}" '
            f'height="{(self.height_above + self.height_below) * SCALE:g}" '
            'fill="none" stroke="black" stroke-dasharray="2,3"/>',
        ]
        for start, segs in self.paths:
            d = [f"M {pt(start)}"]
            for seg in segs:
                if seg[0] == "L":
                    d.append(f"L {pt(seg[1])}")
                else:
                    d.append(f"C {pt(seg[1])} {pt(seg[2])} {pt(seg[3])}")
            out.append(f'<path d="{" ".join(d)}" fill="none" stroke="black" stroke-width="1.5"/>')
        for v in range(1, self.m + 1):
            out.append(f'<circle cx="{v * SCALE:g}" cy="0" r="3" fill="black"/>')
        for p in self.dots:
            x, y = pt(p).split(",")
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="white" stroke="black" stroke-width="1.5"/>')
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def tikz(self) -> str:
        def pt(p: Point) -> str:
            return f"({p[0]:g},{p[1]:g})"

        out = [
            r"\begin{tikzpicture}[scale=0.8]",
            rf"\draw[dotted] {pt((self.left, -self.height_below))} rectangle {pt((self.right, self.height_above))};",
        ]
        for start, segs in self.paths:
            parts = [pt(start)]
            for seg in segs:
                if seg[0] == "L":
                    parts.append(f"-- {pt(seg[1])}")
                else:
                    parts.append(f".. controls {pt(seg[1])} and {pt(seg[2])} .. {pt(seg[3])}")
            out.append(rf"\draw[thick] {' '.join(parts)};")
        for v in range(1, self.m + 1):
            out.append(rf"\fill {pt((v, 0))} circle (2pt);")
        for p in self.dots:
            out.append(rf"\draw[thick, fill=white] {pt(p)} circle (2.5pt);")
        out.append(r"\end{tikzpicture}")
        return "\n".join(out) + "\n"

    def emit(self, fmt: str) -> str:
        if fmt == "svg":
            return self.svg()
        if fmt == "tikz":
            return self.tikz()
        raise BadParametersError(f"unknown drawing format {fmt!r}; use one of {FORMATS}")


def _height(a: CupDiagram) -> float:
    return STEP * (max(nesting_depths(a).values(), default=0) + 1)


def cup_scene(a: CupDiagram | EnrichedCupDiagram) -> Scene:
    if isinstance(a, EnrichedCupDiagram):
        base, dotted = a.base, a.dotted
    else:
        base, dotted = a, frozenset()
    scene = Scene(base.m, _height(base), has_halfcups=bool(base.halfcups))
    scene.add_diagram(base, dotted=dotted)
    return scene


def glued_scene(top: CupDiagram, bottom: CupDiagram) -> Scene:
    """``top`` reflected above the vertex line, ``bottom`` below it."""
    if top.m != bottom.m:
        raise BadParametersError(f"cannot glue diagrams on {top.m} and {bottom.m} vertices")
    scene = Scene(top.m, _height(bottom), _height(top), has_halfcups=bool(top.halfcups or bottom.halfcups))
    scene.add_diagram(top, flip=True)
    scene.add_diagram(bottom)
    return scene


def render(a: CupDiagram | EnrichedCupDiagram, fmt: str = "svg", glue: CupDiagram | None = None) -> str:
    if glue is not None:
        base = a.base if isinstance(a, EnrichedCupDiagram) else a
        return glued_scene(base, glue).emit(fmt)
    return cup_scene(a).emit(fmt)

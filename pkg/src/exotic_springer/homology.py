"""Enriched cup diagrams and the line diagram sums that form the standard homology basis."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Mapping

from .diagrams import (
    Bitableau,
    CupDiagram,
    enumerate_diagrams,
    from_bitableau,
    to_bitableau,
)
from .errors import BadParametersError, DegreeTooLargeError, ParseError

Subset = tuple[int, ...]


def format_subset(u: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(u))) + "}"


class LineDiagramVector:
    """An integer combination of line diagrams ``l_U`` on ``m`` vertices.

    Zero coefficients are dropped on construction. Keys are sorted tuples.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[Iterable[int], int] | None = None):
        self.m = m
        clean: dict[Subset, int] = {}
        for u, c in (terms or {}).items():
            key = tuple(sorted(u))
            if any(not 1 <= i <= m for i in key) or len(set(key)) != len(key):
                raise BadParametersError(f"{format_subset(key)} is not a subset of 1..{m}")
            clean[key] = clean.get(key, 0) + int(c)
        self.terms = {u: c for u, c in sorted(clean.items()) if c}

    def __add__(self, other: "LineDiagramVector") -> "LineDiagramVector":
        if self.m != other.m:
            raise BadParametersError("line diagrams on different vertex counts")
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = out.get(u, 0) + c
        return LineDiagramVector(self.m, out)

    def __neg__(self) -> "LineDiagramVector":
        return LineDiagramVector(self.m, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other: "LineDiagramVector") -> "LineDiagramVector":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "LineDiagramVector":
        return LineDiagramVector(self.m, {u: scalar * c for u, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LineDiagramVector) and (self.m, self.terms) == (other.m, other.terms)

    def __hash__(self):
        return hash((self.m, tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"LineDiagramVector({self.m}, {self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for u, c in self.terms.items():
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            if not out:
                out = ("-" if c < 0 else "") + f"{mag}l_{format_subset(u)}"
            else:
                out += (" - " if c < 0 else " + ") + f"{mag}l_{format_subset(u)}"
        return out

    @property
    def degrees(self) -> set[int]:
        """Homological degrees (twice the number of undotted lines) present."""
        return {2 * len(u) for u in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    def leading_term(self) -> tuple[Subset, int]:
        """Smallest ``U`` in the lexicographic order on same-size subsets.

        Assumes the vector is homogeneous.
        """
        if not self.is_homogeneous():
            raise BadParametersError("leading term needs a homogeneous vector")
        u = min(self.terms)
        return u, self.terms[u]

    def coefficient(self, u: Iterable[int]) -> int:
        return self.terms.get(tuple(sorted(u)), 0)

    def to_json(self) -> dict:
        return {"m": self.m, "terms": [{"U": list(u), "c": c} for u, c in self.terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "LineDiagramVector":
        return cls(data["m"], {tuple(t["U"]): t["c"] for t in data["terms"]})


def line_diagram(m: int, u: Iterable[int]) -> LineDiagramVector:
    return LineDiagramVector(m, {tuple(u): 1})


# -- enriched cup diagrams ----------------------------------------------------

@dataclass(frozen=True)
class EnrichedCupDiagram:
    """A cup diagram with dots; ``dotted`` holds defining vertices.

    A component's defining vertex is its left cup end, its ray vertex or its
    half-cup vertex. Every ray must be dotted.
    """

    base: CupDiagram
    dotted: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "dotted", frozenset(self.dotted))
        defining = set(self.base.rays) | set(self.base.openers)
        stray = self.dotted - defining
        if stray:
            raise BadParametersError(f"dots at {sorted(stray)} are not defining vertices of {self.base}")
        missing = set(self.base.rays) - self.dotted
        if missing:
            raise BadParametersError(f"rays {sorted(missing)} must be dotted")

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def undotted_cups(self) -> tuple[tuple[int, int], ...]:
        return tuple(c for c in self.base.cups if c[0] not in self.dotted)

    @property
    def undotted_halfcups(self) -> tuple[int, ...]:
        return tuple(v for v in self.base.halfcups if v not in self.dotted)

    @property
    def undotted_openers(self) -> tuple[int, ...]:
        return tuple(sorted([i for i, _ in self.undotted_cups] + list(self.undotted_halfcups)))

    @property
    def degree(self) -> int:
        return 2 * (len(self.undotted_cups) + len(self.undotted_halfcups))

    @property
    def word(self) -> str:
        out = []
        for v, ch in enumerate(self.base.word, start=1):
            out.append(ch + ("." if v in self.dotted else ""))
        return "".join(out)

    @classmethod
    def from_word(cls, word: str) -> "EnrichedCupDiagram":
        """Parse e.g. ``"(.)|.()>()>."``; a ``.`` dots the component defined at the preceding vertex."""
        if not re.fullmatch(r"([()|>]\.?)+", word):
            raise ParseError(f"malformed enriched diagram {word!r}")
        base_chars = []
        dotted = set()
        for ch in word:
            if ch == ".":
                dotted.add(len(base_chars))
            else:
                base_chars.append(ch)
        base = CupDiagram.from_word("".join(base_chars))
        right_ends = {j for _, j in base.cups}
        if dotted & right_ends:
            raise ParseError(f"dots belong after the left end of a cup: {word!r}")
        return cls(base, frozenset(dotted))

    def __str__(self) -> str:
        return self.word

    def to_json(self) -> dict:
        return {"m": self.m, "word": self.word, "degree": self.degree, "dotted": sorted(self.dotted)}


def line_diagram_sum(diagram: EnrichedCupDiagram) -> LineDiagramVector:
    """Signed sum over choices of one endpoint per undotted cup.

    Every undotted half-cup vertex is always included; the sign counts the
    right cup endpoints chosen.
    """
    halves = diagram.undotted_halfcups
    terms: dict[Subset, int] = {}
    for choice in product(*[(i, j) for i, j in diagram.undotted_cups]):
        rights = sum(1 for (i, j), v in zip(diagram.undotted_cups, choice) if v == j)
        terms[tuple(sorted(choice + halves))] = -1 if rights % 2 else 1
    return LineDiagramVector(diagram.m, terms)


def beta_map(a: CupDiagram, k: int) -> EnrichedCupDiagram:
    """Send ``a`` (degree ``2l``, ``l`` openers) to an enriched diagram with m-k cups and half-cups.

    The ``m-l-k`` largest left-row entries of ``a``'s bitableau move to the
    right row; the rebuilt diagram is dotted on rays and on every component
    touching a moved vertex.
    """
    m = a.m
    l = a.cups_plus_halfcups
    if k < 0 or k > m:
        raise BadParametersError(f"need 0 <= k <= m, got k={k}, m={m}")
    if l > m - k:
        raise DegreeTooLargeError(f"{a} has {l} cups and half-cups, more than m-k={m - k}")
    t = to_bitableau(a)
    n_move = m - l - k
    moved = t.left[len(t.left) - n_move:] if n_move else ()
    new_left = t.left[: len(t.left) - n_move]
    new = from_bitableau(Bitableau(new_left, tuple(sorted(t.right + moved))))
    dotted = set(new.rays)
    for v in moved:
        p = new.partner(v)
        dotted.add(v if p is None else min(v, p))
    return EnrichedCupDiagram(new, frozenset(dotted))


def standard_enriched(m: int, k: int, degree: int | None = None) -> list[EnrichedCupDiagram]:
    """Images of all diagrams with at most m-k openers under :func:`beta_map`.

    Ordered by degree, then by the undotted opener set. With ``degree``
    given, only that homological degree is returned.
    """
    if m < 1 or k < 0 or k > m:
        raise BadParametersError(f"need 0 <= k <= m and m >= 1, got m={m}, k={k}")
    levels = range(m - k + 1) if degree is None else [degree // 2]
    out = []
    for l in levels:
        if degree is not None and (degree % 2 or not 0 <= l <= m - k):
            raise BadParametersError(f"degree {degree} outside 0..{2 * (m - k)} or odd")
        out.extend(beta_map(a, k) for a in enumerate_diagrams(m, m - l))
    return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if mat[r][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][c]
        for r in range(rank + 1, nrows):
            f = mat[r][c]
            row = mat[r]
            top = mat[rank]
            for j in range(c, ncols):
                row[j] = (p * row[j] - f * top[j]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def sum_matrix(m: int, k: int, l: int) -> tuple[list[EnrichedCupDiagram], list[Subset], list[list[int]]]:
    """Rows: line diagram sums of standard diagrams of degree 2l; columns: l-subsets in lex order."""
    if m < 1 or k < 0 or k > m or not 0 <= l <= m - k:
        raise BadParametersError(f"need 0 <= l <= m-k, got m={m}, k={k}, l={l}")
    diagrams = standard_enriched(m, k, degree=2 * l)
    cols = list(combinations(range(1, m + 1), l))
    rows = []
    for d in diagrams:
        vec = line_diagram_sum(d)
        rows.append([vec.coefficient(u) for u in cols])
    return diagrams, cols, rows


def rank_check(m: int, k: int, l: int) -> int:
    """Exact rank of the degree-2l line diagram sums; equals C(m, l)."""
    _, _, rows = sum_matrix(m, k, l)
    return bareiss_rank(rows)


def betti_numbers(m: int, k: int) -> list[int]:
    """Even Betti numbers b_0, b_2, ..., b_2(m-k); odd ones vanish."""
    if m < 1 or k < 0 or k > m:
        raise BadParametersError(f"need 0 <= k <= m and m >= 1, got m={m}, k={k}")
    return [comb(m, i) for i in range(m - k + 1)]

"""One-boundary cup diagrams together with the weights and bitableaux that index them.

A cup diagram on ``m`` vertices is stored as a connection table: entry
``i - 1`` holds the partner vertex of ``i`` when ``i`` is a cup endpoint,
otherwise :data:`RAY` or :data:`HALF`. Vertices are numbered from 1.

The canonical text form uses one character per vertex::

    (  left end of a cup        |  ray
    )  right end of a cup       >  half-cup
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence, Union

from .errors import (
    BadIndexError,
    BadParametersError,
    CrossingError,
    DanglingCupError,
    HalfCupInsideCupError,
    NotAPartitionError,
    NotARayError,
    NotStandardError,
    ParseError,
    RayInsideCupError,
    RayRightOfHalfCupError,
    ShapeMismatchError,
)

RAY = 0
HALF = -1

UP = "^"
DOWN = "v"

_RAW_RAY = {"ray", "|"}
_RAW_HALF = {"half", "halfcup", "half-cup", ">"}

RawEntry = Union[int, str]


@dataclass(frozen=True)
class CupDiagram:
    """A validated one-boundary cup diagram.

    Construct through :func:`validate`, :meth:`from_word` or
    :func:`from_openers`; the constructor itself re-checks every invariant.
    """

    table: tuple[int, ...]

    def __post_init__(self):
        _check_table(self.table)

    # -- construction -------------------------------------------------------
    @classmethod
    def from_word(cls, word: str) -> "CupDiagram":
        return validate(parse_word(word))

    @classmethod
    def from_json(cls, data: dict) -> "CupDiagram":
        diagram = cls.from_word(data["word"])
        if "m" in data and data["m"] != diagram.m:
            raise ParseError(f"m={data['m']} does not match word {data['word']!r}")
        return diagram

    # -- basic data ---------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.table)

    @cached_property
    def word(self) -> str:
        chars = []
        for v, c in enumerate(self.table, start=1):
            if c == RAY:
                chars.append("|")
            elif c == HALF:
                chars.append(">")
            else:
                chars.append("(" if c > v else ")")
        return "".join(chars)

    @cached_property
    def cups(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, c) for v, c in enumerate(self.table, start=1) if c > v)

    @cached_property
    def rays(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.table, start=1) if c == RAY)

    @cached_property
    def halfcups(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.table, start=1) if c == HALF)

    @cached_property
    def openers(self) -> tuple[int, ...]:
        """Left cup endpoints together with half-cup vertices, sorted."""
        return tuple(v for v, c in enumerate(self.table, start=1) if c > v or c == HALF)

    @property
    def cups_plus_halfcups(self) -> int:
        return len(self.openers)

    @property
    def k(self) -> int:
        """The ``k`` with ``self`` in the diagram set of shape ((k),(m-k))."""
        return self.m - self.cups_plus_halfcups

    def partner(self, i: int) -> int | None:
        c = self.table[i - 1]
        return c if c > 0 else None

    def is_ray(self, i: int) -> bool:
        return self.table[i - 1] == RAY

    def is_halfcup(self, i: int) -> bool:
        return self.table[i - 1] == HALF

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "word": self.word,
            "openers": list(self.openers),
            "cups": [list(c) for c in self.cups],
            "rays": list(self.rays),
            "halfcups": list(self.halfcups),
        }

    def __str__(self) -> str:
        return self.word


def parse_word(word: str) -> list[RawEntry]:
    """Turn a diagram word into a raw connection table (no validation)."""
    if not word:
        raise ParseError("empty diagram word")
    table: list[RawEntry] = [0] * len(word)
    stack: list[int] = []
    for v, ch in enumerate(word, start=1):
        if ch == "|":
            table[v - 1] = "ray"
        elif ch == ">":
            table[v - 1] = "half"
        elif ch == "(":
            stack.append(v)
        elif ch == ")":
            if not stack:
                raise DanglingCupError(f"')' at vertex {v} has no matching '('")
            i = stack.pop()
            table[i - 1] = v
            table[v - 1] = i
        else:
            raise ParseError(f"unexpected character {ch!r} at vertex {v}")
    if stack:
        raise DanglingCupError(f"'(' at vertex {stack[-1]} is never closed")
    if not word:
        raise BadParametersError("a cup diagram needs at least one vertex")
    return table


def _normalize(raw: Sequence[RawEntry]) -> tuple[int, ...]:
    m = len(raw)
    out = []
    for v, entry in enumerate(raw, start=1):
        if isinstance(entry, str):
            key = entry.strip().lower()
            if key in _RAW_RAY:
                out.append(RAY)
            elif key in _RAW_HALF:
                out.append(HALF)
            else:
                raise BadIndexError(f"vertex {v}: invalid entry {entry!r}")
        elif isinstance(entry, int) and not isinstance(entry, bool):
            if not 1 <= entry <= m or entry == v:
                raise BadIndexError(f"vertex {v}: cup partner {entry} out of range 1..{m}")
            out.append(entry)
        else:
            raise BadIndexError(f"vertex {v}: invalid entry {entry!r}")
    return tuple(out)


def _check_table(table: tuple[int, ...]) -> None:
    m = len(table)
    for v, c in enumerate(table, start=1):
        if not isinstance(c, int) or c < HALF or c > m or c == v:
            raise BadIndexError(f"vertex {v}: invalid entry {c!r}")
        if c > 0 and table[c - 1] != v:
            raise DanglingCupError(f"cup {v}-{c} is not symmetric")
    cups = [(v, c) for v, c in enumerate(table, start=1) if c > v]
    for (i, j), (p, q) in combinations(cups, 2):
        if i < p < j < q or p < i < q < j:
            raise CrossingError(f"cups {i}-{j} and {p}-{q} cross")
    for i, j in cups:
        for v in range(i + 1, j):
            if table[v - 1] == RAY:
                raise RayInsideCupError(f"ray {v} lies inside cup {i}-{j}")
            if table[v - 1] == HALF:
                raise HalfCupInsideCupError(f"half-cup {v} lies inside cup {i}-{j}")
    rays = [v for v, c in enumerate(table, start=1) if c == RAY]
    halves = [v for v, c in enumerate(table, start=1) if c == HALF]
    if rays and halves and rays[-1] > halves[0]:
        raise RayRightOfHalfCupError(f"ray {rays[-1]} lies right of half-cup {halves[0]}")


def validate(raw: Sequence[RawEntry]) -> CupDiagram:
    """Validate a raw connection table.

    Entries may be a partner vertex (int), ``"ray"``/``"|"`` or
    ``"half"``/``">"``. Raises a :class:`~exotic_springer.errors.DiagramError`
    subclass naming the first violated invariant.
    """
    if len(raw) == 0:
        raise BadParametersError("a cup diagram needs at least one vertex")
    return CupDiagram(_normalize(raw))


def from_openers(m: int, openers: Iterable[int]) -> CupDiagram:
    """Bracket matching: openers push, other vertices close the top opener.

    Non-openers met with an empty stack become rays; openers left on the
    stack become half-cups.
    """
    opener_set = set(openers)
    if any(not 1 <= v <= m for v in opener_set):
        raise BadIndexError(f"opener outside 1..{m}")
    table = [HALF] * m
    stack: list[int] = []
    for v in range(1, m + 1):
        if v in opener_set:
            stack.append(v)
        elif stack:
            i = stack.pop()
            table[i - 1] = v
            table[v - 1] = i
        else:
            table[v - 1] = RAY
    return CupDiagram(tuple(table))


def enumerate_diagrams(m: int, k: int) -> list[CupDiagram]:
    """All cup diagrams of shape ((k),(m-k)), in lexicographic opener order."""
    if k < 0 or k > m:
        raise BadParametersError(f"need 0 <= k <= m, got m={m}, k={k}")
    return [from_openers(m, s) for s in combinations(range(1, m + 1), m - k)]


# -- bitableaux ---------------------------------------------------------------

@dataclass(frozen=True)
class Bitableau:
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        for row in (self.left, self.right):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise NotStandardError(f"row {row} is not strictly increasing")
        m = len(self.left) + len(self.right)
        if sorted(self.left + self.right) != list(range(1, m + 1)):
            raise NotStandardError(f"entries of {self} are not exactly 1..{m}")

    @property
    def m(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.left), len(self.right)

    def __str__(self) -> str:
        def row(r):
            return "(" + ",".join(map(str, r)) + ")"
        return f"({row(self.left)},{row(self.right)})"


def to_bitableau(a: CupDiagram) -> Bitableau:
    right = a.openers
    left = tuple(v for v in range(1, a.m + 1) if v not in set(right))
    return Bitableau(left, right)


def from_bitableau(t: Bitableau, shape: tuple[int, int] | None = None) -> CupDiagram:
    if shape is not None and tuple(shape) != t.shape:
        raise ShapeMismatchError(f"bitableau has shape {t.shape}, expected {tuple(shape)}")
    return from_openers(t.m, t.right)


# -- weights ------------------------------------------------------------------

_WEIGHT_ALIASES = {"^": UP, "∧": UP, "v": DOWN, "∨": DOWN, "V": DOWN}


@dataclass(frozen=True, order=True)
class Weight:
    """A string over ``^`` (wedge) and ``v`` (vee)."""

    symbols: str

    def __post_init__(self):
        try:
            norm = "".join(_WEIGHT_ALIASES[ch] for ch in self.symbols)
        except KeyError as exc:
            raise ParseError(f"invalid weight symbol {exc.args[0]!r}") from None
        if not norm:
            raise BadParametersError("empty weight")
        object.__setattr__(self, "symbols", norm)

    @property
    def m(self) -> int:
        return len(self.symbols)

    def count_up(self) -> int:
        return self.symbols.count(UP)

    def belongs_to(self, k: int) -> bool:
        """Membership in the weight set of type ((k),(m-k))."""
        return self.count_up() >= k

    def __getitem__(self, i: int) -> str:
        return self.symbols[i - 1]

    def __str__(self) -> str:
        return self.symbols


def all_weights(m: int, k: int = 0) -> list[Weight]:
    """Weights of length m with at least k up-symbols, sorted (``^`` < ``v``)."""
    if m < 1 or k < 0 or k > m:
        raise BadParametersError(f"need 0 <= k <= m and m >= 1, got m={m}, k={k}")
    out = []
    for n_down in range(m - k + 1):
        for downs in combinations(range(m), n_down):
            chars = [UP] * m
            for d in downs:
                chars[d] = DOWN
            out.append(Weight("".join(chars)))
    return sorted(out)


def cup_from_weight(alpha: Weight) -> CupDiagram:
    """Connect neighbouring ``v ^`` pairs by cups, repeatedly.

    Leftover ``^`` become rays, leftover ``v`` become half-cups.
    """
    m = alpha.m
    table = [0] * m
    stack: list[int] = []
    for v, s in enumerate(alpha.symbols, start=1):
        if s == DOWN:
            stack.append(v)
        elif stack:
            i = stack.pop()
            table[i - 1] = v
            table[v - 1] = i
        else:
            table[v - 1] = RAY
    for i in stack:
        table[i - 1] = HALF
    return CupDiagram(tuple(table))


# -- flag constraints ---------------------------------------------------------

@dataclass(frozen=True)
class CupRelation:
    """``F_j = z^(-power) F_(i-1)`` for a cup ``i - j``."""

    i: int
    j: int
    power: int

    def __str__(self) -> str:
        return f"F_{self.j} = z^-{self.power} F_{self.i - 1}"

    def to_json(self) -> dict:
        return {"type": "cup", "i": self.i, "j": self.j, "power": self.power}


@dataclass(frozen=True)
class RayRelation:
    """``F_i = F_(i-1) + span(e_basis_index)`` for a ray at ``i``."""

    i: int
    basis_index: int

    def __str__(self) -> str:
        return f"F_{self.i} = F_{self.i - 1} + span(e_{self.basis_index})"

    def to_json(self) -> dict:
        return {"type": "ray", "i": self.i, "basis_index": self.basis_index}


FlagConstraint = Union[CupRelation, RayRelation]


def ray_count(a: CupDiagram, i: int) -> int:
    """Number of rays at vertices ``<= i``; ``i`` must carry a ray."""
    if not 1 <= i <= a.m:
        raise BadIndexError(f"vertex {i} outside 1..{a.m}")
    if not a.is_ray(i):
        raise NotARayError(f"vertex {i} of {a.word} is not connected to a ray")
    return sum(1 for r in a.rays if r <= i)


def component_constraints(a: CupDiagram) -> list[FlagConstraint]:
    """Symbolic flag relations cutting out the component labelled by ``a``.

    Ordered by the flag index each relation fixes: ``j`` for a cup ``i - j``,
    ``i`` for a ray at ``i``.
    """
    out: list[tuple[int, FlagConstraint]] = []
    for i, j in a.cups:
        assert (j - i + 1) % 2 == 0, (i, j)
        out.append((j, CupRelation(i, j, (j - i + 1) // 2)))
    for i in a.rays:
        rho = ray_count(a, i)
        assert (i + rho) % 2 == 0, (i, rho)
        idx = (i + rho) // 2
        assert 1 <= idx <= a.m
        out.append((i, RayRelation(i, idx)))
    out.sort(key=lambda t: t[0])
    return [c for _, c in out]


# -- dimension formula --------------------------------------------------------

def _partition(parts: Sequence[int], name: str) -> list[int]:
    parts = list(parts)
    if any((not isinstance(p, int)) or p < 0 for p in parts):
        raise NotAPartitionError(f"{name}={parts} has negative or non-integer parts")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise NotAPartitionError(f"{name}={parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts.pop()
    return parts


def springer_fiber_dimension(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``2 * sum_i (i-1)(lam_i + mu_i) + |mu|``."""
    lam = _partition(lam, "lambda")
    mu = _partition(mu, "mu")
    n = max(len(lam), len(mu))
    lam += [0] * (n - len(lam))
    mu += [0] * (n - len(mu))
    return 2 * sum(i * (lam[i] + mu[i]) for i in range(n)) + sum(mu)


def diagram_count(m: int, k: int) -> int:
    if k < 0 or k > m:
        raise BadParametersError(f"need 0 <= k <= m, got m={m}, k={k}")
    return comb(m, m - k)

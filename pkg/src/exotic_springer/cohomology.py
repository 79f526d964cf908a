"""Exact arithmetic in Q[X_1..X_m] / <X_i^2, X_I : |I| = m-k+1>.

Elements are combinations of square-free monomials ``X_I`` with
``|I| <= m-k``; ``deg X_I = 2|I|``. Products that would leave this range
are dropped as soon as they are formed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from .diagrams import all_weights, cup_from_weight
from .errors import BadParametersError, ParameterMismatchError, ParseError

Monomial = tuple[int, ...]


def _check(m: int, k: int) -> None:
    if m < 1 or k < 0 or k > m:
        raise BadParametersError(f"need 0 <= k <= m and m >= 1, got m={m}, k={k}")


class RingElement:
    __slots__ = ("m", "k", "terms")

    def __init__(self, m: int, k: int, terms: Mapping[Iterable[int], object] | None = None):
        _check(m, k)
        self.m = m
        self.k = k
        acc: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            key = tuple(sorted(mono))
            if len(set(key)) != len(key):
                continue  # X_i^2 = 0
            if any(not 1 <= i <= m for i in key):
                raise BadParametersError(f"index outside 1..{m} in X{set(key)}")
            if len(key) > m - k:
                continue
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        self.terms = {u: c for u, c in sorted(acc.items(), key=lambda t: (len(t[0]), t[0])) if c}

    # -- constructors -------------------------------------------------------
    @classmethod
    def one(cls, m: int, k: int) -> "RingElement":
        return cls(m, k, {(): 1})

    @classmethod
    def generator(cls, m: int, k: int, i: int) -> "RingElement":
        return cls(m, k, {(i,): 1})

    @classmethod
    def monomial(cls, m: int, k: int, index_set: Iterable[int]) -> "RingElement":
        """``X_I`` as a ring element; zero when ``|I| > m-k``."""
        return cls(m, k, {tuple(index_set): 1})

    # -- arithmetic ---------------------------------------------------------
    def _same_ring(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement) or (self.m, self.k) != (other.m, other.k):
            raise ParameterMismatchError("elements live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = other * RingElement.one(self.m, self.k)
        self._same_ring(other)
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = out.get(u, 0) + c
        return RingElement(self.m, self.k, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.m, self.k, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElement(self.m, self.k, {u: c * other for u, c in self.terms.items()})
        self._same_ring(other)
        cap = self.m - self.k
        out: dict[Monomial, Fraction] = {}
        for u, c in self.terms.items():
            su = set(u)
            for v, d in other.terms.items():
                if len(u) + len(v) > cap or su.intersection(v):
                    continue
                key = tuple(sorted(u + v))
                out[key] = out.get(key, 0) + c * d
        return RingElement(self.m, self.k, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        out = RingElement.one(self.m, self.k)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = other * RingElement.one(self.m, self.k)
        return isinstance(other, RingElement) and (self.m, self.k, self.terms) == (other.m, other.k, other.terms)

    def __hash__(self):
        return hash((self.m, self.k, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree_part(self, degree: int) -> "RingElement":
        return RingElement(self.m, self.k, {u: c for u, c in self.terms.items() if 2 * len(u) == degree})

    def is_homogeneous(self) -> bool:
        return len({len(u) for u in self.terms}) <= 1

    # -- text / json --------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for u, c in self.terms.items():
            mono = "X{" + ",".join(map(str, u)) + "}"
            mag = abs(c)
            body = mono if mag == 1 else f"{mag}*{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"RingElement(m={self.m}, k={self.k}, {self})"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "terms": [{"I": list(u), "c": f"{c.numerator}/{c.denominator}"} for u, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RingElement":
        return cls(data["m"], data["k"], {tuple(t["I"]): Fraction(t["c"]) for t in data["terms"]})


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?P<mono>X\{(?P<idx>[\d,\s]*)\}|X(?P<single>\d+))?\s*""",
    re.VERBOSE,
)


def parse_element(text: str, m: int, k: int) -> RingElement:
    """Parse ``"3*X{1,3} - 1/2*X{2}"``; ``X{}`` is 1, ``X2`` means ``X{2}``, bare numbers are constants."""
    text = text.strip()
    if not text:
        raise ParseError("empty ring element")
    pos = 0
    terms: dict[Monomial, Fraction] = {}
    first = True
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"cannot parse ring element at {text[pos:]!r}")
        sign, coef, star, mono = match.group("sign", "coef", "star", "mono")
        if not first and sign is None:
            raise ParseError(f"missing '+' or '-' before {text[pos:]!r}")
        if coef is None and mono is None:
            raise ParseError(f"cannot parse ring element at {text[pos:]!r}")
        if star and mono is None:
            raise ParseError(f"dangling '*' in {text!r}")
        value = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            value = -value
        if mono is None:
            key: Monomial = ()
        elif match.group("single") is not None:
            key = (int(match.group("single")),)
        else:
            raw = match.group("idx").replace(" ", "")
            key = tuple(int(x) for x in raw.split(",")) if raw else ()
        if any(not 1 <= i <= m for i in key):
            raise ParseError(f"index outside 1..{m} in {mono}")
        product_ = RingElement(m, k, {(): value})
        for i in key:
            product_ = product_ * RingElement.generator(m, k, i)
        for u, c in product_.terms.items():
            terms[u] = terms.get(u, 0) + c
        first = False
        pos = match.end()
    return RingElement(m, k, terms)


def monomial_basis(m: int, k: int, degree: int | None = None) -> list[Monomial]:
    """Square-free index sets with ``|I| <= m-k`` (or of one degree ``2|I|``)."""
    _check(m, k)
    sizes = range(m - k + 1) if degree is None else [degree // 2]
    if degree is not None and (degree % 2 or not 0 <= degree // 2 <= m - k):
        return []
    return [c for s in sizes for c in combinations(range(1, m + 1), s)]


def poincare_polynomial(m: int, k: int) -> list[int]:
    """Coefficients of q^0, q^2, ..., q^(2(m-k)) counted from the monomial basis."""
    _check(m, k)
    coeffs = [0] * (m - k + 1)
    for mono in monomial_basis(m, k):
        coeffs[len(mono)] += 1
    assert coeffs == [comb(m, l) for l in range(m - k + 1)]
    return coeffs


def cell_generating_function(m: int, k: int) -> list[int]:
    """Sum over weights with at least k wedges of q^(2 * cups-plus-half-cups of its cup diagram)."""
    _check(m, k)
    coeffs = [0] * (m + 1)
    for alpha in all_weights(m, k):
        coeffs[cup_from_weight(alpha).cups_plus_halfcups] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def format_q_polynomial(coeffs: list[int]) -> str:
    """``[1, 4]`` -> ``"1 + 4q^2"`` (powers of q^2)."""
    parts = []
    for l, c in enumerate(coeffs):
        if c == 0:
            continue
        if l == 0:
            parts.append(str(c))
        else:
            parts.append(f"{'' if c == 1 else c}q^{2 * l}")
    return " + ".join(parts) if parts else "0"

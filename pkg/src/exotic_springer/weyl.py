"""Signed permutations acting on the graded pieces of the cohomology ring."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterator

from . import kernels
from .cohomology import monomial_basis
from .errors import BadParametersError, GroupTooLargeError, IndexOutOfRangeError, ParseError

DEFAULT_BRUTE_BOUND = 7


def brute_force_bound() -> int:
    raw = os.environ.get("EXOTIC_BRUTE_BOUND")
    if raw is None:
        return DEFAULT_BRUTE_BOUND
    try:
        return int(raw)
    except ValueError:
        raise BadParametersError(f"EXOTIC_BRUTE_BOUND must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class SignedPermutation:
    """``w(e_i) = eps_i * e_{pi(i)}``; ``pi`` and ``eps`` are 1-based tuples stored 0-indexed.

    Products compose right to left: ``(v * w)(i) = v(w(i))``.
    """

    m: int
    pi: tuple[int, ...]
    eps: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.pi) != self.m or len(self.eps) != self.m:
            raise BadParametersError("pi and eps must have length m")
        if sorted(self.pi) != list(range(1, self.m + 1)):
            raise BadParametersError(f"{self.pi} is not a permutation of 1..{self.m}")
        if any(e not in (1, -1) for e in self.eps):
            raise BadParametersError("signs must be +1 or -1")

    @classmethod
    def identity(cls, m: int) -> "SignedPermutation":
        return cls(m, tuple(range(1, m + 1)), (1,) * m, "e")

    @classmethod
    def generator(cls, i: int, m: int) -> "SignedPermutation":
        """``s_0`` negates index 1; ``s_i`` (i >= 1) swaps i and i+1."""
        if not 0 <= i < m:
            raise IndexOutOfRangeError(f"s{i} is not a generator for m={m}")
        pi = list(range(1, m + 1))
        eps = [1] * m
        if i == 0:
            eps[0] = -1
        else:
            pi[i - 1], pi[i] = pi[i], pi[i - 1]
        return cls(m, tuple(pi), tuple(eps), f"s{i}")

    @classmethod
    def from_window(cls, values: list[int], label: str | None = None) -> "SignedPermutation":
        m = len(values)
        return cls(m, tuple(abs(v) for v in values), tuple(1 if v > 0 else -1 for v in values), label)

    @classmethod
    def from_word(cls, word: str, m: int) -> "SignedPermutation":
        out = cls.identity(m)
        tokens = word.replace(",", " ").split()
        for tok in tokens:
            if tok == "e":
                continue
            mt = re.fullmatch(r"s_?(\d+)", tok)
            if not mt:
                raise ParseError(f"bad generator {tok!r} in {word!r}")
            out = out * cls.generator(int(mt.group(1)), m)
        return SignedPermutation(m, out.pi, out.eps, " ".join(tokens) or "e")

    @classmethod
    def parse(cls, text: str, m: int) -> "SignedPermutation":
        """Accept a generator word ``"s0 s1"`` or a window ``"2 -1 3 4"``."""
        text = text.strip()
        if not text or text == "e" or text[0] in "sS":
            return cls.from_word(text.lower(), m)
        try:
            values = [int(t) for t in text.replace(",", " ").split()]
        except ValueError:
            raise ParseError(f"cannot parse group element {text!r}") from None
        if len(values) != m:
            raise ParseError(f"window {text!r} has {len(values)} entries, expected {m}")
        if sorted(abs(v) for v in values) != list(range(1, m + 1)):
            raise ParseError(f"window {text!r} is not a signed permutation")
        return cls.from_window(values, text)

    def __call__(self, i: int) -> int:
        """Signed image of ``i``."""
        return self.eps[i - 1] * self.pi[i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if self.m != other.m:
            raise BadParametersError("signed permutations of different sizes")
        pi = tuple(self.pi[p - 1] for p in other.pi)
        eps = tuple(self.eps[p - 1] * e for p, e in zip(other.pi, other.eps))
        return SignedPermutation(self.m, pi, eps)

    def inverse(self) -> "SignedPermutation":
        pi = [0] * self.m
        eps = [1] * self.m
        for i, (p, e) in enumerate(zip(self.pi, self.eps), start=1):
            pi[p - 1] = i
            eps[p - 1] = e
        return SignedPermutation(self.m, tuple(pi), tuple(eps))

    def window(self) -> str:
        return " ".join(str(self(i)) for i in range(1, self.m + 1))

    def __str__(self) -> str:
        return self.label or self.window()

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.m + 1):
            if start in seen:
                continue
            cyc = []
            v = start
            while v not in seen:
                seen.add(v)
                cyc.append(v)
                v = self.pi[v - 1]
            out.append(tuple(cyc))
        return out


def group_elements(m: int) -> Iterator[SignedPermutation]:
    for pi in permutations(range(1, m + 1)):
        for eps in product((1, -1), repeat=m):
            yield SignedPermutation(m, pi, eps)


def group_order(m: int) -> int:
    return 2**m * factorial(m)


def _check_degree(m: int, k: int, l: int) -> None:
    if m < 1 or k < 0 or k > m:
        raise BadParametersError(f"need 0 <= k <= m and m >= 1, got m={m}, k={k}")
    if not 0 <= l <= m - k:
        raise BadParametersError(f"need 0 <= l <= m-k={m - k}, got l={l}")


def act_on_monomial(w: SignedPermutation, index_set) -> tuple[int, tuple[int, ...]]:
    """``w . X_I = sign * X_J``."""
    idx = tuple(index_set)
    if any(not 1 <= i <= w.m for i in idx) or len(set(idx)) != len(idx):
        raise IndexOutOfRangeError(f"{idx} is not a subset of 1..{w.m}")
    sign = 1
    for i in idx:
        sign *= w.eps[i - 1]
    return sign, tuple(sorted(w.pi[i - 1] for i in idx))


def character_value_bruteforce(m: int, k: int, l: int, w: SignedPermutation) -> int:
    """Trace on ``span{X_I : |I| = l}`` by summing over fixed subsets."""
    _check_degree(m, k, l)
    total = 0
    for idx in combinations(range(1, m + 1), l):
        sign, image = act_on_monomial(w, idx)
        if image == idx:
            total += sign
    return total


def character_value(m: int, k: int, l: int, w: SignedPermutation) -> int:
    """Coefficient of ``t^l`` in the product over cycles of ``1 + (cycle sign) t^len``."""
    _check_degree(m, k, l)
    if w.m != m:
        raise BadParametersError(f"element acts on {w.m} indices, expected {m}")
    poly = [1] + [0] * m
    for cyc in w.cycles():
        sigma = 1
        for i in cyc:
            sigma *= w.eps[i - 1]
        n = len(cyc)
        for d in range(m - n, -1, -1):
            poly[d + n] += sigma * poly[d]
    return poly[l]


def operator_matrix(w: SignedPermutation, k: int, l: int) -> list[list[int]]:
    """Matrix of ``w`` on the degree-2l monomial basis; column j is the image of basis vector j."""
    _check_degree(w.m, k, l)
    basis = monomial_basis(w.m, k, 2 * l)
    pos = {u: j for j, u in enumerate(basis)}
    mat = [[0] * len(basis) for _ in basis]
    for j, u in enumerate(basis):
        sign, image = act_on_monomial(w, u)
        mat[pos[image]][j] = sign
    return mat


@lru_cache(maxsize=None)
def _gram(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(map(tuple, kernels.character_gram(m)))


def inner_product(m: int, k: int, l: int, l2: int) -> Fraction:
    """Normalised full-group sum of ``chi_2l * chi_2l2``."""
    _check_degree(m, k, l)
    _check_degree(m, k, l2)
    bound = brute_force_bound()
    if m > bound:
        raise GroupTooLargeError(f"m={m} exceeds the brute-force bound {bound} (set EXOTIC_BRUTE_BOUND)")
    gram = _gram(m)
    return Fraction(gram[l][l2], group_order(m))


def inner_product_bruteforce(m: int, k: int, l: int, l2: int) -> Fraction:
    """Same sum via explicit fixed-subset traces; slow, for cross-checking."""
    total = 0
    for w in group_elements(m):
        total += character_value_bruteforce(m, k, l, w) * character_value_bruteforce(m, k, l2, w)
    return Fraction(total, group_order(m))


def character_table(m: int, k: int, degree: int, elements: list[SignedPermutation] | None = None) -> dict:
    if degree % 2:
        raise BadParametersError(f"odd degree {degree}: the cohomology is concentrated in even degrees")
    l = degree // 2
    _check_degree(m, k, l)
    if elements is None:
        elements = [SignedPermutation.identity(m)] + [SignedPermutation.generator(i, m) for i in range(m)]
    return {
        "m": m,
        "k": k,
        "degree": degree,
        "values": [{"w": str(w), "chi": character_value(m, k, l, w)} for w in elements],
    }


# -- Coxeter relations -----------------------------------------------------------


def coxeter_relations(m: int) -> list[tuple[str, str]]:
    """Pairs of words that must agree in the type C group."""
    rels = [(f"s{i} s{i}", "e") for i in range(m)]
    if m >= 2:
        rels.append(("s0 s1 s0 s1", "s1 s0 s1 s0"))
    for i in range(1, m - 1):
        rels.append((f"s{i} s{i + 1} s{i}", f"s{i + 1} s{i} s{i + 1}"))
    for i in range(m):
        for j in range(i + 2, m):
            rels.append((f"s{i} s{j}", f"s{j} s{i}"))
    return rels


@dataclass
class RelationReport:
    m: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"m": self.m, "ok": bool(self), "checked": self.checked, "failures": self.failures}


def _matrix_of_word(word: str, m: int, k: int, l: int) -> list[list[int]]:
    """Product of generator matrices (not of the composed permutation)."""
    size = comb(m, l)
    out = [[int(r == c) for c in range(size)] for r in range(size)]
    for tok in word.split():
        if tok == "e":
            continue
        g = operator_matrix(SignedPermutation.generator(int(tok[1:]), m), k, l)
        out = [[sum(out[r][t] * g[t][c] for t in range(size)) for c in range(size)] for r in range(size)]
    return out


def verify_generator_relations(m: int, k: int | None = None) -> RelationReport:
    """Check the Coxeter relations in the group and as operators on every graded piece."""
    if m < 1:
        raise BadParametersError(f"need m >= 1, got m={m}")
    report = RelationReport(m)
    ks = range(m + 1) if k is None else [k]
    for lhs, rhs in coxeter_relations(m):
        report.checked += 1
        if SignedPermutation.from_word(lhs, m) != SignedPermutation.from_word(rhs, m):
            report.failures.append(f"{lhs} != {rhs} in the group")
        for kk in ks:
            for l in range(m - kk + 1):
                report.checked += 1
                if _matrix_of_word(lhs, m, kk, l) != _matrix_of_word(rhs, m, kk, l):
                    report.failures.append(f"{lhs} != {rhs} on degree {2 * l} for k={kk}")
    return report

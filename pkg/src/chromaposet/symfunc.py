"""Exact symmetric functions of fixed degree in the m, p, e and s bases.

Every conversion goes through the monomial basis: the e, p and s functions
are expanded into monomials directly, and the inverse matrices are obtained
by exact Gauss-Jordan elimination over ``Fraction``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Mapping

from .partition import (
    Partition,
    automorphism_factor,
    dominates,
    parse_partition,
    partitions_of,
    transpose,
)

__all__ = [
    "Basis",
    "SymFunc",
    "TransitionMatrix",
    "transition",
    "e_in_m",
    "p_in_m",
    "s_in_m",
    "m_in_s",
    "kostka_number",
    "convert",
    "multiply",
    "is_nonneg_in",
    "newton_p_in_e",
    "jacobi_trudi_s_in_e",
    "exact_inverse",
]


class Basis(str, Enum):
    M = "m"
    P = "p"
    E = "e"
    S = "s"

    @classmethod
    def of(cls, value) -> "Basis":
        if isinstance(value, Basis):
            return value
        return cls(str(value).lower())


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(x)


class SymFunc:
    """A homogeneous symmetric function stored sparsely in one basis.

    Zero coefficients are never stored. Two instances compare equal when they
    represent the same function, whatever their bases.
    """

    __slots__ = ("degree", "basis", "coeffs", "_mkey")

    def __init__(self, degree: int, basis, coeffs: Mapping | None = None):
        self.degree = int(degree)
        self.basis = Basis.of(basis)
        clean: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.weight != self.degree:
                raise ValueError(f"{lam} does not partition {self.degree}")
            c = _as_fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {lam: c for lam, c in clean.items() if c}
        self._mkey = None

    @classmethod
    def basis_element(cls, basis, lam) -> "SymFunc":
        lam = Partition(lam)
        return cls(lam.weight, basis, {lam: 1})

    @classmethod
    def zero(cls, degree: int, basis="m") -> "SymFunc":
        return cls(degree, basis)

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def coefficient(self, lam) -> Fraction:
        return self[lam]

    def vector(self) -> list[Fraction]:
        """Coefficients in canonical partition order."""
        return [self.coeffs.get(lam, Fraction(0)) for lam in partitions_of(self.degree)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def to(self, basis) -> "SymFunc":
        return convert(self, basis)

    def _check_compatible(self, other: "SymFunc"):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_compatible(other)
        other = convert(other, self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.degree, self.basis, out)

    def __neg__(self):
        return SymFunc(self.degree, self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, float):
            raise TypeError("floating point scalars are not accepted")
        c = _as_fraction(other)
        return SymFunc(self.degree, self.basis, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def _m_key(self):
        if self._mkey is None:
            m = convert(self, Basis.M)
            self._mkey = (self.degree, tuple(sorted(m.coeffs.items())))
        return self._mkey

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return convert(other, self.basis).coeffs == self.coeffs

    def __hash__(self):
        return hash(self._m_key())

    def __repr__(self):
        return f"SymFunc({self.degree}, {self.basis.value!r}, {self.render()!r})"

    def __str__(self):
        return self.render()

    def render(self) -> str:
        """Text form such as ``m[2,1] + 6 m[1,1,1]``, terms in canonical order."""
        terms = []
        for lam in partitions_of(self.degree):
            c = self.coeffs.get(lam)
            if c is None:
                continue
            mag = abs(c)
            body = f"{self.basis.value}{lam}"
            if mag != 1:
                body = f"{mag} {body}"
            if not terms:
                terms.append(("-" + body) if c < 0 else body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis.value,
            "coeffs": {
                str(lam): str(self.coeffs[lam])
                for lam in partitions_of(self.degree)
                if lam in self.coeffs
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        coeffs = {parse_partition(k): Fraction(v) for k, v in data["coeffs"].items()}
        return cls(data["degree"], data["basis"], coeffs)


@dataclass(frozen=True)
class TransitionMatrix:
    """Row ``i`` expands the ``i``-th source basis element in the target basis.

    Rows and columns follow ``partitions_of(degree)``.
    """

    degree: int
    source: Basis
    target: Basis
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def index(self) -> tuple[Partition, ...]:
        return partitions_of(self.degree)

    def __getitem__(self, key) -> Fraction:
        lam, nu = key
        pos = _position(self.degree)
        return self.entries[pos[Partition(lam)]][pos[Partition(nu)]]

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if self.target != other.source or self.degree != other.degree:
            raise ValueError("incompatible transition matrices")
        return TransitionMatrix(
            self.degree, self.source, other.target, _matmul(self.entries, other.entries)
        )


@lru_cache(maxsize=None)
def _position(n: int) -> dict[Partition, int]:
    return {lam: i for i, lam in enumerate(partitions_of(n))}


def _matmul(a, b):
    k = len(b[0]) if b else 0
    return tuple(
        tuple(sum((row[t] * b[t][j] for t in range(len(b)) if row[t]), Fraction(0)) for j in range(k))
        for row in a
    )


def exact_inverse(matrix) -> tuple[tuple[Fraction, ...], ...]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        if p != 1:
            a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


# -- monomial expansions -----------------------------------------------------

def _poly_e(k: int, nvars: int) -> list[tuple[int, ...]]:
    out = []
    for subset in combinations(range(nvars), k):
        exp = [0] * nvars
        for i in subset:
            exp[i] = 1
        out.append(tuple(exp))
    return out


def _poly_p(k: int, nvars: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(nvars):
        exp = [0] * nvars
        exp[i] = k
        out.append(tuple(exp))
    return out


def _monomial_coefficient(factors: Iterable[list[tuple[int, ...]]], nu) -> int:
    """Coefficient of x^nu in a product of 0/1-coefficient polynomials.

    Monomials that do not divide x^nu are dropped after every factor.
    """
    nu = tuple(nu)
    states = {tuple([0] * len(nu)): 1}
    for poly in factors:
        nxt: dict[tuple[int, ...], int] = {}
        for exp, c in states.items():
            for mono in poly:
                new = tuple(a + b for a, b in zip(exp, mono))
                if all(x <= y for x, y in zip(new, nu)):
                    nxt[new] = nxt.get(new, 0) + c
        states = nxt
        if not states:
            return 0
    return states.get(nu, 0)


def _expansion_matrix(n: int, poly) -> tuple[tuple[Fraction, ...], ...]:
    parts = partitions_of(n)
    rows = []
    for lam in parts:
        row = []
        for nu in parts:
            l = len(nu)
            row.append(Fraction(_monomial_coefficient([poly(k, l) for k in lam], nu)))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def e_in_m(n: int) -> TransitionMatrix:
    return TransitionMatrix(n, Basis.E, Basis.M, _expansion_matrix(n, _poly_e))


@lru_cache(maxsize=None)
def p_in_m(n: int) -> TransitionMatrix:
    return TransitionMatrix(n, Basis.P, Basis.M, _expansion_matrix(n, _poly_p))


def _count_ssyt(shape, content) -> int:
    """Semistandard tableaux of the given shape and content, by backtracking."""
    shape = tuple(shape)
    remaining = list(content)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[r][c] = v
                total += fill(idx + 1)
                remaining[v - 1] += 1
        grid[r][c] = 0
        return total

    return fill(0)


def kostka_number(lam, nu) -> int:
    if sum(lam) != sum(nu):
        raise ValueError("shape and content must have the same weight")
    if not dominates(lam, nu):
        return 0
    return _count_ssyt(lam, nu)


@lru_cache(maxsize=None)
def s_in_m(n: int) -> TransitionMatrix:
    parts = partitions_of(n)
    rows = tuple(tuple(Fraction(_count_ssyt(lam, nu)) for nu in parts) for lam in parts)
    return TransitionMatrix(n, Basis.S, Basis.M, rows)


@lru_cache(maxsize=None)
def m_in_s(n: int) -> TransitionMatrix:
    return TransitionMatrix(n, Basis.M, Basis.S, exact_inverse(s_in_m(n).entries))


@lru_cache(maxsize=None)
def _m_in_e(n: int) -> TransitionMatrix:
    return TransitionMatrix(n, Basis.M, Basis.E, exact_inverse(e_in_m(n).entries))


@lru_cache(maxsize=None)
def _m_in_p(n: int) -> TransitionMatrix:
    return TransitionMatrix(n, Basis.M, Basis.P, exact_inverse(p_in_m(n).entries))


@lru_cache(maxsize=None)
def _identity(n: int, basis: Basis) -> TransitionMatrix:
    k = len(partitions_of(n))
    rows = tuple(tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k))
    return TransitionMatrix(n, basis, basis, rows)


_TO_M = {Basis.E: e_in_m, Basis.P: p_in_m, Basis.S: s_in_m}
_FROM_M = {Basis.E: _m_in_e, Basis.P: _m_in_p, Basis.S: m_in_s}


@lru_cache(maxsize=None)
def transition(n: int, source, target) -> TransitionMatrix:
    """Matrix taking ``source`` coefficient rows to ``target`` coefficients."""
    source, target = Basis.of(source), Basis.of(target)
    if source == target:
        return _identity(n, source)
    if source == Basis.M:
        return _FROM_M[target](n)
    if target == Basis.M:
        return _TO_M[source](n)
    return _TO_M[source](n) @ _FROM_M[target](n)


def convert(F: SymFunc, target) -> SymFunc:
    target = Basis.of(target)
    if F.basis == target:
        return F
    mat = transition(F.degree, F.basis, target)
    pos = _position(F.degree)
    parts = partitions_of(F.degree)
    out = [Fraction(0)] * len(parts)
    for lam, c in F.coeffs.items():
        row = mat.entries[pos[lam]]
        for j, x in enumerate(row):
            if x:
                out[j] += c * x
    return SymFunc(F.degree, target, {parts[j]: c for j, c in enumerate(out) if c})


def multiply(F: SymFunc, G: SymFunc) -> SymFunc:
    """Product; e and p are multiplicative, anything else goes through p."""
    if F.basis == G.basis and F.basis in (Basis.E, Basis.P):
        basis = F.basis
    else:
        basis = Basis.P
    a, b = convert(F, basis), convert(G, basis)
    out: dict[Partition, Fraction] = {}
    for lam, x in a.coeffs.items():
        for nu, y in b.coeffs.items():
            key = Partition._trusted(tuple(sorted(lam + nu, reverse=True)))
            out[key] = out.get(key, 0) + x * y
    return SymFunc(F.degree + G.degree, basis, out)


def is_nonneg_in(F: SymFunc, basis) -> bool:
    return all(c >= 0 for c in convert(F, basis).coeffs.values())


def newton_p_in_e(n: int) -> SymFunc:
    """p_n in the e basis via the Newton identity."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = {}
    for lam in partitions_of(n):
        l = len(lam)
        coeffs[lam] = Fraction((-1) ** (n - l) * n * factorial(l - 1), automorphism_factor(lam))
    return SymFunc(n, Basis.E, coeffs)


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def jacobi_trudi_s_in_e(lam) -> SymFunc:
    """s_lam as det(e_{lam^t_i - i + j}) expanded over permutations."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("partition must be nonempty")
    conj = transpose(lam)
    k = len(conj)
    out: dict[Partition, Fraction] = {}
    for perm in permutations(range(k)):
        idx = [conj[i] - i + perm[i] for i in range(k)]
        if any(x < 0 for x in idx):
            continue
        key = Partition._trusted(tuple(sorted((x for x in idx if x > 0), reverse=True)))
        out[key] = out.get(key, 0) + _perm_sign(perm)
    return SymFunc(lam.weight, Basis.E, out)

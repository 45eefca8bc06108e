"""Root-system substrate: simple types, Cartan matrices, reflections, positive roots.

Conventions
-----------
Simple roots are numbered 1..n as in Bourbaki/Humphreys.  The Cartan matrix is
stored with the coroot on the row index::

    a[i][j] = <alpha_j, alpha_i^vee>

so the simple reflection acts by ``s_i(alpha_j) = alpha_j - a[i][j] alpha_i``.
For G2 the long root is alpha_1, i.e. ``a[2][1] = -3``.

Everything is exact integer arithmetic.  Indices in the public interface are
1-based; ``CartanMatrix.rows`` is the raw 0-based tuple.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError, InvalidInputError

MAX_RANK = 16

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple (irreducible, finite) Cartan type such as ``A4`` or ``G2``."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in "ABCDEFG" or len(self.family) != 1:
            raise InvalidInputError(f"unknown Cartan family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidInputError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                raise InvalidInputError(f"type {self.family}{self.rank} does not exist")
        elif self.rank < _MIN_RANK[self.family]:
            raise InvalidInputError(
                f"type {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse ``"A4"``, ``"b3"``, ``"G2"``; the family letter is case-insensitive."""
        m = _TYPE_RE.match(text)
        if not m:
            raise InvalidInputError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanMatrix:
    type: SimpleType
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __call__(self, i: int, j: int) -> int:
        """Entry ``a[i][j] = <alpha_j, alpha_i^vee>`` with 1-based indices."""
        return self.rows[i - 1][j - 1]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)


@dataclass(frozen=True)
class Root:
    """An element of the root lattice in simple-root coordinates.

    Roots produced by this module are sign-coherent; arbitrary lattice vectors
    (used e.g. in property tests of ``reflect``) need not be.
    """

    coeffs: tuple[int, ...]

    @classmethod
    def simple(cls, n: int, i: int) -> "Root":
        v = [0] * n
        v[i - 1] = 1
        return cls(tuple(v))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_positive(self) -> bool:
        return any(self.coeffs) and all(c >= 0 for c in self.coeffs)

    def is_negative(self) -> bool:
        return any(self.coeffs) and all(c <= 0 for c in self.coeffs)

    def __neg__(self):
        return Root(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs, 1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign} {mag}a{k}")
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _edges(t: SimpleType) -> list[tuple[int, int]]:
    n, f = t.rank, t.family
    if f in "ABC":
        return [(k, k + 1) for k in range(1, n)]
    if f == "D":
        return [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    if f == "E":
        return [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
    if f == "F":
        return [(1, 2), (2, 3), (3, 4)]
    return [(1, 2)]


@lru_cache(maxsize=None)
def cartan_matrix(t: SimpleType) -> CartanMatrix:
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for k in range(n):
        a[k][k] = 2
    for i, j in _edges(t):
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    # the row of the shorter root carries the multiple bond
    if t.family == "B":
        a[n - 1][n - 2] = -2
    elif t.family == "C":
        a[n - 2][n - 1] = -2
    elif t.family == "F":
        a[2][1] = -2
    elif t.family == "G":
        a[1][0] = -3
    return CartanMatrix(t, tuple(tuple(row) for row in a))


def _check_index(c: CartanMatrix, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= c.n:
        raise InvalidInputError(f"simple root index {i!r} out of range 1..{c.n} for {c.type}")


def pairing(c: CartanMatrix, v: Root, i: int) -> int:
    """``<v, alpha_i^vee>`` for a lattice vector ``v``."""
    row = c.rows[i - 1]
    return sum(x * y for x, y in zip(row, v.coeffs))


def reflect(c: CartanMatrix, i: int, v: Root) -> Root:
    """Apply the simple reflection ``s_i`` to ``v``."""
    _check_index(c, i)
    if len(v.coeffs) != c.n:
        raise InvalidInputError(f"root has {len(v.coeffs)} coordinates, expected {c.n}")
    k = pairing(c, v, i)
    if k == 0:
        return v
    coeffs = list(v.coeffs)
    coeffs[i - 1] -= k
    return Root(tuple(coeffs))


def check_capacity(t: SimpleType) -> None:
    if t.rank > MAX_RANK:
        raise CapacityError(f"rank {t.rank} exceeds the supported maximum {MAX_RANK}")


@lru_cache(maxsize=None)
def positive_roots(t: SimpleType) -> frozenset[Root]:
    """All positive roots, by closing the simple roots under simple reflections."""
    check_capacity(t)
    c = cartan_matrix(t)
    n = c.n
    found = {Root.simple(n, i) for i in range(1, n + 1)}
    frontier = list(found)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, n + 1):
                w = reflect(c, i, v)
                if w.is_positive() and w not in found:
                    found.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(found)


def sorted_positive_roots(t: SimpleType) -> list[Root]:
    """Positive roots ordered by height, then coordinates."""
    return sorted(positive_roots(t), key=lambda r: (r.height, r.coeffs))

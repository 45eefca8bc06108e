"""Words in simple reflections and the Weyl-group elements they represent.

A ``WeylElement`` is stored as its integer action on the root lattice: column
``j`` of the action matrix is ``w(alpha_j)`` in simple-root coordinates.  Two
words give the same element iff the matrices agree, which makes equality and
hashing canonical.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

from . import kernels
from .errors import CapacityError, InvalidInputError
from .rootsys import (
    CartanMatrix,
    Root,
    SimpleType,
    cartan_matrix,
    check_capacity,
    positive_roots,
)

DEFAULT_CAPACITY = 10**6


@dataclass(frozen=True)
class Word:
    """A finite sequence of 1-based simple-reflection indices for ``type``.

    Reducedness is not part of the invariant; see :func:`is_reduced`.
    """

    letters: tuple[int, ...]
    type: SimpleType

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= self.type.rank:
                raise InvalidInputError(
                    f"letter {x!r} is not a simple root index of {self.type} (1..{self.type.rank})"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return ",".join(map(str, self.letters))

    def pretty(self) -> str:
        return "".join(f"s{x}" for x in self.letters) or "e"


_TOKEN_SPLIT = re.compile(r"[\s,]+")
_TOKEN = re.compile(r"^(s?)(\d+)$")


def parse_word(text: str, t: SimpleType) -> Word:
    """Parse ``"2,3,1,2"``, ``"2 3 1 2"`` or ``"s2 s3 s1 s2"``.

    The ``s`` prefix is optional but must be used on all letters or on none.
    An empty (or blank) string is the empty word.
    """
    stripped = text.strip().strip(",")
    if not stripped:
        return Word((), t)
    prefixed = set()
    letters = []
    for tok in _TOKEN_SPLIT.split(stripped):
        m = _TOKEN.match(tok.lower())
        if not m:
            raise InvalidInputError(f"cannot parse word letter {tok!r} in {text!r}")
        prefixed.add(bool(m.group(1)))
        letters.append(int(m.group(2)))
    if len(prefixed) > 1:
        raise InvalidInputError(f"mixed letter forms in {text!r}; use 's' on every letter or on none")
    return Word(tuple(letters), t)


@dataclass(frozen=True, eq=False)
class WeylElement:
    cartan: CartanMatrix
    action: tuple[int, ...]  # flat row-major n x n, column j = w(alpha_j)
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_key", (self.cartan.type, self.action))

    @classmethod
    def identity(cls, c: CartanMatrix) -> "WeylElement":
        n = c.n
        return cls(c, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def type(self) -> SimpleType:
        return self.cartan.type

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def matrix(self) -> list[list[int]]:
        n = self.cartan.n
        return [list(self.action[k * n:(k + 1) * n]) for k in range(n)]

    def times_simple(self, i: int) -> "WeylElement":
        """``w * s_i``."""
        c = self.cartan
        return WeylElement(c, tuple(kernels.right_multiply(self.action, c.flat(), c.n, i)))

    def apply(self, v: Root) -> Root:
        n = self.cartan.n
        a = self.action
        return Root(tuple(sum(a[k * n + j] * v.coeffs[j] for j in range(n)) for k in range(n)))

    def image_of_simple(self, i: int) -> Root:
        n = self.cartan.n
        return Root(tuple(self.action[k * n + i - 1] for k in range(n)))


def element_of(word: Word) -> WeylElement:
    """The product ``s_{b_1} ... s_{b_r}`` (empty word -> identity)."""
    w = WeylElement.identity(cartan_matrix(word.type))
    for i in word.letters:
        w = w.times_simple(i)
    return w


def length(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for a in positive_roots(w.type) if w.apply(a).is_negative())


def is_reduced(word: Word) -> bool:
    return length(element_of(word)) == len(word)


def right_descents(w: WeylElement) -> frozenset[int]:
    """Indices ``i`` with ``ell(w s_i) < ell(w)``, i.e. ``w(alpha_i) < 0``."""
    return frozenset(
        i for i in range(1, w.cartan.n + 1) if w.image_of_simple(i).is_negative()
    )


def reduced_words(w: WeylElement, capacity: int = DEFAULT_CAPACITY) -> set[Word]:
    """All reduced expressions of ``w``, by peeling off right descents."""
    check_capacity(w.type)
    memo: dict[WeylElement, list[tuple[int, ...]]] = {}
    identity = WeylElement.identity(w.cartan)

    def words(u):
        if u == identity:
            return [()]
        if u in memo:
            return memo[u]
        out = []
        for i in sorted(right_descents(u)):
            out.extend(p + (i,) for p in words(u.times_simple(i)))
            if len(out) > capacity:
                raise CapacityError(f"more than {capacity} reduced words")
        memo[u] = out
        return out

    return {Word(x, w.type) for x in words(w)}


def all_reduced_words(
    t: SimpleType, max_len: int, capacity: int = DEFAULT_CAPACITY
) -> Iterator[Word]:
    """Yield every reduced word of length <= ``max_len`` once, lexicographically.

    Depth-first: a reduced prefix ``u`` extends by ``i`` iff ``u(alpha_i) > 0``.
    """
    if max_len < 0:
        raise InvalidInputError(f"length bound must be >= 0, got {max_len}")
    check_capacity(t)
    c = cartan_matrix(t)
    flat, n = c.flat(), c.n
    count = 0

    def walk(prefix, action):
        nonlocal count
        count += 1
        if count > capacity:
            raise CapacityError(f"more than {capacity} reduced words of length <= {max_len}")
        yield Word(prefix, t)
        if len(prefix) == max_len:
            return
        for i in range(1, n + 1):
            if kernels.column_positive(action, n, i):
                yield from walk(prefix + (i,), kernels.right_multiply(action, flat, n, i))

    yield from walk((), WeylElement.identity(c).action)


def longest_element(t: SimpleType) -> WeylElement:
    """``w_0``, grown greedily: extend while some simple root stays positive."""
    c = cartan_matrix(t)
    w = WeylElement.identity(c)
    while True:
        for i in range(1, c.n + 1):
            if w.image_of_simple(i).is_positive():
                w = w.times_simple(i)
                break
        else:
            return w


def is_coxeter_type(word: Word) -> bool:
    """Pairwise distinct letters and at most ``rank`` of them."""
    return len(set(word.letters)) == len(word.letters) <= word.type.rank

"""The strictly upper triangular matrix of Cartan integers attached to a word.

For a word ``b_1 ... b_r`` the entry in row ``i``, column ``j > i`` is
``<b_j, b_i^vee>``, read straight off the Cartan matrix.  Raw matrices (typed
in by hand, no word behind them) go through :func:`parse_matrix` and obey the
same entry rules.  All row/column indices exposed here are 1-based.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from . import kernels
from .errors import InvalidInputError, MatrixValidationError
from .rootsys import CartanMatrix
from .weyl import Word

ALLOWED_ENTRIES = frozenset({2, 0, -1, -2, -3})


@dataclass(frozen=True)
class EtaProfile:
    row: int
    eta_plus: tuple[int, ...]
    eta_minus: tuple[int, ...]
    s: Optional[int]
    window_minus: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class BetaMatrix:
    """``rows[i][j]`` (0-based) holds the entry for positions ``i+1 < j+1``.

    ``word`` is set for word-derived matrices and ``None`` for raw ones.
    """

    rows: tuple[tuple[int, ...], ...]
    word: Optional[Word] = None

    def __post_init__(self):
        r = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != r:
                raise MatrixValidationError(
                    f"row {i + 1} has {len(row)} entries, expected {r} (matrix must be square)",
                    row=i + 1,
                )
            for j, x in enumerate(row):
                if j <= i and x != 0:
                    raise MatrixValidationError(
                        f"nonzero entry {x} at row {i + 1}, column {j + 1} on or below the diagonal",
                        row=i + 1, col=j + 1,
                    )
                if x not in ALLOWED_ENTRIES:
                    raise MatrixValidationError(
                        f"entry {x} at row {i + 1}, column {j + 1} is not one of 2, 0, -1, -2, -3",
                        row=i + 1, col=j + 1,
                    )

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def is_raw(self) -> bool:
        return self.word is None

    def __call__(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, BetaMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def flat(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @cached_property
    def profiles(self) -> tuple[EtaProfile, ...]:
        return tuple(eta_profile(self, i) for i in range(1, self.r + 1))

    def render(self) -> str:
        return render_matrix(self)

    def pretty(self) -> str:
        return pretty_matrix(self)


def beta_matrix(word: Word, c: CartanMatrix) -> BetaMatrix:
    if word.type != c.type:
        raise InvalidInputError(f"word is over {word.type} but the Cartan matrix is {c.type}")
    r = len(word)
    flat = kernels.word_beta(c.flat(), c.n, word.letters)
    rows = tuple(tuple(flat[i * r:(i + 1) * r]) for i in range(r))
    return BetaMatrix(rows, word)


_ROW_SPLIT = re.compile(r"[;\n]")
_ENTRY_SPLIT = re.compile(r"[\s,]+")


def parse_matrix(text: str) -> BetaMatrix:
    """Parse rows separated by ``;`` or newlines, entries by whitespace or commas."""
    rows = []
    for line in _ROW_SPLIT.split(text):
        line = line.strip().strip(",")
        if not line:
            continue
        try:
            rows.append(tuple(int(tok) for tok in _ENTRY_SPLIT.split(line)))
        except ValueError:
            raise MatrixValidationError(
                f"row {len(rows) + 1} is not a list of integers: {line!r}", row=len(rows) + 1
            ) from None
    if not rows:
        raise MatrixValidationError("empty matrix")
    return BetaMatrix(tuple(rows))


def render_matrix(m: BetaMatrix) -> str:
    """Inverse of :func:`parse_matrix`: one row per line, space separated."""
    return "\n".join(" ".join(str(x) for x in row) for row in m.rows)


def pretty_matrix(m: BetaMatrix) -> str:
    """Bracketed, right-aligned layout with the zero lower triangle shown."""
    if m.r == 0:
        return "[ ]"
    width = max(len(str(x)) for row in m.rows for x in row)
    lines = []
    for row in m.rows:
        lines.append("[ " + "  ".join(str(x).rjust(width) for x in row) + " ]")
    return "\n".join(lines)


def eta_profile(m: BetaMatrix, i: int) -> EtaProfile:
    if not isinstance(i, int) or not 1 <= i <= m.r:
        raise InvalidInputError(f"row {i!r} out of range 1..{m.r}")
    row = m.rows[i - 1]
    plus = tuple(j for j in range(i + 1, m.r + 1) if row[j - 1] > 0)
    minus = tuple(j for j in range(i + 1, m.r + 1) if row[j - 1] < 0)
    s = plus[0] if plus else None
    window = tuple(j for j in minus if j < s) if s is not None else ()
    return EtaProfile(i, plus, minus, s, window)

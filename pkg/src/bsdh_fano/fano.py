"""Fano / weak Fano classification by two independent routes.

Route 1 checks the row conditions N^I_i and N^II_i on the matrix of Cartan
integers.  Route 2 evaluates the anticanonical divisor on the extremal
generators of the Mori cone,

    d_i = -K . [C~_i] = 2 + sum_{i<j<s(i)} b_ij   (s(i) exists)
    d_i = -K . [C_i]  = 2 + sum_{j>i} b_ij        (otherwise)

and reads ampleness / nefness off the signs.  For reduced words -K is big,
so nef means weak Fano.  The audit runs both routes over every reduced word
up to a length bound and reports any disagreement.
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import kernels
from .betamat import BetaMatrix, EtaProfile, beta_matrix, eta_profile
from .errors import CapacityError, InvalidInputError, NotReducedError
from .rigidity import RigidityFlags, rigidity_report
from .rootsys import SimpleType, cartan_matrix, check_capacity
from .weyl import DEFAULT_CAPACITY, Word, all_reduced_words, element_of, length


class FanoClass(enum.IntEnum):
    """Ordered so that ``FANO > WEAK_FANO_ONLY > NOT_WEAK_FANO``."""

    NOT_WEAK_FANO = 0
    WEAK_FANO_ONLY = 1
    FANO = 2

    @property
    def tag(self) -> str:
        return _TAGS[self]

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def is_weak_fano(self) -> bool:
        return self >= FanoClass.WEAK_FANO_ONLY

    @classmethod
    def from_tag(cls, tag: str) -> "FanoClass":
        for k, v in _TAGS.items():
            if v == tag:
                return k
        raise ValueError(f"unknown class tag {tag!r}")


_TAGS = {
    FanoClass.FANO: "Fano",
    FanoClass.WEAK_FANO_ONLY: "WeakFanoOnly",
    FanoClass.NOT_WEAK_FANO: "NotWeakFano",
}
_LABELS = {
    FanoClass.FANO: "Fano",
    FanoClass.WEAK_FANO_ONLY: "weak Fano (not Fano)",
    FanoClass.NOT_WEAK_FANO: "not weak Fano",
}


@dataclass(frozen=True)
class ClauseCheck:
    """Outcome of one row condition, with the evidence behind it.

    ``entries`` lists the ``(row, column, value)`` triples the verdict rests
    on: the offending ones on failure, the ones that satisfied it otherwise.
    """

    condition: str
    row: int
    holds: bool
    case: str
    detail: str
    entries: tuple[tuple[int, int, int], ...] = ()

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {
            "condition": self.condition,
            "row": self.row,
            "holds": self.holds,
            "case": self.case,
            "detail": self.detail,
            "entries": [list(e) for e in self.entries],
        }


@dataclass(frozen=True)
class ConditionVerdict:
    row: int
    holds_NI: bool
    holds_NII: bool
    witness_NI: ClauseCheck
    witness_NII: ClauseCheck

    def to_dict(self):
        return {
            "row": self.row,
            "holds_NI": self.holds_NI,
            "holds_NII": self.holds_NII,
            "witness": {"NI": self.witness_NI.to_dict(), "NII": self.witness_NII.to_dict()},
        }


def _entries(m: BetaMatrix, i: int, cols) -> tuple[tuple[int, int, int], ...]:
    return tuple((i, j, m(i, j)) for j in cols)


def condition_NI(m: BetaMatrix, i: int) -> ClauseCheck:
    p = eta_profile(m, i)
    if not p.eta_plus:
        neg = _entries(m, i, p.eta_minus)
        if len(neg) == 0:
            return ClauseCheck("NI", i, True, "Case 1", "no positive and no negative entries")
        if len(neg) == 1 and neg[0][2] == -1:
            return ClauseCheck("NI", i, True, "Case 1", "single negative entry equal to -1", neg)
        if len(neg) == 1:
            return ClauseCheck("NI", i, False, "Case 1", f"single negative entry is {neg[0][2]}, needs -1", neg)
        return ClauseCheck("NI", i, False, "Case 1", f"|eta-| = {len(neg)}, needs <= 1", neg)
    win = _entries(m, i, p.window_minus)
    if len(p.eta_plus) != 1:
        return ClauseCheck(
            "NI", i, False, "Case 2",
            f"|eta+| = {len(p.eta_plus)}, needs exactly 1",
            _entries(m, i, p.eta_plus),
        )
    if len(win) != 1:
        return ClauseCheck(
            "NI", i, False, "Case 2",
            f"|eta-(i,s(i))| = {len(win)} with s(i) = {p.s}, needs exactly 1", win,
        )
    if win[0][2] != -1:
        return ClauseCheck(
            "NI", i, False, "Case 2",
            f"window entry is {win[0][2]} with s(i) = {p.s}, needs -1", win,
        )
    return ClauseCheck("NI", i, True, "Case 2", f"s(i) = {p.s}, single window entry -1", win)


def condition_NII(m: BetaMatrix, i: int) -> ClauseCheck:
    p = eta_profile(m, i)
    if p.eta_plus:
        case, cols, what = "Case 2", p.window_minus, f"|eta-(i,s(i))| with s(i) = {p.s}"
    else:
        case, cols, what = "Case 1", p.eta_minus, "|eta-|"
    neg = _entries(m, i, cols)
    k = len(neg)
    if k == 0:
        return ClauseCheck("NII", i, True, case, f"{what} = 0")
    if k == 1:
        v = neg[0][2]
        ok = v in (-1, -2)
        detail = f"{what} = 1, entry {v}" + ("" if ok else ", needs -1 or -2")
        return ClauseCheck("NII", i, ok, case, detail, neg)
    if k == 2:
        ok = all(e[2] == -1 for e in neg)
        detail = f"{what} = 2, entries {neg[0][2]}, {neg[1][2]}" + ("" if ok else ", needs both -1")
        return ClauseCheck("NII", i, ok, case, detail, neg)
    return ClauseCheck("NII", i, False, case, f"{what} = {k}, needs <= 2", neg)


def verdicts(m: BetaMatrix) -> tuple[ConditionVerdict, ...]:
    out = []
    for i in range(1, m.r + 1):
        a, b = condition_NI(m, i), condition_NII(m, i)
        out.append(ConditionVerdict(i, a.holds, b.holds, a, b))
    return tuple(out)


def satisfies_condition(m: BetaMatrix, which: str) -> bool:
    if which == "I":
        check = condition_NI
    elif which == "II":
        check = condition_NII
    else:
        raise InvalidInputError(f"condition must be 'I' or 'II', got {which!r}")
    return all(check(m, i).holds for i in range(1, m.r + 1))


def failing_rows(m: BetaMatrix, which: str) -> list[int]:
    check = condition_NI if which == "I" else condition_NII
    return [i for i in range(1, m.r + 1) if not check(m, i).holds]


def curve_divisor_pairing(m: BetaMatrix) -> list[list[int]]:
    """``[C_i] . [D_j]``: 0 below the diagonal, 2 on it, ``b_ij`` above."""
    r = m.r
    return [[2 if i == j else (m.rows[i][j] if i < j else 0) for j in range(r)] for i in range(r)]


def anticanonical_degrees(m: BetaMatrix) -> tuple[int, ...]:
    d = []
    for p in m.profiles:
        row = m.rows[p.row - 1]
        stop = p.s if p.s is not None else m.r + 1
        d.append(2 + sum(row[p.row:stop - 1]))
    return tuple(d)


def degrees_from_pairing(m: BetaMatrix) -> tuple[int, ...]:
    """Degrees as ``-K.[C_i] - -K.[C_s(i)]`` with ``-K = sum_j D_j``.

    Agrees with :func:`anticanonical_degrees` for word-derived matrices; for
    raw matrices whose rows do not repeat past ``s(i)`` the two can differ.
    """
    pair = curve_divisor_pairing(m)
    on_curve = [sum(row) for row in pair]
    return tuple(
        on_curve[p.row - 1] - (on_curve[p.s - 1] if p.s is not None else 0)
        for p in m.profiles
    )


def _class_from_min_degree(low: int) -> FanoClass:
    if low >= 1:
        return FanoClass.FANO
    if low == 0:
        return FanoClass.WEAK_FANO_ONLY
    return FanoClass.NOT_WEAK_FANO


def classify_by_degrees(m: BetaMatrix) -> FanoClass:
    return _class_from_min_degree(min(anticanonical_degrees(m), default=2))


def classify_by_conditions(m: BetaMatrix) -> FanoClass:
    if satisfies_condition(m, "I"):
        return FanoClass.FANO
    if satisfies_condition(m, "II"):
        return FanoClass.WEAK_FANO_ONLY
    return FanoClass.NOT_WEAK_FANO


@dataclass(frozen=True)
class ClassificationReport:
    matrix: BetaMatrix
    profiles: tuple[EtaProfile, ...]
    verdicts: tuple[ConditionVerdict, ...]
    degrees: tuple[int, ...]
    class_by_conditions: FanoClass
    class_by_degrees: FanoClass
    word: Optional[Word] = None
    rigidity: Optional[RigidityFlags] = None

    @property
    def agreement(self) -> bool:
        return self.class_by_conditions == self.class_by_degrees

    @property
    def formal(self) -> bool:
        """True for raw matrices: the arithmetic holds, bigness of -K is not known."""
        return self.word is None

    @property
    def condition_I(self) -> bool:
        return all(v.holds_NI for v in self.verdicts)

    @property
    def condition_II(self) -> bool:
        return all(v.holds_NII for v in self.verdicts)

    @property
    def min_degree(self) -> Optional[int]:
        return min(self.degrees, default=None)


def _report(m: BetaMatrix, word: Optional[Word]) -> ClassificationReport:
    vs = verdicts(m)
    cond_I = all(v.holds_NI for v in vs)
    if cond_I:
        by_cond = FanoClass.FANO
    elif all(v.holds_NII for v in vs):
        by_cond = FanoClass.WEAK_FANO_ONLY
    else:
        by_cond = FanoClass.NOT_WEAK_FANO
    return ClassificationReport(
        matrix=m,
        profiles=m.profiles,
        verdicts=vs,
        degrees=anticanonical_degrees(m),
        class_by_conditions=by_cond,
        class_by_degrees=classify_by_degrees(m),
        word=word,
        rigidity=rigidity_report(word, cond_I) if word is not None else None,
    )


def classify(word: Word) -> ClassificationReport:
    """Full report for a reduced word; non-reduced words are refused."""
    ell = length(element_of(word))
    if ell != len(word):
        raise NotReducedError(word, ell)
    return _report(beta_matrix(word, cartan_matrix(word.type)), word)


def analyze_matrix(m: BetaMatrix) -> ClassificationReport:
    """Condition and degree arithmetic on a raw matrix (formal mode)."""
    return _report(m, m.word)


def classify_all(t: SimpleType, max_len: int, capacity: int = DEFAULT_CAPACITY) -> Iterator[ClassificationReport]:
    """Reports for every reduced word of length <= max_len, ordered by (length, word)."""
    words = sorted(all_reduced_words(t, max_len, capacity), key=lambda w: (len(w), w.letters))
    for w in words:
        yield _report(beta_matrix(w, cartan_matrix(t)), w)


@dataclass(frozen=True)
class Divergence:
    word: Word
    class_by_conditions: FanoClass
    class_by_degrees: FanoClass
    verdicts: tuple[ConditionVerdict, ...]
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class AuditReport:
    type: SimpleType
    max_len: int
    words_checked: int
    divergences: tuple[Divergence, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.divergences


def _survey_part(args):
    flat, n, max_len, capacity, first = args
    return kernels.survey(flat, n, max_len, capacity, first)


def audit(t: SimpleType, max_len: int, capacity: int = DEFAULT_CAPACITY, jobs: int = 1) -> AuditReport:
    """Compare the two classification routes on every reduced word of length <= max_len.

    With ``jobs > 1`` the search is split by first letter across processes;
    the result does not depend on the split.
    """
    if max_len < 0:
        raise InvalidInputError(f"length bound must be >= 0, got {max_len}")
    check_capacity(t)
    c = cartan_matrix(t)
    flat, n = c.flat(), c.n
    if jobs <= 1:
        rows = kernels.survey(flat, n, max_len, capacity, 0)
    else:
        rows = [((), 2, 2)]
        parts = [(flat, n, max_len, capacity, i) for i in range(1, n + 1)]
        with ProcessPoolExecutor(max_workers=min(jobs, n)) as ex:
            for part in ex.map(_survey_part, parts):
                rows.extend(part)
    if len(rows) > capacity:
        raise CapacityError(f"more than {capacity} reduced words of length <= {max_len} in {t}")
    divergences = []
    for letters, cond, deg in rows:
        if cond != deg:
            rep = classify(Word(letters, t))
            divergences.append(Divergence(
                rep.word, rep.class_by_conditions, rep.class_by_degrees, rep.verdicts, rep.degrees,
            ))
    divergences.sort(key=lambda d: (len(d.word), d.word.letters))
    return AuditReport(t, max_len, len(rows), tuple(divergences))

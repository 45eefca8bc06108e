import pytest
from hypothesis import given, settings

from bsdh_fano import _pykernels, kernels
from bsdh_fano.betamat import beta_matrix
from bsdh_fano.fano import anticanonical_degrees, classify, verdicts
from bsdh_fano.rootsys import SimpleType, cartan_matrix
from bsdh_fano.weyl import Word
from test_betamat import raw_matrices

ckernels = pytest.importorskip("bsdh_fano._ckernels", reason="compiled kernels not built")


def T(s):
    return SimpleType.parse(s)


@pytest.fixture
def python_backend():
    before = kernels.BACKEND
    kernels.use_backend("python")
    yield
    kernels.use_backend(before)


def test_backend_selection():
    assert "python" in kernels.available_backends()
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.parametrize("name,L", [("A3", 8), ("B3", 8), ("G2", 6), ("C3", 9), ("D4", 7), ("F4", 6)])
def test_survey_backends_identical(name, L):
    t = T(name)
    flat = cartan_matrix(t).flat()
    assert ckernels.survey(flat, t.rank, L, 10**6) == _pykernels.survey(flat, t.rank, L, 10**6)
    for first in range(1, t.rank + 1):
        assert ckernels.survey(flat, t.rank, L, 10**6, first) == _pykernels.survey(flat, t.rank, L, 10**6, first)


@pytest.mark.parametrize("cap", [1, 5, 20])
def test_survey_cap(cap):
    t = T("B3")
    flat = cartan_matrix(t).flat()
    c = ckernels.survey(flat, 3, 8, cap)
    p = _pykernels.survey(flat, 3, 8, cap)
    assert c == p and len(c) == cap + 1


@given(raw_matrices())
@settings(max_examples=300)
def test_matrix_kernels_agree(m):
    flat = m.flat()
    for mod in (ckernels, _pykernels):
        assert mod.degree_vector(flat, m.r) == list(anticanonical_degrees(m))
        codes = [2 if v.holds_NI else (1 if v.holds_NII else 0) for v in verdicts(m)]
        assert mod.condition_codes(flat, m.r) == codes


@pytest.mark.parametrize("name,L", [("A3", 8), ("B3", 8), ("G2", 6)])
def test_survey_classes_match_library(name, L):
    t = T(name)
    for letters, cond, deg in ckernels.survey(cartan_matrix(t).flat(), t.rank, L, 10**6):
        rep = classify(Word(letters, t))
        assert (cond, deg) == (int(rep.class_by_conditions), int(rep.class_by_degrees))


def test_word_beta_and_right_multiply_agree():
    t = T("F4")
    c = cartan_matrix(t)
    letters = (1, 2, 3, 2, 4, 3, 1)
    assert ckernels.word_beta(c.flat(), 4, letters) == _pykernels.word_beta(c.flat(), 4, letters)
    assert ckernels.word_beta(c.flat(), 4, letters) == beta_matrix(Word(letters, t), c).flat()
    a = [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]
    for i in letters:
        assert ckernels.right_multiply(a, c.flat(), 4, i) == _pykernels.right_multiply(a, c.flat(), 4, i)
        assert ckernels.column_positive(a, 4, i) == _pykernels.column_positive(a, 4, i)
        a = _pykernels.right_multiply(a, c.flat(), 4, i)


def test_library_runs_on_python_backend(python_backend):
    from bsdh_fano.fano import audit

    assert kernels.BACKEND == "python"
    a = audit(T("B3"), 8)
    assert a.ok and a.words_checked == 167


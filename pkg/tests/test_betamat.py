import pytest
from hypothesis import given, strategies as st

from bsdh_fano.betamat import (
    BetaMatrix,
    beta_matrix,
    eta_profile,
    parse_matrix,
    render_matrix,
)
from bsdh_fano.errors import InvalidInputError, MatrixValidationError
from bsdh_fano.rootsys import SimpleType, cartan_matrix
from bsdh_fano.weyl import Word, all_reduced_words


def T(s):
    return SimpleType.parse(s)


def B(t, *letters):
    t = T(t)
    return beta_matrix(Word(letters, t), cartan_matrix(t))


@st.composite
def raw_matrices(draw, max_r=8):
    r = draw(st.integers(1, max_r))
    rows = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            rows[i][j] = draw(st.sampled_from([0, 0, 0, 2, -1, -1, -2, -3]))
    return BetaMatrix(tuple(map(tuple, rows)))


def test_a4_example_4():
    m = B("A4", 2, 3, 1, 2)
    assert m.as_lists() == [
        [0, -1, -1, 2],
        [0, 0, 0, -1],
        [0, 0, 0, -1],
        [0, 0, 0, 0],
    ]
    assert not m.is_raw


def test_commuting_letters_give_zero_matrix():
    assert B("A4", 1, 3).as_lists() == [[0, 0], [0, 0]]


def test_b3_and_g2_entries():
    assert B("B3", 3, 2)(1, 2) == -2
    assert B("B3", 2, 3)(1, 2) == -1
    assert B("G2", 2, 1)(1, 2) == -3


def test_b3_example_3_entries():
    m = B("B3", 2, 3, 1, 2)
    assert (m(1, 2), m(3, 4), m(2, 4), m(1, 4)) == (-1, -1, -2, 2)


def test_type_mismatch():
    with pytest.raises(InvalidInputError):
        beta_matrix(Word((1,), T("A2")), cartan_matrix(T("B2")))


class TestParse:
    def test_intro_matrix_1(self, intro):
        assert intro[1].r == 5
        assert intro[1].is_raw

    @pytest.mark.parametrize("text", ["0 -1\n0 0", "0,-1;0,0", " 0 -1 ; 0 0 ;", "0, -1\n\n0, 0\n"])
    def test_separators(self, text):
        assert parse_matrix(text).as_lists() == [[0, -1], [0, 0]]

    def test_bad_entry(self):
        with pytest.raises(MatrixValidationError) as e:
            parse_matrix("0 1; 0 0")
        assert (e.value.row, e.value.col) == (1, 2)

    def test_below_diagonal(self):
        with pytest.raises(MatrixValidationError) as e:
            parse_matrix("0 -1; 1 0")
        assert (e.value.row, e.value.col) == (2, 1)

    def test_diagonal(self):
        with pytest.raises(MatrixValidationError) as e:
            parse_matrix("0 0 0; 0 -2 0; 0 0 0")
        assert (e.value.row, e.value.col) == (2, 2)

    def test_printed_matrix_5_rejected(self):
        with pytest.raises(MatrixValidationError):
            parse_matrix("0 -1 -1 -1 0; 0 0 -1 0 -1; 0 0 0 0 -3; 0 0 0 -2 0; 0 0 0 0 0")

    @pytest.mark.parametrize("text", ["0 -1; 0", "0 -1 0; 0 0 0", "", "a b; c d", "0 -4; 0 0", "0 3; 0 0"])
    def test_rejected(self, text):
        with pytest.raises(MatrixValidationError):
            parse_matrix(text)

    @given(raw_matrices())
    def test_round_trip(self, m):
        assert parse_matrix(render_matrix(m)) == m


class TestProfiles:
    def test_example_4_row_1(self):
        p = eta_profile(B("A4", 2, 3, 1, 2), 1)
        assert (p.eta_plus, p.eta_minus, p.s, p.window_minus) == ((4,), (2, 3), 4, (2, 3))

    def test_zero_matrix(self):
        m = parse_matrix("0 0 0; 0 0 0; 0 0 0")
        for i in range(1, 4):
            p = eta_profile(m, i)
            assert p.eta_plus == p.eta_minus == p.window_minus == ()
            assert p.s is None

    def test_intro_matrix_5_row_2(self, intro):
        p = eta_profile(intro[5], 2)
        assert p.eta_plus == ()
        assert p.eta_minus == (3, 5)

    def test_out_of_range(self, intro):
        with pytest.raises(InvalidInputError):
            eta_profile(intro[1], 6)
        with pytest.raises(InvalidInputError):
            eta_profile(intro[1], 0)

    @given(raw_matrices())
    def test_invariants(self, m):
        for p in m.profiles:
            assert (p.s is not None) == bool(p.eta_plus)
            if p.s is not None:
                assert p.s == min(p.eta_plus)
                assert all(j < p.s for j in p.window_minus)
            assert set(p.window_minus) <= set(p.eta_minus)


@pytest.mark.parametrize("name,L", [("A3", 6), ("B3", 6), ("G2", 6)])
def test_word_positivity_means_repeated_letter(name, L):
    t = T(name)
    c = cartan_matrix(t)
    for w in all_reduced_words(t, L):
        m = beta_matrix(w, c)
        for i in range(1, len(w) + 1):
            for j in range(i + 1, len(w) + 1):
                assert (m(i, j) > 0) == (m(i, j) == 2) == (w.letters[i - 1] == w.letters[j - 1])

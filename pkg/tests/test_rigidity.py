import pytest

from bsdh_fano.fano import classify
from bsdh_fano.rigidity import rigidity_report
from bsdh_fano.rootsys import SimpleType
from bsdh_fano.weyl import Word, all_reduced_words


def W(t, *letters):
    return Word(letters, SimpleType.parse(t))


def test_a4_13():
    f = rigidity_report(W("A4", 1, 3), True)
    assert f.coxeter_type and f.toric and f.cohomology_vanishing and f.locally_rigid


def test_a4_2312():
    f = rigidity_report(W("A4", 2, 3, 1, 2), False)
    assert not f.coxeter_type and not f.cohomology_vanishing and not f.locally_rigid


def test_a4_123():
    f = rigidity_report(W("A4", 1, 2, 3), True)
    assert all((f.coxeter_type, f.toric, f.cohomology_vanishing, f.locally_rigid))


def test_coxeter_without_condition_I_asserts_nothing():
    f = rigidity_report(W("B3", 3, 2), False)
    assert f.coxeter_type and f.toric
    assert not f.cohomology_vanishing and not f.locally_rigid


def test_serialized_as_entailed():
    assert rigidity_report(W("A4", 1, 3), True).to_dict()["meaning"] == "entailed"


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "C3"])
def test_flag_invariants(name):
    t = SimpleType.parse(name)
    for w in all_reduced_words(t, 6):
        rep = classify(w)
        f = rep.rigidity
        assert f.toric == f.coxeter_type
        assert f.locally_rigid == f.cohomology_vanishing
        assert f.cohomology_vanishing == (f.coxeter_type and rep.condition_I)
        if f.cohomology_vanishing:
            assert f.coxeter_type

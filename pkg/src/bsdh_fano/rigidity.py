"""Rigidity consequences for Coxeter-type words.

A Coxeter-type word gives a toric BSDH variety; if in addition condition I
holds the variety is toric Fano, so the higher cohomology of its tangent
bundle vanishes and it has no local deformations.  These flags record that
the statements are *entailed*; nothing is computed, and a false flag never
means the property fails.
"""
from dataclasses import asdict, dataclass

from .weyl import Word, is_coxeter_type


@dataclass(frozen=True)
class RigidityFlags:
    coxeter_type: bool
    toric: bool
    cohomology_vanishing: bool
    locally_rigid: bool

    def to_dict(self):
        return {**asdict(self), "meaning": "entailed"}


def rigidity_report(word: Word, cond_I: bool) -> RigidityFlags:
    cox = is_coxeter_type(word)
    vanishing = cox and bool(cond_I)
    return RigidityFlags(
        coxeter_type=cox,
        toric=cox,
        cohomology_vanishing=vanishing,
        locally_rigid=vanishing,
    )

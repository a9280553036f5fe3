"""Orbits of an ambient group acting by conjugation on a normal subgroup.

For a pair T normal in A this computes the A-orbit count on T (written
k*(T) when A is the full automorphism group of a simple T), the element
order spectrum, and the class-fusion summary relating k(T), k(A) and the
orbit count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _core
from .constants import DEFAULT_CAP
from .errors import ValidationError
from .permcore import FiniteGroup, perms_to_matrix
from .report import VerificationReport


@dataclass(frozen=True)
class AmbientPair:
    """A group A with a verified normal subgroup T."""

    ambient: FiniteGroup
    socle: FiniteGroup
    validated: bool = False

    @property
    def socle_generators(self):
        return self.socle.generators

    def outer_index(self, cap=DEFAULT_CAP):
        return self.ambient.order(cap) // self.socle.order(cap)


def validate_pair(ambient, socle_generators, cap=DEFAULT_CAP, expected_index=None):
    """Build an AmbientPair, verifying normality and the declared index."""
    from .permcore import is_normal_subgroup

    socle_generators = tuple(socle_generators)
    if not is_normal_subgroup(ambient, socle_generators, cap):
        raise ValidationError("socle is not normal in the ambient group")
    socle = FiniteGroup(ambient.degree, socle_generators)
    na, nt = ambient.order(cap), socle.order(cap)
    if na % nt:
        raise ValidationError(f"socle order {nt} does not divide ambient order {na}")
    if expected_index is not None and na // nt != expected_index:
        raise ValidationError(
            f"outer index {na // nt} != declared index {expected_index}")
    return AmbientPair(ambient, socle, validated=True)


def orbit_count_on_subset(A, S, cap=DEFAULT_CAP):
    """Number of orbits of A's conjugation action on S.

    S may be an iterable of Permutation or a FiniteGroup (its element set is
    used).  S must be closed under conjugation by A's generators; if fusion
    meets an element outside S, NotClosedError is raised.
    """
    if isinstance(S, FiniteGroup):
        smat = S.element_matrix(cap)
    else:
        perms = sorted(S)
        if not perms:
            raise ValueError("empty subset has no orbits")
        smat = _core.lex_sort_rows(perms_to_matrix(perms, A.degree))
        if np.unique(_core.pybackend._void_view(smat)).shape[0] != smat.shape[0]:
            raise ValueError("subset contains duplicate permutations")
    if smat.shape[0] > cap:
        from .errors import CapExceededError

        raise CapExceededError(cap)
    maps = _core.conjugation_maps(smat, A.generator_matrix())
    _, ncomp = _core.orbit_labels(maps, smat.shape[0])
    return int(ncomp)


def k_star(pair, cap=DEFAULT_CAP):
    """A-orbit count on the socle (equals k*(T) when A = Aut(T))."""
    if not pair.validated:
        raise ValidationError("pair has not been validated")
    return orbit_count_on_subset(pair.ambient, pair.socle, cap)


def element_order_spectrum(T, cap=DEFAULT_CAP):
    """Sorted tuple of element orders occurring in T.

    Element order is a class invariant, so the spectrum is read off the
    class representatives.
    """
    decomp = T.conjugacy_classes(cap)
    return tuple(sorted({rep.order() for rep in decomp.representatives}))


def class_fusion_summary(pair, cap=DEFAULT_CAP):
    """Report k(T), k(A), the orbit count, and the fusion lower bound.

    The bound checked is orbits >= k(T) / (|A| / |T|): conjugation by A can
    merge at most outer-index many T-classes into one orbit.
    """
    if not pair.validated:
        raise ValidationError("pair has not been validated")
    k_t = pair.socle.class_count(cap)
    k_a = pair.ambient.class_count(cap)
    orbits = k_star(pair, cap)
    index = pair.outer_index(cap)
    bound = k_t / index
    ok = orbits >= bound and orbits <= k_t
    return VerificationReport(
        id="class-fusion",
        subject=f"|T|={pair.socle.order(cap)} inside |A|={pair.ambient.order(cap)}",
        values={
            "k_T": k_t,
            "k_A": k_a,
            "orbits": orbits,
            "outer_index": index,
            "fusion_lower_bound": bound,
        },
        verdict="pass" if ok else "fail",
        margin=orbits - bound,
    )

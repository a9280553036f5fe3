"""Exact permutation arithmetic and conjugacy-class decomposition.

Permutations act on {0, ..., degree-1} and are stored as image tuples.
Composition is left to right: ``(p * q)(x) == q(p(x))``.  Element sets are
materialized by breadth-first closure with a hard cap, and classes are the
connected components of the conjugation maps of the generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import _core
from .constants import DEFAULT_CAP, MAX_ENGINE_DEGREE
from .errors import CapExceededError, DegreeMismatchError


class Permutation:
    """A bijection of {0, ..., n-1} stored as its image list."""

    __slots__ = ("_images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[x] = True
        object.__setattr__(self, "_images", images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        """Permutation given by disjoint cycles of 0-based points."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def images(self):
        return self._images

    @property
    def degree(self):
        return len(self._images)

    def __call__(self, x):
        return self._images[x]

    def __mul__(self, other):
        """Compose left to right: self first, then other."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatchError(
                f"degree mismatch: {self.degree} vs {other.degree}")
        q = other._images
        return Permutation(q[x] for x in self._images)

    def inverse(self):
        inv = [0] * len(self._images)
        for x, y in enumerate(self._images):
            inv[y] = x
        return Permutation(inv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self, include_fixed=False):
        """Disjoint cycle decomposition, each cycle starting at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self._images[start]
            while x != start:
                seen[x] = True
                cycle.append(x)
                x = self._images[x]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return tuple(out)

    def order(self):
        """Least m >= 1 with p^m equal to the identity (lcm of cycle lengths)."""
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def is_identity(self):
        return all(i == x for i, x in enumerate(self._images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._images == other._images

    def __lt__(self, other):
        return self._images < other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Permutation.identity({self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"<perm deg={self.degree} {body}>"


def compose(p, q):
    """q after p (p acts first)."""
    return p * q


def element_order(p):
    return p.order()


def perms_to_matrix(perms, degree):
    """Stack image lists into a C-contiguous uint8 matrix."""
    if degree > MAX_ENGINE_DEGREE:
        raise ValueError(
            f"enumeration engine supports degree <= {MAX_ENGINE_DEGREE}, got {degree}")
    mat = np.empty((len(perms), degree), dtype=np.uint8)
    for i, p in enumerate(perms):
        if p.degree != degree:
            raise DegreeMismatchError(
                f"degree mismatch: {p.degree} vs {degree}")
        mat[i] = p.images
    return mat


def matrix_to_perms(mat):
    return tuple(Permutation(row.tolist()) for row in mat)


@dataclass(frozen=True)
class ClassDecomposition:
    """Conjugacy classes: lexicographically minimal representatives and sizes.

    Classes are ordered by representative, so the identity's class comes
    first.  ``sum(sizes)`` is the group order.
    """

    representatives: tuple
    sizes: tuple

    def __post_init__(self):
        if len(self.representatives) != len(self.sizes):
            raise ValueError("representatives and sizes must be parallel")

    @property
    def k(self):
        return len(self.representatives)

    @property
    def group_order(self):
        return sum(self.sizes)


class FiniteGroup:
    """A permutation group given by generators, with cached enumeration.

    Instances are immutable; the element matrix and derived data are
    computed once (under the first successful cap) and shared thereafter.
    """

    def __init__(self, degree, generators):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = generators
        self._matrix = None
        self._classes = None

    @classmethod
    def from_generators(cls, generators):
        generators = tuple(generators)
        if not generators:
            raise ValueError("need at least one generator to infer the degree")
        return cls(generators[0].degree, generators)

    @classmethod
    def trivial(cls, degree):
        return cls(degree, ())

    def generator_matrix(self):
        return perms_to_matrix(self.generators, self.degree)

    def element_matrix(self, cap=DEFAULT_CAP):
        """All elements as a lexicographically sorted uint8 matrix."""
        if self._matrix is None:
            self._matrix = _core.closure_sorted(self.generator_matrix(), cap)
        elif self._matrix.shape[0] > cap:
            raise CapExceededError(cap)
        return self._matrix

    def order(self, cap=DEFAULT_CAP):
        return int(self.element_matrix(cap).shape[0])

    def elements(self, cap=DEFAULT_CAP):
        """The closure of the generators as a frozenset of Permutation."""
        return frozenset(matrix_to_perms(self.element_matrix(cap)))

    def __contains__(self, p):
        if not isinstance(p, Permutation) or p.degree != self.degree:
            return False
        mat = perms_to_matrix([p], self.degree)
        return int(_core.row_lookup(self.element_matrix(), mat)[0]) >= 0

    def conjugacy_classes(self, cap=DEFAULT_CAP):
        """Orbits of g -> a g a^-1 over the generators, via orbit fusion."""
        if self._classes is None:
            elems = self.element_matrix(cap)
            maps = _core.conjugation_maps(elems, self.generator_matrix())
            labels, ncomp = _core.orbit_labels(maps, elems.shape[0])
            sizes = np.bincount(labels, minlength=ncomp)
            first = np.unique(labels, return_index=True)[1]
            reps = matrix_to_perms(elems[np.sort(first)])
            self._classes = ClassDecomposition(reps, tuple(int(s) for s in sizes))
        return self._classes

    def class_count(self, cap=DEFAULT_CAP):
        return self.conjugacy_classes(cap).k

    def is_abelian(self, cap=DEFAULT_CAP):
        return all(
            a * b == b * a
            for i, a in enumerate(self.generators)
            for b in self.generators[i + 1:]
        ) if self.generators else True

    def __repr__(self):
        size = "?" if self._matrix is None else str(self._matrix.shape[0])
        return f"<FiniteGroup deg={self.degree} gens={len(self.generators)} order={size}>"


def group_elements(G, cap=DEFAULT_CAP):
    return G.elements(cap)


def group_order(G, cap=DEFAULT_CAP):
    return G.order(cap)


def conjugacy_classes(G, cap=DEFAULT_CAP):
    return G.conjugacy_classes(cap)


def is_normal_subgroup(A, T_generators, cap=DEFAULT_CAP):
    """Whether <T_generators> is normal in A (generator conjugation test).

    Requires every T generator to lie in the closure of A; raises ValueError
    otherwise.  Checking a t a^-1 in <T> for generators a of A and t of T
    suffices because conjugation by a fixed a is an injection of the finite
    closure into itself.
    """
    T_generators = tuple(T_generators)
    for t in T_generators:
        if t.degree != A.degree:
            raise DegreeMismatchError(
                f"degree mismatch: {t.degree} vs {A.degree}")
    amat = A.element_matrix(cap)
    if T_generators:
        tgen_mat = perms_to_matrix(T_generators, A.degree)
        if (_core.row_lookup(amat, tgen_mat) < 0).any():
            raise ValueError("socle generators are not contained in the ambient group")
    T = FiniteGroup(A.degree, T_generators)
    tmat = T.element_matrix(cap)
    for a in A.generators:
        a_inv = a.inverse()
        for t in T_generators:
            conj = a * t * a_inv
            row = perms_to_matrix([conj], A.degree)
            if int(_core.row_lookup(tmat, row)[0]) < 0:
                return False
    return True

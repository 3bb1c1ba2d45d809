"""Additive subgroups, ideals and unital subrings of a finite ring.

A Submodule is canonicalized by the Howell form of its generators inside
(Z/L)^n after coordinate scaling, so equal subsets always compare equal and
hash alike.  Element sets are materialized lazily for the operations where
exhaustive iteration is simplest.
"""

import numpy as np

from .linalg import (
    howell_contains,
    howell_form,
    scale_vector,
    span_size,
    unscale_vector,
)
from .ring import Element, ring_from_generators


class Submodule:
    """An additive subgroup of the ambient ring, in canonical form."""

    def __init__(self, ambient, hrows):
        self.ambient = ambient
        self.hrows = hrows
        self._cache = {}

    @classmethod
    def from_generators(cls, ambient, gens):
        L = ambient.L
        rows = [
            scale_vector(g.coeffs if isinstance(g, Element) else g,
                         ambient.orders, L)
            for g in gens
        ]
        return cls(ambient, howell_form(rows, ambient.rank, L))

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, ())

    @property
    def key(self):
        return self.hrows

    @property
    def basis(self):
        """Unscaled generator rows (coefficient tuples of the ambient)."""
        if "basis" not in self._cache:
            amb = self.ambient
            self._cache["basis"] = tuple(
                unscale_vector(r, amb.orders, amb.L) for r in self.hrows
            )
        return self._cache["basis"]

    @property
    def size(self):
        if "size" not in self._cache:
            self._cache["size"] = span_size(self.hrows, self.ambient.L)
        return self._cache["size"]

    def contains(self, vec):
        if isinstance(vec, Element):
            vec = vec.coeffs
        amb = self.ambient
        return howell_contains(
            scale_vector(vec, amb.orders, amb.L), self.hrows, amb.rank, amb.L
        )

    def contains_many(self, arr):
        """Vectorized membership for an integer array of unscaled rows."""
        amb = self.ambient
        L = amb.L
        factors = np.array([L // d for d in amb.orders], dtype=np.int64)
        V = (np.asarray(arr, dtype=np.int64) * factors) % L
        n = amb.rank
        for row in self.hrows:
            j = next(k for k in range(n) if row[k])
            p = row[j]
            col = V[:, j]
            q = np.where(col % p == 0, col // p, 0)
            V = (V - q[:, None] * np.array(row, dtype=np.int64)) % L
        return ~V.any(axis=1)

    def elements(self):
        """Frozenset of all member coefficient tuples."""
        if "elements" not in self._cache:
            amb = self.ambient
            seen = {amb.zero_vec()}
            frontier = [amb.zero_vec()]
            basis = self.basis
            while frontier:
                v = frontier.pop()
                for b in basis:
                    w = amb._add(v, b)
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
            self._cache["elements"] = frozenset(seen)
        return self._cache["elements"]

    def elements_array(self):
        if "elements_array" not in self._cache:
            self._cache["elements_array"] = np.array(
                sorted(self.elements()), dtype=np.int64
            ).reshape(self.size, self.ambient.rank)
        return self._cache["elements_array"]

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and other.ambient is self.ambient
            and other.hrows == self.hrows
        )

    def __hash__(self):
        return hash((id(self.ambient), self.hrows))

    def __le__(self, other):
        return all(other.contains(b) for b in self.basis)

    def __lt__(self, other):
        return self.size < other.size and self <= other

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size})"

    def add(self, other):
        return type(self).from_generators(
            self.ambient, self.basis + other.basis
        )

    def intersect(self, other):
        common = self.elements() & other.elements()
        return type(self).from_generators(self.ambient, sorted(common))

    def is_ideal(self):
        amb = self.ambient
        for b in self.basis:
            for j in range(amb.rank):
                ej = tuple(1 if i == j else 0 for i in range(amb.rank))
                if not self.contains(amb._mul(b, ej)):
                    return False
        return True

    def is_subring(self):
        if not self.contains(self.ambient.one):
            return False
        for a in self.basis:
            for b in self.basis:
                if not self.contains(self.ambient._mul(a, b)):
                    return False
        return True


class Ideal(Submodule):
    pass


class Subalgebra(Submodule):
    """A unital subring of the ambient ring."""

    def as_ring(self):
        """Re-present this subalgebra as a standalone ring."""
        if "as_ring" not in self._cache:
            basis = self.basis if self.basis else (self.ambient.one,)
            self._cache["as_ring"] = ring_from_generators(
                self.ambient, basis, self.ambient.element(self.ambient.one)
            )
        return self._cache["as_ring"]


def submodule_from_elements(ambient, elems, cls=Submodule):
    vecs = sorted(
        e.coeffs if isinstance(e, Element) else tuple(e) for e in elems
    )
    return cls.from_generators(ambient, vecs)


def subring_generated(ambient, gens, cls=Subalgebra):
    """Smallest unital subring containing the given elements."""
    vecs = [g.coeffs if isinstance(g, Element) else tuple(g) for g in gens]
    vecs.append(ambient.one)
    current = cls.from_generators(ambient, vecs)
    while True:
        basis = current.basis
        extra = []
        for i in range(len(basis)):
            for j in range(i, len(basis)):
                p = ambient._mul(basis[i], basis[j])
                if not current.contains(p):
                    extra.append(p)
        if not extra:
            return current
        current = cls.from_generators(ambient, list(basis) + extra)


def ideal_generated(ambient, gens, cls=Ideal):
    """Smallest ideal of the ambient ring containing the given elements."""
    vecs = [g.coeffs if isinstance(g, Element) else tuple(g) for g in gens]
    current = cls.from_generators(ambient, vecs)
    unit_rows = [
        tuple(1 if i == j else 0 for i in range(ambient.rank))
        for j in range(ambient.rank)
    ]
    while True:
        basis = current.basis
        extra = []
        for b in basis:
            for ej in unit_rows:
                p = ambient._mul(b, ej)
                if not current.contains(p):
                    extra.append(p)
        if not extra:
            return current
        current = cls.from_generators(ambient, list(basis) + extra)


def conductor(sub, ambient=None):
    """(sub : S) = {x in S : x*S is contained in sub}, as an ideal of S.

    `sub` is an additive subgroup of S containing 1's multiples; the result
    is simultaneously an ideal of S and of every subring containing it.
    """
    S = sub.ambient if ambient is None else ambient
    arr = S.elements_array()
    mask = np.ones(S.size, dtype=bool)
    for j in range(S.rank):
        ej = tuple(1 if i == j else 0 for i in range(S.rank))
        prods = S.mul_many(arr, ej)
        mask &= sub.contains_many(prods)
    members = arr[mask]
    return Ideal.from_generators(S, [tuple(int(x) for x in row) for row in members])

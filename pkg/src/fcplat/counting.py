"""Counting complements of the t-closure, and the lattice-size sum formula.

For an integral extension R <= S write n[R, S] for the number of
complements of the t-closure t(R) in the lattice [R, S].  Two independent
routes compute it:

  * the lattice route enumerates complements directly;
  * the formula route (for local R) finds the greatest subring R' of S in
    which the maximal ideal M of R stays an ideal, takes the minimal
    polynomial P over R/M of a primitive element of a top residue field,
    and counts the distinct subalgebras (R/M)[x] of R'/M generated by
    roots x of P.  It returns 0 when the residue fields on top are not all
    isomorphic.  For non-local R the count is the product of the local
    counts over the maximal ideals supporting S/R.

The sum formula states |[R, S]| is the sum of n[R', S'] over all pairs
(R', S') with R <= R' <= t(R) <= S' <= S.
"""

import numpy as np

from .closures import _min_poly, sorted_elements, t_closure, x_closure
from .ring import RingMorphism, quotient_ring, ring_from_generators
from .spectrum import Extension
from .structure import maximal_ideals, residue_field
from .submodule import Subalgebra, Submodule, subring_generated


def idealizer(ext, M_sub):
    """The greatest subring R' of S in which M_sub stays an ideal.

    M_sub is an additive subgroup of S (the maximal ideal of the bottom,
    carried into S); the idealizer is {x in S : x * M_sub <= M_sub}.
    """
    S = ext.top
    arr = S.elements_array()
    mask = np.ones(S.size, dtype=bool)
    for m in M_sub.basis:
        mask &= M_sub.contains_many(S.mul_many(arr, m))
    members = [tuple(int(x) for x in row) for row in arr[mask]]
    sub = Subalgebra.from_generators(S, members)
    assert sub.size == int(mask.sum()), "idealizer must be additively closed"
    assert sub.is_subring()
    assert ext.bottom <= sub
    return sub


def _bottom_max_ideal_in_top(ext, M):
    """Carry a maximal ideal M of the bottom ring into the ambient top."""
    to_amb = ext.bottom_pres.to_ambient
    return Submodule.from_generators(
        ext.top, [to_amb.apply(b) for b in M.basis]
    )


def complement_count_formula(ext):
    """n[R, S] by the root-counting formula, localizing first if needed."""
    Rr = ext.bottom_ring
    max_R = maximal_ideals(Rr)
    if len(max_R) == 1:
        return _complement_count_local(ext, max_R[0])
    total = 1
    for M in ext.msupp():
        loc_ext, _ = ext.localize_at(M)
        total *= complement_count_formula(loc_ext)
    return total


def _complement_count_local(ext, M):
    S = ext.top
    tops = maximal_ideals(S)
    sizes = {ext.residual_sizes(N) for N in tops}
    if len(sizes) != 1:
        # top residue fields of distinct sizes cannot all be isomorphic to
        # one T/M, so no complement exists (finite fields of equal size
        # over the same subfield are isomorphic over it, so size is enough)
        return 0
    k_size, F_size = sizes.pop()

    # minimal polynomial over R/M of a primitive element of S/N_1
    N1 = tops[0]
    phi = ext.residual_extension(N1)
    kR, _, liftsM = residue_field(ext.bottom_ring, M)
    F = phi.target
    prim = None
    for v in sorted_elements(F):
        if subring_generated(F, [v] + list(phi.rows)).size == F.size:
            prim = v
            break
    P = _min_poly(phi, prim)

    # A := R'/M for R' the idealizer of M in S
    M_S = _bottom_max_ideal_in_top(ext, M)
    Rp = idealizer(ext, M_S)
    pres = ring_from_generators(S, Rp.basis, S.element(S.one))
    m_rows = [pres.from_ambient(b) for b in M_S.basis]
    A, projA, _ = quotient_ring(pres.ring, m_rows)

    # the residue field R/M mapped into A
    to_amb = ext.bottom_pres.to_ambient
    psi_rows = [
        projA.apply(pres.from_ambient(to_amb.apply(lift)))
        for lift in liftsM
    ]
    psi = RingMorphism(kR, A, psi_rows)

    coeffs_in_A = [psi.apply(c) for c in P]
    seen = set()
    for x in A.elements():
        acc = A.zero_vec()
        for c in reversed(coeffs_in_A):
            acc = A._add(A._mul(acc, x), c)
        if acc == A.zero_vec():
            key = subring_generated(A, [x] + list(psi.rows)).key
            seen.add(key)
    return len(seen)


def t_closure_node(lattice, low=None, high=None):
    """The t-closure of low inside high, as a lattice node.

    Uses the intersection property of the t-closure: the t-closure of
    low <= high is high meet (t-closure of low in the full top).
    """
    low = lattice.bottom if low is None else low
    high = lattice.top_node if high is None else high
    if "t_of" not in lattice._cache:
        lattice._cache["t_of"] = {}
    t_of = lattice._cache["t_of"]
    if low.key not in t_of:
        t_of[low.key] = x_closure(Extension(lattice.ambient, low), "t")
    t_full = t_of[low.key]
    node = t_full if high == lattice.top_node else t_full.intersect(high)
    assert node.key in lattice.index
    return lattice.nodes[lattice.index[node.key]]


def complement_count_lattice(lattice, low=None, high=None):
    """n[low, high] by direct enumeration of complements of the t-closure."""
    low = lattice.bottom if low is None else low
    high = lattice.top_node if high is None else high
    t_node = t_closure_node(lattice, low, high)
    return len(lattice.complements(t_node, low=low, high=high))


def sum_formula_table(lattice):
    """All terms of |[R, S]| = sum of n[R', S'] over [R, t(R)] x [t(R), S].

    Returns (table, total) where table maps (i, j) node-index pairs to
    n[nodes[i], nodes[j]].  Also checks that the t-closure of each pair
    equals the global t-closure, which the formula relies on.
    """
    t_node = t_closure_node(lattice)
    lower = lattice.interval(lattice.bottom, t_node)
    upper = lattice.interval(t_node, lattice.top_node)
    table = {}
    for i in lower:
        for j in upper:
            Rp = lattice.nodes[i]
            Sp = lattice.nodes[j]
            assert t_closure_node(lattice, Rp, Sp) == t_node
            table[(i, j)] = len(lattice.complements(t_node, low=Rp, high=Sp))
    total = sum(table.values())
    return table, total


def verify_sum_formula(lattice, cross_check=False):
    """Check the sum formula; optionally recompute each term by the
    root-counting formula on the re-presented sub-extension."""
    table, total = sum_formula_table(lattice)
    assert total == lattice.node_count(), (
        f"sum formula fails: {total} != {lattice.node_count()}"
    )
    if cross_check:
        for (i, j), n_lat in table.items():
            sub_ext, _ = lattice.sub_extension(
                lattice.nodes[i], lattice.nodes[j]
            )
            n_form = complement_count_formula(sub_ext)
            assert n_form == n_lat, (
                f"count routes disagree on pair {(i, j)}: "
                f"formula={n_form} lattice={n_lat}"
            )
    return table, total

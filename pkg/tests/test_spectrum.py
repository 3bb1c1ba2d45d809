from fcplat.ring import galois_field, monogenic_quotient, prime_field, product_ring
from fcplat.spectrum import (
    Extension,
    is_epimorphism,
    is_locally_epimorphism,
    is_unramified,
    is_unramified_local,
    tensor_square,
)
from fcplat.structure import maximal_ideals
from fcplat.submodule import Subalgebra, subring_generated


def prime_subring_extension(S):
    return Extension(S, subring_generated(S, []))


def test_field_extension_f2_f4():
    F4 = galois_field(4)
    ext = prime_subring_extension(F4)
    assert ext.bottom.size == 2
    ts = tensor_square(ext)
    # F4 (x)_F2 F4 = F4 x F4
    assert ts.ring.size == 16
    assert not is_epimorphism(ext)
    assert is_unramified(ext)
    assert is_unramified_local(ext)
    assert ext.is_i_extension()
    assert not ext.is_infra_integral()
    (N,) = maximal_ideals(F4)
    small, big = ext.residual_sizes(N)
    assert (small, big) == (2, 4)
    phi = ext.residual_extension(N)
    assert phi.is_injective()
    assert not phi.is_surjective()


def test_ramified_dual_numbers():
    F2 = prime_field(2)
    R, _, t = monogenic_quotient(F2, 2, [F2.zero, F2.zero])
    ext = prime_subring_extension(R)
    ts = tensor_square(ext)
    assert ts.ring.size == 16
    assert not is_unramified(ext)
    assert not is_unramified_local(ext)
    assert ext.is_subintegral()  # one maximal ideal, residue F2 both sides
    I = ts.diagonal_kernel()
    assert I.size == 4


def test_decomposed_f2_squared():
    F2 = prime_field(2)
    S, _ = product_ring([F2, F2])
    ext = prime_subring_extension(S)
    assert is_unramified(ext)
    assert is_unramified_local(ext)
    assert not is_epimorphism(ext)
    assert is_locally_epimorphism(ext)
    assert not ext.is_i_extension()
    assert ext.is_infra_integral()
    assert not ext.is_subintegral()


def test_trivial_extension_is_epimorphism():
    F9 = galois_field(9)
    gens = [tuple(1 if i == j else 0 for i in range(F9.rank)) for j in range(F9.rank)]
    ext = Extension(F9, subring_generated(F9, gens))
    assert is_epimorphism(ext)
    assert is_unramified(ext)
    assert ext.is_subintegral()


def test_unramified_diagonal_in_square_of_dual_numbers():
    # R = F2[t]/(t^2) sits diagonally in R x R; this is unramified because
    # the conductor ideal M x M is generated downstairs at each factor
    F2 = prime_field(2)
    R, _, t = monogenic_quotient(F2, 2, [F2.zero, F2.zero])
    S, pack = product_ring([R, R])
    bottom = subring_generated(S, [pack([t, t])])
    ext = Extension(S, bottom)
    assert ext.bottom.size == 4
    assert is_unramified(ext)
    assert is_unramified_local(ext)
    assert is_locally_epimorphism(ext)
    assert not is_epimorphism(ext)


def test_conductor_and_supp():
    F2 = prime_field(2)
    R, _, t = monogenic_quotient(F2, 2, [F2.zero, F2.zero])
    ext = prime_subring_extension(R)
    C = ext.conductor_ideal()
    # (F2 : R) = 0 since t*R is not contained in F2
    assert C.size == 1
    assert len(ext.supp()) == 1
    assert len(ext.msupp()) == 1


def test_localize_at_splits_factors():
    F2 = prime_field(2)
    F4 = galois_field(4)
    S, pack = product_ring([F2, F4])
    e1 = pack([(1,), F4.zero_vec()])
    e2 = pack([(0,), F4.one])
    bottom = subring_generated(S, [e1, e2])
    assert bottom.size == 4  # F2 x F2 inside F2 x F4
    ext = Extension(S, bottom)
    ms = maximal_ideals(ext.bottom_ring)
    assert len(ms) == 2
    sizes = set()
    for M in ms:
        loc, _ = ext.localize_at(M)
        sizes.add((loc.bottom.size, loc.top.size))
    assert sizes == {(2, 2), (2, 4)}


def test_lying_over_counts():
    F3 = prime_field(3)
    S, _ = product_ring([F3, F3, F3])
    ext = prime_subring_extension(S)
    pairs = ext.lying_over()
    assert len(pairs) == 3
    assert len({P.key for _, P in pairs}) == 1  # bottom is local
    assert not ext.is_i_extension()

"""Finite commutative unital rings with exact structure-constant arithmetic.

A ring is stored as its additive group Z/d1 x ... x Z/dn (a decreasing
divisibility chain of invariant factors) together with the multiplication
table of the additive basis.  Every construction in this module funnels
through `build_ring`, which takes generators-and-relations data and produces
the invariant-factor presentation, so basis choices are deterministic.
"""

import itertools
from math import gcd, lcm

import numpy as np

from .linalg import kernel_mod, scale_vector, smith_presentation

# Rings are validated at construction; full associativity on all basis
# triples is checked up to this rank, random triples beyond it (only very
# large intermediate rings such as tensor squares exceed the bound).
FULL_ASSOC_RANK = 24
_ASSOC_SAMPLES = 300


class RingConstructionError(ValueError):
    pass


class FiniteRing:
    """A finite commutative unital ring in basis/structure-constant form."""

    def __init__(self, orders, table, one, label="R", check=True):
        self.orders = tuple(int(d) for d in orders)
        n = len(self.orders)
        self.rank = n
        self.table = tuple(
            tuple(tuple(int(c) % self.orders[k] for k, c in enumerate(cell))
                  for cell in row)
            for row in table
        )
        self.one = tuple(int(c) % self.orders[k] for k, c in enumerate(one))
        self.label = label
        if n == 0:
            raise RingConstructionError("the zero ring is excluded")
        self.L = self.orders[0]
        size = 1
        for d in self.orders:
            size *= d
        self.size = size
        self._npC = None
        self._cache = {}
        if check:
            self._validate()

    # -- representation ------------------------------------------------

    def __repr__(self):
        return f"FiniteRing({self.label}, orders={self.orders}, size={self.size})"

    @property
    def npC(self):
        if self._npC is None:
            self._npC = np.array(self.table, dtype=np.int64)
        return self._npC

    @property
    def np_orders(self):
        return np.array(self.orders, dtype=np.int64)

    @property
    def char(self):
        """Additive order of 1."""
        return lcm(*[d // gcd(d, c) if c else 1
                     for d, c in zip(self.orders, self.one)] or [1])

    def _validate(self):
        n = self.rank
        for a, b in zip(self.orders, self.orders[1:]):
            if a % b or b < 2:
                raise RingConstructionError("orders must be a divisibility chain")
        # structure constants must respect additive orders
        for i in range(n):
            for j in range(n):
                for k, c in enumerate(self.table[i][j]):
                    if (self.orders[i] * c) % self.orders[k] or (
                        self.orders[j] * c
                    ) % self.orders[k]:
                        raise RingConstructionError("inconsistent structure constants")
                if self.table[i][j] != self.table[j][i]:
                    raise RingConstructionError("multiplication not commutative")
        for j in range(n):
            ej = tuple(1 if i == j else 0 for i in range(n))
            if self._mul(self.one, ej) != ej:
                raise RingConstructionError("unit fails identity law")
        self._check_associativity()

    def _check_associativity(self):
        n = self.rank
        C = self.npC
        D = self.np_orders
        if n <= FULL_ASSOC_RANK:
            t1 = np.einsum("abk,kcl->abcl", C, C) % D
            t2 = np.einsum("bck,akl->abcl", C, C) % D
            if not np.array_equal(t1, t2):
                raise RingConstructionError("multiplication not associative")
        else:
            rng = np.random.default_rng(0)
            for _ in range(_ASSOC_SAMPLES):
                a, b, c = rng.integers(0, n, size=3)
                left = np.einsum("k,kl->l", C[a, b], C[:, c]) % D
                right = np.einsum("k,kl->l", C[b, c], C[a, :]) % D
                if not np.array_equal(left, right):
                    raise RingConstructionError("multiplication not associative")

    # -- raw arithmetic on coefficient tuples --------------------------

    def reduce(self, vec):
        return tuple(int(v) % d for v, d in zip(vec, self.orders))

    def _add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def _sub(self, a, b):
        return tuple((x - y) % d for x, y, d in zip(a, b, self.orders))

    def _neg(self, a):
        return tuple((-x) % d for x, d in zip(a, self.orders))

    def _smul(self, c, a):
        return tuple((c * x) % d for x, d in zip(a, self.orders))

    def _mul(self, a, b):
        n = self.rank
        acc = [0] * n
        table = self.table
        for i in range(n):
            ai = a[i]
            if ai:
                row = table[i]
                for j in range(n):
                    bj = b[j]
                    if bj:
                        c = ai * bj
                        cell = row[j]
                        for k in range(n):
                            acc[k] += c * cell[k]
        return tuple(x % d for x, d in zip(acc, self.orders))

    def _pow(self, a, e):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def mul_many(self, X, b):
        """Products x*b for every row x of the integer array X, as an array."""
        B = np.asarray(b, dtype=np.int64)
        return np.einsum("ai,j,ijk->ak", X, B, self.npC) % self.np_orders

    def is_nilpotent(self, a):
        # nilpotency index is at most the module length, itself at most
        # log2(size), so log-many squarings decide
        x = tuple(a)
        e = 1
        bound = self.size.bit_length()
        while e <= bound:
            if not any(x):
                return True
            x = self._mul(x, x)
            e *= 2
        return not any(x)

    def additive_order(self, a):
        return lcm(*[d // gcd(d, x) if x else 1
                     for d, x in zip(self.orders, a)] or [1])

    def zero_vec(self):
        return tuple([0] * self.rank)

    def elements(self):
        """All coefficient tuples, in lexicographic order."""
        return itertools.product(*[range(d) for d in self.orders])

    def elements_array(self):
        key = "elements_array"
        if key not in self._cache:
            arr = np.array(list(self.elements()), dtype=np.int64).reshape(
                self.size, self.rank
            )
            self._cache[key] = arr
        return self._cache[key]

    # -- wrapped elements ----------------------------------------------

    def element(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != self.rank:
            raise ValueError("coefficient vector has wrong length")
        return Element(self, self.reduce(coeffs))

    @property
    def zero(self):
        return Element(self, self.zero_vec())

    @property
    def one_element(self):
        return Element(self, self.one)


class Element:
    """A ring element: owning ring plus coefficient tuple over its basis."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if not isinstance(other, Element):
            if isinstance(other, int):
                return Element(self.ring, self.ring._smul(other, self.ring.one))
            return NotImplemented
        if other.ring is not self.ring:
            raise ValueError("elements belong to different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring._sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return Element(self.ring, self.ring._neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.ring, self.ring._smul(other, self.coeffs))
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        return Element(self.ring, self.ring._pow(self.coeffs, e))

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.ring is self.ring
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __repr__(self):
        return f"Element{self.coeffs}"

    def is_nilpotent(self):
        return self.ring.is_nilpotent(self.coeffs)


class RingMorphism:
    """A map of rings given by images of the additive basis of the source.

    `unital` may be False for the non-unital embeddings that arise when a
    local factor e*R is viewed inside R.
    """

    def __init__(self, source, target, rows, unital=True, check=True):
        self.source = source
        self.target = target
        self.rows = tuple(target.reduce(r) for r in rows)
        self.unital = unital
        self._cache = {}
        if check:
            self._validate()

    def _validate(self):
        src, tgt = self.source, self.target
        for i, row in enumerate(self.rows):
            if any((src.orders[i] * c) % d for c, d in zip(row, tgt.orders)):
                raise RingConstructionError("morphism not additively well defined")
        for i in range(src.rank):
            for j in range(i, src.rank):
                lhs = tgt._mul(self.rows[i], self.rows[j])
                rhs = tgt.zero_vec()
                for k, c in enumerate(src.table[i][j]):
                    if c:
                        rhs = tgt._add(rhs, tgt._smul(c, self.rows[k]))
                if lhs != rhs:
                    raise RingConstructionError("morphism not multiplicative")
        if self.unital and self.apply(src.one) != tgt.one:
            raise RingConstructionError("morphism does not preserve the unit")

    def apply(self, vec):
        tgt = self.target
        out = tgt.zero_vec()
        for c, row in zip(vec, self.rows):
            if c:
                out = tgt._add(out, tgt._smul(c, row))
        return out

    def __call__(self, elem):
        if isinstance(elem, Element):
            return Element(self.target, self.apply(elem.coeffs))
        return self.apply(elem)

    def image_elements(self):
        if "image" not in self._cache:
            self._cache["image"] = frozenset(
                self.apply(v) for v in self.source.elements()
            )
        return self._cache["image"]

    def is_injective(self):
        return len(self.image_elements()) == self.source.size

    def is_surjective(self):
        return len(self.image_elements()) == self.target.size

    def is_isomorphism(self):
        return self.is_injective() and self.is_surjective()

    def compose(self, inner):
        """self o inner."""
        rows = [self.apply(r) for r in inner.rows]
        return RingMorphism(
            inner.source,
            self.target,
            rows,
            unital=self.unital and inner.unital,
            check=False,
        )


def build_ring(rel_rows, k, L, P, one_vec, label="R", check=True):
    """Construct a ring from k generators, relations and generator products.

    P is a k x k x k integer array: P[i][j] are the coordinates of g_i*g_j in
    the generators.  Returns (ring, to_new, lift_rows) where to_new maps
    generator coordinate vectors to basis coordinates of the new ring and
    lift_rows[j] gives generator coordinates of the j-th new basis vector.
    """
    orders, V, Vinv = smith_presentation(rel_rows, k, L)
    m = len(orders)
    if m == 0:
        raise RingConstructionError("presentation collapses to the zero ring")
    Vn = np.array(V, dtype=np.int64).reshape(k, m)
    B = np.array(Vinv, dtype=np.int64).reshape(m, k) % L
    Pn = np.asarray(P, dtype=np.int64) % L
    tmp = np.einsum("bj,ijk->bik", B, Pn) % L
    prod_old = np.einsum("ai,bik->abk", B, tmp) % L
    new = prod_old.reshape(m * m, k) @ Vn
    Dn = np.array(orders, dtype=np.int64)
    new %= Dn
    table = new.reshape(m, m, m)

    def to_new(x):
        return tuple(
            int(sum(int(xi) * V[i][j] for i, xi in enumerate(x)) % orders[j])
            for j in range(m)
        )

    ring = FiniteRing(orders, table.tolist(), to_new(one_vec), label=label, check=check)
    return ring, to_new, [tuple(r) for r in Vinv]


# -- constructors ------------------------------------------------------


def prime_field(p):
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError("p must be prime")
    return FiniteRing((p,), (((1,),),), (1,), label=f"F{p}")


def _poly_mul_mod(a, b, f, p):
    """Product of polynomials a*b mod (f, p); f monic, coefficient lists."""
    deg = len(f) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for i in range(len(out) - 1, deg - 1, -1):
        c = out[i]
        if c:
            for j in range(deg + 1):
                out[i - deg + j] = (out[i - deg + j] - c * f[j]) % p
        out[i] = 0
    return out[:deg]


def _is_irreducible(coeffs, p):
    """coeffs: monic polynomial as [c0, ..., c_{k-1}, 1] over F_p."""
    k = len(coeffs) - 1
    if k == 1:
        return True
    # no factor of degree <= k//2: trial division
    def divides(g):
        # g monic, coefficient list low-to-high
        r = list(coeffs)
        dg = len(g) - 1
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if c:
                for j in range(dg + 1):
                    r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
        return not any(r)

    for d in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            if divides(list(lower) + [1]):
                return False
    return True


def minimal_irreducible(p, k):
    """Lexicographically least monic irreducible of degree k over F_p.

    Compared by the coefficient tuple (c0, ..., c_{k-1}) of
    X^k + c_{k-1} X^{k-1} + ... + c0.
    """
    for low in itertools.product(range(p), repeat=k):
        f = list(low) + [1]
        if _is_irreducible(f, p):
            return f
    raise RuntimeError("unreachable")


def galois_field(q):
    """The field with q = p^k elements, deterministic presentation."""
    p, k = _prime_power(q)
    base = prime_field(p)
    if k == 1:
        return base
    f = minimal_irreducible(p, k)
    red = [base.element((( -f[s]) % p,)) for s in range(k)]
    ring, _, _ = monogenic_quotient(base, k, red, label=f"F{q}")
    return ring


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError("q must be a prime power")
            return p, k
    raise ValueError("q must be a prime power")


def monogenic_quotient(R, m, red, label=None):
    """R[X] / (X^m - sum red[s] X^s) for R-elements red[0..m-1].

    Returns (ring, embed, x) with embed the structural morphism R -> ring and
    x the image of X as a coefficient tuple of the new ring.
    """
    if m < 1:
        raise ValueError("degree must be positive")
    red_vecs = [r.coeffs if isinstance(r, Element) else tuple(r) for r in red]
    if len(red_vecs) != m:
        raise ValueError("need exactly m reduction coefficients")
    n = R.rank
    k = n * m

    def gen(s, i):
        return s * n + i

    L = R.L
    rels = []
    for s in range(m):
        for i in range(n):
            row = [0] * k
            row[gen(s, i)] = R.orders[i]
            rels.append(row)
    # powers of X up to 2m-2 as lists of R-coefficient tuples
    xpow = []
    for u in range(m):
        xpow.append([R.one if s == u else R.zero_vec() for s in range(m)])
    for u in range(m, 2 * m - 1):
        prev = xpow[u - 1]
        shifted = [R.zero_vec()] + prev[:-1]
        overflow = prev[m - 1]
        cur = []
        for s in range(m):
            term = shifted[s]
            if any(overflow):
                term = R._add(term, R._mul(overflow, red_vecs[s]))
            cur.append(term)
        xpow.append(cur)
    P = np.zeros((k, k, k), dtype=np.int64)
    for s in range(m):
        for i in range(n):
            for t in range(m):
                for j in range(n):
                    c = R.table[i][j]  # e_i * e_j as a tuple? no: table cell
                    cvec = R.table[i][j]
                    acc = [0] * k
                    for sp in range(m):
                        q = xpow[s + t][sp]
                        if any(q):
                            w = R._mul(cvec, q)
                            for ip in range(n):
                                acc[gen(sp, ip)] = w[ip]
                    P[gen(s, i), gen(t, j)] = acc
    one_vec = [0] * k
    for i in range(n):
        one_vec[gen(0, i)] = R.one[i]
    ring, to_new, _ = build_ring(
        rels, k, L, P, one_vec, label=label or f"{R.label}[x]/deg{m}"
    )
    embed_rows = []
    for i in range(n):
        v = [0] * k
        v[gen(0, i)] = 1
        embed_rows.append(to_new(v))
    embed = RingMorphism(R, ring, embed_rows)
    xv = [0] * k
    if m >= 2:
        for i in range(n):
            xv[gen(1, i)] = R.one[i]
        x = to_new(xv)
    else:
        x = to_new([c for c in red_vecs[0]] + [0] * 0)  # X = red[0] when m == 1
    return ring, embed, x


def product_ring(factors, label=None):
    """Direct product of finitely many rings.

    Returns (ring, pack) with pack mapping a tuple of factor coefficient
    tuples to coordinates of the product.
    """
    ks = [R.rank for R in factors]
    k = sum(ks)
    offs = [sum(ks[:i]) for i in range(len(factors))]
    L = lcm(*[R.L for R in factors])
    rels = []
    for R, off in zip(factors, offs):
        for i in range(R.rank):
            row = [0] * k
            row[off + i] = R.orders[i]
            rels.append(row)
    P = np.zeros((k, k, k), dtype=np.int64)
    for R, off in zip(factors, offs):
        for i in range(R.rank):
            for j in range(R.rank):
                for t, c in enumerate(R.table[i][j]):
                    P[off + i, off + j, off + t] = c
    one_vec = [0] * k
    for R, off in zip(factors, offs):
        for i, c in enumerate(R.one):
            one_vec[off + i] = c
    ring, to_new, _ = build_ring(
        rels, k, L, P, one_vec,
        label=label or " x ".join(R.label for R in factors),
    )

    def pack(parts):
        v = [0] * k
        for part, R, off in zip(parts, factors, offs):
            vec = part.coeffs if isinstance(part, Element) else part
            for i, c in enumerate(vec):
                v[off + i] = c
        return to_new(v)

    return ring, pack


def quotient_ring(R, ideal_rows, label=None):
    """R / I for an ideal given by generating coefficient vectors.

    Returns (ring, project, lift_rows); project is the canonical morphism and
    lift_rows[j] is an R-coefficient lift of the j-th basis vector.
    """
    n = R.rank
    rels = []
    for i in range(n):
        row = [0] * n
        row[i] = R.orders[i]
        rels.append(row)
    for r in ideal_rows:
        rels.append(list(r))
    P = R.npC
    ring, to_new, lift = build_ring(
        rels, n, R.L, P, R.one, label=label or f"{R.label}/I"
    )
    project = RingMorphism(
        R, ring, [to_new(tuple(1 if i == j else 0 for i in range(n)))
                  for j in range(n)]
    )
    lift_rows = [R.reduce(r) for r in lift]
    return ring, project, lift_rows


class SubringPresentation:
    """A subset of an ambient ring re-presented as a ring of its own."""

    def __init__(self, ring, to_ambient, coords_of, gens):
        self.ring = ring
        self.to_ambient = to_ambient
        self._coords_of = coords_of
        self.gens = gens

    def from_ambient(self, elem):
        vec = elem.coeffs if isinstance(elem, Element) else tuple(elem)
        try:
            return self._coords_of[vec]
        except KeyError:
            raise ValueError("element does not lie in the subring") from None


def ring_from_generators(ambient, gen_elems, one_elem, label=None, unital=None):
    """Present the additive span of gen_elems as a ring of its own.

    The span must be closed under multiplication and contain one_elem, which
    acts as the identity on it (for a subring sharing the ambient unit this
    is the ambient 1; for a factor e*R it is the idempotent e).
    """
    gens = [g.coeffs if isinstance(g, Element) else tuple(g) for g in gen_elems]
    one_vec = one_elem.coeffs if isinstance(one_elem, Element) else tuple(one_elem)
    k = len(gens)
    L = ambient.L
    # breadth-first closure of the additive span, remembering coordinates
    zero = ambient.zero_vec()
    coords = {zero: tuple([0] * k)}
    frontier = [zero]
    while frontier:
        e = frontier.pop()
        ce = coords[e]
        for g_idx, g in enumerate(gens):
            w = ambient._add(e, g)
            if w not in coords:
                cw = list(ce)
                cw[g_idx] = (cw[g_idx] + 1) % L
                coords[w] = tuple(cw)
                frontier.append(w)
    if one_vec not in coords:
        raise RingConstructionError("unit not in the span of the generators")
    rels = kernel_mod(
        [scale_vector(g, ambient.orders, L) for g in gens], ambient.rank, L
    )
    P = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(i, k):
            prod = ambient._mul(gens[i], gens[j])
            if prod not in coords:
                raise RingConstructionError("generators do not span a closed set")
            P[i, j] = coords[prod]
            P[j, i] = coords[prod]
    ring, to_new, lift = build_ring(
        rels, k, L, P, coords[one_vec], label=label or f"{ambient.label}|sub"
    )
    amb_rows = []
    for row in lift:
        v = ambient.zero_vec()
        for c, g in zip(row, gens):
            if c:
                v = ambient._add(v, ambient._smul(c, g))
        amb_rows.append(v)
    if unital is None:
        unital = one_vec == ambient.one
    to_ambient = RingMorphism(ring, ambient, amb_rows, unital=unital)
    coords_of = {e: to_new(c) for e, c in coords.items()}
    return SubringPresentation(ring, to_ambient, coords_of, gens)

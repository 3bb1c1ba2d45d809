"""Exact linear algebra over Z/L and mixed-modulus abelian groups.

Everything in this package represents the additive group of a finite ring as
Z/d1 x ... x Z/dn with d(i+1) | d(i).  Submodules are canonicalized by the
Howell normal form of their generator matrix after rescaling every coordinate
into Z/L, L = d1.  The Howell form is the right canonical form here: unlike
a mere echelon form it makes membership testing and equality of row spans
exact over Z/L.
"""

from math import gcd


def egcd(a, b):
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def unit_for(a, L):
    """A unit c of Z/L with c*a = gcd(a, L) mod L.

    Every element of Z/L is associate to the divisor gcd(a, L) of L; this
    returns the normalizing unit.
    """
    a %= L
    if a == 0:
        return 1
    g = gcd(a, L)
    m = L // g
    c = pow(a // g, -1, m) if m > 1 else 1
    while gcd(c, L) != 1:
        c += m
    return c % L


def scale_vector(vec, orders, L):
    """Embed an element of prod Z/d_i into (Z/L)^n, coordinate i scaled by L/d_i."""
    return tuple((v * (L // d)) % L for v, d in zip(vec, orders))


def unscale_vector(vec, orders, L):
    """Inverse of scale_vector on the image subgroup."""
    out = []
    for v, d in zip(vec, orders):
        f = L // d
        if v % f:
            raise ValueError("vector not in the scaled image subgroup")
        out.append((v // f) % d)
    return tuple(out)


def howell_form(rows, n, L):
    """Howell normal form of the span of `rows` inside (Z/L)^n.

    Returns a tuple of row tuples with strictly increasing pivot columns,
    each pivot a divisor of L, entries above a pivot reduced modulo it.
    Spans are equal iff Howell forms are equal.
    """
    if L == 1:
        return ()
    work = []
    for r in rows:
        r = [x % L for x in r]
        if any(r):
            work.append(r)
    result = []
    for j in range(n):
        cur = [r for r in work if r[j]]
        rest = [r for r in work if not r[j]]
        if not cur:
            work = rest
            continue
        piv = cur[0]
        for r in cur[1:]:
            a, b = piv[j], r[j]
            g, s, t = egcd(a, b)
            new_piv = [(s * x + t * y) % L for x, y in zip(piv, r)]
            new_r = [((b // g) * x - (a // g) * y) % L for x, y in zip(piv, r)]
            piv = new_piv
            if any(new_r):
                rest.append(new_r)
        c = unit_for(piv[j], L)
        piv = [(c * x) % L for x in piv]
        p = piv[j]
        result.append(piv)
        ann = L // gcd(p, L)
        extra = [(ann * x) % L for x in piv]
        if any(extra):
            rest.append(extra)
        work = rest
    # reduce entries above each pivot modulo the pivot
    for i in range(len(result)):
        ri = result[i]
        j = next(k for k in range(n) if ri[k])
        p = ri[j]
        for k in range(i):
            rk = result[k]
            q = rk[j] // p
            if q:
                result[k] = [(x - q * y) % L for x, y in zip(rk, ri)]
    return tuple(tuple(r) for r in result)


def howell_reduce(vec, hrows, n, L):
    """Reduce `vec` against a Howell basis; returns the residual vector.

    The residual is zero iff `vec` lies in the span.
    """
    v = [x % L for x in vec]
    for row in hrows:
        j = next(k for k in range(n) if row[k])
        p = row[j]
        if v[j] % p == 0:
            q = v[j] // p
            if q:
                v = [(x - q * y) % L for x, y in zip(v, row)]
    return tuple(v)


def howell_contains(vec, hrows, n, L):
    return not any(howell_reduce(vec, hrows, n, L))


def span_size(hrows, L):
    """Cardinality of the span of a Howell basis: product of L/pivot."""
    size = 1
    for row in hrows:
        p = next(x for x in row if x)
        size *= L // p
    return size


def kernel_mod(rows, n, L):
    """Left kernel {a in Z^k : sum a_g rows[g] = 0 in (Z/L)^n} modulo L.

    Returns Howell-form generators of the kernel as a subgroup of (Z/L)^k;
    together with L*Z^k they generate the full integer kernel lattice.
    """
    k = len(rows)
    aug = []
    for g, r in enumerate(rows):
        aug.append(tuple(x % L for x in r) + tuple(1 if i == g else 0 for i in range(k)))
    h = howell_form(aug, n + k, L)
    ker = [row[n:] for row in h if not any(row[:n])]
    return howell_form(ker, k, L)



def smith_presentation(rel_rows, k, L):
    """Invariant-factor presentation of Z^k / Lambda, Lambda = <rel_rows> + L*Z^k.

    Returns (orders, V, Vinv_rows):
      orders    -- invariant factors > 1, decreasing divisibility chain
                   (orders[i+1] divides orders[i]),
      V         -- k x m nested lists over Z: new coords of x are (x @ V) mod orders,
      Vinv_rows -- m row tuples: integer lift of each new basis vector in old coords.

    All arithmetic is done modulo L, legitimate because the relation lattice
    contains L*Z^k by construction.  Vectorized with numpy so that large
    presentations (tensor squares) stay cheap.
    """
    import numpy as np

    rows = [r for r in ([x % L for x in rr] for rr in rel_rows) if any(r)]
    M = np.array(rows, dtype=np.int64).reshape(len(rows), k)
    nr = M.shape[0]
    V = np.eye(k, dtype=np.int64)
    Vinv = np.eye(k, dtype=np.int64)

    def combine_cols(j1, j2, a11, a12, a21, a22, i11, i12, i21, i22):
        """cols (j1,j2) <- (a11*c1 + a21*c2, a12*c1 + a22*c2); i.. is the inverse."""
        for A in (M, V):
            x = A[:, j1].copy()
            y = A[:, j2].copy()
            A[:, j1] = (a11 * x + a21 * y) % L
            A[:, j2] = (a12 * x + a22 * y) % L
        w1 = Vinv[j1].copy()
        w2 = Vinv[j2].copy()
        Vinv[j1] = (i11 * w1 + i12 * w2) % L
        Vinv[j2] = (i21 * w1 + i22 * w2) % L

    def col_scale(j, c):
        cinv = pow(c, -1, L)
        M[:, j] = (M[:, j] * c) % L
        V[:, j] = (V[:, j] * c) % L
        Vinv[j] = (Vinv[j] * cinv) % L

    diag = []
    for t in range(k):
        if t >= nr:
            diag.append(L)
            continue
        while True:
            sub = M[t:, t:]
            G = np.gcd(sub, L)
            G = np.where(sub == 0, L + 1, G)
            flat = int(np.argmin(G))
            bi, bj = divmod(flat, k - t)
            if G[bi, bj] == L + 1:
                diag.append(L)
                break
            bi += t
            bj += t
            if bi != t:
                M[[t, bi]] = M[[bi, t]]
            if bj != t:
                combine_cols(t, bj, 0, 1, 1, 0, 0, 1, 1, 0)
            a = int(M[t, t])
            if a != gcd(a, L):
                col_scale(t, unit_for(a, L))
            p = int(M[t, t])  # a divisor of L
            # clear column t below the pivot with row operations
            col = M[t + 1 :, t]
            if np.all(col % p == 0):
                q = col // p
                M[t + 1 :] = (M[t + 1 :] - q[:, None] * M[t]) % L
            else:
                i = t + 1 + int(np.argmax(col % p != 0))
                b = int(M[i, t])
                g, s, u = egcd(p, b)
                rt = (s * M[t] + u * M[i]) % L
                ri = ((b // g) * M[t] - (p // g) * M[i]) % L
                M[t], M[i] = rt, ri
                continue  # pivot gcd strictly decreased; re-search
            # clear row t right of the pivot; p | L, so p | b allows exact
            # column operations that leave column t untouched
            rowvals = M[t, t + 1 :].copy()
            if np.all(rowvals % p == 0):
                q = rowvals // p
                if np.any(q):
                    M[:, t + 1 :] = (M[:, t + 1 :] - np.outer(M[:, t], q)) % L
                    V[:, t + 1 :] = (V[:, t + 1 :] - np.outer(V[:, t], q)) % L
                    Vinv[t] = (Vinv[t] + q @ Vinv[t + 1 :]) % L
            else:
                j = t + 1 + int(np.argmax(rowvals % p != 0))
                b = int(M[t, j])
                g, s, u = egcd(p, b)
                combine_cols(t, j, s, -(b // g), u, p // g, p // g, b // g, -u, s)
                continue  # pivot gcd strictly decreased; re-search
            # enforce p | every remaining entry
            rem = M[t + 1 :, t + 1 :] % p
            if np.any(rem):
                bad = t + 1 + int(np.argmax(np.any(rem != 0, axis=0)))
                # col t += col bad, then redo this diagonal position
                M[:, t] = (M[:, t] + M[:, bad]) % L
                V[:, t] = (V[:, t] + V[:, bad]) % L
                Vinv[bad] = (Vinv[bad] - Vinv[t]) % L
                continue
            diag.append(p)
            break

    kept = [(d, j) for j, d in enumerate(diag) if d != 1]
    # SNF order is d_t | d_{t+1}; reverse for a decreasing divisibility chain
    kept.sort(key=lambda dj: -dj[1])
    orders = tuple(d for d, _ in kept)
    cols = [j for _, j in kept]
    Vmat = [[int(V[i, j]) for j in cols] for i in range(k)]
    Vinv_rows = [tuple(int(x) for x in Vinv[j]) for j in cols]
    return orders, Vmat, Vinv_rows

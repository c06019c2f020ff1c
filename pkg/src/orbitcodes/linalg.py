"""Gaussian elimination over F_p and over subfields of a tower.

Matrices are lists of rows.  In the tower routines each entry is a field
element (packed int) lying in whatever subfield the caller works over; the
tower's arithmetic is closed on every subfield, so one routine serves all.
"""

from __future__ import annotations


def inverse_mod_p(mat, p: int):
    """Inverse of a square matrix over F_p (entries plain ints)."""
    n = len(mat)
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] % p), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, p)
        a[col] = [(v * inv) % p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] % p:
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def rref(tower, rows):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns).

    Pivot = first nonzero column, normalised to 1, cleared in every other row.
    """
    t = tower
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    out: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        piv = next((i for i, r in enumerate(rows) if r[col]), None)
        if piv is None:
            continue
        r = rows.pop(piv)
        inv = t.inv(r[col])
        if r[col] != 1:
            r = [t.mul(inv, v) for v in r]
        for i, other in enumerate(rows):
            f = other[col]
            if f:
                rows[i] = [t.sub(x, t.mul(f, y)) for x, y in zip(other, r)]
        for i, other in enumerate(out):
            f = other[col]
            if f:
                out[i] = [t.sub(x, t.mul(f, y)) for x, y in zip(other, r)]
        out.append(r)
        pivots.append(col)
        if not rows:
            break
    return out, pivots


def rank(tower, rows) -> int:
    return len(rref(tower, rows)[0])


def nullspace(tower, rows, ncols: int):
    """Basis of {x : rows . x = 0} (right kernel), each vector normalised by RREF."""
    red, pivots = rref(tower, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, pc in zip(red, pivots):
            v[pc] = tower.neg(r[f])
        basis.append(v)
    return basis


def mat_mul(tower, a, b):
    t = tower
    cols = list(zip(*b))
    out = []
    for row in a:
        new = []
        for col in cols:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = t.add(acc, t.mul(x, y))
            new.append(acc)
        out.append(new)
    return out


def mat_inv(tower, a):
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(tower, aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def transpose(a):
    return [list(col) for col in zip(*a)]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


# -- bit-packed GF(2) ------------------------------------------------------

def rref_gf2(vectors) -> tuple[int, ...]:
    """Canonical RREF of packed GF(2) vectors; bit i is column i, pivot = lowest bit."""
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            if v & (r & -r):
                v ^= r
        if v:
            low = v & -v
            rows = [r ^ v if r & low else r for r in rows]
            rows.append(v)
    rows.sort(key=lambda r: r & -r)
    return tuple(rows)


def rank_gf2(vectors) -> int:
    return len(rref_gf2(vectors))

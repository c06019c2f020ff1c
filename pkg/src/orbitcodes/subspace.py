"""F_q-subspaces of F_{q^n} in canonical form, the subspace metric, and duality.

A subspace is stored as the reduced row echelon basis of its F_q-coordinate
matrix (basis 1, w, ..., w^(n-1)), with each row converted back to the field
element it represents.  Pivots sit in the lowest coordinate, so for q = 2 the
rows are bit-packed ints and the RREF is plain XOR elimination.  Two subspaces
are equal exactly when their row tuples are.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator

from .bounds import gaussian_binomial
from .errors import CapExceeded, FieldError
from .gf import FieldTower, divisors
from .linalg import nullspace, rank, rank_gf2, rref, rref_gf2

Key = tuple  # canonical rows, the hashable identity of a subspace


def canonical_rows(tower: FieldTower, elements: Iterable[int]) -> Key:
    if tower.fast:
        return rref_gf2(elements)
    conv = tower.coords(1)
    rows = [conv.to_coords(x) for x in elements if x]
    if not rows:
        return ()
    red, _ = rref(tower, rows)
    return tuple(conv.from_coords(r) for r in red)


def span_rank(tower: FieldTower, elements) -> int:
    """F_q-dimension of the span of ``elements``."""
    if tower.fast:
        return rank_gf2(elements)
    conv = tower.coords(1)
    rows = [conv.to_coords(x) for x in elements if x]
    return rank(tower, rows) if rows else 0


class Subspace:
    """An F_q-subspace of F_{q^n}; immutable, hashable, ordered by canonical rows."""

    __slots__ = ("tower", "rows")

    def __init__(self, tower: FieldTower, rows: Key):
        self.tower = tower
        self.rows = rows

    @property
    def k(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.rows == other.rows and self.tower is other.tower

    def __hash__(self):
        return hash(self.rows)

    def __lt__(self, other: Subspace):
        return self.rows < other.rows

    def __repr__(self):
        return f"Subspace({format_subspace(self)!r})"

    def __contains__(self, x: int) -> bool:
        return contains(self.tower, self.rows, x)

    def elements(self) -> list[int]:
        return span_elements(self.tower, self.rows)


def contains(tower: FieldTower, rows: Key, x: int) -> bool:
    if x == 0:
        return True
    if tower.fast:
        for r in rows:
            if x & (r & -r):
                x ^= r
        return x == 0
    return span_rank(tower, rows + (x,)) == len(rows)


def span_elements(tower: FieldTower, rows: Key) -> list[int]:
    if tower.fast:
        out = [0]
        for r in rows:
            out += [x ^ r for x in out]
        return out
    scalars = tower.subfield_elements(1)
    out = []
    for cs in itertools.product(scalars, repeat=len(rows)):
        acc = 0
        for c, r in zip(cs, rows):
            if c:
                acc = tower.add(acc, tower.mul(c, r))
        out.append(acc)
    return out


def from_generators(tower: FieldTower, gens: Iterable[int]) -> Subspace:
    gens = list(gens)
    if not any(gens):
        raise ValueError("all generators are zero")
    return Subspace(tower, canonical_rows(tower, gens))


def whole_space(tower: FieldTower) -> Subspace:
    return from_generators(tower, [tower.w(i) for i in range(tower.n)])


def _check_same(a: Subspace, b: Subspace):
    if a.tower is not b.tower:
        raise ValueError("subspaces live in different towers")


def intersection_dim(v: Subspace, w: Subspace) -> int:
    _check_same(v, w)
    return v.k + w.k - span_rank(v.tower, v.rows + w.rows)


def key_distance(tower: FieldTower, a: Key, b: Key) -> int:
    return 2 * span_rank(tower, a + b) - len(a) - len(b)


def distance(v: Subspace, w: Subspace) -> int:
    """dim V + dim W - 2 dim(V & W)."""
    _check_same(v, w)
    return key_distance(v.tower, v.rows, w.rows)


def shift_key(tower: FieldTower, rows: Key, alpha: int) -> Key:
    mul = tower.mul
    return canonical_rows(tower, [mul(alpha, r) for r in rows])


def frobenius_key(tower: FieldTower, rows: Key, i: int) -> Key:
    return canonical_rows(tower, [tower.frobenius(r, i) for r in rows])


def scalar_shift(alpha: int, u: Subspace) -> Subspace:
    """alpha * U."""
    if alpha == 0:
        raise ValueError("shift by zero")
    return Subspace(u.tower, shift_key(u.tower, u.rows, alpha))


def frobenius_shift(u: Subspace, i: int) -> Subspace:
    """U^[i] = {x^(q^i) : x in U}."""
    return Subspace(u.tower, frobenius_key(u.tower, u.rows, i))


def key_delta(tower: FieldTower, rows: Key, s: int) -> int:
    conv = tower.coords(s)
    return rank(tower, [conv.to_coords(r) for r in rows]) if rows else 0


def delta_s(u: Subspace, s: int) -> int:
    """Dimension over F_{q^s} of the F_{q^s}-span of U."""
    u.tower.check_divisor(s)
    return key_delta(u.tower, u.rows, s)


def delta_profile(u: Subspace) -> dict[int, int]:
    return {s: delta_s(u, s) for s in divisors(u.tower.n)}


def stabilizer_field_degree(u: Subspace) -> int:
    """Largest t | n such that U is closed under multiplication by F_{q^t}."""
    t = u.tower
    best = 1
    for d in divisors(t.n):
        if d > 1 and u.k % d == 0 and shift_key(t, u.rows, t.subfield_generator(d)) == u.rows:
            best = d
    return best


def smallest_containing_subfield(u: Subspace) -> int:
    """Least s | n with U inside F_{q^s}; needs 1 in U."""
    t = u.tower
    if 1 not in u:
        raise ValueError("subspace must contain 1")
    for s in divisors(t.n):
        if all(t.in_subfield(r, s) for r in u.rows):
            return s
    return t.n  # unreachable: F_{q^n} contains everything


def is_generic(u: Subspace) -> bool:
    return smallest_containing_subfield(normalize_one(u)) == u.tower.n


def inner(tower: FieldTower, x: int, y: int) -> int:
    """The fixed form <w^i, w^j> = [i == j]: dot product of F_q-coordinates."""
    if tower.fast:
        return (x & y).bit_count() & 1
    conv = tower.coords(1)
    acc = 0
    for a, b in zip(conv.to_coords(x), conv.to_coords(y)):
        if a and b:
            acc = tower.add(acc, tower.mul(a, b))
    return acc


def dual(u: Subspace) -> Subspace:
    """U^perp with respect to the coordinate dot product."""
    t = u.tower
    conv = t.coords(1)
    if not u.rows:
        return whole_space(t)
    kernel = nullspace(t, [conv.to_coords(r) for r in u.rows], t.n)
    return Subspace(t, canonical_rows(t, [conv.from_coords(v) for v in kernel]))


def normalize_one(u: Subspace) -> Subspace:
    """Shift U by the inverse of its least nonzero element, so that 1 is in U."""
    if 1 in u:
        return u
    least = min(x for x in u.elements() if x)
    return scalar_shift(u.tower.inv(least), u)


def grassmannian_size(q: int, n: int, k: int) -> int:
    return gaussian_binomial(n, k, q)


def enumerate_grassmannian(tower: FieldTower, k: int, must_contain_one: bool = False,
                           cap: int = 10**7) -> Iterator[Subspace]:
    """Every k-dimensional F_q-subspace once, by RREF pivot pattern.

    With ``must_contain_one`` only subspaces containing 1 are produced; in RREF
    these are exactly the ones whose first row is the element 1.
    """
    n, q = tower.n, tower.q
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    total = grassmannian_size(q, n - 1, k - 1) if must_contain_one and k else grassmannian_size(q, n, k)
    if total > cap:
        raise CapExceeded(f"G_{q}({k},{n})", cap, total)
    if k == 0:
        if not must_contain_one:
            yield Subspace(tower, ())
        return
    scalars = tower.subfield_elements(1)
    conv = tower.coords(1)
    for pivots in itertools.combinations(range(n), k):
        if must_contain_one and pivots[0] != 0:
            break
        slots = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n)
                 if j not in pivots and not (must_contain_one and i == 0)]
        for values in itertools.product(scalars, repeat=len(slots)):
            mat = [[0] * n for _ in range(k)]
            for i, pc in enumerate(pivots):
                mat[i][pc] = 1
            for (i, j), v in zip(slots, values):
                mat[i][j] = v
            yield Subspace(tower, tuple(conv.from_coords(r) for r in mat))


# -- literals ----------------------------------------------------------------

_POWER = re.compile(r"^w\^(-?\d+)$")


def parse_element(tower: FieldTower, text: str) -> int:
    """``w^i``, ``0``, or a little-endian base-p digit string of coordinates."""
    text = text.strip()
    m = _POWER.match(text)
    if m:
        return tower.w(int(m.group(1)))
    if not text or any(not ch.isdigit() or int(ch) >= tower.p for ch in text):
        raise FieldError(f"bad element literal {text!r}")
    if len(text) > tower.degree:
        raise FieldError(f"element literal {text!r} longer than {tower.degree} digits")
    return tower.from_digits(int(ch) for ch in text)


def format_element(tower: FieldTower, x: int) -> str:
    return "".join(str(d) for d in tower.digits(x))


def parse_subspace(tower: FieldTower, text: str) -> Subspace:
    gens = [parse_element(tower, tok) for tok in text.split(";") if tok.strip()]
    if not gens:
        raise FieldError("empty subspace literal")
    return from_generators(tower, gens)


def format_subspace(u: Subspace) -> str:
    if not u.rows:
        return "0"
    return ";".join(format_element(u.tower, r) for r in u.rows)

"""F_q-linear maps of F_{q^n}, stored by the images of the basis 1, w, ..., w^(n-1).

The coordinate matrix uses the row convention: row i is the F_q-coordinate
vector of phi(w^i), so coords(phi(x)) = coords(x) @ A.  With the fixed form
(coordinate dot product) the adjoint is simply the transpose.
"""

from __future__ import annotations

from .errors import CapExceeded
from .gf import TABLE_LIMIT, FieldTower
from .linalg import mat_inv, mat_mul, rank
from .subspace import canonical_rows, span_rank


class LinMap:
    __slots__ = ("tower", "images", "_table", "_fp")

    def __init__(self, tower: FieldTower, images):
        self.tower = tower
        self.images = tuple(images)
        self._table = None
        self._fp = None

    # images of the F_p basis p^j; equal to ``images`` when q is prime
    def _fp_images(self):
        if self._fp is None:
            t = self.tower
            if t.e == 1:
                self._fp = self.images
            else:
                self._fp = tuple(self._apply_slow(t.p**j) for j in range(t.degree))
        return self._fp

    def _apply_slow(self, x: int) -> int:
        t = self.tower
        if t.fast:
            acc, i = 0, 0
            while x:
                if x & 1:
                    acc ^= self.images[i]
                x >>= 1
                i += 1
            return acc
        acc = 0
        for c, img in zip(t.coords(1).to_coords(x), self.images):
            if c:
                acc = t.add(acc, t.mul(c, img))
        return acc

    def table(self) -> list[int]:
        if self._table is None:
            t = self.tower
            units = self._fp_images()
            tab = [0] * t.order
            if t.binary:
                for x in range(1, t.order):
                    low = x & -x
                    tab[x] = tab[x ^ low] ^ units[low.bit_length() - 1]
            else:
                for x in range(1, t.order):
                    j, place = 0, 1
                    while (x // place) % t.p == 0:
                        place *= t.p
                        j += 1
                    tab[x] = t.add(tab[x - place], units[j])
            self._table = tab
        return self._table

    def __call__(self, x: int) -> int:
        if self._table is not None:
            return self._table[x]
        if self.tower.order <= TABLE_LIMIT:
            return self.table()[x]
        return self._apply_slow(x)

    def apply_rows(self, rows) -> tuple:
        """Canonical rows of phi(U) for U given by its rows."""
        return canonical_rows(self.tower, [self(r) for r in rows])

    def compose(self, other: LinMap) -> LinMap:
        """self after other."""
        return LinMap(self.tower, (self(x) for x in other.images))

    def is_invertible(self) -> bool:
        return span_rank(self.tower, self.images) == self.tower.n

    def matrix(self) -> list[list[int]]:
        conv = self.tower.coords(1)
        return [list(conv.to_coords(x)) for x in self.images]

    def __eq__(self, other):
        return isinstance(other, LinMap) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"LinMap({list(self.images)})"


def from_matrix(tower: FieldTower, mat) -> LinMap:
    conv = tower.coords(1)
    return LinMap(tower, (conv.from_coords(row) for row in mat))


def identity_map(tower: FieldTower) -> LinMap:
    return LinMap(tower, (tower.w(i) for i in range(tower.n)))


def mult_map(tower: FieldTower, a: int) -> LinMap:
    """m_a : x -> a x."""
    return LinMap(tower, (tower.mul(a, tower.w(i)) for i in range(tower.n)))


def frobenius_map(tower: FieldTower, i: int = 1) -> LinMap:
    """x -> x^(q^i)."""
    return LinMap(tower, (tower.frobenius(tower.w(j), i) for j in range(tower.n)))


def inverse(phi: LinMap) -> LinMap:
    return from_matrix(phi.tower, mat_inv(phi.tower, phi.matrix()))


def transpose_map(phi: LinMap) -> LinMap:
    return from_matrix(phi.tower, [list(c) for c in zip(*phi.matrix())])


def matrix_product(tower: FieldTower, a, b):
    return mat_mul(tower, a, b)


def is_semilinear_over(phi: LinMap, s: int) -> bool:
    """True when phi is F_{q^s}-linear, i.e. commutes with multiplication by w^N."""
    t = phi.tower
    m = mult_map(t, t.subfield_generator(s))
    return phi.compose(m) == m.compose(phi)


# -- generators of GL_{n/s}(q^s) acting on F_{q^s}-coordinates ----------------

def _coord_map(tower: FieldTower, s: int, f) -> LinMap:
    conv = tower.coords(s)
    return LinMap(tower, (conv.from_coords(f(list(conv.to_coords(tower.w(i)))))
                          for i in range(tower.n)))


def ext_generators(tower: FieldTower, s: int) -> list[LinMap]:
    """Dilation, m-cycle and one transvection; together they generate GL_m(q^s), m = n/s."""
    tower.check_divisor(s)
    m = tower.n // s
    zeta = tower.subfield_generator(s)

    def dilate(c):
        c[0] = tower.mul(zeta, c[0])
        return c

    def cycle(c):
        return c[-1:] + c[:-1]

    def transvect(c):
        c[1] = tower.add(c[1], c[0])
        return c

    gens = [_coord_map(tower, s, dilate)]
    if m >= 2:
        gens.append(_coord_map(tower, s, cycle))
        gens.append(_coord_map(tower, s, transvect))
    return [g for g in gens if g != identity_map(tower)] or [identity_map(tower)]


def random_ext_element(tower: FieldTower, s: int, rng) -> LinMap:
    """Uniform random F_{q^s}-linear automorphism, by rejection on random coordinate matrices."""
    m = tower.n // s
    conv = tower.coords(s)
    elems = tower.subfield_elements(s)
    while True:
        rows = [[rng.choice(elems) for _ in range(m)] for _ in range(m)]
        img = [conv.from_coords(r) for r in rows]
        # F_{q^s}-rank of the images of 1, w, ..., w^(m-1)
        if rank(tower, rows) < m:
            continue
        # phi(sum c_i w^i) = sum c_i img_i with c_i in F_{q^s}
        images = []
        for i in range(tower.n):
            cs = conv.to_coords(tower.w(i))
            acc = 0
            for c, y in zip(cs, img):
                if c:
                    acc = tower.add(acc, tower.mul(c, y))
            images.append(acc)
        return LinMap(tower, images)


def group_closure(gens: list[LinMap], cap: int) -> set:
    """All products of the generators, as image tuples; raises past ``cap``."""
    ident = identity_map(gens[0].tower)
    seen = {ident.images}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = h.compose(g)
                if x.images not in seen:
                    seen.add(x.images)
                    if len(seen) > cap:
                        raise CapExceeded("group closure", cap, len(seen))
                    nxt.append(x)
        frontier = nxt
    return seen

"""Arithmetic in a field tower F_p <= F_q <= F_{q^s} <= F_{q^n}.

The whole tower is realised as F_{p^(e*n)} with a fixed primitive element w.
An element is a plain ``int`` whose base-p digits, little-endian, are its
coordinates in the power basis 1, w, ..., w^(e*n - 1).  That integer doubles as
the canonical rank used for tie-breaking, so 0 and 1 are the field's 0 and 1
and the prime field F_p is exactly ``range(p)``.

Subfields are never built separately: F_{q^s} is {0} together with the powers
of w^N, N = (p^(en) - 1) / (q^s - 1).
"""

from __future__ import annotations

import math
import random
from functools import cached_property

from ._conway import CONWAY
from .errors import FieldError

DEFAULT_SIZE_CAP = 2**24
# full coordinate/linear-map tables are materialised up to this many elements
TABLE_LIMIT = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**e``; raise if q is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not is_prime(p):
                break
            return p, e
    raise FieldError(f"{q} is not a prime power")


def parse_poly(text: str) -> tuple[int, ...]:
    """Parse a comma-separated override ``c_0,...,c_{d-1}`` (monic implied)."""
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError as exc:
        raise FieldError(f"bad polynomial literal {text!r}") from exc


class FieldTower:
    """The field F_{q^n}, q = p^e, with primitive element w.

    ``poly`` holds c_0..c_{d-1} of the monic defining polynomial
    x^d + c_{d-1} x^{d-1} + ... + c_0 of w over F_p, d = e*n.  Without an
    override the Conway polynomial is used.  Construction fails unless w is
    primitive, which also certifies irreducibility.
    """

    def __init__(self, p: int, e: int, n: int, poly=None, size_cap: int = DEFAULT_SIZE_CAP):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if e < 1 or n < 1:
            raise FieldError("e and n must be positive")
        self.p = p
        self.e = e
        self.n = n
        self.q = p**e
        self.degree = e * n
        self.order = p**self.degree
        self.mult_order = self.order - 1
        if self.order > size_cap:
            raise FieldError(f"field of size {p}^{self.degree} exceeds cap {size_cap}")
        if poly is None:
            if (p, self.degree) not in CONWAY:
                raise FieldError(f"no built-in polynomial for p={p}, degree {self.degree}; pass one")
            poly = CONWAY[(p, self.degree)]
        poly = tuple(int(c) for c in poly)
        if len(poly) != self.degree or any(not 0 <= c < p for c in poly):
            raise FieldError(f"polynomial needs {self.degree} digits in 0..{p - 1}, got {poly}")
        self.poly = poly
        self.binary = p == 2
        # q = 2 with bit-packed coordinates: the fast path used by most sweeps
        self.fast = p == 2 and e == 1
        self._top = p ** (self.degree - 1)
        self._polyint = sum(c * p**i for i, c in enumerate(poly))
        self._cache: dict = {}
        self._build_tables()

    def __repr__(self):
        return f"FieldTower(p={self.p}, e={self.e}, n={self.n}, poly={self.poly})"

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.p, self.e, self.n)

    # -- digit helpers -----------------------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.degree):
            x, d = divmod(x, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, ds) -> int:
        x = 0
        for d in reversed(tuple(ds)):
            x = x * self.p + d % self.p
        return x

    def _digit_axpy(self, x: int, c: int, y: int) -> int:
        """x + c*y digitwise, c in F_p; used only while building tables."""
        p = self.p
        out, place = 0, 1
        while x or y:
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            out += ((dx + c * dy) % p) * place
            place *= p
        return out

    def _times_omega(self, x: int) -> int:
        if self.binary:
            x <<= 1
            if x >> self.degree:
                x ^= (1 << self.degree) ^ self._polyint
            return x
        t, rest = divmod(x, self._top)
        return self._digit_axpy(rest * self.p, (-t) % self.p, self._polyint)

    def _build_tables(self):
        m = self.mult_order
        exp = [0] * m
        log = [-1] * self.order
        x = 1
        for i in range(m):
            if x == 0 or log[x] != -1:
                raise FieldError(f"polynomial {self.poly} is not primitive over F_{self.p}")
            exp[i] = x
            log[x] = i
            x = self._times_omega(x)
        if x != 1:
            raise FieldError(f"polynomial {self.poly} is not primitive over F_{self.p}")
        self.exp = exp
        self.log = log
        if not self.binary:
            # Zech logarithms: 1 + w^k = w^zech[k]  (-1 where the sum vanishes)
            zech = [-1] * m
            for k in range(m):
                s = self._digit_axpy(1, 1, exp[k])
                zech[k] = log[s] if s else -1
            self._zech = zech
            self._half = m // 2

    # -- arithmetic --------------------------------------------------------

    @property
    def omega(self) -> int:
        return self.exp[1 % self.mult_order]

    def add(self, a: int, b: int) -> int:
        if self.binary:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log[a]
        z = self._zech[(self.log[b] - la) % self.mult_order]
        if z < 0:
            return 0
        return self.exp[(la + z) % self.mult_order]

    def neg(self, a: int) -> int:
        if self.binary or a == 0:
            return a
        return self.exp[(self.log[a] + self._half) % self.mult_order]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % self.mult_order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[-self.log[a] % self.mult_order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if k == 0 else 0
        return self.exp[(self.log[a] * k) % self.mult_order]

    def w(self, i: int) -> int:
        """w^i."""
        return self.exp[i % self.mult_order]

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i); the identity for i = n."""
        if a == 0:
            return 0
        return self.exp[(self.log[a] * pow(self.q, i % self.n, self.mult_order)) % self.mult_order]

    def poly_mul(self, a: int, b: int) -> int:
        """Multiply by shift-and-add with w (companion-matrix action), no tables."""
        acc = 0
        ds = self.digits(a)
        y = b
        for d in ds:
            if d:
                acc = self._digit_axpy(acc, d, y) if not self.binary else acc ^ y
            y = self._times_omega(y)
        return acc

    def element_order(self, a: int) -> int:
        return self.mult_order // math.gcd(self.log[a], self.mult_order)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> int:
        lo = 1 if nonzero else 0
        return rng.randrange(lo, self.order)

    # -- subfields ---------------------------------------------------------

    def check_divisor(self, s: int):
        if s < 1 or self.n % s:
            raise FieldError(f"{s} does not divide n={self.n}")

    def subfield_index(self, s: int) -> int:
        """N with F_{q^s}^* = <w^N>."""
        self.check_divisor(s)
        return self.mult_order // (self.q**s - 1)

    def subfield_generator(self, s: int) -> int:
        return self.w(self.subfield_index(s))

    def in_subfield(self, x: int, s: int) -> bool:
        return x == 0 or self.log[x] % self.subfield_index(s) == 0

    def subfield_elements(self, s: int) -> list[int]:
        N = self.subfield_index(s)
        return [0] + sorted(self.exp[i] for i in range(0, self.mult_order, N))

    def coords(self, s: int = 1) -> SubfieldCoords:
        """Coordinate map F_{q^n} -> F_{q^s}^(n/s) in the basis 1, w, ..., w^(n/s - 1)."""
        key = ("coords", s)
        if key not in self._cache:
            self._cache[key] = SubfieldCoords(self, s)
        return self._cache[key]

    @cached_property
    def fq_min_poly(self) -> tuple[int, ...]:
        """f_0..f_{n-1} with w^n = sum f_i w^i, f_i in F_q."""
        return self.coords(1).to_coords(self.w(self.n))

    def field_name(self, j: int | None = None) -> str:
        """Display name of F_{q^j}."""
        j = self.n if j is None else j
        return f"F_{self.q}" if j == 1 else f"F_{{{self.q}^{j}}}"


def make_field(p: int, e: int = 1, n: int = 1, poly_override=None,
               size_cap: int = DEFAULT_SIZE_CAP) -> FieldTower:
    """Build the tower for F_{(p^e)^n}.  ``poly_override`` may be a digit list or a
    comma-separated string (lowest degree first, monic implied)."""
    if isinstance(poly_override, str):
        poly_override = parse_poly(poly_override)
    key = (p, e, n, tuple(poly_override) if poly_override is not None else None, size_cap)
    if key not in _TOWERS:
        _TOWERS[key] = FieldTower(p, e, n, poly_override, size_cap)
    return _TOWERS[key]


_TOWERS: dict = {}


def field_for(q: int, n: int, poly_override=None) -> FieldTower:
    """Tower for F_{q^n} given q as a prime power."""
    p, e = prime_power(q)
    return make_field(p, e, n, poly_override)


class SubfieldCoords:
    """Coordinates over F_{q^s} in the basis 1, w, ..., w^(m-1), m = n/s.

    Entries are field elements of the subfield, as packed ints of the big field.
    The map is F_p-linear, so it is stored through the images of the F_p basis
    vectors w^t (packed int p^t).
    """

    def __init__(self, tower: FieldTower, s: int):
        tower.check_divisor(s)
        self.tower = t = tower
        self.s = s
        self.m = tower.n // s
        self.identity = t.e == 1 and s == 1
        self._table = None
        if self.identity:
            return
        es = t.e * s
        eta = t.subfield_generator(s)
        eta_pows = [t.pow(eta, j) for j in range(es)]
        basis = [t.mul(eta_pows[j], t.w(i)) for i in range(self.m) for j in range(es)]
        from .linalg import inverse_mod_p

        binv = inverse_mod_p([list(t.digits(b)) for b in basis], t.p)
        units = []
        for row in binv:
            cs = []
            for i in range(self.m):
                acc = 0
                for j in range(es):
                    c = row[i * es + j]
                    if c:
                        acc = t.add(acc, t.mul(c, eta_pows[j]))
                cs.append(acc)
            units.append(tuple(cs))
        self._units = units
        if t.order <= TABLE_LIMIT:
            self._table = self._build_table()

    def _build_table(self):
        t = self.tower
        table = [None] * t.order
        table[0] = (0,) * self.m
        for x in range(1, t.order):
            j, place = 0, 1
            while (x // place) % t.p == 0:
                place *= t.p
                j += 1
            prev = table[x - place]
            table[x] = tuple(t.add(a, b) for a, b in zip(prev, self._units[j]))
        return table

    def to_coords(self, x: int) -> tuple[int, ...]:
        if self.identity:
            return self.tower.digits(x)
        if self._table is not None:
            return self._table[x]
        t = self.tower
        out = [0] * self.m
        for j, d in enumerate(t.digits(x)):
            if d:
                out = [t.add(o, t.mul(d, u)) for o, u in zip(out, self._units[j])]
        return tuple(out)

    def from_coords(self, cs) -> int:
        t = self.tower
        if self.identity:
            return t.from_digits(cs)
        acc = 0
        for i, c in enumerate(cs):
            if c:
                acc = t.add(acc, t.mul(c, t.w(i)))
        return acc


def companion_matrix(tower: FieldTower) -> list[list[int]]:
    """M_f over F_q: row i holds the F_q-coordinates of w^(i+1).

    With row-vector convention, coords(c*w) = coords(c) @ M_f.
    """
    conv = tower.coords(1)
    return [list(conv.to_coords(tower.w(i + 1))) for i in range(tower.n)]


def subfield_basis(tower: FieldTower, s: int) -> list[int]:
    """1, w, ..., w^(n/s - 1): an F_{q^s}-basis of F_{q^n}."""
    tower.check_divisor(s)
    return [tower.w(i) for i in range(tower.n // s)]

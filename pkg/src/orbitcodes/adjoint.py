"""Adjoints for the coordinate dot product and the recurrence maps rho.

For f = X^n - sum f_i X^i, the minimal polynomial of w over F_q, every
nonzero start vector a defines rho_a(w^i) = sum_j a_{j+i} w^j, where (a_j)
is the linear recurrence a_{j+n} = sum f_i a_{j+i}.  Its coordinate matrix is
a Hankel matrix, and rho_a^{-1} m_w^T rho_a = m_w.  Choosing a orthogonal to
the image of z -> z^q - z additionally turns the transposed Frobenius into
the inverse Frobenius, so rho conjugates the adjoint of every group in play
back onto the group itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .gf import FieldTower, divisors
from .linalg import nullspace
from .maps import (
    LinMap,
    ext_generators,
    frobenius_map,
    inverse,
    is_semilinear_over,
    mult_map,
    random_ext_element,
    transpose_map,
)
from .orbit import NORMALIZER, SINGER, OrbitCode, bfs_orbit, normalizer_orbit_keys, singer_orbit_keys
from .subspace import Subspace, dual, key_distance

LinearMap = LinMap


def lfsr_sequence(tower: FieldTower, init, length: int) -> list[int]:
    n = tower.n
    f = tower.fq_min_poly
    if len(init) != n:
        raise ValueError(f"need {n} initial values")
    xs = list(init)
    while len(xs) < length:
        j = len(xs) - n
        acc = 0
        for fi, x in zip(f, xs[j:]):
            if fi and x:
                acc = tower.add(acc, tower.mul(fi, x))
        xs.append(acc)
    return xs[:length]


def rho_from_a(tower: FieldTower, a) -> LinMap:
    """rho(w^i) = sum_j a_{j+i} w^j."""
    a = tuple(a)
    if not any(a):
        raise ValueError("start vector must be nonzero")
    n = tower.n
    seq = lfsr_sequence(tower, a, 2 * n - 1)
    conv = tower.coords(1)
    return LinMap(tower, (conv.from_coords(seq[i:i + n]) for i in range(n)))


def xi_image(tower: FieldTower) -> list[int]:
    """xi(w^j) = w^(jq) - w^j for j < n; spans im(xi)."""
    return [tower.sub(tower.frobenius(tower.w(j), 1), tower.w(j)) for j in range(tower.n)]


def canonical_rho_start(tower: FieldTower) -> tuple[int, ...]:
    conv = tower.coords(1)
    rows = [list(conv.to_coords(x)) for x in xi_image(tower) if x]
    kernel = nullspace(tower, rows, tower.n)
    if len(kernel) != 1:
        raise RuntimeError(f"orthogonal complement of im(xi) has dimension {len(kernel)}")
    v = kernel[0]
    lead = next(c for c in v if c)
    inv = tower.inv(lead)
    return tuple(tower.mul(inv, c) for c in v)


def canonical_rho(tower: FieldTower) -> LinMap:
    key = ("rho",)
    if key not in tower._cache:
        tower._cache[key] = rho_from_a(tower, canonical_rho_start(tower))
    return tower._cache[key]


def adjoint(phi: LinMap) -> LinMap:
    return transpose_map(phi)


def conjugate_adjoint(rho: LinMap, rho_inv: LinMap, g: LinMap) -> LinMap:
    """rho^{-1} o g^T o rho."""
    return rho_inv.compose(adjoint(g).compose(rho))


@dataclass
class AdjointReport:
    params: tuple[int, int, int]
    checks: dict[str, list[int]] = field(default_factory=dict)  # name -> [passed, total]

    def record(self, name: str, ok: bool):
        c = self.checks.setdefault(name, [0, 0])
        c[0] += ok
        c[1] += 1

    @property
    def ok(self) -> bool:
        return all(p == t and t > 0 for p, t in self.checks.values())

    def lines(self) -> list[str]:
        return [f"{name}: {p}/{t}" for name, (p, t) in sorted(self.checks.items())]


def verify_adjoint_theorem(tower: FieldTower, samples: int = 20, seed: int = 0) -> AdjointReport:
    t = tower
    rng = random.Random(seed)
    rep = AdjointReport(t.params)
    rho = canonical_rho(t)
    rho_inv = inverse(rho)
    m_w = mult_map(t, t.omega)
    sigma = frobenius_map(t, 1)
    rep.record("singer", conjugate_adjoint(rho, rho_inv, m_w) == m_w)
    rep.record("frobenius", conjugate_adjoint(rho, rho_inv, sigma) == frobenius_map(t, t.n - 1))
    for s in divisors(t.n):
        for g in ext_generators(t, s):
            rep.record(f"ext(s={s})", is_semilinear_over(conjugate_adjoint(rho, rho_inv, g), s))
        for _ in range(samples):
            g = random_ext_element(t, s, rng)
            rep.record(f"ext(s={s})", is_semilinear_over(conjugate_adjoint(rho, rho_inv, g), s))
    return rep


def dual_reference(u: Subspace) -> Subspace:
    """rho^{-1}(U^perp): its Singer orbit is rho^{-1} applied to the dual code."""
    t = u.tower
    rho_inv = inverse(canonical_rho(t))
    w = dual(u)
    return Subspace(t, rho_inv.apply_rows(w.rows))


def _group_gens(orbit: OrbitCode) -> list[LinMap]:
    t = orbit.tower
    tag = orbit.group_tag
    if tag == SINGER:
        return [mult_map(t, t.omega)]
    if tag == NORMALIZER:
        return [mult_map(t, t.omega), frobenius_map(t, 1)]
    if tag.startswith("ExtField("):
        return ext_generators(t, int(tag[len("ExtField("):-1]))
    raise ValueError(f"unknown group tag {tag}")


def dual_orbit(orbit: OrbitCode, check: bool = True) -> OrbitCode:
    """{W^perp : W in C}, an orbit of the adjoint group.  With ``check`` the orbit
    property, the size, and distance preservation are verified."""
    t = orbit.tower
    keys = {m.rows: dual(m).rows for m in orbit.members}
    gen = dual(orbit.generator)
    out = OrbitCode(f"Adjoint({orbit.group_tag})", gen, keys.values())
    if not check:
        return out
    if out.size != orbit.size:
        raise RuntimeError("dual map is not injective on the orbit")
    gens = _group_gens(orbit)
    dkeys = out.keys()
    for g in gens:
        ga = adjoint(g)
        if any(ga.apply_rows(m) not in dkeys for m in dkeys):
            raise RuntimeError("dual code is not closed under the adjoint group")
    # pulled back by rho it is the G-orbit of rho^{-1}(U^perp)
    rho_inv = inverse(canonical_rho(t))
    pulled = {rho_inv.apply_rows(m) for m in dkeys}
    start = rho_inv.apply_rows(gen.rows)
    if orbit.group_tag == SINGER:
        expect = set(singer_orbit_keys(t, start))
    elif orbit.group_tag == NORMALIZER:
        expect = normalizer_orbit_keys(t, start)
    else:
        expect = bfs_orbit(gens, start)
    if pulled != expect:
        raise RuntimeError("rho^{-1} does not carry the dual code onto a G-orbit")
    members = orbit.members[: min(orbit.size, 64)]
    for a in members:
        for b in members:
            if key_distance(t, a.rows, b.rows) != key_distance(t, keys[a.rows], keys[b.rows]):
                raise RuntimeError("duality changed a distance")
    return out

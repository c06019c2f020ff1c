"""Automorphism groups, weight distributions, isometry classes, and the delta_s = 2 scanner."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from math import prod

from .adjoint import dual_reference
from .bounds import gl_order
from .errors import CapExceeded
from .gf import FieldTower, divisors, field_for
from .linalg import inverse_mod_p, mat_inv
from .maps import LinMap, ext_generators, frobenius_map, mult_map
from .orbit import (
    NORMALIZER,
    SINGER,
    OrbitCode,
    _witness,
    bfs_orbit,
    galois_part,
    normalizer_orbit_keys,
    singer_orbit_keys,
)
from .subspace import (
    Key,
    Subspace,
    contains,
    enumerate_grassmannian,
    format_subspace,
    from_generators,
    frobenius_key,
    key_delta,
    key_distance,
    normalize_one,
    shift_key,
    smallest_containing_subfield,
    span_elements,
    stabilizer_field_degree,
)

EXACT = "Exact"
BOUNDS = "Bounds"


# -- weight distributions ----------------------------------------------------------

@dataclass(frozen=True)
class WeightDistribution:
    omegas: tuple[int, ...]
    reference: Subspace | None = None

    @property
    def distance(self) -> int:
        """Least nonzero weight; 0 for a one-member orbit."""
        return next((i for i, w in enumerate(self.omegas) if i and w), 0)

    @property
    def total(self) -> int:
        return sum(self.omegas)

    def __getitem__(self, i: int) -> int:
        return self.omegas[i] if 0 <= i < len(self.omegas) else 0


def _weights(tower: FieldTower, rows: Key, members) -> tuple[int, ...]:
    k = len(rows)
    om = [0] * (2 * k + 1)
    for m in members:
        om[key_distance(tower, rows, m)] += 1
    return tuple(om)


def weight_distribution(orbit: OrbitCode) -> WeightDistribution:
    if orbit.group_tag != SINGER:
        raise ValueError(f"weight distribution needs a Singer orbit, got {orbit.group_tag}")
    u = orbit.generator
    return WeightDistribution(_weights(u.tower, u.rows, orbit.keys()), u)


def predicted_weights(q: int, n: int, k: int, ell: int, r: int = 0, epsilon: int = 0) -> WeightDistribution:
    """Closed-form distribution for distance 2(k - ell), ell in {1, 2}, full-length orbits."""
    if ell not in (1, 2) or epsilon not in (0, 1) or r < 0:
        raise ValueError("need ell in {1,2}, epsilon in {0,1}, r >= 0")
    Q = (q**k - 1) * (q**k - q) // (q - 1) ** 2
    N = (q**n - 1) // (q - 1)
    om = [0] * (2 * k + 1)
    om[0] = 1
    if ell == 1:
        om[2 * k - 2], om[2 * k] = Q, N - Q - 1
    else:
        if k < 2:
            raise ValueError("ell = 2 needs k >= 2")
        low = epsilon * q + r * q * (q + 1)
        om[2 * k - 4] += low
        om[2 * k - 2] = Q - (q + 1) * low
        om[2 * k] = N - om[2 * k - 2] - low - 1
    if any(x < 0 for x in om):
        raise ValueError(f"negative predicted count in {om}")
    return WeightDistribution(tuple(om))


# -- automorphism groups ----------------------------------------------------------

@dataclass(frozen=True)
class AutGroupDescriptor:
    kind: str
    mode: str
    s_min: int
    galois_part: tuple[int, ...]
    lower: str
    upper: str
    order: int | None
    name: str
    upper_order: int
    exceptional: tuple[int, ...] = ()
    note: str = ""

    @property
    def inside_singer_normalizer(self) -> bool:
        return self.kind == EXACT and self.lower.endswith("^*")

    def describe(self) -> str:
        if self.kind == EXACT:
            return f"{self.name} (order {self.order})"
        return f"{self.lower} <= Aut <= {self.upper}"


def _fname(t: FieldTower, j: int) -> str:
    return t.field_name(j)


def _gl_name(t: FieldTower, s: int) -> str:
    m = t.n // s
    return f"GL_{m}({t.q})" if s == 1 else f"GL_{m}({t.q}^{s})"


def _singer_name(t: FieldTower) -> str:
    return f"{_fname(t, t.n)}^*"


def _gal_name(t: FieldTower, top: int, bottom: int) -> str:
    return f"Gal({_fname(t, top)}|{_fname(t, bottom)})"


def singer_normalizer_order(t: FieldTower) -> int:
    return t.n * (t.q**t.n - 1)


def automorphism_group(u: Subspace, mode: str = "singer", cap: int = 10**7) -> AutGroupDescriptor:
    """Aut of the Singer orbit (mode 'singer') or normalizer orbit (mode 'normalizer') of U."""
    if u.k == 0:
        raise ValueError("zero subspace")
    if mode not in ("singer", "normalizer"):
        raise ValueError(f"unknown mode {mode!r}")
    t = u.tower
    n, q = t.n, t.q
    if u.k == n:
        order = gl_order(n, q)
        name = _gl_name(t, 1)
        return AutGroupDescriptor(EXACT, mode, 1, tuple(range(n)), name, name, order, name, order,
                                  note="whole space")
    if mode == "singer" and 2 * u.k > n:
        d = automorphism_group(dual_reference(u), "singer", cap)
        return AutGroupDescriptor(d.kind, d.mode, d.s_min, d.galois_part, d.lower, d.upper, d.order, d.name,
                                  d.upper_order, d.exceptional, note="via dual orbit")
    u = normalize_one(u)
    s = smallest_containing_subfield(u)
    if mode == "singer":
        return _aut_singer(u, s, cap)
    return _aut_normalizer(u, s, cap)


def _aut_singer(u: Subspace, s: int, cap: int, gp=None) -> AutGroupDescriptor:
    t = u.tower
    n, q = t.n, t.q
    gp = tuple(gp) if gp is not None else galois_part(u)
    if s == n:
        g = len(gp)
        order = g * (q**n - 1)
        name = _singer_name(t) if g == 1 else f"{_gal_name(t, n, n // g)} ⋊ {_singer_name(t)}"
        return AutGroupDescriptor(EXACT, "singer", s, gp, _singer_name(t), f"N({_singer_name(t)})", order, name,
                                  singer_normalizer_order(t))
    gl = _gl_name(t, s)
    gl_ord = gl_order(n // s, q**s)
    upper = f"N({gl})"
    # GL_{n/s}(q^s) <= Aut iff its orbit is the Singer orbit; verify rather than assume
    singer_len = len(singer_orbit_keys(t, u.rows))
    try:
        ext = bfs_orbit(ext_generators(t, s), u.rows, min(cap, singer_len + 1))
        verified = len(ext) == singer_len
    except CapExceeded:
        verified = False
    if not verified:
        return AutGroupDescriptor(BOUNDS, "singer", s, gp, gl, upper, None, f"{gl} <= Aut <= {upper}",
                                  s * gl_ord, note="extension-field orbit check failed")
    h = len(gp) * s // n  # Galois quotient inside Gal(F_{q^s}|F_q)
    order = h * gl_ord
    name = gl if h == 1 else f"{_gal_name(t, s, s // h)} ⋊ {gl}"
    return AutGroupDescriptor(EXACT, "singer", s, gp, gl, upper, order, name, s * gl_ord)


def _aut_normalizer(u: Subspace, s: int, cap: int) -> AutGroupDescriptor:
    t = u.tower
    n, q, k = t.n, t.q, u.k
    full = tuple(range(n))
    prof = {d: key_delta(t, u.rows, d) for d in divisors(n)}
    exceptional = tuple(d for d, r in prof.items() if r == 2 and 2 * d <= n)
    certified = 2 <= k and 2 * k <= n and (not exceptional or 8 * k <= 3 * n)
    sing = _singer_name(t)
    if s == n:
        lower, upper_name, upper_order = f"N({sing})", f"GL_{n}({q})", gl_order(n, q)
        if certified:
            order = singer_normalizer_order(t)
            return AutGroupDescriptor(EXACT, "normalizer", s, full, lower, lower, order,
                                      f"Gal({_fname(t, n)}|{_fname(t, 1)}) ⋊ {sing}", order)
        return AutGroupDescriptor(BOUNDS, "normalizer", s, full, lower, upper_name, None,
                                  f"{lower} <= Aut <= {upper_name}", upper_order, exceptional,
                                  note="delta_s = 2 at a divisor; coincidence with an extension-field orbit possible")
    gp = galois_part(u)
    if len(gp) == n:
        # every Frobenius shift stays in the Singer orbit, so the two orbits coincide
        d = _aut_singer(u, s, cap, gp)
        if d.kind == EXACT:
            return replace(d, mode="normalizer", note="normalizer orbit equals Singer orbit")
    gl = _gl_name(t, s)
    order = s * gl_order(n // s, q**s)
    if certified or not exceptional:
        name = gl if s == 1 else f"{_gal_name(t, s, 1)} ⋊ {gl}"
        return AutGroupDescriptor(EXACT, "normalizer", s, full, gl, f"N({gl})", order, name, order)
    return AutGroupDescriptor(BOUNDS, "normalizer", s, full, gl, f"GL_{n}({q})", None, f"{gl} <= Aut",
                              gl_order(n, q), exceptional)


# -- exhaustive oracle ------------------------------------------------------------

def _transversal(orbit: OrbitCode) -> list[LinMap]:
    """One group element per member, mapping the generator onto it."""
    u = orbit.generator
    t = u.tower
    out: dict = {}
    pows = range(t.n) if orbit.group_tag == NORMALIZER else (0,)
    if orbit.group_tag not in (SINGER, NORMALIZER):
        raise ValueError(f"no transversal for group {orbit.group_tag}")
    for i in pows:
        fi = frobenius_map(t, i)
        base = frobenius_key(t, u.rows, i)
        a = 1
        cur = base
        while True:
            if cur not in out:
                out[cur] = mult_map(t, a).compose(fi)
            a = t.mul(a, t.omega)
            cur = shift_key(t, cur, t.omega)
            if cur == base:
                break
    if set(out) != set(orbit.keys()):
        raise RuntimeError("orbit members do not match the group action")
    return list(out.values())


def _stabilizer_maps(u: Subspace, cap: int):
    """Every phi in GL_n(q) with phi(U) = U, via images of an adapted basis."""
    t = u.tower
    n, q = t.n, t.q
    k = u.k
    conv = t.coords(1)
    if t.fast:
        pivots = [(r & -r).bit_length() - 1 for r in u.rows]
    else:
        pivots = [next(i for i, c in enumerate(conv.to_coords(r)) if c) for r in u.rows]
    comp = [t.w(j) for j in range(n) if j not in pivots]
    basis = list(u.rows) + comp
    # coords(w^i) = sum_j binv[i][j] coords(basis_j)
    bmat = [list(conv.to_coords(b)) for b in basis]
    binv = inverse_mod_p(bmat, t.p) if t.e == 1 else mat_inv(t, bmat)
    total = gl_order(k, q) * prod(q**n - q**i for i in range(k, n))
    if total > cap:
        raise CapExceeded("stabilizer enumeration", cap, total)
    uel = [x for x in span_elements(t, u.rows) if x]
    allel = range(1, t.order)

    def extend(images, span, depth):
        if depth == n:
            yield images
            return
        pool = uel if depth < k else allel
        for y in pool:
            if y in span:
                continue
            new_span = _grow(t, span, y)
            yield from extend(images + [y], new_span, depth + 1)

    for imgs in extend([], {0}, 0):
        out = []
        for i in range(n):
            acc = 0
            for c, y in zip(binv[i], imgs):
                if c:
                    acc = t.add(acc, t.mul(c, y))
            out.append(acc)
        yield LinMap(t, out)


def _grow(t: FieldTower, span: set, y: int) -> set:
    if t.fast:
        return span | {x ^ y for x in span}
    scal = t.subfield_elements(1)
    return {t.add(x, t.mul(c, y)) for x in span for c in scal}


def brute_force_automorphisms(orbit: OrbitCode, group_size_cap: int = 10**7) -> set:
    """{psi in GL_n(q) : psi(C) = C}, exhaustively.

    Every such psi is tau o phi with tau from a transversal of the acting group
    and phi fixing the generator, so only the stabilizer of U is searched.
    """
    t = orbit.tower
    if gl_order(t.n, t.q) > group_size_cap:
        raise CapExceeded("GL_n(q)", group_size_cap, gl_order(t.n, t.q))
    keys = orbit.keys()
    fixers = []
    for phi in _stabilizer_maps(orbit.generator, group_size_cap):
        if all(phi.apply_rows(m) in keys for m in keys):
            fixers.append(phi)
    return {tau.compose(phi) for tau in _transversal(orbit) for phi in fixers}


# -- Frobenius isometry -----------------------------------------------------------

def frobenius_isometric(u1: Subspace, u2: Subspace):
    """(i, alpha) with U2 = alpha * U1^[i], or None."""
    if u1.k != u2.k:
        raise ValueError("dimension mismatch")
    t = u1.tower
    for i in range(t.n):
        w = frobenius_key(t, u1.rows, i)
        lead = w[0]
        norm = shift_key(t, w, t.inv(lead))
        g = _witness(t, norm, u2)
        if g is not None:
            return i, t.mul(g, t.inv(lead))
    return None


# -- classification ---------------------------------------------------------------

@dataclass
class IsometryClass:
    member_orbits: tuple[Subspace, ...]
    orbit_length: int
    distance: int
    weights: WeightDistribution
    aut: AutGroupDescriptor
    delta_profile: dict[int, int]
    generic: bool
    resolved: bool = True
    fit: dict | None = None

    @property
    def rep(self) -> Subspace:
        return self.member_orbits[0]

    @property
    def nu(self) -> int:
        return len(self.member_orbits)

    def record(self) -> dict:
        k = self.rep.k
        rec = {
            "rep": format_subspace(self.rep),
            "orbit_length": self.orbit_length,
            "nu": self.nu,
            "distance": self.distance,
            "omegas": list(self.weights.omegas),
            "aut": self.aut.name,
            "aut_kind": self.aut.kind,
            "aut_order": self.aut.order,
            "delta": {str(s): r for s, r in sorted(self.delta_profile.items())},
            "generic": self.generic,
            "resolved": self.resolved,
        }
        if k >= 2:
            rec["omega_2k-4"] = self.weights[2 * k - 4]
        if self.fit is not None:
            rec["fit"] = self.fit
        return rec


@dataclass
class Classification:
    q: int
    n: int
    k: int
    tower: FieldTower
    orbit_reps: list[Subspace]
    orbit_class: list[int]
    classes: list[IsometryClass]

    @property
    def n_orbits(self) -> int:
        return len(self.orbit_reps)

    def summary(self) -> Counter:
        """Class counts keyed by (Aut name, distance, omega_{2k-4}, delta_2 or None)."""
        k = self.k
        return Counter((c.aut.name, c.distance, c.weights[2 * k - 4] if c.distance == 2 * k - 4 else None,
                        c.delta_profile.get(2)) for c in self.classes)


def epsilon_orbit_level(t: FieldTower, rows: Key) -> int:
    """1 if some u*F_{q^2} (u != 0) lies in U."""
    z = t.subfield_generator(2)
    return int(any(x and contains(t, rows, t.mul(x, z)) for x in span_elements(t, rows)))


def fit_ell2(t: FieldTower, rows: Key, w: WeightDistribution) -> dict:
    q, k = t.q, len(rows)
    eps = epsilon_orbit_level(t, rows) if t.n % 2 == 0 else 0
    eps_lit = int(t.n % 2 == 0 and contains(t, rows, t.subfield_generator(2)))
    num = w[2 * k - 4] - eps * q
    ok = num >= 0 and num % (q * (q + 1)) == 0
    out = {"epsilon": eps, "epsilon_subfield_in_rep": eps_lit, "r": num // (q * (q + 1)) if ok else None,
           "fits": ok}
    if ok:
        pred = predicted_weights(q, t.n, k, 2, out["r"], eps)
        out["fits"] = pred.omegas == w.omegas
    return out


def classify(q: int, n: int, k: int, poly=None, cap: int = 10**7, tower: FieldTower | None = None,
             progress=None) -> Classification:
    t = tower or field_for(q, n, poly)
    registry: dict = {}
    reps: list[Key] = []
    for u in enumerate_grassmannian(t, k, must_contain_one=True, cap=cap):
        if u.rows in registry:
            continue
        idx = len(reps)
        ones = set()
        for x in span_elements(t, u.rows):
            if x:
                ones.add(shift_key(t, u.rows, t.inv(x)))
        for key in ones:
            registry[key] = idx
        reps.append(min(ones))
    order = sorted(range(len(reps)), key=lambda i: reps[i])
    reps = [reps[i] for i in order]
    remap = {old: new for new, old in enumerate(order)}
    registry = {key: remap[v] for key, v in registry.items()}

    gal: list[tuple[int, ...]] = []
    comp = [-1] * len(reps)
    class_members: list[list[int]] = []
    for i, rows in enumerate(reps):
        imgs = [registry[frobenius_key(t, rows, j)] for j in range(n)]
        gal.append(tuple(j for j in range(n) if imgs[j] == i))
        if comp[i] < 0:
            cid = len(class_members)
            mem = sorted(set(imgs))
            for m in mem:
                comp[m] = cid
            class_members.append(mem)

    classes: list[IsometryClass] = []
    for mem in class_members:
        rows = reps[mem[0]]
        rep = Subspace(t, rows)
        orb = singer_orbit_keys(t, rows)
        w = WeightDistribution(_weights(t, rows, orb), rep)
        s_min = smallest_containing_subfield(rep)
        aut = _aut_singer(rep, s_min, cap, gal[mem[0]])
        prof = {d: key_delta(t, rows, d) for d in divisors(n)}
        fit = None
        N = (q**n - 1) // (q - 1)
        if k >= 3 and w.distance == 2 * k - 4 and len(orb) == N:
            fit = fit_ell2(t, rows, w)
        classes.append(IsometryClass(tuple(Subspace(t, reps[m]) for m in mem), len(orb), w.distance, w, aut, prof,
                                     s_min == n, fit=fit))
        if progress:
            progress(len(classes))
    sigs = Counter((c.aut.order, c.orbit_length, c.weights.omegas) for c in classes if not c.generic)
    for c in classes:
        if not c.generic:
            c.resolved = c.aut.kind == EXACT and sigs[(c.aut.order, c.orbit_length, c.weights.omegas)] == 1
    return Classification(q, n, k, t, [Subspace(t, r) for r in reps], [comp[i] for i in range(len(reps))], classes)


# -- Frobenius shift of span_{F_{q^a}}{1, alpha} ----------------------------------

@dataclass
class ShiftCheck:
    q: int
    a: int
    subspaces: int = 0
    in_orbit: int = 0
    bound_equal: int = 0
    n_equals_s: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.subspaces > 0 and self.in_orbit == self.subspaces


def span_over(t: FieldTower, a: int, gens) -> Subspace:
    sub = t.subfield_elements(a)
    return from_generators(t, [t.mul(c, g) for g in gens for c in sub if c])


def check_shift_in_orbit(q: int, a: int, alpha: int | None = None, tower: FieldTower | None = None) -> ShiftCheck:
    """U^[2a] in Orb_S(U) for U = span_{F_{q^a}}{1, alpha}, n = 4a.

    With ``alpha`` None every admissible alpha is tried (each distinct U once).
    """
    t = tower or field_for(q, 4 * a)
    if t.n != 4 * a:
        raise ValueError("tower must have n = 4a")
    s = 2 * a
    alphas = [alpha] if alpha is not None else range(1, t.order)
    rep = ShiftCheck(q, a)
    done = set()
    bound = (t.n // 2) * (q**t.n - 1) // (q**a - 1)
    for x in alphas:
        if x in done:
            continue
        if t.in_subfield(x, s):
            if alpha is not None:
                raise ValueError("alpha must lie outside F_{q^s}")
            continue
        u = span_over(t, a, [1, x])
        # every y in U outside F_{q^a} spans the same U together with 1
        done.update(y for y in u.elements() if not t.in_subfield(y, a))
        rep.subspaces += 1
        ok = _witness(t, u.rows, Subspace(t, frobenius_key(t, u.rows, s))) is not None
        rep.in_orbit += ok
        if not ok:
            rep.failures.append(format_subspace(u))
        ssize = (q**t.n - 1) // (q**stabilizer_field_degree(u) - 1)
        nsize = ssize * t.n // len(galois_part(u))
        rep.bound_equal += nsize == bound
        rep.n_equals_s += nsize == ssize
    return rep


# -- delta_s = 2 scanner ------------------------------------------------------------

@dataclass
class GLOrbitRecord:
    rep: Subspace
    size: int
    normalizer_size: int
    singer_size: int
    n_in_gl: bool
    gl_in_n: bool

    @property
    def coincide(self) -> bool:
        return self.n_in_gl and self.gl_in_n


@dataclass
class ExceptionalScan:
    params: tuple[int, int, int, int]
    orbits: list[GLOrbitRecord]

    @property
    def total(self) -> int:
        return sum(o.size for o in self.orbits)

    @property
    def coincidences(self) -> list[GLOrbitRecord]:
        return [o for o in self.orbits if o.coincide]

    @property
    def containment_holds(self) -> bool:
        """Orb_N subset of Orb_GL for every scanned U."""
        return all(o.n_in_gl for o in self.orbits)

    @property
    def conjecture_consistent(self) -> bool:
        """GL-orbit inside N-orbit only when they coincide."""
        return all(o.coincide for o in self.orbits if o.gl_in_n)

    def sizes(self) -> list[int]:
        return sorted((o.size for o in self.orbits), reverse=True)


def scan_exceptional(tower: FieldTower, k: int, s: int, cap: int = 10**7) -> ExceptionalScan:
    """All GL_{n/s}(q^s)-orbits of k-subspaces with delta_s = 2, compared against N-orbits.

    N-orbits inside one GL-orbit O all lie in O exactly when sigma(U) is in O
    for one U in O, since sigma normalizes GL_{n/s}(q^s).
    """
    t = tower
    t.check_divisor(s)
    gens = ext_generators(t, s)
    seen: set = set()
    out = []
    for u in enumerate_grassmannian(t, k, must_contain_one=True, cap=cap):
        if u.rows in seen or key_delta(t, u.rows, s) != 2:
            continue
        orb = bfs_orbit(gens, u.rows, cap - len(seen))
        seen |= orb
        rep = min(orb)
        nk = normalizer_orbit_keys(t, rep)
        out.append(GLOrbitRecord(Subspace(t, rep), len(orb), len(nk), len(singer_orbit_keys(t, rep)),
                                 frobenius_key(t, rep, 1) in orb, orb <= nk))
    out.sort(key=lambda o: (-o.size, o.rep.rows))
    return ExceptionalScan((t.q, t.n, k, s), out)

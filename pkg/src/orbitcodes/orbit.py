"""Orbits of subspaces under the Singer group, its normalizer, and GL_{n/s}(q^s)."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from collections.abc import Iterable

from .bounds import gaussian_binomial, gl_order, orbit_size_lower_bound
from .errors import CapExceeded
from .gf import FieldTower
from .maps import LinMap, ext_generators
from .subspace import Key, Subspace, format_subspace, frobenius_key, shift_key

SINGER = "Singer"
NORMALIZER = "Normalizer"


def ext_tag(s: int) -> str:
    return f"ExtField({s})"


class OrbitCode:
    """A finite orbit of subspaces; members sorted by canonical rows."""

    __slots__ = ("group_tag", "generator", "members", "_keys")

    def __init__(self, group_tag: str, generator: Subspace, keys: Iterable[Key]):
        t = generator.tower
        self.group_tag = group_tag
        self.generator = generator
        self._keys = frozenset(keys)
        self.members = tuple(Subspace(t, k) for k in sorted(self._keys))

    @property
    def tower(self) -> FieldTower:
        return self.generator.tower

    @property
    def canonical_rep(self) -> Subspace:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, u: Subspace) -> bool:
        return u.rows in self._keys

    def keys(self) -> frozenset:
        return self._keys

    def __repr__(self):
        return f"OrbitCode({self.group_tag}, size={self.size}, rep={format_subspace(self.canonical_rep)!r})"


def singer_orbit_keys(tower: FieldTower, rows: Key) -> list[Key]:
    """w^i U for i = 0, 1, ... until U recurs."""
    w = tower.omega
    out = [rows]
    cur = shift_key(tower, rows, w)
    while cur != rows:
        out.append(cur)
        cur = shift_key(tower, cur, w)
    return out


def singer_orbit(u: Subspace) -> OrbitCode:
    return OrbitCode(SINGER, u, singer_orbit_keys(u.tower, u.rows))


def normalizer_orbit_keys(tower: FieldTower, rows: Key) -> set:
    seen: set = set()
    for i in range(tower.n):
        f = frobenius_key(tower, rows, i)
        if f not in seen:
            seen.update(singer_orbit_keys(tower, f))
    return seen


def normalizer_orbit(u: Subspace) -> OrbitCode:
    """Union of the Singer orbits of the Frobenius shifts of U."""
    return OrbitCode(NORMALIZER, u, normalizer_orbit_keys(u.tower, u.rows))


def singer_witness(u: Subspace, v: Subspace) -> int | None:
    """Some gamma with gamma*U = V, or None.  U must contain 1 (then gamma lies in V)."""
    if 1 not in u:
        raise ValueError("reference subspace must contain 1")
    return _witness(u.tower, u.rows, v)


def _witness(tower: FieldTower, urows: Key, v: Subspace) -> int | None:
    if len(urows) != v.k:
        return None
    seen = set()
    units = [c for c in tower.subfield_elements(1) if c] if tower.q > 2 else None
    for g in v.elements():
        if g == 0:
            continue
        if units:
            # gamma and c*gamma, c in F_q^*, give the same shift
            base = min(tower.mul(c, g) for c in units)
            if base in seen:
                continue
            seen.add(base)
        if shift_key(tower, urows, g) == v.rows:
            return g
    return None


def in_singer_orbit(u: Subspace, v: Subspace) -> bool:
    return singer_witness(u, v) is not None


def galois_part(u: Subspace) -> tuple[int, ...]:
    """{i mod n : U^[i] in Orb_S(U)}; U must contain 1."""
    t = u.tower
    return tuple(i for i in range(t.n)
                 if i == 0 or _witness(t, u.rows, Subspace(t, frobenius_key(t, u.rows, i))) is not None)


# -- GL_{n/s}(q^s) orbits -------------------------------------------------------

def bfs_orbit(gens: list[LinMap], rows: Key, cap: int = 10**7) -> set:
    seen = {rows}
    frontier = [rows]
    while frontier:
        nxt = []
        for r in frontier:
            for g in gens:
                img = g.apply_rows(r)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        if len(seen) > cap:
            raise CapExceeded("orbit", cap, len(seen))
        frontier = nxt
    return seen


def extension_group_orbit(u: Subspace, s: int, cap: int = 10**7) -> OrbitCode:
    """Orbit of U under all F_{q^s}-linear automorphisms, by breadth-first closure."""
    gens = ext_generators(u.tower, s)
    return OrbitCode(ext_tag(s), u, bfs_orbit(gens, u.rows, cap))


# -- on-disk cache ----------------------------------------------------------------

def orbit_digest(orbit: OrbitCode) -> str:
    h = hashlib.sha256()
    for m in orbit.members:
        h.update(format_subspace(m).encode())
        h.update(b"\n")
    return h.hexdigest()


def orbit_record(orbit: OrbitCode, s: int | None = None) -> dict:
    t = orbit.tower
    return {
        "group": orbit.group_tag,
        "p": t.p, "e": t.e, "n": t.n, "k": orbit.generator.k, "s": s,
        "rep": format_subspace(orbit.canonical_rep),
        "size": orbit.size,
        "digest": orbit_digest(orbit),
    }


def write_jsonl_atomic(path: str, records: Iterable[dict]):
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_orbit_cache(path: str, orbits: Iterable[OrbitCode], s: int | None = None):
    write_jsonl_atomic(path, (orbit_record(o, s) for o in orbits))


def read_orbit_cache(path: str) -> list[dict]:
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]


def expected_singer_size(tower: FieldTower, t: int) -> int:
    return (tower.q**tower.n - 1) // (tower.q**t - 1)


def grassmannian_count(tower: FieldTower, k: int) -> int:
    return gaussian_binomial(tower.n, k, tower.q)


def ext_group_order(tower: FieldTower, s: int) -> int:
    return gl_order(tower.n // s, tower.q**s)


def exact_orbit_size(q: int, n: int, k: int, s: int) -> int:
    """The r = k case of the bound, which is exact."""
    return orbit_size_lower_bound(q, n, k, s, k)

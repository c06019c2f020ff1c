from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitcodes.bounds import gl_order
from orbitcodes.gf import make_field
from orbitcodes.orbit import extension_group_orbit, normalizer_orbit, singer_orbit
from orbitcodes.structure import (
    BOUNDS,
    EXACT,
    automorphism_group,
    brute_force_automorphisms,
    check_shift_in_orbit,
    classify,
    frobenius_isometric,
    predicted_weights,
    scan_exceptional,
    weight_distribution,
)
from orbitcodes.subspace import (
    enumerate_grassmannian,
    from_generators,
    frobenius_shift,
    parse_subspace,
    scalar_shift,
)


@pytest.fixture(scope="module")
def cls263():
    return classify(2, 6, 3)


# -- weights ----------------------------------------------------------------------

def test_spread_weights(f64):
    u = from_generators(f64, f64.subfield_elements(3))
    w = weight_distribution(singer_orbit(u))
    assert w.omegas == (1, 0, 0, 0, 0, 0, 8)
    assert w.distance == 6 and w.total == 9


def test_predicted_weights():
    assert predicted_weights(2, 6, 3, 1).omegas == (1, 0, 0, 0, 42, 0, 20)
    assert predicted_weights(2, 6, 3, 2, r=1).omegas == (1, 0, 6, 0, 24, 0, 32)
    assert predicted_weights(2, 6, 3, 2, epsilon=1).omegas == (1, 0, 2, 0, 36, 0, 24)
    with pytest.raises(ValueError):
        predicted_weights(2, 6, 3, 3)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(1, 255), min_size=3, max_size=3))
def test_weights_total_and_profile(gens):
    t = make_field(2, 1, 8)
    u = from_generators(t, gens)
    orb = singer_orbit(u)
    w = weight_distribution(orb)
    assert w.total == orb.size
    assert w[0] == 1
    assert all(w[i] == 0 for i in range(1, 2 * u.k + 1, 2))
    # shifted generator gives the same distribution
    v = scalar_shift(t.w(17), u)
    assert weight_distribution(singer_orbit(v)).omegas == w.omegas


def test_weights_needs_singer(f16):
    with pytest.raises(ValueError):
        weight_distribution(normalizer_orbit(parse_subspace(f16, "1;w^1")))


# -- automorphism groups --------------------------------------------------------------

def test_aut_examples(f16, f64):
    a = automorphism_group(parse_subspace(f16, "1;w^1"))
    assert (a.kind, a.order) == (EXACT, 30)
    assert a.galois_part == (0, 2)
    spread = automorphism_group(from_generators(f64, f64.subfield_elements(3)))
    assert spread.kind == EXACT
    assert spread.order == 3 * gl_order(2, 8) == 10584
    assert spread.name == "Gal(F_{2^3}|F_2) ⋊ GL_2(2^3)"
    whole = automorphism_group(parse_subspace(f16, "1;w^1;w^2;w^3"))
    assert whole.order == gl_order(4, 2)
    with pytest.raises(ValueError):
        automorphism_group(parse_subspace(f16, "1;w^1"), mode="gl")


def test_aut_dual_route(f16):
    # k > n/2 goes through the dual orbit; brute force agrees
    for u in enumerate_grassmannian(f16, 3, must_contain_one=True):
        d = automorphism_group(u)
        assert d.kind == EXACT
        assert d.order == len(brute_force_automorphisms(singer_orbit(u)))


def test_aut_normalizer_mode(f16):
    exc = automorphism_group(parse_subspace(f16, "1;w^1"), mode="normalizer")
    assert exc.kind == BOUNDS
    assert exc.exceptional  # delta_s = 2 somewhere, coincidence not ruled out
    assert len(brute_force_automorphisms(normalizer_orbit(parse_subspace(f16, "1;w^1")))) == 360
    sub = automorphism_group(parse_subspace(f16, "1;w^5"), mode="normalizer")
    assert (sub.kind, sub.order) == (EXACT, 360)
    t = make_field(2, 1, 9)
    gen = automorphism_group(parse_subspace(t, "1;w^1;w^3"), mode="normalizer")
    assert (gen.kind, gen.order) == (EXACT, 9 * 511)


def test_brute_force_on_normalizer_orbit(f16):
    u = parse_subspace(f16, "1;w^5")
    assert len(brute_force_automorphisms(normalizer_orbit(u))) == 360
    assert len(brute_force_automorphisms(singer_orbit(u))) == 360


# -- Frobenius isometry ------------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(1, 63), min_size=3, max_size=3), st.integers(0, 62), st.integers(0, 5))
def test_frobenius_isometric_witness(gens, a, i):
    t = make_field(2, 1, 6)
    u1 = from_generators(t, gens)
    u2 = scalar_shift(t.w(a), frobenius_shift(u1, i))
    wit = frobenius_isometric(u1, u2)
    assert wit is not None
    j, alpha = wit
    assert scalar_shift(alpha, frobenius_shift(u1, j)) == u2


def test_frobenius_isometric_matches_normalizer_orbits(cls263):
    reps = cls263.orbit_reps
    for a in reps[:8]:
        na = normalizer_orbit(a)
        for b in reps:
            assert (frobenius_isometric(a, b) is not None) == (b in na)


# -- classification --------------------------------------------------------------------

def test_classify_263(cls263):
    assert cls263.n_orbits == 23
    assert len(cls263.classes) == 7
    assert sum(c.nu for c in cls263.classes) == 23
    for c in cls263.classes:
        assert c.resolved
        if c.generic:
            assert c.nu * c.aut.order == 6 * 63
        rec = c.record()
        assert rec["nu"] == c.nu and rec["aut_order"] == c.aut.order


def test_classify_k1_and_k2():
    c1 = classify(2, 5, 1)
    assert c1.n_orbits == 1 and len(c1.classes) == 1
    assert c1.classes[0].orbit_length == 31
    c2 = classify(3, 4, 2)
    assert sum(c.nu * c.orbit_length for c in c2.classes) == 130  # [4 choose 2]_3


def test_classify_q4():
    c = classify(4, 3, 1)
    assert c.n_orbits == 1
    c = classify(4, 4, 2)
    assert sum(cl.nu * cl.orbit_length for cl in c.classes) == 357


# -- Frobenius shift of span{1, alpha} -------------------------------------------------------

@pytest.mark.parametrize("q,a,count,bound_eq", [(2, 1, 6, 6), (2, 2, 20, 20), (3, 1, 12, 8), (4, 1, 20, 20)])
def test_shift_in_orbit(q, a, count, bound_eq):
    r = check_shift_in_orbit(q, a)
    assert r.ok and r.subspaces == count and r.in_orbit == count
    assert r.bound_equal == bound_eq


@pytest.mark.slow
def test_shift_in_orbit_q3_a2():
    r = check_shift_in_orbit(3, 2)
    assert r.ok and r.subspaces == 90
    assert r.n_equals_s >= 1


def test_shift_in_orbit_bad_alpha(f16):
    with pytest.raises(ValueError):
        check_shift_in_orbit(2, 1, alpha=f16.w(5), tower=f16)


# -- exceptional scans -------------------------------------------------------------------------

def test_scan_small():
    sc = scan_exceptional(make_field(2, 1, 4), 2, 2)
    assert sc.sizes() == [30]
    assert len(sc.coincidences) == 1 and sc.coincidences[0].normalizer_size == 30


def test_scan_q4_no_coincidence():
    # F_4-linear normalizer orbit has 170 members against a GL_2(16)-orbit of 340
    sc = scan_exceptional(make_field(2, 2, 4), 2, 2)
    (o,) = sc.orbits
    assert (o.size, o.normalizer_size, o.singer_size) == (340, 170, 85)
    assert o.n_in_gl and not o.gl_in_n
    assert not sc.coincidences


def test_scan_frobenius_swaps_gl_orbits():
    t = make_field(2, 1, 8)
    sc = scan_exceptional(t, 3, 4)
    assert sc.sizes() == [61200, 15300, 15300, 5100]
    assert not sc.containment_holds and sc.conjecture_consistent
    a, b = [o for o in sc.orbits if o.size == 15300]
    oa = extension_group_orbit(a.rep, 4)
    assert frobenius_shift(a.rep, 1) not in oa
    assert frobenius_shift(a.rep, 1) in extension_group_orbit(b.rep, 4)


def test_scan_sporadic_coincidence_n9():
    # F_8 + F_2 v: GL_3(8)-orbit = normalizer orbit, 73 F_8-lines times 63 extensions = 9 * 511
    t = make_field(2, 1, 9)
    sc = scan_exceptional(t, 4, 3)
    (hit,) = sc.coincidences
    assert (hit.size, hit.normalizer_size, hit.singer_size) == (4599, 4599, 511)
    lines = {frozenset(t.mul(b, c) for c in t.subfield_elements(3)) for b in range(1, 512)}
    assert len(lines) == 73
    # every orbit member contains exactly one F_8-line
    for m in normalizer_orbit(hit.rep).members[::97]:
        els = set(m.elements())
        assert sum(line <= els for line in lines) == 1

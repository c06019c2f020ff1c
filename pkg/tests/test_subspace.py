from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitcodes.bounds import gaussian_binomial
from orbitcodes.errors import CapExceeded, FieldError
from orbitcodes.gf import divisors, make_field
from orbitcodes.subspace import (
    Subspace,
    canonical_rows,
    delta_s,
    distance,
    dual,
    enumerate_grassmannian,
    format_subspace,
    from_generators,
    frobenius_shift,
    inner,
    intersection_dim,
    is_generic,
    normalize_one,
    parse_element,
    parse_subspace,
    scalar_shift,
    smallest_containing_subfield,
    stabilizer_field_degree,
    whole_space,
)

TOWERS = {p: make_field(*p) for p in [(2, 1, 6), (2, 1, 8), (3, 1, 4), (2, 2, 3), (5, 1, 2)]}


@st.composite
def subspaces(draw, params=None):
    params = params or draw(st.sampled_from(sorted(TOWERS)))
    t = TOWERS[params]
    gens = draw(st.lists(st.integers(1, t.order - 1), min_size=1, max_size=t.n))
    return from_generators(t, gens)


@st.composite
def subspace_pairs(draw):
    params = draw(st.sampled_from(sorted(TOWERS)))
    return draw(subspaces(params)), draw(subspaces(params))


@settings(max_examples=150, deadline=None)
@given(subspaces())
def test_canonical_form_is_basis_independent(u):
    t = u.tower
    els = u.elements()
    assert len(set(els)) == t.q**u.k
    # any spanning list of the same space gives the same rows
    assert canonical_rows(t, reversed(els)) == u.rows
    assert all(x in u for x in els)


@settings(max_examples=150, deadline=None)
@given(subspace_pairs())
def test_distance_matches_element_sets(pair):
    v, w = pair
    common = len(set(v.elements()) & set(w.elements()))
    q = v.tower.q
    idim = 0
    while q**idim < common:
        idim += 1
    assert q**idim == common
    assert intersection_dim(v, w) == idim
    assert distance(v, w) == v.k + w.k - 2 * idim
    assert distance(v, w) == distance(w, v)
    assert (distance(v, w) == 0) == (v == w)


@settings(max_examples=100, deadline=None)
@given(subspaces(), st.integers(1, 10**6), st.integers(0, 20))
def test_shifts_are_isometries(u, a, i):
    t = u.tower
    alpha = t.w(a)
    su = scalar_shift(alpha, u)
    assert su.k == u.k
    assert set(su.elements()) == {t.mul(alpha, x) for x in u.elements()}
    fu = frobenius_shift(u, i)
    assert set(fu.elements()) == {t.frobenius(x, i) for x in u.elements()}
    for s in divisors(t.n):
        assert delta_s(fu, s) == delta_s(u, s)
        assert delta_s(su, s) == delta_s(u, s)


@settings(max_examples=100, deadline=None)
@given(subspace_pairs())
def test_dual_properties(pair):
    v, w = pair
    t = v.tower
    dv = dual(v)
    assert dv.k == t.n - v.k
    assert all(inner(t, x, y) == 0 for x in v.rows for y in dv.rows)
    assert dual(dv) == v
    assert distance(dual(v), dual(w)) == distance(v, w)


@settings(max_examples=100, deadline=None)
@given(subspaces())
def test_delta_and_subfields(u):
    t = u.tower
    for s in divisors(t.n):
        d = delta_s(u, s)
        assert -(-u.k // s) <= d <= min(u.k, t.n // s)
    one = normalize_one(u)
    assert 1 in one
    s_min = smallest_containing_subfield(one)
    assert all(t.in_subfield(x, s_min) for x in one.elements())
    assert delta_s(one, s_min) == 1
    assert is_generic(u) == (s_min == t.n)
    st_deg = stabilizer_field_degree(u)
    z = t.subfield_generator(st_deg)
    assert scalar_shift(z, u) == u


def test_delta_profile_examples(f64):
    sub3 = from_generators(f64, f64.subfield_elements(3))
    assert sub3.k == 3
    assert delta_s(sub3, 3) == 1
    assert delta_s(sub3, 2) == 3
    assert smallest_containing_subfield(sub3) == 3
    assert stabilizer_field_degree(sub3) == 3


@pytest.mark.parametrize("params,k", [((2, 1, 4), 2), ((2, 1, 6), 3), ((3, 1, 4), 2), ((2, 2, 3), 1),
                                      ((2, 2, 3), 2), ((2, 1, 5), 0), ((2, 1, 5), 5)])
def test_enumeration_counts(params, k):
    t = make_field(*params)
    all_ = list(enumerate_grassmannian(t, k))
    assert len(all_) == gaussian_binomial(t.n, k, t.q)
    assert len(set(all_)) == len(all_)
    assert all(u.k == k for u in all_)
    ones = list(enumerate_grassmannian(t, k, must_contain_one=True))
    assert set(ones) == {u for u in all_ if 1 in u}


def test_enumeration_cap(f64):
    with pytest.raises(CapExceeded) as exc:
        list(enumerate_grassmannian(f64, 3, cap=100))
    assert exc.value.cap == 100


def test_literals_roundtrip(f64, f81):
    u = parse_subspace(f64, "1;w^1;w^2")
    assert u.k == 3
    assert format_subspace(u) == "100000;010000;001000"
    assert parse_subspace(f64, format_subspace(u)) == u
    assert parse_element(f64, "w^63") == 1
    v = parse_subspace(f81, "1;0201")
    assert parse_subspace(f81, format_subspace(v)) == v
    for bad in ["2", "1000000", "x", ""]:
        with pytest.raises(FieldError):
            parse_subspace(f64, bad)


def test_whole_space_and_errors(f16):
    assert whole_space(f16).k == 4
    assert dual(whole_space(f16)).k == 0
    with pytest.raises(ValueError):
        from_generators(f16, [0, 0])
    with pytest.raises(ValueError):
        scalar_shift(0, whole_space(f16))
    with pytest.raises(ValueError):
        smallest_containing_subfield(Subspace(f16, canonical_rows(f16, [2])))

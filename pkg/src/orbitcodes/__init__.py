"""Cyclic orbit codes in F_{q^n}: orbits, automorphism groups, and isometry classes."""

from __future__ import annotations

from .bounds import gaussian_binomial, gl_order, orbit_size_lower_bound, verify_inequality_lemmas
from .errors import CapExceeded, FieldError
from .gf import FieldTower, companion_matrix, field_for, make_field, subfield_basis
from .orbit import OrbitCode, extension_group_orbit, normalizer_orbit, singer_orbit
from .structure import (
    AutGroupDescriptor,
    IsometryClass,
    WeightDistribution,
    automorphism_group,
    brute_force_automorphisms,
    check_shift_in_orbit,
    classify,
    frobenius_isometric,
    predicted_weights,
    scan_exceptional,
    weight_distribution,
)
from .subspace import (
    Subspace,
    delta_s,
    distance,
    dual,
    enumerate_grassmannian,
    from_generators,
    frobenius_shift,
    parse_subspace,
    scalar_shift,
    smallest_containing_subfield,
    stabilizer_field_degree,
)

__all__ = [
    "AutGroupDescriptor", "CapExceeded", "FieldError", "FieldTower", "IsometryClass", "OrbitCode",
    "Subspace", "WeightDistribution", "automorphism_group", "brute_force_automorphisms",
    "check_shift_in_orbit", "classify", "companion_matrix", "delta_s", "distance", "dual",
    "enumerate_grassmannian", "extension_group_orbit", "field_for", "frobenius_isometric",
    "frobenius_shift", "from_generators", "gaussian_binomial", "gl_order", "make_field",
    "normalizer_orbit", "orbit_size_lower_bound", "parse_subspace", "predicted_weights",
    "scalar_shift", "scan_exceptional", "singer_orbit", "smallest_containing_subfield",
    "stabilizer_field_degree", "subfield_basis", "verify_inequality_lemmas", "weight_distribution",
]

from itertools import combinations

import pytest

from gammatri.cluster import dihedral_subdivision, type_a_subdivision
from gammatri.complexes import Complex, f_polynomial, f_vector, is_pure
from gammatri.poly import Poly1, Poly2
from gammatri.subdivisions import (
    InvalidSubdivision,
    SphereWithFacet,
    Subdivision,
    VALIDATION_CHECKS,
    f_triangle,
    gamma_from_local_sum,
    h_of_complex,
    h_triangle_direct,
    join_subdivisions,
    local_gamma,
    local_h,
    restrict,
    sphere,
    sub_subdivision,
)
from gammatri.transforms import GammaTriangle, Gamma_from_H, H_from_F

A1 = type_a_subdivision(1)
A2 = type_a_subdivision(2)
A3 = type_a_subdivision(3)


def test_restrict_full_a2_is_path():
    full = restrict(A2, frozenset(A2.index_set))
    assert f_vector(full) == (1, 3, 2)


def test_restrict_empty():
    r = restrict(A2, frozenset())
    assert f_polynomial(r) == Poly1.one()
    assert r.facets == (frozenset(),)


def test_restrict_singleton_a2():
    r = restrict(A2, frozenset(["s1"]))
    assert f_vector(r) == (1, 1)


def test_restrict_rejects_foreign_labels():
    with pytest.raises(ValueError):
        restrict(A2, frozenset(["nope"]))


def test_local_h_a2():
    assert local_h(A2) == Poly1({1: 1})


def test_local_h_a1_vanishes():
    assert local_h(A1) == Poly1.zero()


def test_local_h_dihedral_4():
    assert local_h(dihedral_subdivision(4)) == Poly1({1: 2})


def test_local_gamma_a3():
    assert local_gamma(A3) == Poly1({1: 1})


def test_local_gamma_a4():
    assert local_gamma(type_a_subdivision(4)) == Poly1({1: 1, 2: 2})


@pytest.mark.parametrize("m", range(2, 9))
def test_local_gamma_dihedral(m):
    assert local_gamma(dihedral_subdivision(m)) == Poly1({1: m - 2})


def test_sphere_a1_is_two_points():
    sph = sphere(A1)
    assert f_vector(sph.complex) == (1, 2)
    assert sph.facet == frozenset(["s1"])


def test_sphere_a2_is_pentagon():
    sph = sphere(A2)
    assert f_vector(sph.complex) == (1, 5, 5)
    assert is_pure(sph.complex)


@pytest.mark.parametrize("m", range(2, 9))
def test_sphere_dihedral_is_polygon(m):
    sph = sphere(dihedral_subdivision(m))
    assert f_vector(sph.complex) == (1, m + 2, m + 2)


def test_f_triangle_pentagon_with_edge():
    sph = sphere(dihedral_subdivision(3))
    assert f_triangle(sph) == Poly2({(0, 0): 1, (1, 0): 3, (2, 0): 2,
                                     (0, 1): 2, (1, 1): 2, (0, 2): 1})


def test_f_triangle_just_the_facet():
    sph = SphereWithFacet.make(Complex.make("t", [{"t"}]), {"t"})
    assert f_triangle(sph) == Poly2({(0, 0): 1, (0, 1): 1})


def test_f_triangle_a3():
    F = f_triangle(sphere(A3))
    assert F.coeff(1, 0) == 6
    assert F.coeff(3, 0) == 5
    assert F.coeff(0, 3) == 1
    assert F == Poly2({(0, 0): 1, (1, 0): 6, (2, 0): 10, (3, 0): 5,
                       (0, 1): 3, (1, 1): 8, (2, 1): 5,
                       (0, 2): 3, (1, 2): 3, (0, 3): 1})


def test_gamma_from_local_sum_examples():
    assert gamma_from_local_sum(A2) == GammaTriangle.make(
        {(0, 2): 1, (1, 0): 1}, 2)
    assert gamma_from_local_sum(A3) == GammaTriangle.make(
        {(0, 3): 1, (1, 1): 2, (1, 0): 1}, 3)
    assert gamma_from_local_sum(A1) == GammaTriangle.make({(0, 1): 1}, 1)


def test_h_triangle_direct_examples():
    assert h_triangle_direct(A2) == Poly2(
        {(0, 0): 1, (1, 0): 1, (1, 1): 2, (2, 2): 1})
    assert h_triangle_direct(A1) == Poly2({(0, 0): 1, (1, 1): 1})
    assert h_triangle_direct(A3) == Poly2(
        {(0, 0): 1, (1, 0): 3, (2, 0): 1, (1, 1): 3, (2, 1): 2,
         (2, 2): 3, (3, 3): 1})


MODELS = [type_a_subdivision(n) for n in range(1, 5)] + [
    dihedral_subdivision(m) for m in range(2, 7)]


@pytest.mark.parametrize("s", MODELS, ids=lambda s: "I".join(s.index_set))
def test_moebius_inversion(s):
    total = Poly1.zero()
    for r in range(len(s.index_set) + 1):
        for J in combinations(s.index_set, r):
            total = total + local_h(sub_subdivision(s, frozenset(J)))
    assert total == h_of_complex(s.complex, len(s.index_set))


@pytest.mark.parametrize("s", MODELS, ids=lambda s: "I".join(s.index_set))
def test_local_h_symmetry(s):
    d = len(s.index_set)
    lh = local_h(s)
    assert all(lh.coeff(i) == lh.coeff(d - i) for i in range(d + 1))


@pytest.mark.parametrize("s", MODELS, ids=lambda s: "I".join(s.index_set))
def test_triangle_routes_agree(s):
    d = len(s.index_set)
    H = H_from_F(f_triangle(sphere(s)), d)
    assert H == h_triangle_direct(s)
    assert Gamma_from_H(H, d) == gamma_from_local_sum(s)


@pytest.mark.parametrize("s", MODELS, ids=lambda s: "I".join(s.index_set))
def test_y0_row_is_local_gamma(s):
    assert gamma_from_local_sum(s).row(0) == local_gamma(s)


@pytest.mark.parametrize("s", MODELS, ids=lambda s: "I".join(s.index_set))
def test_f_triangle_specializes_to_f(s):
    sph = sphere(s)
    assert f_triangle(sph).substitute_y("x") == f_polynomial(sph.complex)


def test_join_multiplicativity():
    j = join_subdivisions(A2, type_a_subdivision(2))
    assert local_gamma(j) == local_gamma(A2) * local_gamma(A2)
    assert local_gamma(j) == Poly1({2: 1})


def test_join_multiplicativity_mixed():
    a, b = dihedral_subdivision(4), type_a_subdivision(3)
    j = join_subdivisions(a, b)
    j.validate()
    assert local_gamma(j) == local_gamma(a) * local_gamma(b)


def test_validation_passes_on_models():
    for s in MODELS:
        assert s.validate() == list(VALIDATION_CHECKS)


def test_json_round_trip():
    data = A3.to_dict()
    again = Subdivision.from_dict(data)
    assert gamma_from_local_sum(again) == gamma_from_local_sum(A3)


def _invalid(complex_args, index_set, sigma):
    cpx = Complex.make(*complex_args)
    return Subdivision.make(cpx, index_set, sigma)


def test_validate_rejects_euler_violation():
    # two points both carried to {s}: the restriction to {s} has Euler
    # characteristic 2
    s = _invalid(("pq", [{"p"}, {"q"}]), ["s"],
                 {"p": {"s"}, "q": {"s"}})
    with pytest.raises(InvalidSubdivision, match="Euler"):
        s.validate()


def test_validate_rejects_wrong_dimension():
    s = _invalid(("pq", [{"p", "q"}]), ["s"],
                 {"p": {"s"}, "q": {"s"}})
    with pytest.raises(InvalidSubdivision, match="dimension"):
        s.validate()


def test_validate_rejects_impure_restriction():
    # an edge plus an isolated vertex; the singleton restrictions are fine,
    # the full restriction mixes facet sizes
    s = _invalid(("pqr", [{"p", "q"}, {"r"}]), ["s1", "s2"],
                 {"p": {"s1"}, "q": {"s2"}, "r": {"s1", "s2"}})
    with pytest.raises(InvalidSubdivision, match="pure"):
        s.validate()


def test_validate_rejects_empty_carrier():
    s = _invalid(("p", [{"p"}]), ["s"], {"p": set()})
    with pytest.raises(InvalidSubdivision, match="empty"):
        s.validate()


def test_validate_rejects_label_overlap():
    s = _invalid(("p", [{"p"}]), ["p"], {"p": {"p"}})
    with pytest.raises(InvalidSubdivision, match="overlap"):
        s.validate()


def test_validate_rejects_missing_carrier():
    s = _invalid(("pq", [{"p", "q"}]), ["s1", "s2"], {"p": {"s1"}})
    with pytest.raises(InvalidSubdivision, match="domain"):
        s.validate()


def test_loader_runs_validation():
    bad = {"complex": {"vertices": ["p", "q"], "facets": [["p"], ["q"]]},
           "index_set": ["s"],
           "sigma": {"p": ["s"], "q": ["s"]}}
    with pytest.raises(InvalidSubdivision, match="Euler"):
        Subdivision.from_dict(bad)

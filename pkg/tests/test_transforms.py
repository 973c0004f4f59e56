import pytest
from hypothesis import given, settings, strategies as st

from gammatri.poly import Poly1, Poly2
from gammatri.transforms import (
    F_from_Gamma,
    F_from_H,
    Gamma_from_H,
    GammaTriangle,
    H_from_F,
    H_from_Gamma,
    NotGammaRepresentable,
    f_from_h,
    gamma_from_h,
    h_from_f,
    poly_from_gamma,
)

# reference data: the n-gon with a distinguished edge (n = 5) and the
# rank 3 cluster example
PENTAGON_F = Poly2({(0, 0): 1, (1, 0): 3, (2, 0): 2,
                    (0, 1): 2, (1, 1): 2, (0, 2): 1})
PENTAGON_H = Poly2({(0, 0): 1, (1, 0): 1, (1, 1): 2, (2, 2): 1})
A3_F = Poly2({(0, 0): 1, (1, 0): 6, (2, 0): 10, (3, 0): 5,
              (0, 1): 3, (1, 1): 8, (2, 1): 5,
              (0, 2): 3, (1, 2): 3,
              (0, 3): 1})
A3_H = Poly2({(0, 0): 1, (1, 0): 3, (2, 0): 1,
              (1, 1): 3, (2, 1): 2,
              (2, 2): 3, (3, 3): 1})
A3_GAMMA = GammaTriangle.make({(0, 3): 1, (1, 1): 2, (1, 0): 1}, 3)


def test_h_from_f_pentagon():
    assert h_from_f(Poly1({0: 1, 1: 5, 2: 5}), 2) == Poly1({0: 1, 1: 3, 2: 1})


def test_h_from_f_trivial():
    assert h_from_f(Poly1.one(), 0) == Poly1.one()


def test_h_from_f_path():
    assert h_from_f(Poly1({0: 1, 1: 3, 2: 2}), 2) == Poly1({0: 1, 1: 1})


def test_h_from_f_degree_error():
    with pytest.raises(ValueError):
        h_from_f(Poly1({3: 1}), 2)


def test_f_from_h_pentagon():
    assert f_from_h(Poly1({0: 1, 1: 3, 2: 1}), 2) == Poly1({0: 1, 1: 5, 2: 5})


def test_f_from_h_simplex_boundary():
    assert f_from_h(Poly1.one(), 3) == Poly1({0: 1, 1: 3, 2: 3, 3: 1})


@given(st.dictionaries(st.integers(0, 8), st.integers(-9, 9), max_size=6),
       st.integers(0, 8))
def test_f_h_round_trip(fd, d):
    f = Poly1({e: c for e, c in fd.items() if e <= d})
    assert f_from_h(h_from_f(f, d), d) == f


def test_gamma_from_h_pentagon():
    assert gamma_from_h(Poly1({0: 1, 1: 3, 2: 1}), 2) == (1, 1)


def test_gamma_from_h_constant():
    assert gamma_from_h(Poly1.one(), 0) == (1,)


def test_gamma_from_h_negative_entry():
    assert gamma_from_h(Poly1({0: 1, 2: 1}), 2) == (1, -2)


def test_gamma_from_h_rejects_asymmetric():
    with pytest.raises(NotGammaRepresentable):
        gamma_from_h(Poly1({0: 1, 1: 1}), 2)


def test_H_from_F_pentagon():
    assert H_from_F(PENTAGON_F, 2) == PENTAGON_H


def test_H_from_F_single_facet_vertex():
    assert H_from_F(Poly2({(0, 0): 1, (0, 1): 1}), 1) == Poly2(
        {(0, 0): 1, (1, 0): -1, (1, 1): 1})


def test_H_from_F_a3():
    assert H_from_F(A3_F, 3) == A3_H


def test_H_from_F_domain_error():
    with pytest.raises(ValueError):
        H_from_F(Poly2({(2, 1): 1}), 2)


def test_F_from_H_pentagon():
    assert F_from_H(PENTAGON_H, 2) == PENTAGON_F


def test_F_from_H_constant():
    assert F_from_H(Poly2.one(), 2) == Poly2({(0, 0): 1, (1, 0): 2, (2, 0): 1})


def test_F_from_H_rejects_bad_shape():
    with pytest.raises(ValueError):
        F_from_H(Poly2({(0, 1): 1}), 2)


def test_Gamma_from_H_pentagon():
    assert Gamma_from_H(PENTAGON_H, 2) == GammaTriangle.make(
        {(0, 2): 1, (1, 0): 1}, 2)


def test_Gamma_from_H_triangle_has_negative_entry():
    # the 3-gon with an edge facet: H = 1 - x + 2xy + x^2 y^2
    h3 = Poly2({(0, 0): 1, (1, 0): -1, (1, 1): 2, (2, 2): 1})
    gt = Gamma_from_H(h3, 2)
    assert gt == GammaTriangle.make({(0, 2): 1, (1, 0): -1}, 2)
    assert gt.entry(1, 0) == -1


def test_Gamma_from_H_a3():
    assert Gamma_from_H(A3_H, 3) == A3_GAMMA


def test_H_from_Gamma_pentagon():
    assert H_from_Gamma(GammaTriangle.make({(0, 2): 1, (1, 0): 1}, 2)) \
        == PENTAGON_H


def test_H_from_Gamma_a3_expansion():
    # (1+xy)^3 + 2x(1+xy) + x(1+x), expanded by hand
    assert H_from_Gamma(A3_GAMMA) == A3_H


def test_H_from_Gamma_unit():
    assert H_from_Gamma(GammaTriangle.make({(0, 0): 1}, 0)) == Poly2.one()


def test_F_from_Gamma_pentagon():
    assert F_from_Gamma(GammaTriangle.make({(0, 2): 1, (1, 0): 1}, 2)) \
        == PENTAGON_F


def test_F_from_Gamma_point_pair():
    assert F_from_Gamma(GammaTriangle.make({(0, 1): 1}, 1)) == Poly2(
        {(0, 0): 1, (1, 0): 1, (0, 1): 1})


def test_F_from_Gamma_a3():
    assert F_from_Gamma(A3_GAMMA) == A3_F


def test_gamma_triangle_shape_validation():
    with pytest.raises(ValueError):
        GammaTriangle.make({(2, 1): 1}, 4)
    GammaTriangle.make({(2, 0): 1}, 4)


gamma_triangles = st.integers(0, 8).flatmap(
    lambda d: st.builds(
        lambda cs: GammaTriangle.make(
            {k: c for k, c in cs.items() if 2 * k[0] + k[1] <= d}, d),
        st.dictionaries(
            st.tuples(st.integers(0, 4), st.integers(0, 8)),
            st.integers(-4, 4), max_size=8)))


@settings(max_examples=200)
@given(gamma_triangles)
def test_gamma_H_round_trip(g):
    assert Gamma_from_H(H_from_Gamma(g), g.degree) == g


@settings(max_examples=200)
@given(gamma_triangles)
def test_F_routes_agree(g):
    H = H_from_Gamma(g)
    F = F_from_H(H, g.degree)
    assert F == F_from_Gamma(g)
    assert H_from_F(F, g.degree) == H


@settings(max_examples=200)
@given(gamma_triangles)
def test_specialization_chain(g):
    H = H_from_Gamma(g)
    F = F_from_H(H, g.degree)
    h = H.substitute_y(1)
    assert F.substitute_y("x") == f_from_h(h, g.degree)
    assert gamma_from_h(h, g.degree) == g.row_sums() + (0,) * (
        g.degree // 2 + 1 - len(g.row_sums()))


def test_row_helpers():
    assert A3_GAMMA.row(0) == Poly1({1: 1})
    assert A3_GAMMA.row_sums() == (1, 3)
    assert poly_from_gamma((1, 3)) == Poly1({0: 1, 1: 3})
    assert A3_GAMMA.to_poly2() == Poly2({(0, 3): 1, (1, 1): 2, (1, 0): 1})


def test_gamma_triangle_serialization():
    d = A3_GAMMA.to_dict()
    assert GammaTriangle.from_dict(d) == A3_GAMMA

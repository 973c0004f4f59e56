"""Basis changes between face counts and their h/gamma refinements.

Univariate: f <-> h at a prescribed degree d, and the gamma extraction
h = sum_i gamma_i x^i (1+x)^(d-2i), defined exactly when h is symmetric.

Bivariate: F <-> H for a complex with a distinguished facet, and the
triangle extraction H = sum_(i,j) gamma_(i,j) x^i (1+xy)^j (1+x)^(d-2i-j).
All substitution formulas are implemented in their cleared polynomial
form, so every step stays in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import (
    Poly1,
    Poly2,
    one_minus_x,
    one_minus_x2,
    one_plus_2x,
    one_plus_x,
    one_plus_x2,
    one_plus_x_plus_y,
    one_plus_xy,
)


class NotGammaRepresentable(ValueError):
    """The input has no expansion in the gamma basis (non-symmetric data)."""

    def __init__(self, message, j=None, residual=None):
        super().__init__(message)
        self.j = j
        self.residual = residual


def h_from_f(f: Poly1, d: int) -> Poly1:
    """h(x) = sum_a f_a x^a (1-x)^(d-a) where f = sum_a f_a x^a."""
    if f.degree() > d:
        raise ValueError(f"f has degree {f.degree()} > d = {d}")
    out = Poly1.zero()
    for a, c in f.items():
        out = out + (Poly1.term(c, a) * one_minus_x(d - a))
    return out


def f_from_h(h: Poly1, d: int) -> Poly1:
    """f(x) = sum_a h_a x^a (1+x)^(d-a); inverse of h_from_f."""
    if h.degree() > d:
        raise ValueError(f"h has degree {h.degree()} > d = {d}")
    out = Poly1.zero()
    for a, c in h.items():
        out = out + (Poly1.term(c, a) * one_plus_x(d - a))
    return out


def gamma_from_h(h: Poly1, d: int) -> tuple:
    """Extract (gamma_0, ..., gamma_(d//2)) with
    h = sum_i gamma_i x^i (1+x)^(d-2i); raises NotGammaRepresentable when
    the residual does not vanish (h not symmetric of degree d)."""
    if h.degree() > d:
        raise ValueError(f"h has degree {h.degree()} > d = {d}")
    residual = h
    out = []
    for i in range(d // 2 + 1):
        gi = residual.coeff(i)
        out.append(gi)
        if gi:
            residual = residual - (Poly1.term(gi, i) * one_plus_x(d - 2 * i))
    if not residual.is_zero():
        raise NotGammaRepresentable(
            f"gamma extraction left residual {residual}", residual=residual)
    return tuple(out)


def poly_from_gamma(vec) -> Poly1:
    """Gamma vector as the polynomial sum_i gamma_i x^i."""
    return Poly1(dict(enumerate(vec)))


@dataclass
class GammaTriangle:
    """Coefficients gamma_(i,j), nonzero only for 2i + j <= degree."""

    coeffs: dict = field(default_factory=dict)
    degree: int = 0

    @classmethod
    def make(cls, coeffs, degree: int) -> "GammaTriangle":
        clean = {}
        for (i, j), c in coeffs.items():
            if not c:
                continue
            if i < 0 or j < 0 or 2 * i + j > degree:
                raise ValueError(
                    f"entry ({i}, {j}) outside the triangle for degree {degree}")
            clean[(i, j)] = c
        return cls(clean, degree)

    @classmethod
    def from_poly2(cls, p: Poly2, degree: int) -> "GammaTriangle":
        return cls.make({k: c for k, c in p.items()}, degree)

    def entry(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def items(self):
        return sorted(self.coeffs.items())

    def to_poly2(self) -> Poly2:
        return Poly2(self.coeffs)

    def row(self, j: int) -> Poly1:
        return Poly1({i: c for (i, jj), c in self.coeffs.items() if jj == j})

    def row_sums(self) -> tuple:
        """gamma_i = sum_j gamma_(i,j): the plain gamma vector."""
        out = [0] * (self.degree // 2 + 1)
        for (i, _), c in self.coeffs.items():
            out[i] += c
        return tuple(out)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "entries": self.to_poly2().to_triples()}

    @classmethod
    def from_dict(cls, data) -> "GammaTriangle":
        return cls.from_poly2(Poly2.from_triples(data["entries"]),
                              int(data["degree"]))


def H_from_F(F: Poly2, d: int) -> Poly2:
    """H(x,y) = sum F_(i,j) x^(i+j) y^j (1-x)^(d-i-j), the cleared form of
    (1-x)^d F(x/(1-x), xy/(1-x))."""
    out = Poly2.zero()
    for (i, j), c in F.items():
        if i + j > d:
            raise ValueError(f"F entry ({i}, {j}) has i + j > d = {d}")
        out = out + (Poly2.term(c, i + j, j) * one_minus_x2(d - i - j))
    return out


def F_from_H(H: Poly2, d: int) -> Poly2:
    """F(x,y) = sum H_(a,b) x^(a-b) y^b (1+x)^(d-a); inverse of H_from_F."""
    out = Poly2.zero()
    for (a, b), c in H.items():
        if b > a:
            raise ValueError(
                f"H entry ({a}, {b}) has y-degree exceeding x-degree")
        if a > d:
            raise ValueError(f"H entry ({a}, {b}) has x-degree > d = {d}")
        out = out + (Poly2.term(c, a - b, b) * one_plus_x2(d - a))
    return out


def Gamma_from_H(H: Poly2, d: int) -> GammaTriangle:
    """Extract the triangle coefficients from
    H = sum gamma_(i,j) x^i (1+xy)^j (1+x)^(d-2i-j).

    The basis is triangular when processed by descending j and then
    ascending i: the y^j slice of the residual is x^j times an expansion
    in the univariate gamma basis of effective degree d - j."""
    if H.deg_x() > d:
        raise NotGammaRepresentable(
            f"x-degree {H.deg_x()} exceeds d = {d}")
    residual = H
    coeffs = {}
    for j in range(d, -1, -1):
        slice_j = residual.coeff_of_y(j)
        if slice_j.is_zero():
            continue
        if slice_j.min_degree() < j:
            raise NotGammaRepresentable(
                f"y^{j} slice {slice_j} not divisible by x^{j}",
                j=j, residual=slice_j)
        q = slice_j.shift_down(j)
        try:
            row = gamma_from_h(q, d - j)
        except NotGammaRepresentable as exc:
            raise NotGammaRepresentable(
                f"row j = {j} not representable: {exc}",
                j=j, residual=exc.residual)
        for i, gi in enumerate(row):
            if gi:
                coeffs[(i, j)] = gi
                residual = residual - (
                    Poly2.term(gi, i, 0)
                    * one_plus_xy(j)
                    * one_plus_x2(d - 2 * i - j))
    if not residual.is_zero():
        raise NotGammaRepresentable(
            f"triangle extraction left residual {residual}",
            residual=residual)
    return GammaTriangle.make(coeffs, d)


def H_from_Gamma(g: GammaTriangle) -> Poly2:
    """Expand sum gamma_(i,j) x^i (1+xy)^j (1+x)^(d-2i-j)."""
    d = g.degree
    out = Poly2.zero()
    for (i, j), c in g.items():
        out = out + (Poly2.term(c, i, 0)
                     * one_plus_xy(j)
                     * one_plus_x2(d - 2 * i - j))
    return out


def F_from_Gamma(g: GammaTriangle) -> Poly2:
    """Expand sum gamma_(i,j) (x(1+x))^i (1+x+y)^j (1+2x)^(d-2i-j);
    identical to F_from_H(H_from_Gamma(g))."""
    d = g.degree
    x_one_plus_x = Poly2({(1, 0): 1, (2, 0): 1})
    out = Poly2.zero()
    for (i, j), c in g.items():
        out = out + ((x_one_plus_x ** i).scale(c)
                     * one_plus_x_plus_y(j)
                     * one_plus_2x(d - 2 * i - j))
    return out

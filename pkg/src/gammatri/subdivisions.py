"""Simplicial subdivisions of a simplex: a complex together with a carrier
map from its vertices into an index set.

The carrier of a face is the union of its vertices' carriers. For every
subset J of the index set, the faces carried inside J form the restriction,
which for genuine subdivision data is a simplicial ball of dimension
|J| - 1. Validation is partial by design: purity, dimension and Euler
characteristic of every nonempty restriction are checked, full topology is
not; validate() reports which checks ran.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import (
    Complex,
    InvalidComplex,
    dimension,
    f_polynomial,
    face_set,
    is_pure,
)
from .poly import Poly1, Poly2
from .transforms import GammaTriangle, gamma_from_h, h_from_f, poly_from_gamma

VALIDATION_CHECKS = (
    "index set disjoint from vertices",
    "carriers defined on every vertex",
    "carriers nonempty subsets of the index set",
    "restrictions pure",
    "restrictions of dimension |J| - 1",
    "restrictions have Euler characteristic 1",
)


class InvalidSubdivision(ValueError):
    pass


@dataclass
class Subdivision:
    complex: Complex
    index_set: tuple[str, ...]
    sigma: dict[str, frozenset[str]]

    @classmethod
    def make(cls, complex: Complex, index_set, sigma) -> "Subdivision":
        """Structural construction; run validate() for the ball checks."""
        idx = tuple(index_set)
        if len(set(idx)) != len(idx):
            raise InvalidSubdivision("duplicate index labels")
        smap = {v: frozenset(s) for v, s in sigma.items()}
        return cls(complex, idx, smap)

    def validate(self) -> list[str]:
        """Run the partial validation; returns the names of the checks that
        ran, raises InvalidSubdivision naming the first violated one."""
        iset = set(self.index_set)
        overlap = iset & set(self.complex.vertices)
        if overlap:
            raise InvalidSubdivision(
                f"index set overlaps vertices: {sorted(overlap)}")
        vset = set(self.complex.vertices)
        if set(self.sigma) != vset:
            missing = vset - set(self.sigma)
            extra = set(self.sigma) - vset
            what = f"missing {sorted(missing)}" if missing else f"extra {sorted(extra)}"
            raise InvalidSubdivision(f"carrier map domain mismatch: {what}")
        for v, s in self.sigma.items():
            if not s:
                raise InvalidSubdivision(f"carrier of vertex {v!r} is empty")
            if not s <= iset:
                raise InvalidSubdivision(
                    f"carrier of vertex {v!r} is not a subset of the index set")
        for r in range(1, len(self.index_set) + 1):
            for J in combinations(self.index_set, r):
                sub = restrict(self, frozenset(J))
                if not is_pure(sub):
                    raise InvalidSubdivision(
                        f"restriction to {sorted(J)} is not pure")
                if dimension(sub) != len(J) - 1:
                    raise InvalidSubdivision(
                        f"restriction to {sorted(J)} has dimension "
                        f"{dimension(sub)}, expected {len(J) - 1}")
                euler = sum((-1) ** (len(f) - 1)
                            for f in face_set(sub) if f)
                if euler != 1:
                    raise InvalidSubdivision(
                        f"restriction to {sorted(J)} has Euler "
                        f"characteristic {euler}, expected 1")
        return list(VALIDATION_CHECKS)

    def carrier(self, face) -> frozenset[str]:
        out = frozenset()
        for v in face:
            out |= self.sigma[v]
        return out

    def to_dict(self) -> dict:
        return {
            "complex": self.complex.to_dict(),
            "index_set": list(self.index_set),
            "sigma": {v: sorted(s) for v, s in sorted(self.sigma.items())},
        }

    @classmethod
    def from_dict(cls, data) -> "Subdivision":
        """Load and run the partial validation."""
        try:
            complex_data = data["complex"]
            index_set = data["index_set"]
            sigma = data["sigma"]
        except (TypeError, KeyError) as exc:
            raise InvalidSubdivision(f"missing field in subdivision data: {exc}")
        try:
            cpx = Complex.from_dict(complex_data)
        except InvalidComplex as exc:
            raise InvalidSubdivision(f"invalid complex: {exc}")
        sub = cls.make(cpx, index_set, {v: frozenset(s) for v, s in sigma.items()})
        sub.validate()
        return sub


@dataclass(frozen=True)
class SphereWithFacet:
    """A complex with a distinguished facet (required to be a stored facet)."""

    complex: Complex
    facet: frozenset[str]

    @classmethod
    def make(cls, complex: Complex, facet) -> "SphereWithFacet":
        f = frozenset(facet)
        if f not in complex.facets:
            raise InvalidComplex(
                f"{sorted(f)} is not a facet of the complex")
        return cls(complex, f)


def restrict(s: Subdivision, J) -> Complex:
    """The subcomplex of faces whose carrier lies inside J."""
    J = frozenset(J)
    if not J <= set(s.index_set):
        raise ValueError(f"{sorted(J)} is not a subset of the index set")
    inside = {v for v in s.complex.vertices if s.sigma[v] <= J}
    cut = {frozenset(f & inside) for f in s.complex.facets}
    maximal = [f for f in cut if not any(f < g for g in cut)]
    return Complex.make(sorted(inside), maximal)


def sub_subdivision(s: Subdivision, K) -> Subdivision:
    """The restriction to K viewed as a subdivision with index set K."""
    K = frozenset(K)
    cpx = restrict(s, K)
    sigma = {v: s.sigma[v] for v in cpx.vertices}
    return Subdivision.make(cpx, sorted(K), sigma)


def h_of_complex(c: Complex, d: int) -> Poly1:
    return h_from_f(f_polynomial(c), d)


def local_h(s: Subdivision) -> Poly1:
    """Alternating sum over J of the h-polynomials of the restrictions,
    each taken at degree |J|."""
    n = len(s.index_set)
    out = Poly1.zero()
    for r in range(n + 1):
        for J in combinations(s.index_set, r):
            h = h_of_complex(restrict(s, frozenset(J)), r)
            out = out + h.scale((-1) ** (n - r))
    return out


def local_gamma(s: Subdivision) -> Poly1:
    """Gamma expansion of the local h-polynomial at degree |index_set|.
    Extraction failure signals invalid subdivision data."""
    return poly_from_gamma(gamma_from_h(local_h(s), len(s.index_set)))


def sphere(s: Subdivision) -> SphereWithFacet:
    """The complex on vertices(C) + I whose faces are F + J with the
    carrier of F disjoint from J; the distinguished facet is I."""
    iset = frozenset(s.index_set)
    candidates = {frozenset(f) | (iset - s.carrier(f))
                  for f in face_set(s.complex)}
    maximal = [f for f in candidates
               if not any(f < g for g in candidates)]
    cpx = Complex.make(tuple(s.complex.vertices) + tuple(s.index_set), maximal)
    return SphereWithFacet.make(cpx, iset)


def f_triangle(sph: SphereWithFacet) -> Poly2:
    """F_(i,j) counts faces with i vertices outside the distinguished facet
    and j vertices inside it."""
    T = sph.facet
    counts: dict[tuple[int, int], int] = {}
    for f in face_set(sph.complex):
        key = (len(f - T), len(f & T))
        counts[key] = counts.get(key, 0) + 1
    return Poly2(counts)


def h_triangle_direct(s: Subdivision) -> Poly2:
    """H of the sphere computed through the intermediate identity
    H(x,y) = sum_J (xy)^|J| h(restriction to I - J); an independent route
    for cross-checking the F-triangle pipeline."""
    n = len(s.index_set)
    iset = frozenset(s.index_set)
    out = Poly2.zero()
    for r in range(n + 1):
        for J in combinations(s.index_set, r):
            h = h_of_complex(restrict(s, iset - frozenset(J)), n - r)
            out = out + h.to_poly2().shift(r, r)
    return out


def gamma_from_local_sum(s: Subdivision) -> GammaTriangle:
    """Triangle coefficients as sum_K local_gamma(restriction to K) y^(|I-K|);
    the K = empty term contributes the constant 1."""
    n = len(s.index_set)
    out = Poly2.zero()
    for r in range(n + 1):
        for K in combinations(s.index_set, r):
            lg = local_gamma(sub_subdivision(s, frozenset(K)))
            out = out + lg.to_poly2().shift(0, n - r)
    return GammaTriangle.from_poly2(out, n)


def join_subdivisions(a: Subdivision, b: Subdivision) -> Subdivision:
    """Join of the complexes with the union carrier map; local gamma is
    multiplicative for this operation. Colliding labels in b (vertices or
    index labels) get a deterministic prime suffix."""
    taken = set(a.complex.vertices) | set(a.index_set)
    rename = {}
    for label in tuple(b.complex.vertices) + tuple(b.index_set):
        new = label
        while new in taken:
            new += "'"
        rename[label] = new
        taken.add(new)
    b_cpx = Complex.make(
        tuple(rename[v] for v in b.complex.vertices),
        [frozenset(rename[v] for v in f) for f in b.complex.facets])
    facets = [fa | fb for fa in a.complex.facets for fb in b_cpx.facets]
    cpx = Complex.make(tuple(a.complex.vertices) + b_cpx.vertices, facets)
    sigma = dict(a.sigma)
    for v, s in b.sigma.items():
        sigma[rename[v]] = frozenset(rename[i] for i in s)
    index_set = tuple(a.index_set) + tuple(rename[i] for i in b.index_set)
    return Subdivision.make(cpx, index_set, sigma)

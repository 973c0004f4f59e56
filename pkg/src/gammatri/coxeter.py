"""Gamma-triangles for finite Coxeter diagrams.

The triangle of a diagram is assembled from local gamma-polynomials of its
induced subdiagrams: sum over vertex subsets J of y^|J| times the product
of the local gamma-polynomials of the connected components induced on the
complement. Types A, B, D have closed-form local data; the dihedral types
contribute (m-2)x; H3, H4, F4, E6, E7, E8 carry stored local data. Rows
j >= 1 of any triangle therefore always come out of the closed forms for
proper subdiagrams, never out of storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .poly import Poly1, Poly2, binom
from .transforms import GammaTriangle


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterDiagram:
    """Simple graph with integer edge labels >= 3 (3 is the default and is
    omitted in serialized form)."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]

    @classmethod
    def make(cls, vertices, edges) -> "CoxeterDiagram":
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise ClassificationError("duplicate vertex labels")
        vset = set(verts)
        seen = set()
        norm = []
        for e in edges:
            u, v, m = (e[0], e[1], 3) if len(e) == 2 else (e[0], e[1], int(e[2]))
            if u == v:
                raise ClassificationError(f"loop at vertex {u!r}")
            if u not in vset or v not in vset:
                raise ClassificationError(f"edge ({u!r}, {v!r}) uses unknown vertex")
            if m < 3:
                raise ClassificationError(f"edge label {m} < 3 on ({u!r}, {v!r})")
            key = frozenset((u, v))
            if key in seen:
                raise ClassificationError(f"repeated edge ({u!r}, {v!r})")
            seen.add(key)
            a, b = sorted((u, v))
            norm.append((a, b, m))
        return cls(verts, tuple(sorted(norm)))

    def induced(self, keep) -> "CoxeterDiagram":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        edges = tuple(e for e in self.edges if e[0] in keep and e[1] in keep)
        return CoxeterDiagram(verts, edges)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [[u, v] if m == 3 else [u, v, m] for u, v, m in self.edges],
        }

    @classmethod
    def from_dict(cls, data) -> "CoxeterDiagram":
        try:
            return cls.make(data["vertices"], data["edges"])
        except (TypeError, KeyError) as exc:
            raise ClassificationError(f"missing field in diagram data: {exc}")


@dataclass(frozen=True)
class TypedComponent:
    kind: str
    rank: int
    m: int | None = None  # dihedral edge label, kind == "I2" only

    def __str__(self):
        if self.kind == "I2":
            return f"I2({self.m})"
        return f"{self.kind}{self.rank}"


def _components(dgm: CoxeterDiagram) -> list[tuple[str, ...]]:
    nbrs = {v: set() for v in dgm.vertices}
    for u, v, _ in dgm.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    seen = set()
    comps = []
    for v in sorted(dgm.vertices):
        if v in seen:
            continue
        stack, comp = [v], set()
        while stack:
            w = stack.pop()
            if w in comp:
                continue
            comp.add(w)
            stack.extend(nbrs[w] - comp)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


def _classify_component(verts, edges) -> TypedComponent:
    r = len(verts)
    name = "{" + ", ".join(verts) + "}"
    if len(edges) != r - 1:
        raise ClassificationError(f"component {name} contains a cycle")
    if r == 1:
        return TypedComponent("A", 1)
    deg = {v: 0 for v in verts}
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    maxdeg = max(deg.values())
    labeled = [e for e in edges if e[2] > 3]
    if labeled:
        if len(labeled) > 1:
            raise ClassificationError(f"component {name} has two labeled edges")
        u, v, m = labeled[0]
        if maxdeg > 2:
            raise ClassificationError(
                f"component {name} has a branch point and a labeled edge")
        at_end = deg[u] == 1 or deg[v] == 1
        if r == 2:
            return TypedComponent("I2", 2, m)
        if m == 4 and at_end:
            return TypedComponent("B", r)
        if m == 4 and r == 4 and not at_end:
            return TypedComponent("F4", 4)
        if m == 5 and at_end and r == 3:
            return TypedComponent("H3", 3)
        if m == 5 and at_end and r == 4:
            return TypedComponent("H4", 4)
        raise ClassificationError(
            f"component {name} with a {m}-labeled edge is not of finite type")
    if maxdeg <= 2:
        return TypedComponent("A", r)
    if maxdeg > 3:
        raise ClassificationError(f"component {name} has a vertex of degree {maxdeg}")
    forks = [v for v in verts if deg[v] == 3]
    if len(forks) != 1:
        raise ClassificationError(f"component {name} has {len(forks)} branch points")
    fork = forks[0]
    nbrs = {v: set() for v in verts}
    for u, v, _ in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    lengths = []
    for start in sorted(nbrs[fork]):
        length, prev, cur = 1, fork, start
        while deg[cur] == 2:
            nxt = (nbrs[cur] - {prev}).pop()
            prev, cur = cur, nxt
            length += 1
        lengths.append(length)
    lengths.sort()
    if lengths[:2] == [1, 1]:
        return TypedComponent("D", 3 + lengths[2])
    if lengths == [1, 2, 2]:
        return TypedComponent("E6", 6)
    if lengths == [1, 2, 3]:
        return TypedComponent("E7", 7)
    if lengths == [1, 2, 4]:
        return TypedComponent("E8", 8)
    raise ClassificationError(
        f"component {name} with branch lengths {lengths} is not of finite type")


def classify(dgm: CoxeterDiagram) -> list[TypedComponent]:
    """Connected components as typed finite-type pieces, in a deterministic
    order. A 2-vertex component with a 3-labeled edge is A2, with label
    m >= 4 it is I2(m) (so B2 and C2 come out as I2(4))."""
    out = []
    for comp in _components(dgm):
        sub = dgm.induced(comp)
        out.append(_classify_component(comp, sub.edges))
    return sorted(out, key=lambda c: (c.kind, c.rank, c.m or 0))


# local gamma data for the types without closed forms, read off the j = 0
# rows of the reference triangles below
EXCEPTIONAL_LOCAL = {
    "H3": {1: 8},
    "H4": {1: 42, 2: 40},
    "F4": {1: 10, 2: 9},
    "E6": {1: 7, 2: 35, 3: 13},
    "E7": {1: 16, 2: 124, 3: 112},
    "E8": {1: 44, 2: 484, 3: 784, 4: 120},
}


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} not divisible by {den}")
    return q


def local_gamma_poly(c: TypedComponent) -> Poly1:
    """Closed-form local gamma-polynomial of a connected finite type
    (stored data for the exceptional kinds)."""
    n = c.rank
    if c.kind == "A":
        return Poly1({
            k: _exact_div(comb(n, k) * comb(n - k - 1, k - 1), n - k + 1,
                          f"local A{n} k={k}")
            for k in range(1, n // 2 + 1)})
    if c.kind == "B":
        return Poly1({k: comb(n, k) * comb(n - k - 1, k - 1)
                      for k in range(1, n // 2 + 1)})
    if c.kind == "D":
        return Poly1({
            k: _exact_div((n - 2) * comb(2 * k - 2, k - 1) * comb(n - 2, 2 * k - 2),
                          k, f"local D{n} k={k}")
            for k in range(1, n // 2 + 1)})
    if c.kind == "I2":
        return Poly1({1: c.m - 2})
    if c.kind in EXCEPTIONAL_LOCAL:
        return Poly1(EXCEPTIONAL_LOCAL[c.kind])
    raise ClassificationError(f"unknown component kind {c.kind!r}")


def local_gamma_of_diagram(dgm: CoxeterDiagram) -> Poly1:
    """Product over connected components; 1 for the empty diagram."""
    out = Poly1.one()
    for comp in classify(dgm):
        out = out * local_gamma_poly(comp)
    return out


def gamma_triangle_diagram(dgm: CoxeterDiagram) -> GammaTriangle:
    """sum over vertex subsets J of local_gamma(induced on I - J) y^|J|."""
    verts = dgm.vertices
    n = len(verts)
    out = Poly2.zero()
    for mask in range(1 << n):
        keep = [verts[i] for i in range(n) if mask >> i & 1]
        lg = local_gamma_of_diagram(dgm.induced(keep))
        out = out + lg.to_poly2().shift(0, n - len(keep))
    return GammaTriangle.from_poly2(out, n)


def gamma_coeff_closed(kind: str, n: int, k: int, l: int) -> int:
    """Closed-form triangle coefficient of x^k y^l for type A or B of rank n."""
    if k < 0 or l < 0 or l + 2 * k > n:
        raise ValueError(f"({k}, {l}) outside the triangle for rank {n}")
    if k == 0:
        return 1 if l == n else 0
    if kind == "A":
        return _exact_div((l + 1) * comb(n, k) * binom(n - k - l - 1, k - 1),
                          n - k + 1, f"A{n} coefficient ({k}, {l})")
    if kind == "B":
        return comb(n, k) * binom(n - k - l - 1, k - 1)
    raise ValueError(f"no closed coefficient form for kind {kind!r}")


def closed_gamma_triangle(kind: str, n: int) -> GammaTriangle:
    """Assemble the full type A or B triangle from the closed coefficients."""
    coeffs = {}
    for k in range(n // 2 + 1):
        for l in range(n - 2 * k + 1):
            c = gamma_coeff_closed(kind, n, k, l)
            if c:
                coeffs[(k, l)] = c
    return GammaTriangle.make(coeffs, n)


def gamma_triangle_D(n: int) -> GammaTriangle:
    """Type D rank n triangle: y times the type B rank n-1 triangle plus the
    local gamma-polynomial of D_n as the j = 0 row."""
    if n < 3:
        raise ValueError(f"rank must be >= 3, got {n}")
    coeffs = {}
    for (i, j), c in closed_gamma_triangle("B", n - 1).items():
        coeffs[(i, j + 1)] = c
    for i, c in local_gamma_poly(TypedComponent("D", n)).items():
        coeffs[(i, 0)] = coeffs.get((i, 0), 0) + c
    return GammaTriangle.make(coeffs, n)


def rank23_formula(h: int, rank: int) -> GammaTriangle:
    """Rank 2: y^2 + (h-2) x for any Coxeter number h >= 2. Rank 3:
    y^3 + 6(h-2)/(h+2) xy + 3(h-2)^2/(2(h+2)) x for h in {2, 4, 6, 10}."""
    if rank == 2:
        if h < 2:
            raise ValueError(f"rank 2 needs h >= 2, got {h}")
        return GammaTriangle.make({(0, 2): 1, (1, 0): h - 2}, 2)
    if rank == 3:
        if h not in (2, 4, 6, 10):
            raise ValueError(f"rank 3 Coxeter number must be 2, 4, 6 or 10, got {h}")
        c11 = _exact_div(6 * (h - 2), h + 2, "rank 3 xy entry")
        c10 = _exact_div(3 * (h - 2) ** 2, 2 * (h + 2), "rank 3 x entry")
        return GammaTriangle.make({(0, 3): 1, (1, 1): c11, (1, 0): c10}, 3)
    raise ValueError(f"rank must be 2 or 3, got {rank}")


def family_recursion(name: str, n: int) -> Poly2:
    """u_0 = 0, u_1 = 1, then either the Lucas-family recursion
    u_(n+1) = (y^2 + 2x) u_n - x^2 u_(n-1) + xy u_(n-1) or the Pell-family
    recursion u_(n+1) = y u_n + x u_(n-1)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if name == "lucas":
        def step(u, v):
            return Poly2({(0, 2): 1, (1, 0): 2}) * v + Poly2(
                {(2, 0): -1, (1, 1): 1}) * u
    elif name == "pell":
        def step(u, v):
            return Poly2({(0, 1): 1}) * v + Poly2({(1, 0): 1}) * u
    else:
        raise ValueError(f"unknown family {name!r}")
    u, v = Poly2.zero(), Poly2.one()
    if n == 0:
        return u
    for _ in range(n - 1):
        u, v = v, step(u, v)
    return v


def standard_diagram(kind: str, rank: int | None = None,
                     m: int | None = None) -> CoxeterDiagram:
    """Standard diagram of a named finite type. C is an alias of B; the
    low-rank conventions B1 = A1, D2 = A1 x A1, D3 = A3 and I2(3) = A2 are
    applied here, so every legal name yields a classifiable diagram."""
    kind = kind.upper()
    if kind in ("E", "F", "H"):
        if rank is None:
            raise ValueError(f"type {kind} needs a rank")
        kind = f"{kind}{rank}"
    if kind.startswith("I2"):
        if m is None and kind.startswith("I2(") and kind.endswith(")"):
            m = int(kind[3:-1])
        if m is None:
            raise ValueError("dihedral type needs its edge label m")
        if m < 2:
            raise ValueError(f"dihedral label must be >= 2, got {m}")
        if m == 2:
            return CoxeterDiagram.make(["s1", "s2"], [])
        edge = ("s1", "s2") if m == 3 else ("s1", "s2", m)
        return CoxeterDiagram.make(["s1", "s2"], [edge])
    if kind in ("E6", "E7", "E8", "F4", "H3", "H4") and rank is None:
        rank = int(kind[1])
    if rank is None:
        raise ValueError(f"type {kind} needs a rank")
    verts = [f"s{i}" for i in range(1, rank + 1)]
    path = [(verts[i], verts[i + 1]) for i in range(rank - 1)]
    if kind == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        return CoxeterDiagram.make(verts, path)
    if kind in ("B", "C"):
        if rank < 1:
            raise ValueError("type B needs rank >= 1")
        if rank == 1:
            return CoxeterDiagram.make(verts, [])
        edges = path[:-1] + [(verts[-2], verts[-1], 4)]
        return CoxeterDiagram.make(verts, edges)
    if kind == "D":
        if rank < 2:
            raise ValueError("type D needs rank >= 2")
        if rank == 2:
            return CoxeterDiagram.make(verts, [])
        if rank == 3:
            return CoxeterDiagram.make(verts, path)
        edges = path[:-2] + [(verts[-3], verts[-2]), (verts[-3], verts[-1])]
        return CoxeterDiagram.make(verts, edges)
    if kind in ("E6", "E7", "E8"):
        if rank != int(kind[1]):
            raise ValueError(f"type {kind} has rank {kind[1]}")
        edges = path[:-1] + [(verts[2], verts[-1])]
        return CoxeterDiagram.make(verts, edges)
    if kind == "F4":
        if rank != 4:
            raise ValueError("type F4 has rank 4")
        return CoxeterDiagram.make(
            verts, [path[0], (verts[1], verts[2], 4), path[2]])
    if kind in ("H3", "H4"):
        if rank != int(kind[1]):
            raise ValueError(f"type {kind} has rank {kind[1]}")
        return CoxeterDiagram.make(verts, [(verts[0], verts[1], 5)] + path[1:])
    raise ValueError(f"unknown type {kind!r}")


def pell_discriminant_check() -> bool:
    """The discriminant y^2 + 4x of the Pell-family recursion equals the
    triangle of I2(6)."""
    disc = Poly2({(0, 2): 1, (1, 0): 4})
    return disc == gamma_triangle_diagram(standard_diagram("I2", m=6)).to_poly2()


def reference_tables() -> dict[str, GammaTriangle]:
    """Stored reference triangles (verbatim table data)."""
    data = {
        "A4": (4, {(0, 4): 1, (1, 2): 3, (1, 1): 2, (1, 0): 1, (2, 0): 2}),
        "B4": (4, {(0, 4): 1, (1, 2): 4, (1, 1): 4, (1, 0): 4, (2, 0): 6}),
        "D4": (4, {(0, 4): 1, (1, 2): 3, (1, 1): 3, (1, 0): 2, (2, 0): 2}),
        "F4": (4, {(0, 4): 1, (1, 2): 4, (1, 1): 6, (1, 0): 10, (2, 0): 9}),
        "H4": (4, {(0, 4): 1, (1, 2): 5, (1, 1): 9, (1, 0): 42, (2, 0): 40}),
        "E6": (6, {(0, 6): 1, (1, 4): 5, (1, 3): 5, (1, 2): 6, (2, 2): 11,
                   (1, 1): 7, (2, 1): 23, (1, 0): 7, (2, 0): 35, (3, 0): 13}),
        "E7": (7, {(0, 7): 1, (1, 5): 6, (1, 4): 6, (1, 3): 7, (2, 3): 16,
                   (1, 2): 9, (2, 2): 36, (1, 1): 12, (2, 1): 69, (3, 1): 28,
                   (1, 0): 16, (2, 0): 124, (3, 0): 112}),
        "E8": (8, {(0, 8): 1, (1, 6): 7, (1, 5): 7, (1, 4): 8, (2, 4): 22,
                   (1, 3): 10, (2, 3): 48, (1, 2): 14, (2, 2): 94, (3, 2): 46,
                   (1, 1): 22, (2, 1): 192, (3, 1): 194,
                   (1, 0): 44, (2, 0): 484, (3, 0): 784, (4, 0): 120}),
        "B5": (5, {(0, 5): 1, (1, 3): 5, (1, 2): 5, (1, 1): 5, (2, 1): 10,
                   (1, 0): 5, (2, 0): 20}),
        "D6": (6, {(0, 6): 1, (1, 4): 5, (1, 3): 5, (1, 2): 5, (2, 2): 10,
                   (1, 1): 5, (2, 1): 20, (1, 0): 4, (2, 0): 24, (3, 0): 8}),
    }
    return {name: GammaTriangle.make(coeffs, d) for name, (d, coeffs) in data.items()}


TABLE_DIAGRAMS = {
    "A4": ("A", 4), "B4": ("B", 4), "D4": ("D", 4), "F4": ("F4", 4),
    "H4": ("H4", 4), "E6": ("E6", 6), "E7": ("E7", 7), "E8": ("E8", 8),
    "B5": ("B", 5), "D6": ("D", 6),
}


def table_mismatches(name: str) -> list[tuple[str, int, int, int, int]]:
    """Recompute one stored table through the diagram sum and list entrywise
    differences as (table, i, j, expected, got)."""
    stored = reference_tables()[name]
    kind, rank = TABLE_DIAGRAMS[name]
    computed = gamma_triangle_diagram(standard_diagram(kind, rank))
    out = []
    keys = set(stored.coeffs) | set(computed.coeffs)
    for i, j in sorted(keys):
        want, got = stored.entry(i, j), computed.entry(i, j)
        if want != got:
            out.append((name, i, j, want, got))
    return out


def verify_tables() -> dict[str, list[tuple[str, int, int, int, int]]]:
    """Recompute every stored table; the value lists are empty when the
    recomputation reproduces the table entrywise."""
    return {name: table_mismatches(name) for name in sorted(reference_tables())}

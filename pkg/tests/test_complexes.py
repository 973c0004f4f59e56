import pytest
from hypothesis import given, strategies as st

from gammatri.complexes import (
    Complex,
    InvalidComplex,
    all_faces,
    dimension,
    f_polynomial,
    f_vector,
    face_set,
    is_flag,
    is_pure,
    join,
)
from gammatri.poly import Poly1


def cycle(labels):
    n = len(labels)
    return Complex.make(labels, [{labels[i], labels[(i + 1) % n]}
                                 for i in range(n)])


PENTAGON = cycle("abcde")
TRIANGLE = cycle("abc")
POINT = Complex.make("a", [{"a"}])
SIMPLEX3 = Complex.make("abc", [{"a", "b", "c"}])


def test_pentagon_faces():
    assert f_vector(PENTAGON) == (1, 5, 5)
    grouped = all_faces(PENTAGON)
    assert grouped[0] == {frozenset()}
    assert len(grouped[1]) == 5 and len(grouped[2]) == 5


def test_single_vertex():
    assert f_vector(POINT) == (1, 1)


def test_full_simplex_counts():
    assert f_vector(SIMPLEX3) == (1, 3, 3, 1)


def test_f_polynomial_examples():
    assert f_polynomial(PENTAGON) == Poly1({0: 1, 1: 5, 2: 5})
    assert f_polynomial(Complex.trivial()) == Poly1.one()
    assert f_polynomial(TRIANGLE) == Poly1({0: 1, 1: 3, 2: 3})


def test_purity_and_dimension():
    assert is_pure(PENTAGON) and dimension(PENTAGON) == 1
    mixed = Complex.make("abc", [{"a", "b"}, {"c"}])
    assert not is_pure(mixed)
    assert is_pure(SIMPLEX3) and dimension(SIMPLEX3) == 2
    assert dimension(Complex.trivial()) == -1


def test_flagness():
    assert not is_flag(TRIANGLE)  # three pairwise edges, no 2-face
    assert is_flag(PENTAGON)
    assert is_flag(SIMPLEX3)


def test_join_point_point():
    edge = join(POINT, Complex.make("b", [{"b"}]))
    assert f_vector(edge) == (1, 2, 1)


def test_join_zero_spheres_is_4_cycle():
    s0 = Complex.make("ab", [{"a"}, {"b"}])
    s1 = Complex.make("cd", [{"c"}, {"d"}])
    square = join(s0, s1)
    assert f_vector(square) == (1, 4, 4)
    assert is_pure(square) and dimension(square) == 1
    assert {frozenset(("a", "b")), frozenset(("c", "d"))}.isdisjoint(
        set(square.facets))


def test_join_with_trivial_is_identity():
    j = join(PENTAGON, Complex.trivial())
    assert f_polynomial(j) == f_polynomial(PENTAGON)


def test_join_relabels_collisions():
    a = Complex.make("ab", [{"a", "b"}])
    b = Complex.make("ab", [{"a", "b"}])
    j = join(a, b)
    assert len(j.vertices) == 4
    assert f_polynomial(j) == f_polynomial(a) * f_polynomial(b)


FACET_FAMILIES = st.lists(
    st.frozensets(st.sampled_from("abcdef"), min_size=1, max_size=3),
    min_size=1, max_size=5)


def _normalize(facets):
    maximal = [f for f in set(facets)
               if not any(f < g for g in set(facets))]
    verts = sorted(set().union(*maximal))
    return Complex.make(verts, maximal)


@given(FACET_FAMILIES, FACET_FAMILIES)
def test_f_polynomial_multiplicative_under_join(fa, fb):
    a, b = _normalize(fa), _normalize(fb)
    assert f_polynomial(join(a, b)) == f_polynomial(a) * f_polynomial(b)


@given(FACET_FAMILIES)
def test_face_count_is_f_at_one(facets):
    c = _normalize(facets)
    assert len(face_set(c)) == f_polynomial(c).evaluate(1)


GRAPHS = st.lists(
    st.frozensets(st.sampled_from("abcde"), min_size=2, max_size=2),
    max_size=8)


def _clique_complex(edges):
    verts = sorted(set().union(*edges)) if edges else ["a"]
    nbrs = {v: {v} for v in verts}
    for e in edges:
        u, v = sorted(e)
        nbrs[u].add(v)
        nbrs[v].add(u)
    cliques = [frozenset([v]) for v in verts]
    frontier = list(cliques)
    while frontier:
        nxt = []
        for c in frontier:
            for v in verts:
                if v not in c and all(v in nbrs[u] for u in c):
                    bigger = c | {v}
                    if bigger not in nxt:
                        nxt.append(bigger)
        cliques.extend(nxt)
        frontier = nxt
    maximal = [c for c in set(cliques) if not any(c < d for d in set(cliques))]
    return Complex.make(verts, maximal)


@given(GRAPHS, GRAPHS)
def test_flag_preserved_by_join(ea, eb):
    a, b = _clique_complex(ea), _clique_complex(eb)
    assert is_flag(a) and is_flag(b)
    assert is_flag(join(a, b))


def test_loader_round_trip():
    data = PENTAGON.to_dict()
    assert Complex.from_dict(data).facets == PENTAGON.facets


def test_loader_rejects_non_maximal():
    with pytest.raises(InvalidComplex, match="maximal"):
        Complex.from_dict({"vertices": ["a", "b"],
                           "facets": [["a"], ["a", "b"]]})


def test_loader_rejects_unknown_vertices():
    with pytest.raises(InvalidComplex, match="unknown"):
        Complex.from_dict({"vertices": ["a"], "facets": [["a", "b"]]})


def test_loader_rejects_duplicate_vertices():
    with pytest.raises(InvalidComplex, match="duplicate"):
        Complex.make("aa", [{"a"}])


def test_loader_rejects_uncovered_vertices():
    with pytest.raises(InvalidComplex, match="no facet"):
        Complex.make("ab", [{"a"}])

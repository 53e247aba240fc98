import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symvol import ComplexError, Permutation, SimplicialComplex, basis, corpus, face, load_complex
from symvol import vertex_permute
from symvol.symm import cyclic_tau, enumerate_permutations

TRIANGLE = {"vertices": 3, "facets": [[0, 1], [1, 2], [0, 2]], "name": "triangle"}


def test_load_triangle_boundary():
    K = load_complex(TRIANGLE)
    assert K.num_vertices == 3
    assert len(K.faces_of_dim(0)) == 3
    assert len(K.faces_of_dim(1)) == 3
    assert len(K.faces) == 6
    assert K.name == "triangle"


def test_load_full_tetrahedron():
    K = load_complex({"vertices": 4, "facets": [[0, 1, 2, 3]]})
    assert len(K.faces) == 2**4 - 1


def test_torus_face_count_by_enumeration():
    K = corpus.get("torus")
    facets = [tuple(f) for f in K.facets]
    # brute force: every non-empty subset of every facet
    brute = {s for f in facets for k in range(1, 4) for s in itertools.combinations(f, k)}
    assert len(facets) == 14
    assert len(brute) == 42
    assert K.faces == brute
    assert [len(K.faces_of_dim(k)) for k in range(3)] == [7, 21, 14]


def test_load_accepts_yaml_and_json_text():
    text = '{"vertices": 2, "facets": [[0, 1]], "name": "edge"}'
    assert load_complex(text) == load_complex("vertices: 2\nfacets: [[0, 1]]\n")


@pytest.mark.parametrize(
    "doc",
    [
        "not: [valid",
        [1, 2],
        {"vertices": 3},
        {"vertices": 3, "facets": [[0, 3]]},
        {"vertices": 3, "facets": [[]]},
        {"vertices": 3, "facets": [[0, -1]]},
        {"vertices": -1, "facets": []},
        {"vertices": 3, "facets": "01"},
        {"vertices": 2, "facets": [[0, 1.5]]},
    ],
)
def test_load_rejects_malformed(doc):
    with pytest.raises(ComplexError):
        load_complex(doc)


def test_downward_closure_all_corpus():
    for K in corpus.all_complexes().values():
        for f in K.faces:
            for k in range(1, len(f)):
                for g in itertools.combinations(f, k):
                    assert g in K.faces
        for v in K.vertices:
            assert (v,) in K.faces


def test_basis_small_examples():
    K = load_complex(TRIANGLE)
    assert basis(K, 0) == [(0,), (1,), (2,)]
    edge = load_complex({"vertices": 2, "facets": [[0, 1]]})
    assert basis(edge, 2) == list(itertools.product([0, 1], repeat=3))


def test_basis_triangle_dim1_brute_force():
    K = load_complex(TRIANGLE)
    brute = [t for t in itertools.product(range(3), repeat=2) if len(set(t)) == 1 or set(t) in
             [{0, 1}, {1, 2}, {0, 2}]]
    assert basis(K, 1) == sorted(brute)
    assert len(brute) == 9


def surjections(m, k):
    return sum((-1) ** i * comb(k, i) * (k - i) ** m for i in range(k + 1))


@pytest.mark.parametrize("name", corpus.NAMES)
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_basis_size_matches_surjection_count(name, n):
    K = corpus.get(name)
    b = basis(K, n)
    assert len(b) == len(set(b))
    assert b == sorted(b)
    assert len(b) == sum(surjections(n + 1, len(f)) for f in K.faces)
    brute = [t for t in itertools.product(K.vertices, repeat=n + 1) if K.is_face(t)]
    assert b == brute


def test_face_examples():
    assert face((0, 1, 2), 0) == (1, 2)
    assert face((0, 1, 2), 2) == (0, 1)
    assert face((5, 5, 7), 1) == (5, 7)


def test_face_errors():
    with pytest.raises(IndexError):
        face((0, 1, 2), 3)
    with pytest.raises(ValueError):
        face((0,), 0)


def test_vertex_permute_examples():
    assert vertex_permute((0, 1, 2), Permutation((1, 0, 2))) == (1, 0, 2)
    assert vertex_permute((0, 1, 2), Permutation.identity(3)) == (0, 1, 2)
    assert vertex_permute((4, 4, 9), Permutation((2, 0, 1))) == (9, 4, 4)
    with pytest.raises(ValueError):
        vertex_permute((0, 1), Permutation((0, 1, 2)))


def test_permutation_validation_and_sign():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    assert Permutation((1, 0)).sign == -1
    assert Permutation((1, 2, 0)).sign == 1


@given(st.permutations(list(range(6))))
def test_sign_is_inversion_parity(images):
    inversions = sum(1 for i, j in itertools.combinations(range(6), 2) if images[i] > images[j])
    assert Permutation(tuple(images)).sign == (-1) ** inversions


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_face_after_permute_is_zeroth_face_after_tau(n):
    """Deleting slot j after permuting by pi equals permuting by pi o tau_j and deleting slot 0."""
    for t in itertools.product(range(3), repeat=n + 1):
        for pi in enumerate_permutations(n):
            for j in range(n + 1):
                lhs = face(vertex_permute(t, pi), j)
                rhs = face(vertex_permute(t, pi.compose(cyclic_tau(j, n))), 0)
                assert lhs == rhs


def test_complex_is_hashable_value():
    a = SimplicialComplex.from_facets(3, [[0, 1], [1, 2]], name="a")
    b = SimplicialComplex.from_facets(3, [[1, 2], [1, 0]], name="b")
    assert a == b and hash(a) == hash(b)
    assert a.facets == [(0, 1), (1, 2)]

"""Order complexes and reduced rational homology."""

import random
from itertools import combinations

import pytest

from invar import (
    BettiVector,
    FinitePoset,
    InputError,
    SimplicialComplex,
    boundary_matrix,
    cone,
    order_complex,
    reduced_betti,
)


def boolean_coordinate_poset(n):
    """Poset of coordinate subspaces of C^n ordered by inclusion.

    Elements are frozensets S of vanishing coordinates (the flat x_i = 0 for
    i in S); bigger S means smaller subspace.  Includes bottom (all
    coordinates vanish: the origin) and top (none: the ambient space).
    """
    elements = []
    for k in range(n + 1):
        elements.extend(frozenset(c) for c in combinations(range(n), k))
    elements = sorted(elements, key=lambda s: (len(s), sorted(s)))
    ids = {s: i for i, s in enumerate(elements)}
    pairs = [
        (ids[a], ids[b])
        for a in elements
        for b in elements
        if b < a  # strictly fewer vanishing coordinates: strictly bigger flat
    ]
    bottom = ids[frozenset(range(n))]
    top = ids[frozenset()]
    return FinitePoset(list(ids.values()), pairs), bottom, top


def random_complex(rng: random.Random) -> SimplicialComplex:
    nverts = rng.randint(0, 7)
    verts = list(range(nverts))
    faces = []
    for _ in range(rng.randint(0, 6)):
        size = rng.randint(1, min(4, max(1, nverts)))
        if nverts:
            faces.append(rng.sample(verts, size))
    return SimplicialComplex(verts, faces)


class TestOrderComplex:
    def test_hexagon_interval(self):
        # oracle: chains between origin and ambient in C^3 enumerated by hand.
        # interior elements: 3 lines and 3 planes; each line lies in exactly
        # two planes, so the comparability graph is a 6-cycle with no
        # 2-chains of length 3.
        poset, bottom, top = boolean_coordinate_poset(3)
        k = order_complex(poset, bottom, top)
        assert len(k.vertices) == 6
        assert len(k.k_simplices(1)) == 6
        assert k.k_simplices(2) == []
        assert reduced_betti(k) == BettiVector([0, 0, 1])

    def test_empty_interior(self):
        poset = FinitePoset([0, 1], [(0, 1)])
        k = order_complex(poset, 0, 1)
        assert k.is_empty()
        assert reduced_betti(k) == BettiVector([1])

    def test_antichain_gives_isolated_vertices(self):
        elements = [0, 1, 2, 3, 4]  # bottom 0, top 4, middle antichain 1,2,3
        pairs = [(0, x) for x in (1, 2, 3, 4)] + [(x, 4) for x in (1, 2, 3)]
        poset = FinitePoset(elements, pairs)
        k = order_complex(poset, 0, 4)
        assert len(k.vertices) == 3
        assert k.k_simplices(1) == []
        assert reduced_betti(k)[0] == 2

    def test_unknown_ids(self):
        poset = FinitePoset([0, 1], [(0, 1)])
        with pytest.raises(InputError):
            order_complex(poset, 0, 99)


class TestPosetValidation:
    def test_duplicate_elements(self):
        with pytest.raises(InputError):
            FinitePoset([0, 0], [])

    def test_cycle_rejected(self):
        with pytest.raises(InputError):
            FinitePoset([0, 1], [(0, 1), (1, 0)])

    def test_unknown_relation_member(self):
        with pytest.raises(InputError):
            FinitePoset([0], [(0, 5)])

    def test_transitive_closure(self):
        poset = FinitePoset([0, 1, 2], [(0, 1), (1, 2)])
        assert poset.less_than(0, 2)


class TestReducedBetti:
    def test_empty_complex(self):
        assert reduced_betti(SimplicialComplex.empty())[-1] == 1

    def test_two_points(self):
        k = SimplicialComplex([0, 1], [])
        b = reduced_betti(k)
        assert b[-1] == 0 and b[0] == 1

    def test_hexagon_cycle(self):
        edges = [(i, (i + 1) % 6) for i in range(6)]
        k = SimplicialComplex(range(6), edges)
        b = reduced_betti(k)
        assert b[0] == 0 and b[1] == 1

    def test_boundary_of_tetrahedron(self):
        faces = list(combinations(range(4), 3))
        k = SimplicialComplex(range(4), faces)
        b = reduced_betti(k)
        assert (b[0], b[1], b[2]) == (0, 0, 1)

    def test_seven_vertex_torus(self):
        # closed-surface oracle: faces (i,i+1,i+3) and (i,i+2,i+3) mod 7
        # triangulate the torus (checked: 14 faces, 21 edges, every edge in
        # exactly two faces, Euler characteristic 0)
        faces = []
        for i in range(7):
            faces.append([i, (i + 1) % 7, (i + 3) % 7])
            faces.append([i, (i + 2) % 7, (i + 3) % 7])
        b = reduced_betti(SimplicialComplex(range(7), faces))
        assert (b[0], b[1], b[2]) == (0, 2, 1)

    def test_six_vertex_projective_plane_rational(self):
        # antipodal icosahedron quotient; its homology is pure 2-torsion,
        # invisible with rational coefficients
        faces = [
            (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
            (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
        ]
        b = reduced_betti(SimplicialComplex(range(1, 7), faces))
        assert all(b[deg] == 0 for deg in range(-1, 3))

    def test_disjoint_union_counts_components(self, rng):
        for _ in range(10):
            m = rng.randint(1, 5)
            verts, faces = [], []
            offset = 0
            for _ in range(m):
                size = rng.randint(1, 3)
                vs = list(range(offset, offset + size))
                verts.extend(vs)
                faces.append(vs)  # a simplex is connected
                offset += size
            k = SimplicialComplex(verts, faces)
            assert reduced_betti(k)[0] == m - 1

    def test_boundary_squares_to_zero(self, rng):
        for _ in range(20):
            k = random_complex(rng)
            for deg in range(1, k.dim() + 1):
                low = boundary_matrix(k, deg - 1)
                high = boundary_matrix(k, deg)
                prod_rows = [
                    [
                        sum(low.entry(i, t) * high.entry(t, j) for t in range(high.nrows))
                        for j in range(high.ncols)
                    ]
                    for i in range(low.nrows)
                ]
                assert all(all(x == 0 for x in row) for row in prod_rows)


class TestHomologyInvariants:
    def test_euler_poincare(self, rng):
        for _ in range(50):
            k = random_complex(rng)
            betti = reduced_betti(k)
            assert (
                betti.euler_characteristic_reduced()
                == k.euler_characteristic_reduced()
            )

    def test_cone_is_acyclic(self, rng):
        for _ in range(50):
            k = random_complex(rng)
            coned = cone(k, "apex")
            b = reduced_betti(coned)
            assert all(b[deg] == 0 for deg in range(-1, b.max_degree() + 1))

    def test_cone_needs_fresh_apex(self):
        k = SimplicialComplex([0], [])
        with pytest.raises(InputError):
            cone(k, 0)


class TestSimplicialComplex:
    def test_downward_closure(self):
        k = SimplicialComplex([0, 1, 2], [[0, 1, 2]])
        assert frozenset([0, 1]) in k.simplices
        assert frozenset() in k.simplices

    def test_unknown_vertices_rejected(self):
        with pytest.raises(InputError):
            SimplicialComplex([0], [[0, 1]])

    def test_betti_vector_padding(self):
        b = BettiVector([0, 1, 0, 0])
        assert b.values == (0, 1)
        assert b[5] == 0

import random

import pytest

import oracles
from randgen import random_complex, random_subcomplex
from ordertop.complexes import (
    ComplexError,
    PointedComplex,
    SimplicialComplex,
    cone,
    cyclic_polytope_boundary,
    empty_complex,
    format_cplx,
    is_pseudomanifold,
    join,
    parse_cplx,
    point_complex,
    quotient_model,
    sphere_complex,
    suspension,
    wedge,
)
from ordertop.homology import reduced_homology


def betti(K, coeff="Z"):
    return reduced_homology(K, coeff).betti


class TestValues:
    def test_empty_vs_point_distinct(self):
        assert empty_complex() != point_complex()
        assert empty_complex().is_empty
        assert empty_complex().dim == -1
        assert point_complex().dim == 0

    def test_facets_normalized(self):
        K = SimplicialComplex([["a"], ["a", "b"], ["b", "a"]])
        assert K.facets == {frozenset(["a", "b"])}

    def test_isolated_vertex_kept(self):
        K = SimplicialComplex([["a", "b"]], vertices=["c"])
        assert frozenset(["c"]) in K.facets

    def test_euler_reduced(self):
        assert empty_complex().euler_reduced() == -1
        assert point_complex().euler_reduced() == 0
        assert sphere_complex(1).euler_reduced() == -1
        assert sphere_complex(2).euler_reduced() == 1


class TestJoin:
    def test_s0_join_s0_is_circle(self):
        K = join(sphere_complex(0), sphere_complex(0))
        assert len(K.vertices) == 4
        assert betti(K) == oracles.brute_betti(K.facets) == {1: 1}

    def test_join_with_point_is_acyclic(self):
        K = join(sphere_complex(1), point_complex())
        assert reduced_homology(K).is_acyclic

    def test_join_with_empty_is_identity(self):
        K = sphere_complex(1)
        assert join(K, empty_complex()) == K
        assert join(empty_complex(), K) == K

    def test_tags_keep_sides_disjoint(self):
        K = join(point_complex("x"), point_complex("x"))
        assert K.vertices == ("l.x", "r.x")

    @pytest.mark.parametrize("seed", range(8))
    def test_join_kunneth_mod2(self, seed):
        rng = random.Random(seed)
        K, L = random_complex(rng, 6, 4, 3), random_complex(rng, 6, 4, 3)
        bk = reduced_homology(K, "z2")
        bl = reduced_homology(L, "z2")
        bj = reduced_homology(join(K, L), "z2")
        degrees = range(-1, K.dim + L.dim + 2)
        for k in degrees:
            expected = sum(
                bk.betti_number(i) * bl.betti_number(k - 1 - i) for i in range(-1, k + 1)
            )
            assert bj.betti_number(k) == expected


class TestSuspension:
    def test_suspend_s0_is_circle(self):
        assert betti(suspension(sphere_complex(0))) == {1: 1}

    def test_suspend_empty_is_s0(self):
        K = suspension(empty_complex())
        assert betti(K) == {0: 1}
        assert len(K.vertices) == 2

    def test_suspend_point_contractible(self):
        assert reduced_homology(suspension(point_complex())).is_acyclic

    @pytest.mark.parametrize("seed", range(8))
    def test_degree_shift(self, seed):
        K = random_complex(random.Random(40 + seed))
        before = reduced_homology(K)
        after = reduced_homology(suspension(K))
        assert after.betti == {k + 1: b for k, b in before.betti.items()}
        assert after.torsion == {k + 1: t for k, t in before.torsion.items()}


class TestWedge:
    def test_two_circles(self):
        parts = [
            PointedComplex(sphere_complex(1), "s0"),
            PointedComplex(sphere_complex(1), "s0"),
        ]
        W = wedge(parts)
        assert betti(W.complex) == {1: 2}
        assert W.basepoint in W.complex.vertices

    def test_single_part_unchanged(self):
        p = PointedComplex(sphere_complex(1), "s1")
        assert wedge([p]) == p

    def test_three_s0(self):
        parts = [PointedComplex(sphere_complex(0), "s0") for _ in range(3)]
        W = wedge(parts).complex
        assert len(W.vertices) == 4
        assert betti(W) == {0: 3}

    def test_empty_part_rejected(self):
        with pytest.raises(ComplexError, match="basepoint"):
            PointedComplex(empty_complex(), "x")

    @pytest.mark.parametrize("seed", range(6))
    def test_homology_adds(self, seed):
        rng = random.Random(70 + seed)
        ks = [random_complex(rng, 5, 3, 3) for _ in range(3)]
        parts = [PointedComplex(K, K.vertices[0]) for K in ks]
        total = reduced_homology(wedge(parts).complex)
        summed = {}
        for K in ks:
            for k, b in reduced_homology(K).betti.items():
                if k >= 0:
                    summed[k] = summed.get(k, 0) + b
        # wedging connects components, so degree-0 classes just add
        assert total.betti == {k: b for k, b in summed.items() if b}


class TestQuotientModel:
    def test_disc_mod_boundary_is_sphere(self):
        disc = SimplicialComplex([["a", "b", "c"]])
        boundary = SimplicialComplex([["a", "b"], ["b", "c"], ["a", "c"]])
        assert betti(quotient_model(disc, boundary)) == {2: 1}

    def test_collapse_everything_is_acyclic(self):
        K = sphere_complex(1)
        assert reduced_homology(quotient_model(K, K)).is_acyclic

    def test_hexagon_mod_alternating_vertices(self):
        hexagon = SimplicialComplex(
            [["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["5", "6"], ["1", "6"]]
        )
        dots = SimplicialComplex([["1"], ["3"], ["5"]])
        Q = quotient_model(hexagon, dots)
        assert Q.euler_reduced() == -3
        assert betti(Q) == {1: 3}

    def test_empty_subcomplex_adds_point(self):
        K = sphere_complex(1)
        Q = quotient_model(K, empty_complex())
        assert betti(Q) == {0: 1, 1: 1}

    def test_not_subcomplex_rejected(self):
        with pytest.raises(ComplexError, match="subcomplex"):
            quotient_model(sphere_complex(1), point_complex("zzz"))

    @pytest.mark.parametrize("seed", range(8))
    def test_euler_difference(self, seed):
        rng = random.Random(90 + seed)
        K = random_complex(rng)
        A = random_subcomplex(rng, K)
        Q = quotient_model(K, A)
        assert Q.euler_reduced() == K.euler_reduced() - A.euler_reduced()


class TestCyclicPolytope:
    def test_square(self):
        K = cyclic_polytope_boundary(4, 2)
        assert {tuple(sorted(f)) for f in K.facets} == {
            ("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")
        }

    def test_6_4(self):
        K = cyclic_polytope_boundary(6, 4)
        assert len(K.facets) == 9
        assert betti(K) == {3: 1}
        assert not reduced_homology(K).torsion

    def test_simplex_boundary(self):
        K = cyclic_polytope_boundary(5, 4)
        assert len(K.facets) == 5
        assert betti(K) == {3: 1}

    def test_parameter_errors(self):
        with pytest.raises(ComplexError, match="even"):
            cyclic_polytope_boundary(7, 3)
        with pytest.raises(ComplexError, match="vertices"):
            cyclic_polytope_boundary(4, 4)

    @pytest.mark.parametrize("m,d", [(4, 2), (6, 2), (6, 4), (8, 4), (8, 6)])
    def test_pseudomanifold_and_euler(self, m, d):
        K = cyclic_polytope_boundary(m, d)
        assert is_pseudomanifold(K)
        # unreduced Euler characteristic of an odd sphere vanishes
        assert K.euler_reduced() + 1 == 0


class TestCone:
    def test_cone_over_empty_is_point(self):
        assert cone(empty_complex()) == point_complex("apex")

    def test_cone_acyclic(self):
        assert reduced_homology(cone(sphere_complex(1))).is_acyclic

    def test_apex_freshened(self):
        K = point_complex("apex")
        assert "apex'" in cone(K).vertices


class TestCplxFormat:
    def test_parse_basic(self):
        K = parse_cplx("# comment\na b c\nd\n")
        assert K.facets == {frozenset(["a", "b", "c"]), frozenset(["d"])}

    def test_empty_file(self):
        assert parse_cplx("").is_empty

    def test_roundtrip(self):
        for seed in range(5):
            K = random_complex(random.Random(seed))
            assert parse_cplx(format_cplx(K)) == K

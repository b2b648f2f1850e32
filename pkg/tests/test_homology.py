import random

import numpy as np
import pytest
from hypothesis import given, settings

from qcomplex import (
    betti_profile,
    check_basic_hole_properties,
    delta_sphere,
    euler_characteristic,
    from_facets,
    hodge_betti,
    integer_rank,
    is_basic_hole,
    rhombic,
    signed_boundary,
    tent_plus_common_edge,
    tented,
)
from qcomplex.errors import NotBasicHole, NotPure, SpectrumAmbiguous

from conftest import mixed_complexes, pure2_complexes
from test_chains import fraction_rank


class TestIntegerRank:
    def test_against_fraction_oracle(self):
        rng = random.Random(11)
        for _ in range(60):
            m = rng.randint(1, 7)
            n = rng.randint(1, 7)
            M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
            assert integer_rank(np.array(M)) == fraction_rank(M)

    def test_big_entries_fall_back_exactly(self):
        # entries above the int64 guard engage the arbitrary-precision path
        big = 1 << 40
        assert integer_rank(np.array([[big, 1], [1, big]], dtype=np.int64)) == 2
        assert integer_rank(np.array([[big, big], [big, big]],
                                     dtype=np.int64)) == 1

    def test_zero_matrix(self):
        assert integer_rank(np.zeros((3, 4), dtype=np.int64)) == 0


class TestBettiProfile:
    def test_delta_sphere(self):
        assert betti_profile(delta_sphere(2)).betti == (1, 0, 1)

    def test_rhombic_sphere(self):
        assert betti_profile(rhombic(2)).betti == (1, 0, 1)

    def test_tent_is_hole_free(self):
        for n in (4, 6, 9):
            assert betti_profile(tented(n, 2)).betti == (1, 0, 0)

    @pytest.mark.parametrize("n,t", [(6, 1), (6, 2), (8, 3), (12, 5)])
    def test_tent_plus_common_edge(self, n, t):
        assert betti_profile(tent_plus_common_edge(n, t)).betti == (1, 0, t)

    def test_two_components(self, two_triangles):
        assert betti_profile(two_triangles).betti == (2, 0, 0)

    def test_rank_of_boundary_vs_oracle(self, delta4):
        profile = betti_profile(delta4)
        assert profile.ranks == (0, 3, 3)
        assert fraction_rank(signed_boundary(delta4, 2).toarray()) == 3

    @given(mixed_complexes())
    @settings(max_examples=30, deadline=None)
    def test_euler_identity_exact(self, K):
        profile = betti_profile(K)
        chi = euler_characteristic(K)
        assert chi == profile.euler
        assert chi == sum((-1) ** i * b for i, b in enumerate(profile.betti))

    @given(pure2_complexes())
    @settings(max_examples=30, deadline=None)
    def test_beta2_is_corank_of_top_boundary(self, K):
        profile = betti_profile(K)
        rank2 = fraction_rank(signed_boundary(K, 2).toarray())
        assert profile.betti[2] == K.n_faces(2) - rank2


class TestEulerCharacteristic:
    def test_delta4(self, delta4):
        assert euler_characteristic(delta4) == 4 - 6 + 4 == 2

    def test_single_triangle(self, triangle):
        assert euler_characteristic(triangle) == 3 - 3 + 1 == 1

    def test_tent_plus_two(self):
        K = tent_plus_common_edge(6, 2)
        assert (K.n_faces(0), K.n_faces(1), K.n_faces(2)) == (6, 15, 12)
        assert euler_characteristic(K) == 3
        assert sum((-1) ** i * b
                   for i, b in enumerate(betti_profile(K).betti)) == 3


class TestHodgeBetti:
    def test_delta4_top(self, delta4):
        assert hodge_betti(delta4, 2) == 1

    def test_tent_middle(self):
        assert hodge_betti(tented(6, 2), 1) == 0

    def test_triangle_connected(self, triangle):
        assert hodge_betti(triangle, 0) == 1

    def test_guard_band(self, triangle):
        with pytest.raises(SpectrumAmbiguous):
            hodge_betti(triangle, 1, zero_tol=1.0)

    @given(mixed_complexes(max_n=5))
    @settings(max_examples=25, deadline=None)
    def test_matches_exact_profile(self, K):
        profile = betti_profile(K)
        for i in range(K.dim + 1):
            assert hodge_betti(K, i) == profile.betti[i]


def naive_deletion_check(K):
    """Oracle for is_basic_hole: recompute the Betti number per deletion."""
    r = K.dim
    if betti_profile(K).betti[r] != 1:
        return False
    A = signed_boundary(K, r).toarray()
    for j in range(A.shape[1]):
        sub = np.delete(A, j, axis=1)
        beta = sub.shape[1] - fraction_rank(sub)
        if beta != 0:
            return False
    return True


class TestBasicHoles:
    def test_delta_sphere_is_basic(self):
        assert is_basic_hole(delta_sphere(2))

    def test_rhombic_is_basic(self):
        assert is_basic_hole(rhombic(2))

    def test_tent_is_not(self):
        assert not is_basic_hole(tented(5, 2))

    def test_circle_is_basic_in_dim_one(self):
        assert is_basic_hole(delta_sphere(1))

    def test_not_pure_rejected(self):
        K = from_facets(4, [(0, 1, 2), (2, 3)])
        with pytest.raises(NotPure):
            is_basic_hole(K)

    @given(pure2_complexes(max_n=5, max_facets=8))
    @settings(max_examples=25, deadline=None)
    def test_matches_naive_deletion_oracle(self, K):
        assert is_basic_hole(K) == naive_deletion_check(K)

    def test_bigger_sphere_with_redundant_face_is_not_basic(self):
        # delta_sphere(2) plus nothing is basic; gluing one extra facet
        # onto a sphere of its own keeps beta_2 = 1 but adds removable faces
        K = from_facets(5, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
                            (1, 2, 4)])
        assert betti_profile(K).betti[2] == 1
        assert not is_basic_hole(K)
        assert naive_deletion_check(K) is False


class TestBasicHoleProperties:
    def test_delta_sphere_all_pass(self):
        rep = check_basic_hole_properties(delta_sphere(2))
        assert rep.path_connected and rep.min_degree_two
        assert rep.deletion_path_connected and rep.all_pass

    def test_rhombic_all_pass(self):
        assert check_basic_hole_properties(rhombic(2)).all_pass

    def test_dim_one_circle(self):
        assert check_basic_hole_properties(delta_sphere(1)).all_pass

    def test_non_hole_rejected(self):
        with pytest.raises(NotBasicHole):
            check_basic_hole_properties(tented(5, 2))

import pytest

from swtvc import (
    BadDeltaError,
    NotAStarError,
    build_graph,
    exact_solve,
    star_acov_solve,
    star_sc_solve,
    validate_cover,
    worst_case_sc_instance,
)

from conftest import random_star_graph


class TestStarSc:
    def test_periodic_family_all_centers(self, periodic_worst_case):
        cover = star_sc_solve(periodic_worst_case, 3)
        assert cover == {(0, t) for t in range(1, 7)}

    def test_static_star_realizes_ratio(self):
        g = worst_case_sc_instance(2)  # T=3, one edge active everywhere
        cover = star_sc_solve(g, 2)
        assert len(cover) == 3
        assert len(exact_solve(g, 2)) == 1

    def test_empty_graph(self):
        assert star_sc_solve(build_graph(3, 4, []), 2) == set()

    def test_valid_for_every_delta(self):
        g = random_star_graph(5, n=10, T=10, d=4, empty_prob=0.2)
        cover = star_sc_solve(g, 1)
        for delta in range(1, g.T + 1):
            assert validate_cover(g, delta, cover) is None

    def test_rejects_non_star(self, example_graph):
        with pytest.raises(NotAStarError):
            star_sc_solve(example_graph, 2)


class TestStarAcov:
    def test_periodic_family_output(self, periodic_worst_case):
        cover = star_acov_solve(periodic_worst_case, 3)
        assert cover == {(0, 2), (0, 3), (0, 5), (0, 6)}

    def test_static_star_matches_optimum(self):
        g = build_graph(2, 4, [(0, 1, [1, 2, 3, 4])])
        cover = star_acov_solve(g, 2)
        assert cover == {(0, 2), (0, 4)}
        assert len(exact_solve(g, 2)) == 2

    def test_delta_one_equals_sc(self):
        for seed in range(8):
            g = random_star_graph(seed, n=8, T=8, d=3, empty_prob=0.25)
            assert star_acov_solve(g, 1) == star_sc_solve(g, 1)

    def test_contained_in_sc(self):
        for seed in range(10):
            g = random_star_graph(seed, n=10, T=12, d=4)
            for delta in (1, 2, 3, 5):
                assert star_acov_solve(g, delta) <= star_sc_solve(g, delta)

    def test_validity_across_deltas(self):
        for seed in range(10):
            g = random_star_graph(seed, n=12, T=10, d=5, empty_prob=0.15)
            for delta in range(1, g.T + 1):
                cover = star_acov_solve(g, delta)
                assert validate_cover(g, delta, cover) is None

    def test_at_most_one_appearance_per_step(self):
        for seed in range(6):
            g = random_star_graph(seed, n=9, T=10, d=4)
            for delta in (2, 3, 4):
                for cover in (star_sc_solve(g, delta), star_acov_solve(g, delta)):
                    times = [t for _, t in cover]
                    assert len(times) == len(set(times))

    def test_rejects_non_star(self, example_graph):
        with pytest.raises(NotAStarError):
            star_acov_solve(example_graph, 2)

    def test_bad_delta(self, periodic_worst_case):
        with pytest.raises(BadDeltaError):
            star_acov_solve(periodic_worst_case, 0)
        with pytest.raises(BadDeltaError):
            star_acov_solve(periodic_worst_case, 7)

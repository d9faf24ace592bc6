"""
Тесты точного поиска минимального блокирующего множества
"""

import pytest
from itertools import combinations

from bounds import lower_bound_ceil, phi3
from construct_d import predicted_size
from core import Family
from search import (
    BudgetExceeded, MinBlockingSearch, SearchResult, TooLarge,
    greedy_upper, min_blocking, start_bound,
)
from verify import verify_enumerate


def _star(n, d):
    return Family.from_edges(n, d, [(0,) + rest for rest in combinations(range(1, n), d - 1)])


class TestGreedy:
    """Тесты жадной оценки"""

    @pytest.mark.unit
    def test_small(self):
        assert len(greedy_upper(4, 3)) <= 4
        assert len(greedy_upper(6, 3)) <= 10
        assert len(greedy_upper(5, 5)) == 1

    @pytest.mark.unit
    def test_blocking(self):
        for n, d in [(5, 3), (6, 4), (7, 2)]:
            assert verify_enumerate(greedy_upper(n, d)).blocking


class TestMinBlocking:
    """Тесты min_blocking"""

    @pytest.mark.unit
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_d3_matches_formula(self, n):
        result = min_blocking(n, 3)
        assert result.proved_optimal
        assert result.optimum == phi3(n)
        assert len(result.witness_family) == result.optimum
        assert verify_enumerate(result.witness_family).blocking

    @pytest.mark.slow
    @pytest.mark.integration
    def test_d3_n7(self):
        result = min_blocking(7, 3)
        assert result.proved_optimal
        assert result.optimum == 12

    @pytest.mark.unit
    def test_d4_n5(self):
        result = min_blocking(5, 4)
        assert result.optimum == 4
        assert result.lower_bound == 4

    @pytest.mark.unit
    @pytest.mark.parametrize("n", range(2, 9))
    def test_d2_is_n_minus_one(self, n):
        assert min_blocking(n, 2).optimum == n - 1

    @pytest.mark.unit
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_single_partition(self, d):
        assert min_blocking(d, d).optimum == 1

    @pytest.mark.unit
    def test_between_bounds(self):
        for n, d in [(5, 3), (6, 3), (5, 4), (6, 4), (6, 5)]:
            result = min_blocking(n, d)
            assert start_bound(n, d) <= result.optimum <= predicted_size(d, n)
            if d >= 3:
                assert lower_bound_ceil(d, n) <= result.optimum

    @pytest.mark.unit
    @pytest.mark.parametrize("n,d", [(4, 3), (5, 3), (5, 4)])
    def test_optimality_audit(self, n, d):
        """На размере optimum-1 повторный поиск с 10-кратным лимитом ничего не находит"""
        result = min_blocking(n, d)
        assert result.proved_optimal
        audit = MinBlockingSearch(n, d)
        budget = 10 * max(result.nodes_expanded, 10)
        assert audit.feasible_at(result.optimum - 1, max_nodes=budget) is None

    @pytest.mark.unit
    def test_too_large(self):
        with pytest.raises(TooLarge):
            min_blocking(9, 4)
        with pytest.raises(TooLarge):
            MinBlockingSearch(6, 3, max_tuples=10)

    @pytest.mark.unit
    def test_budget_exhausted(self, mocker):
        """При исчерпании лимита возвращается звезда без доказательства"""
        mocker.patch('search.greedy_upper', side_effect=_star)
        result = min_blocking(6, 3, budget=1)
        assert isinstance(result, SearchResult)
        assert result.proved_optimal is False
        assert result.optimum == 10
        assert result.to_dict()['witness_family'][0] == [0, 1, 2]

    @pytest.mark.unit
    def test_feasible_at_budget(self):
        search = MinBlockingSearch(6, 3)
        with pytest.raises(BudgetExceeded):
            search.feasible_at(8, max_nodes=1)

    @pytest.mark.unit
    def test_result_dict(self):
        payload = min_blocking(4, 3).to_dict()
        assert payload['optimum'] == 3
        assert payload['proved_optimal'] is True
        assert len(payload['witness_family']) == 3

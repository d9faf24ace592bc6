"""
Unit-тесты для модуля core.py
"""

import pytest
import random
from itertools import combinations, permutations

from core import (
    Family, DuplicateVertex, OutOfRange, InvalidArity, BlockingSetError,
    canonicalize_tuple, stirling2, enumerate_partitions, canonicalize_labeling,
    labeling_from_parts, partition_parts, blocks_partition, family_blocks,
    complement_family, random_family,
)


class TestTuples:
    """Тесты канонизации кортежей и семейств"""

    @pytest.mark.unit
    def test_canonicalize_sorts(self):
        assert canonicalize_tuple([4, 1, 2], 5) == (1, 2, 4)

    @pytest.mark.unit
    def test_canonicalize_duplicate(self):
        """Повтор вершины - ошибка DuplicateVertex"""
        with pytest.raises(DuplicateVertex):
            canonicalize_tuple([1, 1, 2], 5)

    @pytest.mark.unit
    def test_canonicalize_out_of_range(self):
        with pytest.raises(OutOfRange):
            canonicalize_tuple([0, 1, 5], 5)
        with pytest.raises(OutOfRange):
            canonicalize_tuple([-1, 1, 2], 5)

    @pytest.mark.unit
    def test_family_sorts_and_dedups(self):
        """Семейство хранит кортежи без повторов в лексикографическом порядке"""
        f = Family.from_edges(5, 3, [(3, 2, 1), (0, 1, 2), (1, 2, 3)])
        assert f.edges == ((0, 1, 2), (1, 2, 3))
        assert len(f) == 2
        assert (2, 1, 0) in f
        assert (0, 1, 4) not in f

    @pytest.mark.unit
    def test_family_wrong_length(self):
        with pytest.raises(InvalidArity):
            Family.from_edges(5, 3, [(0, 1)])

    @pytest.mark.unit
    def test_family_degrees_and_edits(self):
        f = Family.from_edges(4, 2, [(0, 1), (0, 2)])
        assert f.degree(0) == 2
        assert f.degrees() == [2, 1, 1, 0]
        g = f.with_edge((3, 0)).without_edge((0, 1))
        assert g.edges == ((0, 2), (0, 3))
        # исходное семейство не меняется
        assert f.edges == ((0, 1), (0, 2))


class TestPartitions:
    """Тесты перебора разбиений"""

    @pytest.mark.unit
    def test_stirling_values(self):
        assert stirling2(4, 3) == 6
        assert stirling2(7, 3) == 301
        assert stirling2(5, 5) == 1
        assert stirling2(5, 0) == 0
        assert stirling2(3, 4) == 0

    @pytest.mark.unit
    def test_stirling_grid(self):
        """Число разбиений равно S(n, d) при всех 1 <= d <= n <= 10"""
        table = {(0, 0): 1}
        for n in range(1, 11):
            for d in range(0, n + 1):
                table[(n, d)] = d * table.get((n - 1, d), 0) + table.get((n - 1, d - 1), 0)
        for n in range(1, 11):
            for d in range(1, n + 1):
                assert stirling2(n, d) == table[(n, d)], (n, d)
                assert sum(1 for _ in enumerate_partitions(n, d)) == table[(n, d)], (n, d)

    @pytest.mark.unit
    @pytest.mark.parametrize("n,d", [(1, 1), (4, 1), (4, 3), (6, 3), (7, 4), (8, 2), (6, 6)])
    def test_enumeration_count_and_order(self, n, d):
        """S(n, d) различных разбиений в лексикографическом порядке"""
        partitions = list(enumerate_partitions(n, d))
        assert len(partitions) == stirling2(n, d)
        assert partitions == sorted(set(partitions))
        for p in partitions:
            assert p[0] == 0
            assert len(set(p)) == d
            assert canonicalize_labeling(p) == p

    @pytest.mark.unit
    def test_enumeration_n4_d3(self):
        assert list(enumerate_partitions(4, 3)) == [
            (0, 0, 1, 2), (0, 1, 0, 2), (0, 1, 1, 2),
            (0, 1, 2, 0), (0, 1, 2, 1), (0, 1, 2, 2),
        ]

    @pytest.mark.unit
    def test_enumeration_invalid(self):
        with pytest.raises(InvalidArity):
            list(enumerate_partitions(3, 4))
        with pytest.raises(InvalidArity):
            list(enumerate_partitions(3, 0))

    @pytest.mark.unit
    def test_canonicalize_labeling(self):
        assert canonicalize_labeling([2, 2, 0, 1, 0]) == (0, 0, 1, 2, 1)

    @pytest.mark.unit
    def test_labeling_from_parts(self):
        assert labeling_from_parts([[3], [0, 2], [1]], 4) == (0, 1, 0, 2)
        assert partition_parts((0, 1, 0, 2)) == [[0, 2], [1], [3]]

    @pytest.mark.unit
    def test_labeling_from_parts_errors(self):
        with pytest.raises(DuplicateVertex):
            labeling_from_parts([[0, 1], [1, 2]], 3)
        with pytest.raises(InvalidArity):
            labeling_from_parts([[0], [1]], 3)
        with pytest.raises(OutOfRange):
            labeling_from_parts([[0], [1, 7]], 3)


class TestBlocking:
    """Тесты предиката блокирования"""

    @pytest.mark.unit
    def test_blocks_partition(self):
        assert blocks_partition((0, 1, 3), (0, 0, 1, 2)) is False
        assert blocks_partition((0, 2, 3), (0, 0, 1, 2)) is True

    @pytest.mark.unit
    def test_family_blocks_returns_first(self):
        f = Family.from_edges(4, 3, [(1, 2, 3), (0, 2, 3)])
        assert family_blocks(f, (0, 0, 1, 2)) == (0, 2, 3)
        assert family_blocks(f, (0, 1, 2, 2)) is None

    @pytest.mark.unit
    def test_relabeling_invariance(self):
        """Переименование частей не меняет ни каноническую разметку, ни радужность"""
        tuples = list(combinations(range(6), 3))
        for p in enumerate_partitions(6, 3):
            for perm in permutations(range(3)):
                relabeled = tuple(perm[label] for label in p)
                assert canonicalize_labeling(relabeled) == p
                for t in tuples:
                    assert blocks_partition(t, relabeled) == blocks_partition(t, p)

    @pytest.mark.unit
    def test_family_blocks_matches_any(self):
        """family_blocks возвращает кортеж ровно тогда, когда какой-то кортеж радужный"""
        rng = random.Random(7)
        for _ in range(30):
            f = random_family(6, 3, rng.uniform(0.05, 0.5), rng)
            for p in enumerate_partitions(6, 3):
                found = family_blocks(f, p)
                assert (found is not None) == any(blocks_partition(t, p) for t in f.edges)
                if found is not None:
                    assert found in f and blocks_partition(found, p)

    @pytest.mark.unit
    def test_complement(self):
        f = Family.from_edges(4, 3, [(0, 1, 2)])
        comp = complement_family(f)
        assert comp.edges == ((0, 1, 3), (0, 2, 3), (1, 2, 3))
        assert len(complement_family(comp)) == 1

    @pytest.mark.unit
    def test_random_family_deterministic(self, rng):
        a = random_family(7, 3, 0.4, random.Random(5))
        b = random_family(7, 3, 0.4, random.Random(5))
        assert a == b
        assert random_family(6, 3, 0.0, rng).edges == ()
        assert len(random_family(6, 3, 1.0, rng)) == len(list(combinations(range(6), 3)))

    @pytest.mark.unit
    def test_random_family_bad_density(self, rng):
        with pytest.raises(BlockingSetError):
            random_family(5, 3, 1.5, rng)

"""
Точный поиск минимального d-блокирующего множества (ветви и границы с
итеративным углублением) и жадная верхняя оценка
"""

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from bounds import lower_bound_ceil
from config import SEARCH_MAX_PARTITIONS, SEARCH_MAX_TUPLES, logger
from core import (
    BlockingSetError, EdgeTuple, Family, InvalidArity, PartitionLabeling,
    blocks_partition, enumerate_partitions, stirling2,
)
from verify import verify_enumerate


class TooLarge(BlockingSetError):
    """Экземпляр превышает ограничения точного поиска"""


class BudgetExceeded(BlockingSetError):
    """Исчерпан лимит узлов поиска"""


@dataclass(frozen=True)
class SearchNode:
    """
    Узел поиска

    chosen - индексы выбранных кортежей, forbidden - битовая маска запрещенных
    индексов, frontier - индекс первого непокрытого разбиения (None - покрыты все).
    """
    chosen: Tuple[int, ...]
    forbidden: int
    frontier: Optional[int]


@dataclass(frozen=True)
class SearchResult:
    """Результат поиска"""
    optimum: int
    witness_family: Family
    nodes_expanded: int
    proved_optimal: bool
    lower_bound: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.witness_family.n,
            'd': self.witness_family.d,
            'optimum': self.optimum,
            'proved_optimal': self.proved_optimal,
            'lower_bound': self.lower_bound,
            'nodes_expanded': self.nodes_expanded,
            'witness_family': [list(edge) for edge in self.witness_family.edges],
        }


def _coverage_matrix(tuples: Sequence[EdgeTuple], partitions: Sequence[PartitionLabeling]) -> np.ndarray:
    """Булева матрица: кортеж x разбиение -> кортеж радужный"""
    return np.array(
        [[blocks_partition(t, p) for p in partitions] for t in tuples],
        dtype=bool,
    ).reshape(len(tuples), len(partitions))


def greedy_upper(n: int, d: int) -> Family:
    """
    Жадное блокирующее множество: каждый раз берется кортеж, блокирующий
    больше всего еще не блокированных разбиений (при равенстве - лексикографически первый)
    """
    if d < 1 or d > n:
        raise InvalidArity(f"Нет {d}-разбиений множества из {n} элементов")
    tuples = list(combinations(range(n), d))
    partitions = list(enumerate_partitions(n, d))
    matrix = _coverage_matrix(tuples, partitions)

    uncovered = np.ones(len(partitions), dtype=bool)
    chosen: List[EdgeTuple] = []
    while uncovered.any():
        scores = matrix[:, uncovered].sum(axis=1)
        best = int(np.argmax(scores))
        chosen.append(tuples[best])
        uncovered &= ~matrix[best]

    family = Family(n, d, tuple(chosen))
    report = verify_enumerate(family)
    if not report.blocking:
        raise BlockingSetError(f"Жадное семейство для n={n}, d={d} оказалось не блокирующим")
    logger.debug(f"Жадная оценка для n={n}, d={d}: {len(family)} кортежей")
    return family


def start_bound(n: int, d: int) -> int:
    """Нижняя оценка, с которой начинается углубление"""
    if d >= 3:
        return lower_bound_ceil(d, n)
    if d == 2:
        return n - 1
    return 1


class MinBlockingSearch:
    """Поиск в глубину по узлам SearchNode с отсечением по линкам (d-2)-множеств"""

    def __init__(self, n: int, d: int, max_tuples: Optional[int] = None,
                 max_partitions: Optional[int] = None):
        if d < 1 or d > n:
            raise InvalidArity(f"Нет {d}-разбиений множества из {n} элементов")

        tuple_cap = SEARCH_MAX_TUPLES if max_tuples is None else max_tuples
        partition_cap = SEARCH_MAX_PARTITIONS if max_partitions is None else max_partitions
        if comb(n, d) > tuple_cap or stirling2(n, d) > partition_cap:
            raise TooLarge(
                f"n={n}, d={d}: C(n,d)={comb(n, d)} (лимит {tuple_cap}), "
                f"S(n,d)={stirling2(n, d)} (лимит {partition_cap})"
            )

        self.n = n
        self.d = d
        self.tuples = list(combinations(range(n), d))
        self.partitions = list(enumerate_partitions(n, d))
        matrix = _coverage_matrix(self.tuples, self.partitions)

        self.cover = [sum(1 << int(j) for j in np.flatnonzero(row)) for row in matrix]
        self.rainbow = [[int(t) for t in np.flatnonzero(column)] for column in matrix.T]
        self.full_mask = (1 << len(self.partitions)) - 1

        # каждое (d-2)-множество должно лежать хотя бы в n-d+1 выбранных кортежах
        self.use_links = d >= 2
        if self.use_links:
            self.need = n - d + 1
            self.per_tuple = comb(d, 2)
            cores = {c: i for i, c in enumerate(combinations(range(n), d - 2))}
            self.tuple_cores = [[cores[c] for c in combinations(t, d - 2)] for t in self.tuples]
            self.core_total = len(cores)
            self.core_supersets = comb(n - (d - 2), 2)

        self.nodes_expanded = 0

    def _first_uncovered(self, covered: int) -> Optional[int]:
        uncovered = self.full_mask & ~covered
        if not uncovered:
            return None
        return (uncovered & -uncovered).bit_length() - 1

    def root_node(self) -> SearchNode:
        return SearchNode(chosen=(), forbidden=0, frontier=self._first_uncovered(0))

    def _choose(self, t: int):
        for c in self.tuple_cores[t]:
            if self.chosen_count[c] < self.need:
                self.deficit -= 1
            self.chosen_count[c] += 1

    def _unchoose(self, t: int):
        for c in self.tuple_cores[t]:
            self.chosen_count[c] -= 1
            if self.chosen_count[c] < self.need:
                self.deficit += 1

    def _forbid(self, t: int) -> bool:
        feasible = True
        for c in self.tuple_cores[t]:
            self.available[c] -= 1
            if self.available[c] < self.need:
                feasible = False
        return feasible

    def _allow(self, t: int):
        for c in self.tuple_cores[t]:
            self.available[c] += 1

    def _expand(self, node: SearchNode, covered: int) -> Optional[Tuple[int, ...]]:
        self._call_nodes += 1
        self.nodes_expanded += 1
        if self._budget is not None and self._call_nodes > self._budget:
            raise BudgetExceeded(f"Исчерпан лимит {self._budget} узлов")

        if node.frontier is None:
            return node.chosen
        size = len(node.chosen)
        if size >= self._target:
            return None
        if self.use_links and size + -(-self.deficit // self.per_tuple) > self._target:
            return None

        forbidden = node.forbidden
        newly_forbidden = []
        found = None
        for t in self.rainbow[node.frontier]:
            if forbidden >> t & 1:
                continue
            if self.use_links:
                self._choose(t)
            child_covered = covered | self.cover[t]
            child = SearchNode(node.chosen + (t,), forbidden, self._first_uncovered(child_covered))
            try:
                found = self._expand(child, child_covered)
            finally:
                if self.use_links:
                    self._unchoose(t)
            if found is not None:
                break
            # следующие ветви не содержат t
            forbidden |= 1 << t
            newly_forbidden.append(t)
            if self.use_links and not self._forbid(t):
                break

        for t in newly_forbidden:
            if self.use_links:
                self._allow(t)
        return found

    def feasible_at(self, target: int, max_nodes: Optional[int] = None) -> Optional[Family]:
        """
        Ищет блокирующее семейство размера не больше target

        Returns:
            Семейство или None, если его нет

        Raises:
            BudgetExceeded: если лимит узлов исчерпан раньше
        """
        self._target = target
        self._budget = max_nodes
        self._call_nodes = 0
        if self.use_links:
            self.chosen_count = [0] * self.core_total
            self.available = [self.core_supersets] * self.core_total
            self.deficit = self.core_total * self.need

        chosen = self._expand(self.root_node(), 0)
        logger.debug(f"Размер {target}: {self._call_nodes} узлов, {'найдено' if chosen else 'нет решения'}")
        if chosen is None:
            return None
        return Family(self.n, self.d, tuple(self.tuples[t] for t in chosen))


def min_blocking(n: int, d: int, budget: Optional[int] = None) -> SearchResult:
    """
    Минимальное d-блокирующее множество на [n] с сертификатом

    Углубление по размеру s начиная с нижней оценки; первое достижимое s -
    оптимум. При исчерпании лимита узлов возвращается лучшее известное
    семейство с proved_optimal=False.

    Raises:
        TooLarge: если экземпляр превышает ограничения
    """
    started = time.time()
    search = MinBlockingSearch(n, d)
    incumbent = greedy_upper(n, d)
    lower = start_bound(n, d)
    logger.info(f"Поиск n={n}, d={d}: нижняя оценка {lower}, жадная оценка {len(incumbent)}")

    for target in range(lower, len(incumbent)):
        remaining = None if budget is None else budget - search.nodes_expanded
        try:
            if remaining is not None and remaining <= 0:
                raise BudgetExceeded(f"Исчерпан лимит {budget} узлов")
            found = search.feasible_at(target, remaining)
        except BudgetExceeded:
            logger.warning(
                f"Лимит узлов {budget} исчерпан на размере {target}; "
                f"лучшее известное значение {len(incumbent)}"
            )
            return SearchResult(len(incumbent), incumbent, search.nodes_expanded, False, lower)

        if found is not None:
            report = verify_enumerate(found)
            if not report.blocking:
                raise BlockingSetError(f"Найденное семейство размера {target} не блокирующее")
            logger.info(
                f"Оптимум phi_{d}({n}) = {target}: {search.nodes_expanded} узлов, "
                f"{time.time() - started:.2f} с"
            )
            return SearchResult(target, found, search.nodes_expanded, True, lower)
        logger.info(f"Размер {target} недостижим")

    logger.info(f"Оптимум phi_{d}({n}) = {len(incumbent)} (жадное семейство)")
    return SearchResult(len(incumbent), incumbent, search.nodes_expanded, True, lower)

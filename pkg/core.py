"""
Базовые типы: вершины, d-кортежи, семейства, разбиения в канонической форме
и предикат "семейство блокирует разбиение"
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from config import logger

# Кортеж из d вершин в порядке возрастания
EdgeTuple = Tuple[int, ...]
# Метки частей в форме restricted-growth string
PartitionLabeling = Tuple[int, ...]


class BlockingSetError(Exception):
    """Базовая ошибка пакета"""


class DuplicateVertex(BlockingSetError):
    """Вершина встречается в кортеже дважды"""


class OutOfRange(BlockingSetError):
    """Номер вершины вне диапазона [0, n)"""


class InvalidArity(BlockingSetError):
    """Недопустимое число частей или длина кортежа"""


def canonicalize_tuple(vertices: Sequence[int], n: int) -> EdgeTuple:
    """
    Возвращает отсортированный кортеж вершин

    Raises:
        DuplicateVertex: если вершина повторяется
        OutOfRange: если вершина не лежит в [0, n)
    """
    for v in vertices:
        if not isinstance(v, int) or v < 0 or v >= n:
            raise OutOfRange(f"Вершина {v} вне диапазона [0, {n})")

    result = tuple(sorted(vertices))
    for a, b in zip(result, result[1:]):
        if a == b:
            raise DuplicateVertex(f"Вершина {a} встречается в кортеже {tuple(vertices)} повторно")
    return result


@dataclass(frozen=True)
class Family:
    """Семейство d-кортежей на множестве [0, n): кандидат в блокирующее множество"""
    n: int
    d: int
    edges: Tuple[EdgeTuple, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0:
            raise OutOfRange(f"Число вершин не может быть отрицательным: {self.n}")
        if self.d < 1:
            raise InvalidArity(f"Размер кортежа должен быть положительным: {self.d}")

        canonical = set()
        for edge in self.edges:
            if len(edge) != self.d:
                raise InvalidArity(f"Кортеж {tuple(edge)} имеет длину {len(edge)}, ожидалось {self.d}")
            canonical.add(canonicalize_tuple(edge, self.n))
        object.__setattr__(self, 'edges', tuple(sorted(canonical)))

    @classmethod
    def from_edges(cls, n: int, d: int, edges: Iterable[Sequence[int]]) -> 'Family':
        return cls(n=n, d=d, edges=tuple(tuple(e) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[EdgeTuple]:
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    @property
    def _edge_set(self) -> frozenset:
        cached = self.__dict__.get('_cached_edge_set')
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, '_cached_edge_set', cached)
        return cached

    def degree(self, v: int) -> int:
        """Число кортежей, содержащих вершину v"""
        return sum(1 for edge in self.edges if v in edge)

    def degrees(self) -> List[int]:
        result = [0] * self.n
        for edge in self.edges:
            for v in edge:
                result[v] += 1
        return result

    def with_edge(self, edge: Sequence[int]) -> 'Family':
        return Family(self.n, self.d, self.edges + (tuple(edge),))

    def without_edge(self, edge: Sequence[int]) -> 'Family':
        target = tuple(sorted(edge))
        return Family(self.n, self.d, tuple(e for e in self.edges if e != target))


@lru_cache(maxsize=None)
def stirling2(n: int, d: int) -> int:
    """Число Стирлинга второго рода S(n, d)"""
    if n == d:
        return 1
    if d == 0 or d > n:
        return 0
    return d * stirling2(n - 1, d) + stirling2(n - 1, d - 1)


def enumerate_partitions(n: int, d: int) -> Iterator[PartitionLabeling]:
    """
    Перебирает все разбиения [n] ровно на d непустых частей

    Каждое разбиение выдается один раз в виде restricted-growth string,
    в лексикографическом порядке. Всего выдается S(n, d) разбиений.

    Raises:
        InvalidArity: если d < 1 или d > n
    """
    if d < 1 or d > n:
        raise InvalidArity(f"Нельзя разбить {n} элементов на {d} непустых частей")

    labels = [0] * n

    def extend(position: int, current_max: int) -> Iterator[PartitionLabeling]:
        if position == n:
            yield tuple(labels)
            return
        remaining = n - position - 1
        for label in range(min(current_max + 1, d - 1) + 1):
            new_max = max(current_max, label)
            # оставшихся позиций должно хватить на недостающие метки
            if d - 1 - new_max > remaining:
                continue
            labels[position] = label
            yield from extend(position + 1, new_max)

    # вершина 0 всегда в части 0
    yield from extend(1, 0)


def canonicalize_labeling(labels: Sequence[int]) -> PartitionLabeling:
    """Переименовывает метки в порядке первого появления"""
    mapping: Dict[int, int] = {}
    result = []
    for label in labels:
        if label not in mapping:
            mapping[label] = len(mapping)
        result.append(mapping[label])
    return tuple(result)


def labeling_from_parts(parts: Iterable[Iterable[int]], n: int) -> PartitionLabeling:
    """Строит каноническую разметку по списку частей"""
    labels = [-1] * n
    for index, part in enumerate(parts):
        for v in part:
            if v < 0 or v >= n:
                raise OutOfRange(f"Вершина {v} вне диапазона [0, {n})")
            if labels[v] != -1:
                raise DuplicateVertex(f"Вершина {v} входит в несколько частей")
            labels[v] = index
    if -1 in labels:
        raise InvalidArity(f"Вершина {labels.index(-1)} не покрыта частями")
    return canonicalize_labeling(labels)


def partition_parts(p: PartitionLabeling) -> List[List[int]]:
    """Части разбиения в порядке меток"""
    parts: List[List[int]] = []
    for v, label in enumerate(p):
        while len(parts) <= label:
            parts.append([])
        parts[label].append(v)
    return parts


def blocks_partition(t: EdgeTuple, p: PartitionLabeling) -> bool:
    """Кортеж радужный для разбиения: все метки его вершин различны"""
    return len({p[v] for v in t}) == len(t)


def family_blocks(f: Family, p: PartitionLabeling) -> Optional[EdgeTuple]:
    """Лексикографически наименьший кортеж семейства, блокирующий разбиение"""
    for edge in f.edges:
        if blocks_partition(edge, p):
            return edge
    return None


def complement_family(f: Family) -> Family:
    """Все d-подмножества [n], не входящие в семейство"""
    present = set(f.edges)
    return Family(f.n, f.d, tuple(t for t in combinations(range(f.n), f.d) if t not in present))


def random_family(n: int, d: int, density: float, rng: random.Random) -> Family:
    """
    Случайное семейство: каждый d-кортеж входит независимо с вероятностью density
    """
    if not 0.0 <= density <= 1.0:
        raise BlockingSetError(f"Плотность должна лежать в [0, 1]: {density}")
    edges = tuple(t for t in combinations(range(n), d) if rng.random() < density)
    logger.debug(f"Случайное семейство n={n}, d={d}, плотность {density:.2f}: {len(edges)} кортежей")
    return Family(n, d, edges)

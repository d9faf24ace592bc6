"""
Проверка того, что семейство является d-блокирующим множеством:
через связность графов G_E(X) (d = 3) и прямым перебором d-разбиений
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from config import LINK_VERIFY_MAX_N, logger
from core import (
    BlockingSetError, EdgeTuple, Family, InvalidArity, PartitionLabeling,
    enumerate_partitions, family_blocks, labeling_from_parts, partition_parts,
)


class WrongArity(BlockingSetError):
    """Метод применим только к семействам троек"""


class ArityViolation(BlockingSetError):
    """|X| > d - 2 в определении линка"""


class LinkTooLarge(BlockingSetError):
    """Слишком большое n для перебора всех подмножеств"""


class UnionFind:
    """Система непересекающихся множеств со сжатием путей"""

    def __init__(self, size: int):
        self.parents = list(range(size))

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        # сжатие пути
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parents[rb] = ra
        return True

    def components(self, elements: Iterable[int]) -> List[List[int]]:
        groups: Dict[int, List[int]] = {}
        for e in elements:
            groups.setdefault(self.find(e), []).append(e)
        return sorted(groups.values(), key=lambda group: group[0])


@dataclass(frozen=True)
class LinkGraph:
    """Граф G_E(X) на V \\ X"""
    vertices: FrozenSet[int]
    edges: FrozenSet[Tuple[int, int]]

    def components(self) -> List[List[int]]:
        index = {v: i for i, v in enumerate(sorted(self.vertices))}
        uf = UnionFind(len(index))
        for y, z in self.edges:
            uf.union(index[y], index[z])
        ordered = sorted(self.vertices)
        return [[ordered[i] for i in group] for group in uf.components(range(len(ordered)))]

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


@dataclass(frozen=True)
class LinkHypergraph:
    """Линк L_E(X): (d - |X|)-однородный гиперграф на V \\ X"""
    vertices: FrozenSet[int]
    hyperedges: FrozenSet[EdgeTuple]
    uniformity: int

    def as_graph(self) -> LinkGraph:
        if self.uniformity != 2:
            raise WrongArity(f"Линк однородности {self.uniformity} не является графом")
        return LinkGraph(self.vertices, frozenset((a, b) for a, b in self.hyperedges))


class VerificationMethod(str, Enum):
    """Метод проверки"""
    LINK = "link"
    ENUMERATE = "enumerate"


@dataclass(frozen=True)
class UnblockedPartition:
    """Разбиение, которое семейство не блокирует"""
    labeling: PartitionLabeling

    def to_labeling(self, n: int) -> PartitionLabeling:
        return self.labeling

    def to_dict(self) -> Dict[str, Any]:
        return {
            'type': 'unblocked_partition',
            'labeling': list(self.labeling),
            'parts': partition_parts(self.labeling),
        }


@dataclass(frozen=True)
class DisconnectedLink:
    """X, для которого G_E(X) несвязен, и разрез V \\ X на две стороны"""
    x: Tuple[int, ...]
    first: Tuple[int, ...]
    second: Tuple[int, ...]

    def to_labeling(self, n: int) -> PartitionLabeling:
        return labeling_from_parts([self.x, self.first, self.second], n)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'type': 'disconnected_link',
            'x': list(self.x),
            'components': [list(self.first), list(self.second)],
        }


Witness = Union[UnblockedPartition, DisconnectedLink]


@dataclass(frozen=True)
class VerificationReport:
    """Результат проверки"""
    blocking: bool
    method: VerificationMethod
    witness: Optional[Witness]
    examined: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'blocking': self.blocking,
            'method': self.method.value,
            'witness': self.witness.to_dict() if self.witness is not None else None,
            'examined': self.examined,
        }


def link_graph(f: Family, x: Iterable[int]) -> LinkGraph:
    """
    Граф G_E(X): пары {y, z} вне X, дополняемые до тройки семейства вершиной из X

    Raises:
        WrongArity: если d != 3
    """
    if f.d != 3:
        raise WrongArity(f"G_E(X) определен для троек, получено d={f.d}")
    x_set = set(x)
    vertices = frozenset(v for v in range(f.n) if v not in x_set)
    edges = set()
    for edge in f.edges:
        outside = [v for v in edge if v not in x_set]
        if len(outside) == 2:
            edges.add((outside[0], outside[1]))
    return LinkGraph(vertices, frozenset(edges))


def link_hypergraph(f: Family, x: Iterable[int]) -> LinkHypergraph:
    """
    Линк L_E(X): все tau, для которых X ∪ tau лежит в семействе

    Raises:
        ArityViolation: если |X| > d - 2
    """
    x_set = set(x)
    if len(x_set) > f.d - 2:
        raise ArityViolation(f"|X| = {len(x_set)} превышает d - 2 = {f.d - 2}")
    vertices = frozenset(v for v in range(f.n) if v not in x_set)
    hyperedges = frozenset(
        tuple(v for v in edge if v not in x_set)
        for edge in f.edges if x_set <= set(edge)
    )
    return LinkHypergraph(vertices, hyperedges, f.d - len(x_set))


def necessary_link_violations(f: Family) -> List[Tuple[Tuple[int, ...], str]]:
    """
    Необходимое условие: для каждого (d-2)-подмножества C линк L_E(C) как граф
    на V \\ C связен и содержит не меньше n - d + 1 ребер
    """
    if f.d < 2 or f.n < f.d:
        return []
    need = f.n - f.d + 1
    violations = []
    for c in combinations(range(f.n), f.d - 2):
        graph = link_hypergraph(f, c).as_graph()
        if len(graph.edges) < need:
            violations.append((c, f"в линке {len(graph.edges)} ребер, нужно не меньше {need}"))
        elif not graph.is_connected():
            violations.append((c, "линк несвязен"))
    return violations


def _scan_link(f: Family, offset: int, stride: int) -> Tuple[Optional[int], Optional[List[List[int]]], int]:
    """Перебирает маски X с шагом stride; возвращает первую несвязную"""
    n = f.n
    pairs_by_vertex: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for a, b, c in f.edges:
        pairs_by_vertex[a].append((b, c))
        pairs_by_vertex[b].append((a, c))
        pairs_by_vertex[c].append((a, b))

    examined = 0
    for mask in range(1 + offset, 1 << n, stride):
        size = bin(mask).count('1')
        if size > n - 2:
            continue
        examined += 1
        uf = UnionFind(n)
        rest = [v for v in range(n) if not mask >> v & 1]
        remaining = len(rest) - 1
        for x in range(n):
            if not mask >> x & 1:
                continue
            for y, z in pairs_by_vertex[x]:
                if not (mask >> y & 1 or mask >> z & 1) and uf.union(y, z):
                    remaining -= 1
            if remaining == 0:
                break
        if remaining > 0:
            return mask, uf.components(rest), examined
    return None, None, examined


def _scan_enumerate(f: Family, offset: int, stride: int) -> Tuple[Optional[int], Optional[PartitionLabeling], int]:
    """Перебирает разбиения с шагом stride; возвращает первое неблокированное"""
    examined = 0
    for index, p in enumerate(enumerate_partitions(f.n, f.d)):
        if index % stride != offset:
            continue
        examined += 1
        if family_blocks(f, p) is None:
            return index, p, examined
    return None, None, examined


def _run_strided(scan: Callable, f: Family, workers: int) -> Tuple[Optional[int], Any, int]:
    """Запускает scan по workers полосам и берет канонически минимального свидетеля"""
    if workers <= 1:
        return scan(f, 0, 1)

    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(scan, f, offset, workers) for offset in range(workers)]
        results = [future.result() for future in futures]

    examined = sum(r[2] for r in results)
    failures = [r for r in results if r[0] is not None]
    if not failures:
        return None, None, examined
    first = min(failures, key=lambda r: r[0])
    return first[0], first[1], examined


def verify_link(f: Family, workers: int = 1, max_n: Optional[int] = None) -> VerificationReport:
    """
    Проверка 3-блокирующего множества через связность G_E(X) для 1 <= |X| <= n-2

    Подмножества X перебираются как n-битные числа по возрастанию; свидетель -
    наименьшая маска с несвязным графом.

    Raises:
        WrongArity: если d != 3
        InvalidArity: если n < 3
        LinkTooLarge: если n превышает ограничение
    """
    if f.d != 3:
        raise WrongArity(f"Метод link применим только к тройкам, получено d={f.d}")
    if f.n < 3:
        raise InvalidArity(f"Нет 3-разбиений множества из {f.n} элементов")
    limit = LINK_VERIFY_MAX_N if max_n is None else max_n
    if f.n > limit:
        raise LinkTooLarge(f"n={f.n} превышает ограничение {limit} для перебора 2^n подмножеств")

    mask, components, examined = _run_strided(_scan_link, f, workers)
    if mask is None:
        logger.info(f"link: семейство из {len(f)} троек на {f.n} вершинах блокирующее ({examined} подмножеств)")
        return VerificationReport(True, VerificationMethod.LINK, None, examined)

    x = tuple(v for v in range(f.n) if mask >> v & 1)
    first = tuple(components[0])
    second = tuple(sorted(v for group in components[1:] for v in group))
    logger.info(f"link: G_E(X) несвязен для X={list(x)}")
    return VerificationReport(False, VerificationMethod.LINK, DisconnectedLink(x, first, second), examined)


def verify_enumerate(f: Family, workers: int = 1) -> VerificationReport:
    """
    Проверка перебором всех d-разбиений; свидетель - первое неблокированное
    разбиение в каноническом порядке

    Raises:
        InvalidArity: если d > n
    """
    if f.d > f.n:
        raise InvalidArity(f"Нет {f.d}-разбиений множества из {f.n} элементов")

    index, labeling, examined = _run_strided(_scan_enumerate, f, workers)
    if index is None:
        logger.info(f"enumerate: семейство из {len(f)} кортежей блокирует все {examined} разбиений")
        return VerificationReport(True, VerificationMethod.ENUMERATE, None, examined)

    logger.info(f"enumerate: разбиение {partition_parts(labeling)} не блокируется")
    return VerificationReport(False, VerificationMethod.ENUMERATE, UnblockedPartition(labeling), examined)


def witness_is_genuine(f: Family, report: VerificationReport) -> bool:
    """Повторно проверяет свидетеля базовыми предикатами"""
    if report.witness is None:
        return report.blocking
    labeling = report.witness.to_labeling(f.n)
    return len(set(labeling)) == f.d and family_blocks(f, labeling) is None

"""
Рекурсивные d-блокирующие множества для d >= 4: разбиение пополам (W-конструкция)
и отщепление вершины для нечетного n; базы d = 1, 2, 3
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Tuple

from config import logger
from construct3 import construct3
from core import BlockingSetError, EdgeTuple, Family, PartitionLabeling, canonicalize_labeling, family_blocks


class TraceRule(str, Enum):
    """Правило, примененное на шаге рекурсии"""
    EMPTY = "empty"
    SINGLETON = "singleton"
    STAR = "star"
    CONSTRUCT3 = "construct3"
    SINGLE_TUPLE = "single-tuple"
    EVEN_SPLIT = "even-split"
    ODD_PEEL = "odd-peel"


@dataclass(frozen=True)
class ConstructionTrace:
    """
    Узел дерева построения

    Для even-split дети идут в порядке i = 0..d-1 (T_i на B со сдвигом shift=k),
    для odd-peel: сначала (d-1)-семейство с добавленной вершиной peel_vertex,
    затем d-семейство на n-1 вершинах.
    """
    rule: TraceRule
    d: int
    n: int
    size: int
    shift: Optional[int] = None
    peel_vertex: Optional[int] = None
    children: Tuple['ConstructionTrace', ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {'rule': self.rule.value, 'd': self.d, 'n': self.n, 'size': self.size}
        if self.shift is not None:
            result['shift'] = self.shift
        if self.peel_vertex is not None:
            result['peel_vertex'] = self.peel_vertex
        if self.children:
            result['children'] = [child.to_dict() for child in self.children]
        return result

    def depth(self) -> int:
        return 1 + max((child.depth() for child in self.children), default=0)


@lru_cache(maxsize=None)
def _build(d: int, n: int, use_construct3: bool) -> Tuple[Tuple[EdgeTuple, ...], ConstructionTrace]:
    if d < 1 or n < 0:
        raise BlockingSetError(f"Некорректные параметры: d={d}, n={n}")

    if n < d:
        return (), ConstructionTrace(TraceRule.EMPTY, d, n, 0)
    if d == 1:
        return ((0,),), ConstructionTrace(TraceRule.SINGLETON, d, n, 1)
    if d == 2:
        edges = tuple((0, i) for i in range(1, n))
        return edges, ConstructionTrace(TraceRule.STAR, d, n, len(edges))
    if d == 3 and use_construct3:
        edges = construct3(n).family.edges
        return edges, ConstructionTrace(TraceRule.CONSTRUCT3, d, n, len(edges))
    if n == d:
        return (tuple(range(d)),), ConstructionTrace(TraceRule.SINGLE_TUPLE, d, n, 1)

    if n % 2 == 0:
        k = n // 2
        edges: List[EdgeTuple] = []
        children = []
        for i in range(d):
            child_edges, child_trace = _build(d - i, k, use_construct3)
            children.append(child_trace)
            shifted = [tuple(k + j for j in t) for t in child_edges]
            for s in combinations(range(k), i):
                edges.extend(s + t for t in shifted)
        trace = ConstructionTrace(TraceRule.EVEN_SPLIT, d, n, len(edges), shift=k, children=tuple(children))
        return tuple(edges), trace

    x = n - 1
    lower_edges, lower_trace = _build(d - 1, n - 1, use_construct3)
    rest_edges, rest_trace = _build(d, n - 1, use_construct3)
    edges = tuple(t + (x,) for t in lower_edges) + rest_edges
    trace = ConstructionTrace(TraceRule.ODD_PEEL, d, n, len(edges), peel_vertex=x,
                              children=(lower_trace, rest_trace))
    return edges, trace


def construct_d(d: int, n: int, use_construct3: bool = True) -> Tuple[Family, ConstructionTrace]:
    """
    d-блокирующее множество на [0, n) и дерево его построения

    Порядок правил: n < d, база по d (1, 2, 3), n = d, четное n, нечетное n.
    При use_construct3=False база d = 3 не используется и рекурсия идет до
    одно- и двухточечных баз.
    """
    edges, trace = _build(d, n, use_construct3)
    family = Family(n, d, edges)
    if len(family) != len(edges):
        # W_i и части odd-peel попарно не пересекаются, дубликатов быть не должно
        logger.warning(f"construct_d({d}, {n}): удалено {len(edges) - len(family)} дубликатов")
    logger.debug(f"construct_d(d={d}, n={n}): {len(family)} кортежей, глубина {trace.depth()}")
    return family, trace


@lru_cache(maxsize=None)
def predicted_size(d: int, n: int, use_construct3: bool = True) -> int:
    """Размер construct_d(d, n), вычисленный по рекуррентностям без построения"""
    if n < d:
        return 0
    if d == 1:
        return 1
    if d == 2:
        return n - 1
    if d == 3 and use_construct3:
        return -(-n * (n - 2) // 3)
    if n == d:
        return 1
    if n % 2 == 0:
        k = n // 2
        return sum(comb(k, i) * predicted_size(d - i, k, use_construct3) for i in range(d))
    return predicted_size(d - 1, n - 1, use_construct3) + predicted_size(d, n - 1, use_construct3)


def even_split_witness(d: int, n: int, labeling: PartitionLabeling) -> EdgeTuple:
    """
    Блокирующий кортеж W-конструкции для разбиения при четном n

    Части, целиком лежащие в A = [0, k), дают по представителю (минимальному
    элементу); остальные части, суженные на B, образуют (d-i)-разбиение B,
    которое блокирует рекурсивное семейство на B.
    """
    if n % 2 != 0 or n <= d or d <= 3:
        raise BlockingSetError(f"Свидетель W-конструкции определен для четного n > d > 3: d={d}, n={n}")
    if len(labeling) != n or len(set(labeling)) != d:
        raise BlockingSetError(f"Разметка {labeling} не является {d}-разбиением [{n}]")

    k = n // 2
    representatives = []
    for label in range(d):
        members = [v for v in range(n) if labeling[v] == label]
        if members[-1] < k:
            representatives.append(members[0])
    i = len(representatives)

    b_labels = canonicalize_labeling(labeling[k:])
    child, _ = construct_d(d - i, k)
    t = family_blocks(child, b_labels)
    if t is None:
        raise BlockingSetError(f"Семейство T_{i} не блокирует суженное разбиение {b_labels}")
    return tuple(sorted(representatives)) + tuple(k + j for j in t)

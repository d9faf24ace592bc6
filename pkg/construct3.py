"""
Точная минимальная конструкция 3-блокирующего множества для любого n >= 3:
гаджет H(A, B), красные и синие тройки, структурная диагностика H(A, B)
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from config import logger
from core import BlockingSetError, EdgeTuple, Family


class OverlappingSets(BlockingSetError):
    """Множества A и B пересекаются"""


class TooSmall(BlockingSetError):
    """Слишком мало вершин для конструкции"""


class EdgeColor(str, Enum):
    """Цвет тройки"""
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class Layout3:
    """
    Нумерация вершин: блок u, блок v, блок w, затем бесконечности

    u_i -> i, v_i -> k + i, w_i -> 2k + i; индексы берутся по модулю k
    """
    n: int
    k: int

    @classmethod
    def for_n(cls, n: int) -> 'Layout3':
        if n < 3:
            raise TooSmall(f"Конструкция определена для n >= 3, получено n={n}")
        return cls(n=n, k=n // 3)

    @property
    def residue(self) -> int:
        return self.n % 3

    def u(self, i: int) -> int:
        return i % self.k

    def v(self, i: int) -> int:
        return self.k + i % self.k

    def w(self, i: int) -> int:
        return 2 * self.k + i % self.k

    @property
    def inf(self) -> int:
        if self.residue != 1:
            raise BlockingSetError("Вершина бесконечность есть только при n = 1 (mod 3)")
        return 3 * self.k

    @property
    def inf1(self) -> int:
        if self.residue != 2:
            raise BlockingSetError("Вершины бесконечность_1,2 есть только при n = 2 (mod 3)")
        return 3 * self.k

    @property
    def inf2(self) -> int:
        if self.residue != 2:
            raise BlockingSetError("Вершины бесконечность_1,2 есть только при n = 2 (mod 3)")
        return 3 * self.k + 1

    def blocks(self) -> Tuple[List[int], List[int], List[int]]:
        """Множества A_0, A_1, A_2"""
        return (
            [self.u(i) for i in range(self.k)],
            [self.v(i) for i in range(self.k)],
            [self.w(i) for i in range(self.k)],
        )


@dataclass(frozen=True)
class ColoredFamily:
    """Семейство троек с разметкой цветов"""
    family: Family
    red: FrozenSet[EdgeTuple]
    blue: FrozenSet[EdgeTuple]

    def color_of(self, edge: EdgeTuple) -> EdgeColor:
        return EdgeColor.RED if tuple(sorted(edge)) in self.red else EdgeColor.BLUE

    def colors(self) -> List[str]:
        """Цвета в порядке ребер семейства"""
        return [self.color_of(edge).value for edge in self.family.edges]


def h_pair(a_ids: Sequence[int], b_ids: Sequence[int]) -> FrozenSet[EdgeTuple]:
    """
    Гаджет H(A, B): тройки {a_i, a_j, b_(i+j)} и {a_i, a_j, b_(i+j+1)} для i < j

    Raises:
        OverlappingSets: если A и B пересекаются
    """
    if len(a_ids) != len(b_ids):
        raise BlockingSetError(f"Размеры A и B различаются: {len(a_ids)} и {len(b_ids)}")
    overlap = set(a_ids) & set(b_ids)
    if overlap:
        raise OverlappingSets(f"A и B пересекаются по вершинам {sorted(overlap)}")

    k = len(a_ids)
    triples: Set[EdgeTuple] = set()
    for i, j in combinations(range(k), 2):
        for shift in (0, 1):
            triples.add(tuple(sorted((a_ids[i], a_ids[j], b_ids[(i + j + shift) % k]))))
    return frozenset(triples)


def _blue_triples(layout: Layout3) -> Set[EdgeTuple]:
    u, v, w = layout.u, layout.v, layout.w
    triples: Set[Tuple[int, int, int]] = set()
    for i in range(layout.k):
        if layout.residue == 0:
            triples.add((u(i), v(i), w(i)))
        elif layout.residue == 1:
            inf = layout.inf
            triples.add((inf, u(i), v(i)))
            triples.add((inf, v(i), w(i)))
            triples.add((inf, w(i), u(i + 1)))
        else:
            inf1, inf2 = layout.inf1, layout.inf2
            triples.add((inf1, u(i), v(i)))
            triples.add((inf1, v(i), w(i)))
            triples.add((inf2, w(i), u(i + 1)))
            triples.add((inf2, u(i), v(i + 1)))
            triples.add((inf1, inf2, w(i)))
    return {tuple(sorted(t)) for t in triples}


def construct3(n: int) -> ColoredFamily:
    """
    Минимальное 3-блокирующее множество размера ceil(n(n-2)/3)

    Raises:
        TooSmall: если n < 3
    """
    layout = Layout3.for_n(n)
    a0, a1, a2 = layout.blocks()

    red = h_pair(a0, a1) | h_pair(a1, a2) | h_pair(a2, a0)
    blue = frozenset(_blue_triples(layout))
    family = Family(n, 3, tuple(red | blue))

    logger.debug(
        f"construct3(n={n}): k={layout.k}, красных {len(red)}, синих {len(blue)}, всего {len(family)}"
    )
    return ColoredFamily(family=family, red=red, blue=blue)


@dataclass
class StructureReport:
    """
    Диагностика графа G_H(A,B)(X): проверки связности красного подграфа

    Поля со значением None означают, что утверждение к данному X неприменимо.
    """
    components: List[FrozenSet[int]]
    a_induced_connected: Optional[bool] = None
    no_a_b_edges: Optional[bool] = None
    a_rest_complete: Optional[bool] = None
    at_most_two_components: Optional[bool] = None
    connected_when_b_untouched: Optional[bool] = None
    segments_split: Optional[bool] = None
    both_components_touch_b: Optional[bool] = None
    b_successor_in_terminal: Optional[bool] = None
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def component_count(self) -> int:
        return len(self.components)

    def checks(self) -> Dict[str, Optional[bool]]:
        return {
            'a_induced_connected': self.a_induced_connected,
            'no_a_b_edges': self.no_a_b_edges,
            'a_rest_complete': self.a_rest_complete,
            'at_most_two_components': self.at_most_two_components,
            'connected_when_b_untouched': self.connected_when_b_untouched,
            'segments_split': self.segments_split,
            'both_components_touch_b': self.both_components_touch_b,
            'b_successor_in_terminal': self.b_successor_in_terminal,
        }

    @property
    def all_hold(self) -> bool:
        return all(value is not False for value in self.checks().values())


def _link_graph_nx(triples: Iterable[EdgeTuple], vertices: Iterable[int], x_set: Set[int]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(v for v in vertices if v not in x_set)
    for triple in triples:
        inside = [v for v in triple if v in x_set]
        outside = [v for v in triple if v not in x_set]
        if inside and len(outside) == 2:
            graph.add_edge(*outside)
    return graph


def _circular_segments(a_ids: Sequence[int], x_set: Set[int]) -> List[List[int]]:
    """Максимальные циклические отрезки A вне X, каждый начинается после вершины из X"""
    k = len(a_ids)
    segments = []
    for start in range(k):
        if a_ids[start] in x_set or a_ids[(start - 1) % k] not in x_set:
            continue
        segment = []
        i = start
        while a_ids[i % k] not in x_set:
            segment.append(a_ids[i % k])
            i += 1
        segments.append(segment)
    return segments


def structure_report(a_ids: Sequence[int], b_ids: Sequence[int], x: Iterable[int]) -> StructureReport:
    """
    Строит G_H(A,B)(X) и проверяет применимые к X утверждения:
    связность на A и отсутствие ребер A-B при A∩X=∅≠B∩X, полнота на A\\X при B⊆X,
    не более двух компонент при A∩X≠∅, A\\X≠∅, B\\X≠∅ и устройство двух компонент
    """
    x_set = set(x)
    a_set, b_set = set(a_ids), set(b_ids)
    if not x_set <= a_set | b_set:
        raise BlockingSetError(f"X содержит вершины вне A ∪ B: {sorted(x_set - a_set - b_set)}")

    triples = h_pair(a_ids, b_ids)
    graph = _link_graph_nx(triples, list(a_ids) + list(b_ids), x_set)
    components = [frozenset(c) for c in nx.connected_components(graph)]
    components.sort(key=min)
    report = StructureReport(components=components)

    a_in_x = a_set & x_set
    b_in_x = b_set & x_set
    a_rest = a_set - x_set
    b_rest = b_set - x_set

    if not a_in_x and b_in_x:
        a_graph = graph.subgraph(a_set)
        report.a_induced_connected = nx.is_connected(a_graph)
        report.no_a_b_edges = not any(
            (u in a_set) != (v in a_set) for u, v in graph.edges()
        )

    if b_set and b_set <= x_set:
        rest_graph = graph.subgraph(a_rest)
        m = len(a_rest)
        report.a_rest_complete = rest_graph.number_of_edges() == m * (m - 1) // 2

    if a_in_x and a_rest and b_rest:
        report.at_most_two_components = len(components) <= 2
        if not b_in_x:
            report.connected_when_b_untouched = len(components) == 1

        if len(components) == 2:
            segments = _circular_segments(a_ids, x_set)
            component_of = {v: idx for idx, comp in enumerate(components) for v in comp}
            # I - компонента, содержащая вершины A, следующие за вершинами из X
            initial = component_of[segments[0][0]]
            terminal = 1 - initial

            split_ok = True
            for segment in segments:
                marks = [component_of[v] for v in segment]
                head = 0
                while head < len(marks) and marks[head] == initial:
                    head += 1
                tail_ok = head < len(marks) and all(m == terminal for m in marks[head:])
                if head == 0 or not tail_ok:
                    split_ok = False
                    report.details['segments_split'] = f"отрезок {segment} размечен как {marks}"
                    break
            report.segments_split = split_ok

            report.both_components_touch_b = all(comp & b_set for comp in components)

            k = len(b_ids)
            report.b_successor_in_terminal = any(
                b_ids[i] not in x_set and b_ids[(i - 1) % k] in x_set
                and component_of[b_ids[i]] == terminal
                for i in range(k)
            )

    return report

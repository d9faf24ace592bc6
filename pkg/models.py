"""
Модели документов обмена (JSON) для CLI
"""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from construct3 import ColoredFamily, EdgeColor
from construct_d import ConstructionTrace
from core import BlockingSetError, Family


class DocumentError(BlockingSetError):
    """Некорректный входной документ"""


class FamilyDocument(BaseModel):
    """Семейство d-кортежей в формате обмена"""
    n: int = Field(..., ge=0, description="Число вершин")
    d: int = Field(..., ge=1, description="Размер кортежа")
    edges: List[List[int]] = Field(default_factory=list, description="Кортежи в лексикографическом порядке")
    colors: Optional[List[EdgeColor]] = Field(None, description="Цвета ребер (только для d = 3)")
    trace: Optional[Dict[str, Any]] = Field(None, description="Дерево построения")

    @model_validator(mode='after')
    def check_edges(self) -> 'FamilyDocument':
        previous = None
        for index, edge in enumerate(self.edges):
            if len(edge) != self.d:
                raise ValueError(f"edges[{index}]: длина {len(edge)}, ожидалось {self.d}")
            if any(v < 0 or v >= self.n for v in edge):
                raise ValueError(f"edges[{index}]: вершина вне диапазона [0, {self.n})")
            if any(a >= b for a, b in zip(edge, edge[1:])):
                raise ValueError(f"edges[{index}]: вершины должны строго возрастать")
            if previous is not None and edge <= previous:
                raise ValueError(f"edges[{index}]: нарушен лексикографический порядок или повтор")
            previous = edge
        if self.colors is not None and len(self.colors) != len(self.edges):
            raise ValueError(f"colors: {len(self.colors)} значений для {len(self.edges)} ребер")
        return self

    def to_family(self) -> Family:
        return Family.from_edges(self.n, self.d, self.edges)

    @classmethod
    def from_family(cls, family: Family, colors: Optional[List[str]] = None,
                    trace: Optional[ConstructionTrace] = None) -> 'FamilyDocument':
        return cls(
            n=family.n,
            d=family.d,
            edges=[list(edge) for edge in family.edges],
            colors=colors,
            trace=trace.to_dict() if trace is not None else None,
        )

    @classmethod
    def from_colored(cls, colored: ColoredFamily,
                     trace: Optional[ConstructionTrace] = None) -> 'FamilyDocument':
        return cls.from_family(colored.family, colors=colored.colors(), trace=trace)

    def to_json(self) -> str:
        payload = self.model_dump(mode='json', exclude_none=True)
        return json.dumps(payload, indent=2, ensure_ascii=False)


def parse_family_document(text: str) -> FamilyDocument:
    """
    Разбирает документ; ошибки JSON сообщаются с номером строки и столбца

    Raises:
        DocumentError: если документ некорректен
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"Некорректный JSON: {e.msg} (строка {e.lineno}, столбец {e.colno})") from e

    try:
        return FamilyDocument.model_validate(payload)
    except ValueError as e:
        raise DocumentError(f"Некорректный документ семейства: {e}") from e

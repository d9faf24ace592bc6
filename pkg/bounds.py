"""
Точные (рациональные) нижние и верхние оценки phi_d(n): формула для d = 3,
оценка через линки (d-2)-множеств, звезда, рекуррентности конструкции,
константы gamma_d и сравнение gamma_d < 0.86/(d-1)!
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, List, Optional, Tuple

import pandas as pd

from config import logger
from core import BlockingSetError

# 0.86 в точном виде
GAMMA_THRESHOLD_FACTOR = Fraction(43, 50)

BOUND_COLUMNS = ['d', 'n', 'lower_ceil', 'dp_upper', 'trivial_upper', 'gap']


class OutOfDomain(BlockingSetError):
    """Параметры вне области определения оценки"""


def phi3(n: int) -> int:
    """ceil(n(n-2)/3); при n < 3 значение формальное"""
    if n < 1:
        raise OutOfDomain(f"phi3 определена для n >= 1, получено n={n}")
    return -(-n * (n - 2) // 3)


def lower_bound(d: int, n: int) -> Fraction:
    """
    2 * n(n-1)...(n-(d-3)) * (n-(d-1)) / d!  (d-2 убывающих множителей в скобке)

    Raises:
        OutOfDomain: если d < 3 или n < d
    """
    if d < 3 or n < d:
        raise OutOfDomain(f"Нижняя оценка определена для d >= 3 и n >= d, получено d={d}, n={n}")
    falling = 1
    for i in range(d - 2):
        falling *= n - i
    return Fraction(2 * falling * (n - (d - 1)), factorial(d))


def lower_bound_ceil(d: int, n: int) -> int:
    bound = lower_bound(d, n)
    return -(-bound.numerator // bound.denominator)


def trivial_upper(d: int, n: int) -> int:
    """Звезда: все d-кортежи через фиксированную вершину, C(n-1, d-1)"""
    if d < 1 or n < d:
        raise OutOfDomain(f"Звезда определена для 1 <= d <= n, получено d={d}, n={n}")
    return comb(n - 1, d - 1)


@lru_cache(maxsize=None)
def dp_upper(d: int, n: int) -> int:
    """
    Лучшая известная верхняя оценка: минимум из звезды и шага конструкции
    (разбиение пополам для четного n, отщепление вершины для нечетного),
    с базами phi_1, phi_2, phi_3, phi_d(d) = 1
    """
    if d < 1 or n < 0:
        raise OutOfDomain(f"Некорректные параметры: d={d}, n={n}")
    if n < d:
        return 0
    if d == 1:
        return 1
    if d == 2:
        return n - 1
    if d == 3:
        return phi3(n)
    if n == d:
        return 1

    candidates = [trivial_upper(d, n)]
    if n % 2 == 0:
        k = n // 2
        candidates.append(sum(comb(k, i) * dp_upper(d - i, k) for i in range(d)))
    else:
        candidates.append(dp_upper(d - 1, n - 1) + dp_upper(d, n - 1))
    return min(candidates)


@lru_cache(maxsize=None)
def gamma(d: int) -> Fraction:
    """Константа gamma_d: 1, 1, 1/3, далее (1/(2^(d-1)-1)) * sum gamma_(d-i)/i!"""
    if d < 1:
        raise OutOfDomain(f"gamma_d определена для d >= 1, получено d={d}")
    if d <= 2:
        return Fraction(1)
    if d == 3:
        return Fraction(1, 3)
    total = sum((gamma(d - i) / factorial(i) for i in range(1, d)), Fraction(0))
    return total / (2 ** (d - 1) - 1)


@dataclass(frozen=True)
class GammaCheckRow:
    d: int
    gamma: Fraction
    threshold: Fraction
    passes: bool
    cap: Fraction
    within_cap: bool


def check_theorem8(d_max: int) -> List[GammaCheckRow]:
    """Сравнения gamma_d < (43/50)/(d-1)! и gamma_d <= 1/(d-1)! в точной арифметике"""
    if d_max < 3:
        raise OutOfDomain(f"d_max должно быть не меньше 3, получено {d_max}")
    rows = []
    for d in range(3, d_max + 1):
        g = gamma(d)
        threshold = GAMMA_THRESHOLD_FACTOR / factorial(d - 1)
        cap = Fraction(1, factorial(d - 1))
        rows.append(GammaCheckRow(d, g, threshold, g < threshold, cap, g <= cap))
        if not g < threshold:
            logger.warning(f"gamma_{d} = {g} не меньше {threshold}")
    return rows


@dataclass(frozen=True)
class BoundRow:
    d: int
    n: int
    lower_ceil: int
    trivial_upper: int
    dp_upper: int
    phi3_exact: Optional[int] = None

    @property
    def gap(self) -> int:
        return self.dp_upper - self.lower_ceil

    def to_dict(self) -> dict:
        result = asdict(self)
        result['gap'] = self.gap
        return result


def bound_row(d: int, n: int) -> BoundRow:
    return BoundRow(
        d=d,
        n=n,
        lower_ceil=lower_bound_ceil(d, n),
        trivial_upper=trivial_upper(d, n),
        dp_upper=dp_upper(d, n),
        phi3_exact=phi3(n) if d == 3 else None,
    )


def bound_table(d_min: int = 3, d_max: int = 8, n_max: int = 40) -> pd.DataFrame:
    """Таблица оценок для d_min <= d <= d_max, d <= n <= n_max"""
    rows = [bound_row(d, n).to_dict() for d in range(d_min, d_max + 1) for n in range(d, n_max + 1)]
    logger.info(f"Таблица оценок: {len(rows)} строк (d от {d_min} до {d_max}, n до {n_max})")
    return pd.DataFrame(rows, columns=BOUND_COLUMNS)


def gamma_table(d_max: int) -> pd.DataFrame:
    """Таблица gamma_d и проверки порога 0.86/(d-1)!"""
    rows = [
        {
            'd': row.d,
            'gamma': str(row.gamma),
            'gamma_float': float(row.gamma),
            'threshold': str(row.threshold),
            'passes': row.passes,
            'within_cap': row.within_cap,
        }
        for row in check_theorem8(d_max)
    ]
    return pd.DataFrame(rows)


def measured_slack(d: int, n: int) -> Fraction:
    """(dp_upper - gamma_d * n^(d-1)) / n^(d-2): измеренный аналог константы при n^(d-2)"""
    if d < 2 or n < 1:
        raise OutOfDomain(f"Некорректные параметры: d={d}, n={n}")
    return (dp_upper(d, n) - gamma(d) * n ** (d - 1)) / Fraction(n ** (d - 2))


def dp_ratio_profile(d: int, ns: Iterable[int]) -> List[Tuple[int, Fraction]]:
    """Отношения dp_upper(d, n) / n^(d-1)"""
    return [(n, Fraction(dp_upper(d, n), n ** (d - 1))) for n in ns]

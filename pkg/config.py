"""
Конфигурация приложения blockset (минимальные d-блокирующие множества)
"""

import os
import logging
from typing import Optional
from dotenv import load_dotenv

# Загружаем переменные окружения
load_dotenv()

# Настройка логирования
logging.basicConfig(
    level=getattr(logging, os.getenv('LOG_LEVEL', 'INFO').upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler()  # stderr, stdout остается для JSON/CSV
    ]
)

logger = logging.getLogger(__name__)

# Параллелизм верификаторов (число процессов)
BLOCKSET_THREADS = int(os.getenv('BLOCKSET_THREADS', 1))

# Ограничение для проверки через связность G_E(X): перебор 2^n подмножеств
LINK_VERIFY_MAX_N = int(os.getenv('LINK_VERIFY_MAX_N', 22))

# Ограничения точного поиска
SEARCH_MAX_TUPLES = int(os.getenv('SEARCH_MAX_TUPLES', 120))
SEARCH_MAX_PARTITIONS = int(os.getenv('SEARCH_MAX_PARTITIONS', 5000))
SEARCH_MAX_NODES = int(os.getenv('SEARCH_MAX_NODES', 0))  # 0 - без ограничения

# Случайные семейства
DEFAULT_SEED = int(os.getenv('DEFAULT_SEED', 0))


def validate_config() -> bool:
    """
    Проверяет корректность конфигурации
    """
    positive_vars = [
        'BLOCKSET_THREADS', 'LINK_VERIFY_MAX_N',
        'SEARCH_MAX_TUPLES', 'SEARCH_MAX_PARTITIONS'
    ]

    invalid_vars = []
    for var in positive_vars:
        value = globals().get(var)
        if not isinstance(value, int) or value < 1:
            invalid_vars.append(f"{var}={value}")

    if not isinstance(SEARCH_MAX_NODES, int) or SEARCH_MAX_NODES < 0:
        invalid_vars.append(f"SEARCH_MAX_NODES={SEARCH_MAX_NODES}")

    if invalid_vars:
        logger.error(f"Некорректные значения в конфигурации: {invalid_vars}")
        return False

    logger.debug("Конфигурация загружена успешно")
    return True

def get_thread_count(cli_value: Optional[int] = None) -> int:
    """
    Возвращает число рабочих процессов: флаг CLI, затем BLOCKSET_THREADS, затем 1
    """
    if cli_value is not None:
        return max(1, int(cli_value))

    env_value = os.getenv('BLOCKSET_THREADS')
    if env_value:
        try:
            return max(1, int(env_value))
        except ValueError:
            logger.warning(f"Некорректное значение BLOCKSET_THREADS: {env_value}, используем 1")
            return 1

    return max(1, BLOCKSET_THREADS)

def get_node_budget(cli_value: Optional[int] = None) -> Optional[int]:
    """
    Возвращает лимит узлов поиска или None, если лимита нет
    """
    value = cli_value if cli_value is not None else SEARCH_MAX_NODES
    return value if value and value > 0 else None

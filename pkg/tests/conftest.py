"""
Конфигурация pytest с общими фикстурами
"""

import pytest
import os
import random
import tempfile
import shutil
import json
from unittest.mock import patch

# Добавляем корневую директорию в путь для импорта модулей
import sys
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core import Family

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


@pytest.fixture
def temp_dir():
    """Создает временную директорию для тестов"""
    temp_dir = tempfile.mkdtemp()
    yield temp_dir
    shutil.rmtree(temp_dir)


@pytest.fixture
def rng():
    """Детерминированный генератор случайных чисел"""
    return random.Random(20240611)


@pytest.fixture
def single_triple_family():
    """Одна тройка на четырех вершинах: не блокирующее семейство"""
    return Family.from_edges(4, 3, [(0, 1, 2)])


@pytest.fixture
def all_triples_n5():
    """Все тройки на пяти вершинах: заведомо блокирующее семейство"""
    from itertools import combinations
    return Family.from_edges(5, 3, combinations(range(5), 3))


@pytest.fixture
def golden_construct3_n6():
    """Эталонный документ construct3(6)"""
    with open(os.path.join(GOLDEN_DIR, "construct3_n6.json"), encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture
def golden_construct3_n6_text():
    """Эталонный документ construct3(6) как текст"""
    with open(os.path.join(GOLDEN_DIR, "construct3_n6.json"), encoding="utf-8") as f:
        return f.read()


@pytest.fixture
def family_file(temp_dir):
    """Записывает документ семейства во временный файл и возвращает путь"""
    def _write(payload, name="family.json"):
        path = os.path.join(temp_dir, name)
        with open(path, "w", encoding="utf-8") as f:
            if isinstance(payload, str):
                f.write(payload)
            else:
                json.dump(payload, f)
        return path
    return _write


@pytest.fixture
def patch_env_vars():
    """Патчит переменные окружения для тестов"""
    with patch.dict(os.environ, {
        'LOG_LEVEL': 'INFO',
        'BLOCKSET_THREADS': '1',
        'LINK_VERIFY_MAX_N': '22',
        'SEARCH_MAX_NODES': '0',
    }):
        yield

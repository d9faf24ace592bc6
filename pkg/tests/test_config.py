"""
Unit-тесты для модуля config.py
"""

import pytest
import os
from unittest.mock import patch

import config
from config import validate_config, get_thread_count, get_node_budget


class TestConfig:
    """Тесты для конфигурации"""

    @pytest.mark.unit
    def test_validate_config_success(self, patch_env_vars):
        """Тест успешной валидации конфигурации по умолчанию"""
        assert validate_config() is True

    @pytest.mark.unit
    def test_validate_config_non_positive_threads(self):
        """Тест валидации с нулевым числом процессов"""
        with patch.object(config, 'BLOCKSET_THREADS', 0):
            assert validate_config() is False

    @pytest.mark.unit
    def test_validate_config_negative_node_budget(self):
        """Тест валидации с отрицательным лимитом узлов"""
        with patch.object(config, 'SEARCH_MAX_NODES', -5):
            assert validate_config() is False

    @pytest.mark.unit
    def test_thread_count_cli_wins(self):
        """Флаг CLI важнее переменной окружения"""
        with patch.dict(os.environ, {'BLOCKSET_THREADS': '4'}):
            assert get_thread_count(2) == 2

    @pytest.mark.unit
    def test_thread_count_from_env(self):
        """Тест чтения BLOCKSET_THREADS в момент вызова"""
        with patch.dict(os.environ, {'BLOCKSET_THREADS': '3'}):
            assert get_thread_count() == 3

    @pytest.mark.unit
    def test_thread_count_invalid_env(self):
        """Некорректное значение окружения заменяется на 1"""
        with patch.dict(os.environ, {'BLOCKSET_THREADS': 'много'}):
            assert get_thread_count() == 1

    @pytest.mark.unit
    def test_thread_count_at_least_one(self):
        assert get_thread_count(0) == 1

    @pytest.mark.unit
    def test_node_budget(self):
        """0 и отсутствие значения означают поиск без лимита"""
        assert get_node_budget(500) == 500
        assert get_node_budget(0) is None
        with patch.object(config, 'SEARCH_MAX_NODES', 0):
            assert get_node_budget() is None
        with patch.object(config, 'SEARCH_MAX_NODES', 77):
            assert get_node_budget() == 77

#!/usr/bin/env python3
"""
Командная строка blockset: construct / verify / bounds / search / table
"""

import argparse
import json
import random
import sys
import time
from enum import IntEnum
from typing import List, Optional

import pandas as pd

from bounds import BOUND_COLUMNS, bound_row, bound_table, gamma_table
from config import DEFAULT_SEED, get_node_budget, get_thread_count, logger, validate_config
from construct3 import construct3
from construct_d import construct_d
from core import BlockingSetError, random_family
from models import FamilyDocument, parse_family_document
from search import min_blocking
from verify import necessary_link_violations, verify_enumerate, verify_link


class ExitCode(IntEnum):
    """Коды завершения"""
    OK = 0
    NOT_BLOCKING = 1
    ERROR = 2
    BUDGET_EXCEEDED = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['json', 'text', 'csv'], default='json', help='Формат вывода')
    common.add_argument('--output', default=None, help='Файл для вывода (по умолчанию stdout)')
    common.add_argument('--threads', type=int, default=None,
                        help='Число процессов (по умолчанию BLOCKSET_THREADS)')

    parser = argparse.ArgumentParser(prog='blockset', description='Минимальные d-блокирующие множества')
    subparsers = parser.add_subparsers(dest='command', required=True)

    construct = subparsers.add_parser('construct', parents=[common], help='Построить блокирующее множество')
    construct.add_argument('--d', type=int, required=True)
    construct.add_argument('--n', type=int, required=True)
    construct.add_argument('--trace', action='store_true', help='Добавить дерево построения')
    construct.add_argument('--random', action='store_true', help='Случайное семейство вместо конструкции')
    construct.add_argument('--density', type=float, default=0.5, help='Плотность случайного семейства')
    construct.add_argument('--seed', type=int, default=DEFAULT_SEED)

    verify = subparsers.add_parser('verify', parents=[common], help='Проверить документ семейства')
    verify.add_argument('--input', default='-', help='Файл документа (по умолчанию stdin)')
    verify.add_argument('--method', choices=['link', 'enum', 'both'], default='enum')

    bounds = subparsers.add_parser('bounds', parents=[common], help='Оценки для одной пары (d, n)')
    bounds.add_argument('--d', type=int, required=True)
    bounds.add_argument('--n', type=int, required=True)

    table = subparsers.add_parser('table', parents=[common], help='Таблица оценок или констант gamma_d')
    table.add_argument('--kind', choices=['bounds', 'gamma'], default='bounds')
    table.add_argument('--d-min', type=int, default=3)
    table.add_argument('--d-max', type=int, default=8)
    table.add_argument('--n-max', type=int, default=40)

    search = subparsers.add_parser('search', parents=[common], help='Точный минимум перебором')
    search.add_argument('--d', type=int, required=True)
    search.add_argument('--n', type=int, required=True)
    search.add_argument('--max-nodes', type=int, default=None)

    return parser


def _write_output(text: str, path: Optional[str]):
    if not text.endswith('\n'):
        text += '\n'
    if path:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info(f"Результат записан в {path}")
    else:
        sys.stdout.write(text)


def _read_input(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def _render_table(df: pd.DataFrame, fmt: str) -> str:
    if fmt == 'csv':
        return df.to_csv(index=False)
    if fmt == 'text':
        return df.to_string(index=False)
    return _dump(json.loads(df.to_json(orient='records')))


def _cmd_construct(args) -> ExitCode:
    if args.random:
        rng = random.Random(args.seed)
        family = random_family(args.n, args.d, args.density, rng)
        document = FamilyDocument.from_family(family)
    elif args.d == 3:
        trace = construct_d(3, args.n)[1] if args.trace else None
        document = FamilyDocument.from_colored(construct3(args.n), trace=trace)
    else:
        family, trace = construct_d(args.d, args.n)
        document = FamilyDocument.from_family(family, trace=trace if args.trace else None)

    logger.info(f"Построено семейство n={document.n}, d={document.d}: {len(document.edges)} кортежей")
    if args.format == 'json':
        _write_output(document.to_json(), args.output)
    else:
        lines = [f"n={document.n} d={document.d} edges={len(document.edges)}"]
        for index, edge in enumerate(document.edges):
            line = ' '.join(str(v) for v in edge)
            if document.colors:
                line += f" {document.colors[index].value}"
            lines.append(line)
        _write_output('\n'.join(lines), args.output)
    return ExitCode.OK


def _cmd_verify(args) -> ExitCode:
    family = parse_family_document(_read_input(args.input)).to_family()
    workers = get_thread_count(args.threads)

    violations = necessary_link_violations(family)
    if violations:
        logger.info(f"Нарушено необходимое условие на линки для {len(violations)} множеств, "
                    f"первое: {list(violations[0][0])} ({violations[0][1]})")

    reports = []
    if args.method in ('link', 'both'):
        reports.append(verify_link(family, workers=workers))
    if args.method in ('enum', 'both'):
        reports.append(verify_enumerate(family, workers=workers))

    verdicts = {report.blocking for report in reports}
    if len(verdicts) > 1:
        logger.error("Методы проверки разошлись во мнении")
        _write_output(_dump({'reports': [r.to_dict() for r in reports], 'agree': False}), args.output)
        return ExitCode.ERROR

    if args.format == 'text':
        lines = []
        for report in reports:
            verdict = 'блокирующее' if report.blocking else 'не блокирующее'
            lines.append(f"{report.method.value}: {verdict}, проверено {report.examined}")
            if report.witness is not None:
                lines.append(f"  свидетель: {_dump(report.witness.to_dict())}")
        _write_output('\n'.join(lines), args.output)
    elif len(reports) == 1:
        _write_output(_dump(reports[0].to_dict()), args.output)
    else:
        _write_output(_dump({'reports': [r.to_dict() for r in reports], 'agree': True}), args.output)

    return ExitCode.OK if reports[0].blocking else ExitCode.NOT_BLOCKING


def _cmd_bounds(args) -> ExitCode:
    row = bound_row(args.d, args.n)
    if args.format == 'json':
        _write_output(_dump(row.to_dict()), args.output)
    else:
        df = pd.DataFrame([row.to_dict()], columns=BOUND_COLUMNS)
        _write_output(_render_table(df, args.format), args.output)
    return ExitCode.OK


def _cmd_table(args) -> ExitCode:
    if args.kind == 'gamma':
        df = gamma_table(args.d_max)
    else:
        df = bound_table(args.d_min, args.d_max, args.n_max)
    _write_output(_render_table(df, args.format), args.output)
    return ExitCode.OK


def _cmd_search(args) -> ExitCode:
    result = min_blocking(args.n, args.d, budget=get_node_budget(args.max_nodes))
    if args.format == 'text':
        status = 'доказан' if result.proved_optimal else 'не доказан'
        lines = [f"phi_{args.d}({args.n}) = {result.optimum} (оптимум {status}, узлов {result.nodes_expanded})"]
        lines.extend(' '.join(str(v) for v in edge) for edge in result.witness_family.edges)
        _write_output('\n'.join(lines), args.output)
    else:
        _write_output(_dump(result.to_dict()), args.output)
    return ExitCode.OK if result.proved_optimal else ExitCode.BUDGET_EXCEEDED


COMMANDS = {
    'construct': _cmd_construct,
    'verify': _cmd_verify,
    'bounds': _cmd_bounds,
    'table': _cmd_table,
    'search': _cmd_search,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Точка входа CLI; возвращает код завершения"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if not validate_config():
        logger.error("Ошибка конфигурации. Завершение работы.")
        return ExitCode.ERROR

    start_time = time.time()
    try:
        code = COMMANDS[args.command](args)
    except BlockingSetError as e:
        logger.error(f"Ошибка: {e}")
        return ExitCode.ERROR
    except OSError as e:
        logger.error(f"Ошибка ввода-вывода: {e}")
        return ExitCode.ERROR

    logger.debug(f"Команда {args.command} выполнена за {time.time() - start_time:.2f} секунд")
    return int(code)


if __name__ == "__main__":
    sys.exit(run())

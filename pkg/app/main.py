import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from pydantic import ValidationError
from pythonjsonlogger import jsonlogger

from app.cli.scene import parse_scene, serialize_scene
from app.core.config import settings
from app.core.exceptions import ApolloniusException, InputError
from app.core.models import FuzzConfig
from app.services.evaluator import PREDICATES, PredicateEvaluator
from app.services.fuzz import DEGREE_TARGETS, FuzzService

logger = logging.getLogger(__name__)


# Настройка логирования
def setup_logging() -> None:
    """
    Настройка системы логирования приложения.

    Логи пишутся в stderr, чтобы строки результата в stdout оставались
    чистыми. При settings.log_json используется JSON-формат. Уровень
    логирования numpy и scipy понижается до WARNING.
    """
    handler = logging.StreamHandler(sys.stderr)
    if settings.log_json:
        handler.setFormatter(jsonlogger.JsonFormatter(settings.log_format))
    else:
        handler.setFormatter(logging.Formatter(settings.log_format))
    logging.basicConfig(level=settings.log_level_value, handlers=[handler], force=True)

    # Устанавливаем уровень логирования для внешних библиотек
    logging.getLogger("numpy").setLevel(logging.WARNING)
    logging.getLogger("scipy").setLevel(logging.WARNING)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser, сообщающий об ошибках исключением с кодом 4."""

    def error(self, message: str) -> NoReturn:
        raise InputError(f"Ошибка аргументов: {message}", {"usage": self.format_usage()})


def _fuzz_config(args: argparse.Namespace, predicate: str) -> FuzzConfig:
    values = settings.fuzz_defaults(predicate).model_dump()
    if args.seed is not None:
        values["seed"] = args.seed
    if args.count is not None:
        values["count"] = args.count
    if args.overlap:
        values["overlap"] = True
    try:
        return FuzzConfig.model_validate(values)
    except ValidationError as exc:
        raise InputError(
            "Некорректные параметры генерации", {"errors": exc.errors(include_url=False)}
        ) from exc


def build_parser() -> argparse.ArgumentParser:
    """
    Парсер командной строки с подкомандами eval, fuzz, gen и degree-audit.

    Returns
    -------
    argparse.ArgumentParser
        Настроенный парсер.

    """
    parser = _Parser(prog="apollonius", description=settings.app_name)
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {settings.app_version}"
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    evaluate = commands.add_parser("eval", help="Вычислить предикат на сферах сцены")
    evaluate.add_argument("predicate", choices=sorted(PREDICATES))
    evaluate.add_argument("ids", nargs="+", help="Идентификаторы сфер в порядке аргументов")
    evaluate.add_argument("--scene", type=Path, required=True, help="Файл сцены")
    evaluate.add_argument("--audit", action="store_true", help="Вывести max_degree=<n>")
    evaluate.add_argument(
        "--compare-oracle", action="store_true", help="Вывести ответ численного оракула"
    )

    fuzz = commands.add_parser("fuzz", help="Сравнить точный предикат с оракулом")
    fuzz.add_argument("predicate", choices=sorted(PREDICATES))

    gen = commands.add_parser("gen", help="Сгенерировать случайную сцену")
    audit = commands.add_parser("degree-audit", help="Измерить степени знаковых тестов")

    for sub in (fuzz, gen, audit):
        sub.add_argument("--seed", type=int, default=None, help="Seed генератора")
        sub.add_argument("--count", type=int, default=None, help="Количество экземпляров")
        sub.add_argument(
            "--overlap", action="store_true", help="Допускать пересекающиеся сферы"
        )
    return parser


def _read_scene(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"Не удалось прочитать сцену {path}", {"path": str(path)}) from exc


def _run_eval(args: argparse.Namespace) -> int:
    scene = parse_scene(_read_scene(args.scene))
    evaluator = PredicateEvaluator(scene)
    result = evaluator.evaluate(args.predicate, args.ids, compare_oracle=args.compare_oracle)
    print(result.token)
    if args.audit:
        print(f"max_degree={result.max_degree}")
    if args.compare_oracle:
        print(f"oracle={result.oracle}")
    return 0


def _run_fuzz(args: argparse.Namespace) -> int:
    report = FuzzService(_fuzz_config(args, args.predicate)).run()
    print(report.summary)
    return 0 if report.ok else 1


def _run_gen(args: argparse.Namespace) -> int:
    if args.count is None:
        args.count = settings.gen_count
    scene = FuzzService(_fuzz_config(args, "shadow")).generate_scene()
    sys.stdout.write(serialize_scene(scene))
    return 0


def _run_degree_audit(args: argparse.Namespace) -> int:
    measured = FuzzService(_fuzz_config(args, "shadow")).degree_audit()
    for name, degree in measured.items():
        target = DEGREE_TARGETS[name]
        line = f"{name} max_degree={degree} target={target}"
        if degree > target:
            line += f" gap={degree - target}"
        print(line)
    return 0


_COMMANDS = {
    "eval": _run_eval,
    "fuzz": _run_fuzz,
    "gen": _run_gen,
    "degree-audit": _run_degree_audit,
}


def main(argv: Sequence[str] | None = None) -> int:
    """
    Точка входа CLI.

    Args:
    ----
        argv (Sequence[str] | None): Аргументы без имени программы.

    Returns:
    -------
    int
        Код завершения: 0 при успехе, код класса исключения при ошибке.

    """
    setup_logging()
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except ApolloniusException as exc:
        logger.error(f"{type(exc).__name__}: {exc.message} {exc.details}")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

import logging
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SignTest:
    """
    Запись об одной проверке знака.

    Attributes
    ----------
        degree: Формальная алгебраическая степень проверяемой величины.
        label: Имя величины для отладочного вывода.

    """

    degree: int
    label: str = ""


# Стек журналов активных вызовов; каждый журнал локален для своего вызова
_active_logs: ContextVar[tuple[list[SignTest], ...]] = ContextVar("active_logs", default=())


@contextmanager
def recording() -> Iterator[list[SignTest]]:
    """
    Запись всех проверок знака внутри блока.

    Вложенные блоки пишут и в свой журнал, и во все внешние.

    Yields
    ------
        Журнал проверок знака текущего блока.

    """
    log: list[SignTest] = []
    token = _active_logs.set((*_active_logs.get(), log))
    try:
        yield log
    finally:
        _active_logs.reset(token)


def record(degree: int, label: str = "") -> None:
    """Регистрирует проверку знака во всех активных журналах."""
    logs = _active_logs.get()
    if not logs:
        return
    entry = SignTest(degree=degree, label=label)
    for log in logs:
        log.append(entry)


def degree_audit_report(expr_log: Sequence[SignTest]) -> int:
    """
    Максимальная степень среди записанных проверок знака.

    Args:
    ----
        expr_log (Sequence[SignTest]): Журнал одного вызова предиката.

    Returns:
    -------
    int
        Максимальная формальная степень, 0 для пустого журнала.

    """
    if not expr_log:
        return 0
    worst = max(expr_log, key=lambda test: test.degree)
    logger.debug(f"Максимальная степень {worst.degree} ({worst.label or 'без имени'})")
    return worst.degree

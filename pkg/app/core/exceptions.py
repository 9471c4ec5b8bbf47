from typing import Any, ClassVar


class ApolloniusException(Exception):
    """
    Базовое исключение для всех ошибок библиотеки предикатов.

    Предоставляет единый интерфейс с сообщением, техническими деталями
    и кодом завершения для CLI.

    Attributes
    ----------
        message: Основное сообщение об ошибке.
        details: Словарь с дополнительной технической информацией.
        exit_code: Код завершения команды eval.

    """

    exit_code: ClassVar[int] = 1

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        """
        Инициализация исключения.

        Args:
        ----
            message (str): Сообщение об ошибке.
            details (dict[str, Any] | None): Дополнительные детали ошибки.

        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


# Вырожденные конфигурации (нарушено предположение общего положения)


class DegenerateConfiguration(ApolloniusException):
    """
    Вырожденная конфигурация сфер.

    Возникает, когда решающий знак равен нулю и ответ предиката
    не определён в рамках предположения общего положения.
    """

    exit_code: ClassVar[int] = 2


class DegenerateShadow(DegenerateConfiguration):
    """Тень сферы не классифицируется: нулевой знак или несогласованные знаки."""


class DegenerateOrder(DegenerateConfiguration):
    """Порядок вершин на трисектрисе не определяется однозначно."""


class DegenerateEdgeConflict(DegenerateConfiguration):
    """Вырожденность в одном из подпредикатов EdgeConflict."""


class DegenerateDouble(DegenerateConfiguration):
    """Двукратный корень: касательная сфера существует как двойное решение."""


class InfinitelyMany(DegenerateConfiguration):
    """Бесконечно много касательных сфер (равные радиусы, центры на одной окружности)."""


class PoleDegeneracy(DegenerateConfiguration):
    """
    Сфера проходит через полюс после уменьшения радиусов.

    Степень точки p̄ относительно полюса равна нулю, инверсия не определена.
    """


class NegativeDiscriminant(DegenerateConfiguration):
    """Отрицательный дискриминант элемента квадратичного расширения."""


# Нарушение предусловий


class PreconditionViolation(ApolloniusException):
    """
    Нарушено предусловие предиката.

    Используется, когда входные сферы не удовлетворяют контракту
    предиката (вложенность, тип трисектрисы, существование вершины).
    """

    exit_code: ClassVar[int] = 3


class ContainedSites(PreconditionViolation):
    """Одна сфера содержится в другой."""


class NotHyperbolic(PreconditionViolation):
    """Трисектриса не гиперболическая."""


class VertexNotFound(PreconditionViolation):
    """Вершина Аполлония с запрошенной ориентацией не существует."""


class InvalidEdge(PreconditionViolation):
    """Пара сфер l, m не задаёт ребро v_ijkl ≺ v_ikjm."""


class ShapeMismatch(PreconditionViolation):
    """Число строк или столбцов не соответствует форме определителя."""


# Ошибки входных данных


class InputError(ApolloniusException):
    """Некорректные входные данные командной строки или файла сцены."""

    exit_code: ClassVar[int] = 4


class ParseError(InputError):
    """
    Ошибка разбора файла сцены.

    Номер строки передаётся в details["line"].
    """


class DuplicateId(InputError):
    """Повторный идентификатор сферы в сцене."""


class NegativeRadius(InputError):
    """Отрицательный радиус сферы."""


class ArityError(InputError):
    """Число идентификаторов не совпадает с арностью предиката."""


class UnknownSite(InputError):
    """Идентификатор сферы отсутствует в сцене."""


# Ошибки численного оракула


class OracleFailure(ApolloniusException):
    """
    Численный оракул не дал надёжного ответа.

    Экземпляр отбрасывается при сравнении и не считается расхождением.
    """


class NoConvergence(OracleFailure):
    """Итерационный метод не сошёлся."""


class MarginTooSmall(OracleFailure):
    """Решающий зазор меньше допуска оракула."""

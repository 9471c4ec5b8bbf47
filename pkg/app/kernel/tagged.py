from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from app.kernel.audit import record
from app.kernel.sign import Sign, sign_of

Operand = Union["DegreeTagged", Fraction, int]


@dataclass(frozen=True, slots=True)
class DegreeTagged:
    """
    Точное рациональное значение с формальной алгебраической степенью.

    Степень входной координаты или радиуса равна 1, литерала 0.
    Произведение складывает степени, сумма и разность берут максимум;
    ни одна операция степень не уменьшает.

    Attributes
    ----------
        value: Точное значение.
        degree: Степень по входным величинам.

    """

    value: Fraction
    degree: int = 0

    @classmethod
    def input(cls, value: Fraction | int) -> "DegreeTagged":
        return cls(Fraction(value), 1)

    @classmethod
    def literal(cls, value: Fraction | int) -> "DegreeTagged":
        return cls(Fraction(value), 0)

    @staticmethod
    def _coerce(other: Operand) -> "DegreeTagged":
        if isinstance(other, DegreeTagged):
            return other
        return DegreeTagged(Fraction(other), 0)

    def __add__(self, other: Operand) -> "DegreeTagged":
        rhs = self._coerce(other)
        return DegreeTagged(self.value + rhs.value, max(self.degree, rhs.degree))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "DegreeTagged":
        rhs = self._coerce(other)
        return DegreeTagged(self.value - rhs.value, max(self.degree, rhs.degree))

    def __rsub__(self, other: Operand) -> "DegreeTagged":
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> "DegreeTagged":
        rhs = self._coerce(other)
        return DegreeTagged(self.value * rhs.value, self.degree + rhs.degree)

    __rmul__ = __mul__

    def __neg__(self) -> "DegreeTagged":
        return DegreeTagged(-self.value, self.degree)

    def __pow__(self, exponent: int) -> "DegreeTagged":
        if exponent < 0:
            raise ValueError("Отрицательная степень запрещена на пути вычисления знака")
        result = DegreeTagged.literal(1)
        for _ in range(exponent):
            result = result * self
        return result

    def sign(self, label: str = "") -> Sign:
        """
        Знак значения с регистрацией проверки в журнале степеней.

        Args:
        ----
            label (str): Имя величины для журнала.

        Returns:
        -------
        Sign
            Точный знак.

        """
        record(self.degree, label)
        return sign_of(self.value)

    def __repr__(self) -> str:
        return f"DegreeTagged({self.value}, deg={self.degree})"


def tagged_sum(terms: list[DegreeTagged]) -> DegreeTagged:
    total = DegreeTagged.literal(0)
    for term in terms:
        total = total + term
    return total

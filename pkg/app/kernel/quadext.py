from dataclasses import dataclass
from typing import Union

from app.core.exceptions import NegativeDiscriminant
from app.kernel.sign import Sign
from app.kernel.tagged import DegreeTagged

Scalar = Union[DegreeTagged, int]


@dataclass(frozen=True, slots=True)
class QuadExtScalar:
    """
    Элемент квадратичного расширения a + b·√disc.

    Все компоненты имеют свою формальную степень; произведение двух
    элементов требует общего дискриминанта.
    """

    a: DegreeTagged
    b: DegreeTagged
    disc: DegreeTagged

    @classmethod
    def rational(cls, a: DegreeTagged, disc: DegreeTagged) -> "QuadExtScalar":
        return cls(a, DegreeTagged.literal(0), disc)

    def _same_field(self, other: "QuadExtScalar") -> None:
        if self.disc.value != other.disc.value:
            raise ValueError("Элементы разных квадратичных расширений")

    def __add__(self, other: "QuadExtScalar") -> "QuadExtScalar":
        self._same_field(other)
        return QuadExtScalar(self.a + other.a, self.b + other.b, self.disc)

    def __sub__(self, other: "QuadExtScalar") -> "QuadExtScalar":
        self._same_field(other)
        return QuadExtScalar(self.a - other.a, self.b - other.b, self.disc)

    def __neg__(self) -> "QuadExtScalar":
        return QuadExtScalar(-self.a, -self.b, self.disc)

    def __mul__(self, other: Union["QuadExtScalar", Scalar]) -> "QuadExtScalar":
        if isinstance(other, QuadExtScalar):
            self._same_field(other)
            return QuadExtScalar(
                self.a * other.a + self.b * other.b * self.disc,
                self.a * other.b + self.b * other.a,
                self.disc,
            )
        return QuadExtScalar(self.a * other, self.b * other, self.disc)

    __rmul__ = __mul__


def sign_of_quadext(x: QuadExtScalar, label: str = "") -> Sign:
    """
    Точный знак a + b·√disc по правилу трёх знаков.

    Используются только sign(a), sign(b) и sign(a² − b²·disc);
    все три проверки регистрируются в журнале степеней.

    Args:
    ----
        x (QuadExtScalar): Элемент расширения.
        label (str): Имя величины для журнала.

    Returns:
    -------
    Sign
        Точный знак.

    Raises
    ------
        NegativeDiscriminant: Если disc < 0.

    """
    disc_sign = x.disc.sign(f"{label}:disc")
    if disc_sign is Sign.NEG:
        raise NegativeDiscriminant(
            "Отрицательный дискриминант квадратичного расширения",
            {"disc": str(x.disc.value), "label": label},
        )
    sa = x.a.sign(f"{label}:a")
    sb = x.b.sign(f"{label}:b")
    if disc_sign is Sign.ZERO or sb is Sign.ZERO:
        return sa
    if sa is Sign.ZERO:
        return sb
    if sa is sb:
        return sa
    # знаки a и b·√disc противоположны: решает сравнение квадратов
    return sa * (x.a * x.a - x.b * x.b * x.disc).sign(f"{label}:norm")

from enum import IntEnum
from fractions import Fraction


class Sign(IntEnum):
    """
    Точный знак величины.

    Порядок NEG < ZERO < POS совпадает с порядком целых -1, 0, 1;
    отрицание меняет NEG и POS местами, произведение знаков есть знак произведения.
    """

    NEG = -1
    ZERO = 0
    POS = 1

    def __neg__(self) -> "Sign":  # type: ignore[override]
        return Sign(-int(self))

    def __mul__(self, other: object) -> "Sign":  # type: ignore[override]
        if not isinstance(other, int):
            return NotImplemented
        return Sign(int(self) * (other > 0) - int(self) * (other < 0))

    __rmul__ = __mul__

    @property
    def token(self) -> str:
        return self.name


def sign_of(x: Fraction | int) -> Sign:
    """
    Знак рационального числа.

    Args:
    ----
        x (Fraction | int): Точное число.

    Returns:
    -------
    Sign
        NEG, ZERO или POS.

    """
    if x > 0:
        return Sign.POS
    if x < 0:
        return Sign.NEG
    return Sign.ZERO

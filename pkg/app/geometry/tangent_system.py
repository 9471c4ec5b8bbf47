"""
Система касательных плоскостей в W-пространстве в E-форме без деления.

Для трёх неполярных сфер с приведёнными строками b_n = (x̄_n, ȳ_n, z̄_n),
радиусами r̄_n и степенями p̄_n касательная плоскость N·w + d = 0 удовлетворяет
N·b_n = r̄_n − d·p̄_n. По правилу Крамера N = (P − d·Q)/E, где
E = det[b], P и Q получены заменой столбца на r̄ и p̄ соответственно.
Условие |N| = 1 даёт квадратное уравнение на d с дискриминантом 4·E²·K,
K = |Q|² − |R|², R = (E^{xrp}, E^{yrp}, E^{zrp}).
"""

from dataclasses import dataclass

from app.geometry.inversion import Barred
from app.kernel.linalg import Vec3, det, dot, norm2, replace_column
from app.kernel.tagged import DegreeTagged


@dataclass(frozen=True, slots=True)
class TangentSystem:
    """
    Величины E, P, Q, R, K системы касания для трёх строк.

    Attributes
    ----------
        rows: Приведённые векторы центров в порядке аргументов.
        r: Приведённые радиусы r̄_n.
        p: Степени p̄_n.
        E: det[b_1; b_2; b_3].
        P: Числители Крамера для столбца r̄.
        Q: Числители Крамера для столбца p̄.
        R: Миноры E^{xrp}, E^{yrp}, E^{zrp}.
        K: |Q|² − |R|².

    """

    rows: tuple[Vec3, Vec3, Vec3]
    r: tuple[DegreeTagged, DegreeTagged, DegreeTagged]
    p: tuple[DegreeTagged, DegreeTagged, DegreeTagged]
    E: DegreeTagged
    P: Vec3
    Q: Vec3
    R: Vec3
    K: DegreeTagged

    @property
    def PQ(self) -> DegreeTagged:
        return dot(self.P, self.Q)

    @property
    def Q2(self) -> DegreeTagged:
        return norm2(self.Q)

    @property
    def P2(self) -> DegreeTagged:
        return norm2(self.P)


def build_system(
    rows: tuple[Vec3, Vec3, Vec3],
    r: tuple[DegreeTagged, DegreeTagged, DegreeTagged],
    p: tuple[DegreeTagged, DegreeTagged, DegreeTagged],
) -> TangentSystem:
    """
    Вычисление E, P, Q, R, K для трёх строк.

    Args:
    ----
        rows: Векторы b_n (возможно, сдвинутые).
        r: Приведённые радиусы.
        p: Степени относительно полюса.

    Returns:
    -------
    TangentSystem
        Все величины системы касания.

    """
    matrix = [list(row) for row in rows]
    E = det(matrix)
    P = tuple(det(replace_column(matrix, m, r)) for m in range(3))
    Q = tuple(det(replace_column(matrix, m, p)) for m in range(3))
    R = tuple(
        det([[row[m], r[n], p[n]] for n, row in enumerate(rows)]) for m in range(3)
    )
    K = norm2(Q) - norm2(R)
    return TangentSystem(rows, r, p, E, P, Q, R, K)  # type: ignore[arg-type]


def system_from_barred(barred_rows: list[Barred]) -> TangentSystem:
    """Система касания для трёх приведённых сфер без сдвига."""
    return build_system(
        (barred_rows[0].vec, barred_rows[1].vec, barred_rows[2].vec),
        (barred_rows[0].r, barred_rows[1].r, barred_rows[2].r),
        (barred_rows[0].p, barred_rows[1].p, barred_rows[2].p),
    )


def shifted_system(base: TangentSystem, axis: int) -> TangentSystem:
    """
    Система касания после сдвига W-пространства на единичный вектор оси.

    Строки b_n заменяются на b_n − p̄_n·o; плоскость N·w + d = 0 переходит
    в N·w' + d' = 0 с d' = d + N·o.
    """
    shifted = []
    for row, p in zip(base.rows, base.p, strict=True):
        shifted.append(tuple(row[m] - p if m == axis else row[m] for m in range(3)))
    return build_system(tuple(shifted), base.r, base.p)  # type: ignore[arg-type]

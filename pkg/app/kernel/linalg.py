from collections.abc import Sequence

from app.kernel.tagged import DegreeTagged, tagged_sum

Vec3 = tuple[DegreeTagged, DegreeTagged, DegreeTagged]
Matrix = Sequence[Sequence[DegreeTagged]]


def det(rows: Matrix) -> DegreeTagged:
    """
    Определитель квадратной матрицы разложением Лапласа.

    Нулевые элементы не пропускаются, поэтому степень результата
    формальная и не зависит от конкретных значений.

    Args:
    ----
        rows (Matrix): Строки матрицы размера n×n, n ≤ 4.

    Returns:
    -------
    DegreeTagged
        Точный определитель.

    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("Матрица должна быть квадратной")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    terms = []
    for col in range(n):
        minor = [row[:col] + row[col + 1 :] for row in (list(r) for r in rows[1:])]
        term = rows[0][col] * det(minor)
        terms.append(term if col % 2 == 0 else -term)
    return tagged_sum(terms)


def replace_column(
    rows: Matrix, index: int, column: Sequence[DegreeTagged]
) -> list[list[DegreeTagged]]:
    """Копия матрицы со столбцом index, заменённым на column."""
    return [list(row[:index]) + [column[n]] + list(row[index + 1 :]) for n, row in enumerate(rows)]


def dot(a: Sequence[DegreeTagged], b: Sequence[DegreeTagged]) -> DegreeTagged:
    return tagged_sum([x * y for x, y in zip(a, b, strict=True)])


def cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def sub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def scale(a: Vec3, factor: DegreeTagged) -> Vec3:
    return (a[0] * factor, a[1] * factor, a[2] * factor)


def norm2(a: Sequence[DegreeTagged]) -> DegreeTagged:
    return dot(a, a)

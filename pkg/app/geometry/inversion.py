import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from app.core.exceptions import ContainedSites, PoleDegeneracy, ShapeMismatch
from app.core.models import DetKind, DetQuery, InvertedSite, Point3, Site
from app.kernel.linalg import Vec3, det as det_rows
from app.kernel.sign import Sign
from app.kernel.tagged import DegreeTagged

logger = logging.getLogger(__name__)

ONE = DegreeTagged.literal(1)


@dataclass(frozen=True, slots=True)
class Barred:
    """
    Координаты сферы относительно полюса после уменьшения радиусов.

    x̄, ȳ, z̄, r̄ имеют степень 1, p̄ = x̄² + ȳ² + z̄² − r̄² имеет степень 2.
    """

    x: DegreeTagged
    y: DegreeTagged
    z: DegreeTagged
    r: DegreeTagged
    p: DegreeTagged

    @property
    def vec(self) -> Vec3:
        return (self.x, self.y, self.z)

    def column(self, name: str) -> DegreeTagged:
        return {"x": self.x, "y": self.y, "z": self.z, "r": self.r, "p": self.p}[name]


def center_of(site: Site) -> Vec3:
    """Центр сферы как тройка входных величин степени 1."""
    x, y, z = site.center
    return (DegreeTagged.input(x), DegreeTagged.input(y), DegreeTagged.input(z))


def radius_of(site: Site) -> DegreeTagged:
    return DegreeTagged.input(site.radius)


def select_pole(sites: Sequence[Site]) -> int:
    """
    Позиция полюса: сфера минимального радиуса, при равенстве первая по порядку.

    Args:
    ----
        sites (Sequence[Site]): Сферы вызова в порядке аргументов.

    Returns:
    -------
    int
        Индекс полюса в sites.

    """
    return min(range(len(sites)), key=lambda n: (sites[n].radius, n))


def barred(site: Site, pole: Site) -> Barred:
    """
    Приведённые координаты сферы относительно полюса.

    Args:
    ----
        site (Site): Исходная сфера.
        pole (Site): Полюс инверсии.

    Returns:
    -------
    Barred
        x̄, ȳ, z̄, r̄, p̄ с формальными степенями.

    """
    cx, cy, cz = center_of(site)
    px, py, pz = center_of(pole)
    xbar, ybar, zbar = cx - px, cy - py, cz - pz
    rbar = radius_of(site) - radius_of(pole)
    pbar = xbar * xbar + ybar * ybar + zbar * zbar - rbar * rbar
    return Barred(xbar, ybar, zbar, rbar, pbar)


def checked_barred(site: Site, pole: Site, label: str = "") -> Barred:
    """
    Приведённые координаты с проверкой p̄ > 0.

    Raises
    ------
        PoleDegeneracy: p̄ = 0, сфера проходит через полюс.
        ContainedSites: p̄ < 0, одна из сфер содержит другую.

    """
    b = barred(site, pole)
    sign = b.p.sign(f"pbar{label}")
    if sign is Sign.ZERO:
        raise PoleDegeneracy(
            "Сфера проходит через полюс после уменьшения радиусов",
            {"site": site.id, "pole": pole.id},
        )
    if sign is Sign.NEG:
        raise ContainedSites(
            "Сфера содержит полюс или содержится в нём", {"site": site.id, "pole": pole.id}
        )
    return b


def check_not_contained(a: Site, b: Site) -> None:
    """
    Проверка невложенности пары сфер: ‖C_a − C_b‖² > (r_a − r_b)².

    Raises
    ------
        ContainedSites: Если одна сфера содержит другую (или касается изнутри).

    """
    if barred(a, b).p.sign("containment") is not Sign.POS:
        raise ContainedSites(
            "Одна сфера содержится в другой",
            {"a": a.id or str(a.center), "b": b.id or str(b.center)},
        )


def _resolve_pole(sites: Sequence[Site], pole: int | str) -> int:
    if isinstance(pole, int):
        if not 0 <= pole < len(sites):
            raise ShapeMismatch("Индекс полюса вне набора сфер", {"pole": pole})
        return pole
    for n, site in enumerate(sites):
        if site.id == pole:
            return n
    raise ShapeMismatch(f"Полюс {pole} отсутствует среди сфер", {"pole": pole})


def reduce_and_invert(sites: Sequence[Site], pole: int | str) -> list[InvertedSite]:
    """
    Уменьшение радиусов на радиус полюса и инверсия относительно его центра.

    Args:
    ----
        sites (Sequence[Site]): Сферы, среди которых находится полюс.
        pole (int | str): Индекс полюса или его идентификатор.

    Returns:
    -------
    list[InvertedSite]
        Образы всех сфер, кроме полюса, в исходном порядке.

    Raises
    ------
        PoleDegeneracy: Если p̄ = 0 для какой-либо сферы.
        ContainedSites: Если p̄ < 0.

    """
    pole_index = _resolve_pole(sites, pole)
    pole_site = sites[pole_index]
    result = []
    for n, site in enumerate(sites):
        if n == pole_index:
            continue
        b = checked_barred(site, pole_site, f"[{n}]")
        p = b.p.value
        result.append(
            InvertedSite(
                u=b.x.value / p,
                v=b.y.value / p,
                w=b.z.value / p,
                rho=b.r.value / p,
                pbar=p,
                xbar=b.x,
                ybar=b.y,
                zbar=b.z,
                rbar=b.r,
                pbar_tagged=b.p,
                source=site.label(str(n)),
                pole=pole_site.label(str(pole_index)),
            )
        )
    logger.debug(f"Инверсия относительно {pole_site.label(str(pole_index))}: {len(result)} сфер")
    return result


def invert_point(point: Point3, pole: Point3) -> Point3:
    """
    Инверсия точки относительно единичной сферы с центром в полюсе.

    Отображение является инволюцией: повторное применение возвращает точку.
    """
    dx, dy, dz = (point[0] - pole[0], point[1] - pole[1], point[2] - pole[2])
    n2 = dx * dx + dy * dy + dz * dz
    if n2 == 0:
        raise PoleDegeneracy("Инверсия полюса не определена", {"point": [str(c) for c in point]})
    return (pole[0] + dx / n2, pole[1] + dy / n2, pole[2] + dz / n2)


_SHAPES: dict[DetKind, tuple[int, int, bool]] = {
    # (столбцы, строки, столбец единиц)
    DetKind.D2: (2, 3, True),
    DetKind.D3: (3, 3, False),
    DetKind.D3_ONES: (3, 4, True),
    DetKind.D4: (4, 4, False),
    DetKind.E3: (3, 3, False),
    DetKind.E4: (4, 4, False),
}


def _raw_entry(site: Site, column: str, pole: Site | None) -> DegreeTagged:
    x, y, z = center_of(site)
    r = radius_of(site)
    if column in ("x", "y", "z", "r"):
        return {"x": x, "y": y, "z": z, "r": r}[column]
    if column == "p":
        return x * x + y * y + z * z - r * r
    if pole is None:
        raise ShapeMismatch("Инвертированные координаты требуют полюса", {"column": column})
    b = checked_barred(site, pole)
    # инвертированные координаты считаются величинами степени 1
    num = {"u": b.x, "v": b.y, "w": b.z, "rho": b.r}[column]
    return DegreeTagged(num.value / b.p.value, 1)


def det(query: DetQuery) -> DegreeTagged:
    """
    Определитель D- или E-вида над набором сфер.

    D-определители строятся по исходным (x, y, z, r, p) или инвертированным
    (u, v, w, rho) координатам, E-определители по приведённым к полюсу
    x̄, ȳ, z̄, r̄, p̄; строка полюса в E-определитель не входит.

    Args:
    ----
        query (DetQuery): Форма, селекторы столбцов, сферы и полюс.

    Returns:
    -------
    DegreeTagged
        Точное значение с формальной степенью.

    Raises
    ------
        ShapeMismatch: Если число столбцов или строк не совпадает с формой.

    """
    n_cols, n_rows, ones = _SHAPES[query.kind]
    if len(query.columns) != n_cols:
        raise ShapeMismatch(
            f"Форма {query.kind.value} требует {n_cols} столбцов",
            {"columns": list(query.columns)},
        )
    if query.kind in (DetKind.E3, DetKind.E4):
        if query.pole is None:
            raise ShapeMismatch("E-определитель требует полюса", {"kind": query.kind.value})
        if any(c in ("u", "v", "w", "rho") for c in query.columns):
            raise ShapeMismatch("E-определитель строится по приведённым координатам", {})
        pole = query.pole
        row_sites = [s for s in query.sites if s != pole]
        if len(row_sites) != n_rows:
            raise ShapeMismatch(
                f"Форма {query.kind.value} требует {n_rows} сфер помимо полюса",
                {"rows": len(row_sites)},
            )
        rows = []
        for site in row_sites:
            b = checked_barred(site, pole)
            rows.append([b.column(c) for c in query.columns])
        return det_rows(rows)
    if len(query.sites) != n_rows:
        raise ShapeMismatch(
            f"Форма {query.kind.value} требует {n_rows} сфер", {"rows": len(query.sites)}
        )
    rows = []
    for site in query.sites:
        row = [_raw_entry(site, c, query.pole) for c in query.columns]
        if ones:
            row.append(ONE)
        rows.append(row)
    return det_rows(rows)


def orient3d_tagged(p: Vec3, a: Vec3, b: Vec3, c: Vec3, label: str = "orient3d") -> Sign:
    """Знак det[B − A; C − A; P − A] для точек с формальными степенями."""
    rows = [
        [b[0] - a[0], b[1] - a[1], b[2] - a[2]],
        [c[0] - a[0], c[1] - a[1], c[2] - a[2]],
        [p[0] - a[0], p[1] - a[1], p[2] - a[2]],
    ]
    return det_rows(rows).sign(label)


def orient3d(p: Point3, a: Point3, b: Point3, c: Point3) -> Sign:
    """
    Ориентация Orient3D(P, A, B, C) = sign det[B − A; C − A; P − A].

    Args:
    ----
        p, a, b, c: Рациональные точки.

    Returns:
    -------
    Sign
        POS для правой тройки B − A, C − A, P − A.

    """

    def tag(point: Point3) -> Vec3:
        return (
            DegreeTagged.input(Fraction(point[0])),
            DegreeTagged.input(Fraction(point[1])),
            DegreeTagged.input(Fraction(point[2])),
        )

    return orient3d_tagged(tag(p), tag(a), tag(b), tag(c))

import logging

from app.core.exceptions import DegenerateConfiguration
from app.core.models import InConeKind, Site, TrisectorKind
from app.geometry.inversion import ONE, center_of, check_not_contained, radius_of
from app.kernel.linalg import Vec3, cross, det, dot, sub
from app.kernel.sign import Sign
from app.kernel.tagged import DegreeTagged

logger = logging.getLogger(__name__)


def incone(s_a: Site, s_b: Site, s_c: Site) -> InConeKind:
    """
    Положение сферы S_c относительно замкнутого полуконуса сфер S_a и S_b.

    Полуконус образован касательными к S_a и S_b и начинается у сферы
    меньшего радиуса. Для равных радиусов это цилиндр.

    Args:
    ----
        s_a (Site): Первая сфера конуса.
        s_b (Site): Вторая сфера конуса.
        s_c (Site): Проверяемая сфера.

    Returns:
    -------
    InConeKind
        OUTSIDE, INSIDE, ONE_POINT_TOUCH или CIRCLE_TOUCH.

    Raises
    ------
        ContainedSites: Если S_a и S_b вложены.
        DegenerateConfiguration: Если знак возмущённого дискриминанта равен нулю.

    """
    check_not_contained(s_a, s_b)
    if s_b.radius < s_a.radius:
        s_a, s_b = s_b, s_a

    ca, cb, cc = center_of(s_a), center_of(s_b), center_of(s_c)
    ra, rb, rc = radius_of(s_a), radius_of(s_b), radius_of(s_c)
    ab = sub(cb, ca)
    ac = sub(cc, ca)

    if s_a.radius != s_b.radius:
        # S_c должна лежать по ту же сторону от вершины конуса, что и S_b
        m = (rb - ra) * dot(ac, ab) + ra * dot(ab, ab)
        if m.sign("incone:M") is not Sign.POS:
            logger.debug("InCone: S_c за вершиной конуса")
            return InConeKind.OUTSIDE

    normal = cross(ab, ac)
    collinear = all(component.sign("incone:collinear") is Sign.ZERO for component in normal)
    if collinear:
        return _collinear_case(ab, ac, ra, rb, rc)

    rows_a = (ca, ra)
    rows_b = (cb, rb)
    rows_c = (cc, rc)

    def d_minor(first: int, second: int | None) -> DegreeTagged:
        rows = []
        for center, radius in (rows_a, rows_b, rows_c):
            second_value = radius if second is None else center[second]
            rows.append([center[first], second_value, ONE])
        return det(rows)

    d_xy, d_xz, d_yz = d_minor(0, 1), d_minor(0, 2), d_minor(1, 2)
    d_xr, d_yr, d_zr = d_minor(0, None), d_minor(1, None), d_minor(2, None)
    delta = d_xy * d_xy + d_xz * d_xz + d_yz * d_yz - d_xr * d_xr - d_yr * d_yr - d_zr * d_zr
    delta1 = -2 * (ab[0] * d_xr + ab[1] * d_yr + ab[2] * d_zr)

    delta_sign = delta.sign("incone:delta")
    delta1_sign = delta1.sign("incone:delta1")
    logger.debug(f"InCone: sign(Δ)={delta_sign.name}, sign(Δ₁)={delta1_sign.name}")

    if delta_sign is Sign.POS:
        return InConeKind.OUTSIDE
    if delta_sign is Sign.ZERO:
        return InConeKind.OUTSIDE if delta1_sign is Sign.NEG else InConeKind.ONE_POINT_TOUCH
    if delta1_sign is Sign.POS:
        return InConeKind.INSIDE
    if delta1_sign is Sign.NEG:
        return InConeKind.OUTSIDE
    raise DegenerateConfiguration(
        "InCone: нулевой знак возмущённого дискриминанта",
        {"a": s_a.id, "b": s_b.id, "c": s_c.id},
    )


def _collinear_case(
    ab: Vec3, ac: Vec3, ra: DegreeTagged, rb: DegreeTagged, rc: DegreeTagged
) -> InConeKind:
    # первая координата, по которой центры a и b различаются
    for axis in range(3):
        y_sign = ab[axis].sign("incone:Y")
        if y_sign is not Sign.ZERO:
            break
    y, x = ab[axis], ac[axis]
    s = y_sign * ((rc - ra) * y - (rb - ra) * x).sign("incone:S")
    if s is Sign.NEG:
        return InConeKind.INSIDE
    if s is Sign.ZERO:
        return InConeKind.CIRCLE_TOUCH
    return InConeKind.OUTSIDE


def trisector(s_i: Site, s_j: Site, s_k: Site) -> TrisectorKind:
    """
    Тип трисектрисы трёх сфер по трём вызовам InCone.

    ELLIPTIC, если хотя бы одна сфера внутри конуса двух других или касается
    его по окружности; PARABOLIC при касании в точке; HYPERBOLIC, если все
    три сферы снаружи. Первый решающий ответ прерывает перебор.

    Raises
    ------
        ContainedSites: Если какая-либо пара сфер вложена.

    """
    check_not_contained(s_i, s_j)
    check_not_contained(s_i, s_k)
    check_not_contained(s_j, s_k)
    touching = False
    for a, b, c in ((s_i, s_j, s_k), (s_i, s_k, s_j), (s_j, s_k, s_i)):
        kind = incone(a, b, c)
        if kind in (InConeKind.INSIDE, InConeKind.CIRCLE_TOUCH):
            return TrisectorKind.ELLIPTIC
        if kind is InConeKind.ONE_POINT_TOUCH:
            touching = True
    return TrisectorKind.PARABOLIC if touching else TrisectorKind.HYPERBOLIC

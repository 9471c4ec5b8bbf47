import logging

from app.core.exceptions import DegenerateShadow
from app.core.models import DistancePair, ExistenceCount, ShadowType, Site
from app.geometry.inversion import ONE, barred, center_of
from app.kernel.linalg import cross, det, dot, replace_column, sub
from app.kernel.sign import Sign
from app.predicates.distance import distance
from app.predicates.existence import existence

logger = logging.getLogger(__name__)

_NEG, _ZERO, _POS = Sign.NEG, Sign.ZERO, Sign.POS

# (количество вершин, σ⁻, σ⁺) → тип тени
_SHADOW_TABLE: dict[tuple[ExistenceCount, Sign, Sign], ShadowType] = {
    (ExistenceCount.ZERO, _NEG, _NEG): ShadowType.FULL,
    (ExistenceCount.ZERO, _POS, _POS): ShadowType.EMPTY,
    (ExistenceCount.ONE, _NEG, _POS): ShadowType.LEFT_RAY,
    (ExistenceCount.ONE, _POS, _NEG): ShadowType.RIGHT_RAY,
    (ExistenceCount.TWO, _POS, _POS): ShadowType.INTERVAL,
    (ExistenceCount.TWO, _NEG, _NEG): ShadowType.TWO_RAYS,
}


def shadow(s_i: Site, s_j: Site, s_k: Site, s_alpha: Site) -> ShadowType:
    """
    Топологический тип теневой области S_α на трисектрисе (i, j, k).

    Число конечных концов даёт Existence, наличие бесконечных концов
    определяют знаки Distance: σ = NEG означает, что соответствующая
    бесконечность принадлежит тени.

    Args:
    ----
        s_i, s_j, s_k (Site): Сферы гиперболической трисектрисы.
        s_alpha (Site): Сфера, тень которой классифицируется.

    Returns:
    -------
    ShadowType
        Один из шести типов.

    Raises
    ------
        NotHyperbolic: Если трисектриса не гиперболическая.
        DegenerateShadow: Нулевой знак, двукратная или бесконечная вершина,
            либо несогласованная комбинация знаков.

    """
    sigma = distance(s_i, s_j, s_k, s_alpha)
    count = existence(s_i, s_j, s_k, s_alpha)
    logger.debug(f"Shadow: existence={count.value}, distance={sigma.token}")

    if count is ExistenceCount.ZERO and sigma.sigma_minus is _ZERO and sigma.sigma_plus is _ZERO:
        return _tangent_at_infinity(s_i, s_j, s_k, s_alpha, sigma)

    key = (count, sigma.sigma_minus, sigma.sigma_plus)
    result = _SHADOW_TABLE.get(key)
    if result is None:
        raise DegenerateShadow(
            "Shadow: комбинация Existence и Distance не классифицируется",
            {"existence": count.value, "distance": sigma.token, "alpha": s_alpha.id},
        )
    return result


def _tangent_at_infinity(
    s_i: Site, s_j: Site, s_k: Site, s_alpha: Site, sigma: DistancePair
) -> ShadowType:
    """
    S_α касается обеих общих плоскостей: решает положение центра относительно окружности.

    Применимо только к равным радиусам и компланарным центрам; тогда
    тень равна FULL внутри окружности через C_i, C_j, C_k и EMPTY снаружи.
    """
    sites = (s_i, s_j, s_k, s_alpha)
    details = {"alpha": s_alpha.id, "distance": sigma.token}
    if len({site.radius for site in sites}) != 1:
        raise DegenerateShadow("Shadow: S_α касается обеих плоскостей", details)
    if det([[*center_of(site), ONE] for site in sites]).sign("shadow:flatness") is not _ZERO:
        raise DegenerateShadow("Shadow: S_α касается обеих плоскостей", details)

    lifted = [barred(site, s_alpha) for site in (s_i, s_j, s_k)]
    matrix = [[b.x, b.y, b.z] for b in lifted]
    q = [det(replace_column(matrix, m, [b.p for b in lifted])) for m in range(3)]
    ci, cj, ck = center_of(s_i), center_of(s_j), center_of(s_k)
    normal = cross(sub(cj, ci), sub(ck, ci))
    incircle = dot(q, normal).sign("shadow:incircle")
    if incircle is _POS:
        return ShadowType.FULL
    if incircle is _NEG:
        return ShadowType.EMPTY
    raise DegenerateShadow("Shadow: центр S_α на окружности трёх центров", details)

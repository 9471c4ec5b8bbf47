import logging

from app.core.exceptions import DegenerateConfiguration, DegenerateEdgeConflict, InvalidEdge
from app.core.models import (
    EdgeConflictKind,
    EdgeSpec,
    Orientation,
    Ordering,
    ShadowType,
    Site,
    VertexLabel,
)
from app.predicates.distance import require_hyperbolic
from app.predicates.order import order
from app.predicates.shadow import shadow

logger = logging.getLogger(__name__)

# положение вершины относительно ребра (λ, μ)
BEFORE, INSIDE, AFTER = 0, 1, 2

# бесконечные концы теневой области
MINUS_INF, PLUS_INF = "-inf", "+inf"


def edge_conflict(edge: EdgeSpec, s_q: Site) -> EdgeConflictKind:
    """
    Тип конфликта сферы-запроса с конечным ребром диаграммы Аполлония.

    Ребро e = (λ, μ) лежит на трисектрисе (i, j, k) между λ = v_ijkl и
    μ = v_ikjm. Результат есть тип множества e ∩ Sh(S_q): концы тени
    χ = v_ikjq и φ = v_ijkq размещаются относительно λ и μ двумя вызовами Order.

    Args:
    ----
        edge (EdgeSpec): Ребро (i, j, k, l, m).
        s_q (Site): Сфера-запрос.

    Returns:
    -------
    EdgeConflictKind
        Один из шести типов конфликта.

    Raises
    ------
        NotHyperbolic: Если трисектриса не гиперболическая.
        InvalidEdge: Если порядок вершин противоречит λ ≺ μ.
        DegenerateEdgeConflict: Нулевой знак в одном из подпредикатов.

    """
    s_i, s_j, s_k = edge.trisector
    require_hyperbolic(s_i, s_j, s_k)
    try:
        kind = shadow(s_i, s_j, s_k, s_q)
        if kind is ShadowType.EMPTY:
            result = EdgeConflictKind.NO_CONFLICT
        elif kind is ShadowType.FULL:
            result = EdgeConflictKind.ENTIRE_EDGE
        else:
            result = _classify(edge, s_q, kind)
    except DegenerateConfiguration as exc:
        if isinstance(exc, DegenerateEdgeConflict):
            raise
        raise DegenerateEdgeConflict(
            f"EdgeConflict: {exc.message}", {**exc.details, "cause": type(exc).__name__}
        ) from exc
    logger.debug(f"EdgeConflict: тень {kind.value}, результат {result.value}")
    return result


def _vertex(edge: EdgeSpec, orientation: Orientation, site: Site, role: str) -> VertexLabel:
    return VertexLabel(
        orientation=orientation,
        i=edge.i.label("i"),
        j=edge.j.label("j"),
        k=edge.k.label("k"),
        n=site.label(role),
    )


def _classify(edge: EdgeSpec, s_q: Site, kind: ShadowType) -> EdgeConflictKind:
    s_i, s_j, s_k = edge.trisector
    # роли совпадают с ролями a и b в order
    chi = _vertex(edge, Orientation.IKJ, s_q, "b")
    phi = _vertex(edge, Orientation.IJK, s_q, "b")
    lam = _vertex(edge, Orientation.IJK, edge.l, "a")
    mu = _vertex(edge, Orientation.IKJ, edge.m, "a")

    left = order(s_i, s_j, s_k, edge.l, s_q)
    if lam not in left:
        raise InvalidEdge(f"Вершина {lam.token} не существует", {"order": left.token})
    right: Ordering | None = None

    def position(vertex: VertexLabel) -> int:
        nonlocal right
        before_lambda = left.index(vertex) < left.index(lam)
        if before_lambda and right is None:
            return BEFORE
        if right is None:
            right = order(s_i, s_j, s_k, edge.m, s_q)
            if mu not in right:
                raise InvalidEdge(f"Вершина {mu.token} не существует", {"order": right.token})
        after_mu = right.index(vertex) > right.index(mu)
        if before_lambda and after_mu:
            raise InvalidEdge(
                "Вершина одновременно левее λ и правее μ",
                {"vertex": vertex.token, "left": left.token, "right": right.token},
            )
        if before_lambda:
            return BEFORE
        return AFTER if after_mu else INSIDE

    pieces: list[tuple[VertexLabel | str, VertexLabel | str]] = []
    if kind is ShadowType.LEFT_RAY:
        pieces.append((MINUS_INF, phi))
    elif kind is ShadowType.RIGHT_RAY:
        pieces.append((chi, PLUS_INF))
    elif kind is ShadowType.INTERVAL:
        pieces.append((chi, phi))
    else:
        pieces.extend([(MINUS_INF, phi), (chi, PLUS_INF)])

    classes: dict[VertexLabel, int] = {}

    def klass(end: VertexLabel | str) -> int:
        if end == MINUS_INF:
            return BEFORE
        if end == PLUS_INF:
            return AFTER
        assert isinstance(end, VertexLabel)
        if end not in classes:
            classes[end] = position(end)
        return classes[end]

    clipped: list[tuple[str, str]] = []
    for lo, hi in pieces:
        lo_class, hi_class = klass(lo), klass(hi)
        if hi_class == BEFORE or lo_class == AFTER:
            continue
        clipped.append(
            (
                "lambda" if lo_class == BEFORE else "chi",
                "mu" if hi_class == AFTER else "phi",
            )
        )

    if not clipped:
        return EdgeConflictKind.NO_CONFLICT
    if len(clipped) == 2:
        return EdgeConflictKind.BOTH_VERTICES
    return {
        ("lambda", "mu"): EdgeConflictKind.ENTIRE_EDGE,
        ("lambda", "phi"): EdgeConflictKind.LEFT_VERTEX,
        ("chi", "mu"): EdgeConflictKind.RIGHT_VERTEX,
        ("chi", "phi"): EdgeConflictKind.INTERIOR,
    }[clipped[0]]

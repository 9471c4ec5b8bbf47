import logging
from collections.abc import Callable
from dataclasses import dataclass

from app.core.exceptions import ArityError, InputError, OracleFailure, PreconditionViolation
from app.core.models import EdgeSpec, Scene, Site
from app.kernel.audit import degree_audit_report, recording
from app.oracle import numeric
from app.predicates import (
    classify_tangent_planes,
    distance,
    edge_conflict,
    existence,
    incone,
    insphere,
    order,
    shadow,
    trisector,
)

logger = logging.getLogger(__name__)


def _classify_token(s1: Site, s2: Site, s3: Site, s4: Site) -> str:
    planes = classify_tangent_planes(s1, s2, s3, s4)
    orientations = sorted(label.orientation.value for label in planes)
    return ",".join(orientations) or "NONE"


def _edge(sites: tuple[Site, ...]) -> tuple[EdgeSpec, Site]:
    s_i, s_j, s_k, s_l, s_m, s_q = sites
    return EdgeSpec(i=s_i, j=s_j, k=s_k, l=s_l, m=s_m), s_q


def _oracle_shadow(*sites: Site) -> str:
    kind, _ = numeric.shadow_classify_numeric(*sites)
    return kind.value


def _oracle_classify(*sites: Site) -> str:
    labels = {"POS": "IJK", "NEG": "IKJ"}
    found = sorted(
        labels.get(orientation.name, "ZERO")
        for _, orientation in numeric.tangent_spheres_numeric(*sites)
    )
    return ",".join(found) or "NONE"


def _oracle_order(*sites: Site) -> str:
    return ",".join(label.token for label in numeric.order_numeric(*sites))


@dataclass(frozen=True)
class PredicateSpec:
    """
    Описание предиката для вызова из CLI.

    Attributes
    ----------
        arity: Число сфер-аргументов.
        run: Точный предикат, возвращающий токен результата.
        oracle: Численная проверка того же токена или None.

    """

    arity: int
    run: Callable[..., str]
    oracle: Callable[..., str] | None = None


PREDICATES: dict[str, PredicateSpec] = {
    "incone": PredicateSpec(
        3, lambda *s: incone(*s).value, lambda *s: numeric.incone_numeric(*s).value
    ),
    "trisector": PredicateSpec(
        3, lambda *s: trisector(*s).value, lambda *s: numeric.trisector_numeric(*s).value
    ),
    "distance": PredicateSpec(
        4, lambda *s: distance(*s).token, lambda *s: numeric.distance_numeric(*s).token
    ),
    "existence": PredicateSpec(
        4, lambda *s: existence(*s).value, lambda *s: numeric.existence_numeric(*s).value
    ),
    "shadow": PredicateSpec(4, lambda *s: shadow(*s).value, _oracle_shadow),
    "insphere": PredicateSpec(
        5, lambda *s: insphere(*s).name, lambda *s: numeric.insphere_numeric(*s).name
    ),
    "classify": PredicateSpec(4, _classify_token, _oracle_classify),
    "order": PredicateSpec(5, lambda *s: order(*s).token, _oracle_order),
    "edge-conflict": PredicateSpec(
        6,
        lambda *s: edge_conflict(*_edge(s)).value,
        lambda *s: numeric.edge_conflict_numeric(*_edge(s)).value,
    ),
}


@dataclass(frozen=True)
class EvalResult:
    """Токен результата, измеренная степень и (опционально) ответ оракула."""

    token: str
    max_degree: int
    oracle: str | None = None


class PredicateEvaluator:
    """
    Вызов предикатов по имени для набора сфер сцены.

    Проверяет арность, разрешает идентификаторы сфер и измеряет
    максимальную степень знаковых тестов каждого вызова.
    """

    def __init__(self, scene: Scene | None = None) -> None:
        self.scene = scene or Scene()

    @staticmethod
    def spec(name: str) -> PredicateSpec:
        try:
            return PREDICATES[name]
        except KeyError as exc:
            raise InputError(
                f"Неизвестный предикат {name}", {"known": sorted(PREDICATES)}
            ) from exc

    def evaluate(self, name: str, ids: list[str], compare_oracle: bool = False) -> EvalResult:
        """
        Вычисление предиката на сферах сцены.

        Args:
        ----
            name (str): Имя предиката.
            ids (list[str]): Идентификаторы сфер в порядке аргументов.
            compare_oracle (bool): Дополнительно вычислить ответ численного оракула.

        Returns:
        -------
        EvalResult
            Токен, максимальная степень и ответ оракула.

        Raises
        ------
            ArityError: Если число идентификаторов не совпадает с арностью.
            UnknownSite: Если идентификатор отсутствует в сцене.

        """
        spec = self.spec(name)
        if len(ids) != spec.arity:
            raise ArityError(
                f"Предикат {name} принимает {spec.arity} сфер, передано {len(ids)}",
                {"predicate": name, "ids": ids},
            )
        sites = self.scene.resolve(ids)
        token, degree = self.run_sites(name, sites)
        oracle = self.oracle_token(name, sites) if compare_oracle else None
        return EvalResult(token=token, max_degree=degree, oracle=oracle)

    def run_sites(self, name: str, sites: list[Site]) -> tuple[str, int]:
        """Точный токен и максимальная степень для уже разрешённых сфер."""
        spec = self.spec(name)
        with recording() as log:
            token = spec.run(*sites)
        degree = degree_audit_report(log)
        logger.debug(f"{name}({', '.join(s.id for s in sites)}) = {token}, степень {degree}")
        return token, degree

    def oracle_token(self, name: str, sites: list[Site]) -> str:
        """
        Токен численного оракула или "discarded".

        Оракул без собственной реализации для предиката также даёт "discarded".
        """
        spec = self.spec(name)
        if spec.oracle is None:
            return "discarded"
        try:
            return spec.oracle(*sites)
        except (OracleFailure, PreconditionViolation) as exc:
            logger.debug(f"Оракул отбросил экземпляр {name}: {exc.message}")
            return "discarded"


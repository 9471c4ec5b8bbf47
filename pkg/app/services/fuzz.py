import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from app.core.config import settings
from app.core.exceptions import (
    ApolloniusException,
    DegenerateConfiguration,
    InputError,
    PreconditionViolation,
)
from app.core.models import FuzzConfig, Orientation, Scene, Site, TrisectorKind
from app.oracle.numeric import build_trisector, vertex_maps_on
from app.predicates import trisector
from app.services.evaluator import PREDICATES, PredicateEvaluator

logger = logging.getLogger(__name__)

# целевые оценки степени знаковых тестов
DEGREE_TARGETS: dict[str, int] = {
    "incone": 4,
    "trisector": 4,
    "distance": 6,
    "existence": 8,
    "shadow": 8,
    "insphere": 10,
    "classify": 10,
    "order": 10,
    "edge-conflict": 10,
}

_MAX_ATTEMPTS = 1000
_INSTANCE_ATTEMPTS = 200
_EDGE_CANDIDATES = 24

# предикаты, определённые только для гиперболической трисектрисы первых трёх сфер
_NEEDS_HYPERBOLIC = frozenset({"distance", "shadow", "order", "edge-conflict"})


@dataclass
class FuzzReport:
    """
    Итог сравнения точных предикатов с оракулом.

    Attributes
    ----------
        compared: Экземпляры, по которым оракул дал надёжный ответ.
        agreed: Совпавшие ответы.
        discarded: Экземпляры, отброшенные оракулом или без допустимого набора сфер.
        degenerate: Экземпляры, на которых точный предикат сообщил вырожденность.
        disagreements: Описания расхождений.

    """

    compared: int = 0
    agreed: int = 0
    discarded: int = 0
    degenerate: int = 0
    disagreements: list[str] = field(default_factory=list)

    @property
    def summary(self) -> str:
        return (
            f"compared {self.compared}, agreed {self.agreed}, "
            f"discarded {self.discarded}, degenerate {self.degenerate}"
        )

    @property
    def ok(self) -> bool:
        return self.agreed == self.compared


class FuzzService:
    """
    Генерация случайных сцен и сравнение точных предикатов с численным оракулом.

    Центры лежат в целочисленной решётке [−R, R]³, радиусы кратны 1/2. По
    умолчанию попарный зазор между сферами не меньше min_separation; в режиме
    overlap сферы могут пересекаться, отвергаются только вложенные пары. Один
    и тот же seed даёт один и тот же поток экземпляров.
    """

    def __init__(self, config: FuzzConfig) -> None:
        self.config = config
        self.rng = np.random.default_rng(seed=config.seed)
        self.evaluator = PredicateEvaluator()

    def _draw_site(self, site_id: str) -> Site:
        bound = self.config.coord_range
        x, y, z = (int(v) for v in self.rng.integers(-bound, bound + 1, size=3))
        halves = int(self.rng.integers(1, 2 * self.config.max_radius + 1))
        return Site.of(x, y, z, Fraction(halves, 2), site_id=site_id)

    def _admissible(self, site: Site, others: list[Site]) -> bool:
        for other in others:
            squared = sum((a - b) ** 2 for a, b in zip(site.center, other.center, strict=True))
            if self.config.overlap:
                # вложенность, включая внутреннее касание
                if squared <= (site.radius - other.radius) ** 2:
                    return False
                continue
            gap = site.radius + other.radius + self.config.min_separation
            if squared < gap * gap:
                return False
        return True

    def _draw_beside(self, site_id: str, others: list[Site]) -> Site:
        for _ in range(_MAX_ATTEMPTS):
            candidate = self._draw_site(site_id)
            if self._admissible(candidate, others):
                return candidate
        raise InputError(
            "Не удалось разместить сферы с заданным зазором",
            {"placed": len(others), "coord_range": self.config.coord_range},
        )

    def draw_sites(self, count: int, prefix: str = "s") -> list[Site]:
        """
        Набор попарно допустимых сфер.

        Args:
        ----
            count (int): Количество сфер.
            prefix (str): Префикс идентификаторов.

        Returns:
        -------
        list[Site]
            Сферы с идентификаторами prefix0, prefix1, ...

        Raises
        ------
            InputError: Если сферу не удалось разместить за отведённое число попыток.

        """
        sites: list[Site] = []
        for n in range(count):
            sites.append(self._draw_beside(f"{prefix}{n}", sites))
        return sites

    def _hyperbolic(self, trio: list[Site]) -> bool:
        try:
            return trisector(*trio) is TrisectorKind.HYPERBOLIC
        except ApolloniusException:
            return False

    def _draw_edge(self, prefix: str) -> list[Site] | None:
        """
        Ребро e_ijklm и запрос q на одной численной трисектрисе.

        Концы теней кандидатов считаются по однажды построенной трисектрисе;
        l берётся среди кандидатов с вершиной v_ijkl, m среди кандидатов с
        вершиной v_ikjm правее неё.
        """
        trio = self.draw_sites(3, prefix=prefix)
        if not self._hyperbolic(trio):
            return None
        try:
            curve = build_trisector(*trio)
        except ApolloniusException:
            return None

        lefts: list[tuple[Site, float]] = []
        rights: list[tuple[Site, float]] = []
        gap = settings.oracle_margin * 10
        for n in range(_EDGE_CANDIDATES):
            candidate = self._draw_beside(f"{prefix}{3 + n}", trio)
            try:
                maps = vertex_maps_on(curve, candidate)
            except ApolloniusException:
                continue
            if Orientation.IJK in maps:
                lefts.append((candidate, maps[Orientation.IJK]))
            if Orientation.IKJ in maps:
                rights.append((candidate, maps[Orientation.IKJ]))
            for s_l, lam in lefts:
                for s_m, mu in rights:
                    if s_l is s_m or mu - lam <= gap or not self._admissible(s_l, [s_m]):
                        continue
                    s_q = self._draw_beside(f"{prefix}q", [*trio, s_l, s_m])
                    return [*trio, s_l, s_m, s_q]
        return None

    def draw_instance(self, name: str, prefix: str) -> list[Site] | None:
        """
        Аргументы предиката name.

        Для предикатов гиперболической трисектрисы первые три сферы задают
        гиперболическую трисектрису; для edge-conflict l и m задают ребро.

        Returns
        -------
        list[Site] | None
            Набор сфер или None, если допустимый набор не найден.

        """
        if name == "edge-conflict":
            for _ in range(_INSTANCE_ATTEMPTS):
                sites = self._draw_edge(prefix)
                if sites is not None:
                    return sites
            return None
        arity = self.evaluator.spec(name).arity
        for _ in range(_INSTANCE_ATTEMPTS):
            sites = self.draw_sites(arity, prefix=prefix)
            if name not in _NEEDS_HYPERBOLIC or self._hyperbolic(sites[:3]):
                return sites
        return None

    def generate_scene(self) -> Scene:
        """Сцена из config.count сфер."""
        sites = self.draw_sites(self.config.count)
        return Scene(sites={site.id: site for site in sites})

    def run(self) -> FuzzReport:
        """
        Сравнение точного предиката с оракулом на config.count экземплярах.

        Нарушение предусловия точным предикатом на экземпляре, для которого
        оракул дал ответ, считается расхождением.

        Returns
        -------
        FuzzReport
            Счётчики сравнений и список расхождений.

        """
        name = self.config.predicate
        self.evaluator.spec(name)
        report = FuzzReport()
        for number in range(self.config.count):
            sites = self.draw_instance(name, prefix=f"n{number}_")
            if sites is None:
                report.discarded += 1
                continue
            try:
                token, _ = self.evaluator.run_sites(name, sites)
            except DegenerateConfiguration as exc:
                logger.debug(f"Экземпляр {number}: вырожденность {type(exc).__name__}")
                report.degenerate += 1
                continue
            except PreconditionViolation as exc:
                logger.debug(f"Экземпляр {number}: предусловие {type(exc).__name__}")
                token = type(exc).__name__
            expected = self.evaluator.oracle_token(name, sites)
            if expected == "discarded":
                report.discarded += 1
                continue
            report.compared += 1
            if token == expected:
                report.agreed += 1
            else:
                description = (
                    f"{name} #{number}: точно {token}, оракул {expected}; "
                    + "; ".join(f"{s.center} r={s.radius}" for s in sites)
                )
                logger.warning(f"Расхождение {description}")
                report.disagreements.append(description)
        logger.info(f"Фаззинг {name}: {report.summary}")
        return report

    def degree_audit(self, names: list[str] | None = None) -> dict[str, int]:
        """
        Максимальная измеренная степень по каждому предикату на сгенерированном корпусе.

        Вызовы, завершившиеся исключением, в измерение не входят.
        """
        result: dict[str, int] = {}
        for name in names or list(PREDICATES):
            measured = 0
            for number in range(self.config.count):
                sites = self.draw_instance(name, prefix=f"a{number}_")
                if sites is None:
                    continue
                try:
                    _, degree = self.evaluator.run_sites(name, sites)
                except ApolloniusException:
                    continue
                measured = max(measured, degree)
            result[name] = measured
            logger.info(f"Степень {name}: {measured}, цель {DEGREE_TARGETS.get(name)}")
        return result

from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.kernel.quadext import QuadExtScalar
from app.kernel.sign import Sign
from app.kernel.tagged import DegreeTagged

Point3 = tuple[Fraction, Fraction, Fraction]


def to_fraction(value: Any) -> Fraction:
    """
    Точное преобразование числа в рациональное.

    Десятичные строки и Decimal переводятся без двоичного промежуточного
    представления; float отвергается.

    Args:
    ----
        value: int, Fraction, Decimal или строка вида "3", "1/3", "0.25".

    Returns:
    -------
        Рациональное число

    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Ожидалось точное число, получено {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int | Decimal):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"Ожидалось точное число, получено {value!r}")


class InConeKind(str, Enum):
    """Положение сферы S_c относительно полуконуса двух сфер."""

    OUTSIDE = "OUTSIDE"
    INSIDE = "INSIDE"
    ONE_POINT_TOUCH = "ONE_POINT_TOUCH"
    CIRCLE_TOUCH = "CIRCLE_TOUCH"


class TrisectorKind(str, Enum):
    """Тип трисектрисы трёх сфер."""

    HYPERBOLIC = "HYPERBOLIC"
    ELLIPTIC = "ELLIPTIC"
    PARABOLIC = "PARABOLIC"


class ExistenceCount(str, Enum):
    """Количество внешних сфер Аполлония четырёх сфер."""

    ZERO = "ZERO"
    ONE = "ONE"
    ONE_DOUBLE = "ONE_DOUBLE"
    TWO = "TWO"
    INFINITE = "INFINITE"


class ShadowType(str, Enum):
    """
    Топологический тип теневой области сферы на трисектрисе.

    Attributes
    ----------
        EMPTY: Пустое множество.
        FULL: Вся трисектриса.
        LEFT_RAY: (−∞, φ).
        RIGHT_RAY: (χ, +∞).
        INTERVAL: (χ, φ).
        TWO_RAYS: (−∞, φ) ∪ (χ, +∞).

    """

    EMPTY = "EMPTY"
    FULL = "FULL"
    LEFT_RAY = "LEFT_RAY"
    RIGHT_RAY = "RIGHT_RAY"
    INTERVAL = "INTERVAL"
    TWO_RAYS = "TWO_RAYS"

    @property
    def endpoint_count(self) -> int:
        """Количество конечных концов теневой области."""
        return _ENDPOINTS[self]

    @property
    def contains_minus_infinity(self) -> bool:
        return self in (ShadowType.FULL, ShadowType.LEFT_RAY, ShadowType.TWO_RAYS)

    @property
    def contains_plus_infinity(self) -> bool:
        return self in (ShadowType.FULL, ShadowType.RIGHT_RAY, ShadowType.TWO_RAYS)


_ENDPOINTS = {
    ShadowType.EMPTY: 0,
    ShadowType.FULL: 0,
    ShadowType.LEFT_RAY: 1,
    ShadowType.RIGHT_RAY: 1,
    ShadowType.INTERVAL: 2,
    ShadowType.TWO_RAYS: 2,
}


class EdgeConflictKind(str, Enum):
    """Тип пересечения ребра с теневой областью сферы-запроса."""

    NO_CONFLICT = "NO_CONFLICT"
    ENTIRE_EDGE = "ENTIRE_EDGE"
    LEFT_VERTEX = "LEFT_VERTEX"
    RIGHT_VERTEX = "RIGHT_VERTEX"
    BOTH_VERTICES = "BOTH_VERTICES"
    INTERIOR = "INTERIOR"


class Orientation(str, Enum):
    """Ориентация тетраэдра точек касания: IJK положительная, IKJ отрицательная."""

    IJK = "IJK"
    IKJ = "IKJ"

    @property
    def flipped(self) -> "Orientation":
        return Orientation.IKJ if self is Orientation.IJK else Orientation.IJK


class ConfigClass(str, Enum):
    """Классическая или неклассическая конфигурация сферы относительно трисектрисы."""

    CLASSIC = "CLASSIC"
    NONCLASSIC = "NONCLASSIC"

    @classmethod
    def of(cls, shadow: ShadowType) -> "ConfigClass":
        """
        Класс конфигурации по типу тени.

        Args:
        ----
            shadow (ShadowType): Тип теневой области, отличный от EMPTY и FULL.

        Returns:
        -------
        ConfigClass
            CLASSIC для INTERVAL и RIGHT_RAY, иначе NONCLASSIC.

        """
        if shadow in (ShadowType.INTERVAL, ShadowType.RIGHT_RAY):
            return cls.CLASSIC
        if shadow in (ShadowType.LEFT_RAY, ShadowType.TWO_RAYS):
            return cls.NONCLASSIC
        raise ValueError(f"Тип тени {shadow.value} не задаёт конфигурацию")


class DetKind(str, Enum):
    """
    Форма определителя.

    D2 и D3_ONES содержат столбец единиц; E3 и E4 строятся по приведённым
    (отнесённым к полюсу) координатам.
    """

    D2 = "D2"
    D3 = "D3"
    D3_ONES = "D3_ONES"
    D4 = "D4"
    E3 = "E3"
    E4 = "E4"


class Site(BaseModel):
    """
    Сфера-генератор диаграммы Аполлония.

    Attributes
    ----------
        id: Идентификатор сферы в сцене (может быть пустым).
        center: Рациональные координаты центра.
        radius: Рациональный неотрицательный радиус.

    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str = Field(default="", description="Идентификатор сферы", max_length=64)
    center: Point3 = Field(..., description="Центр сферы")
    radius: Fraction = Field(..., description="Радиус сферы")

    @field_validator("center", mode="before")
    @classmethod
    def validate_center(cls, v: Any) -> Point3:
        """
        Приведение координат центра к рациональным числам.

        Args:
        ----
            v: Тройка координат

        Returns:
        -------
            Тройка Fraction

        """
        coords = tuple(v)
        if len(coords) != 3:
            raise ValueError("Центр должен иметь три координаты")
        return (to_fraction(coords[0]), to_fraction(coords[1]), to_fraction(coords[2]))

    @field_validator("radius", mode="before")
    @classmethod
    def validate_radius(cls, v: Any) -> Fraction:
        radius = to_fraction(v)
        if radius < 0:
            raise ValueError("Радиус не может быть отрицательным")
        return radius

    @classmethod
    def of(cls, x: Any, y: Any, z: Any, r: Any, site_id: str = "") -> "Site":
        """Короткий конструктор из четырёх чисел."""
        return cls(id=site_id, center=(x, y, z), radius=r)

    def label(self, role: str) -> str:
        """Идентификатор сферы или имя роли, если идентификатор пуст."""
        return self.id or role

    def shifted(self, dx: Fraction, dy: Fraction, dz: Fraction, dr: Fraction | int = 0) -> "Site":
        """Сфера, сдвинутая на вектор (dx, dy, dz), с радиусом, увеличенным на dr."""
        x, y, z = self.center
        return Site(id=self.id, center=(x + dx, y + dy, z + dz), radius=self.radius + dr)


class InvertedSite(BaseModel):
    """
    Образ сферы в W-пространстве после уменьшения радиусов и инверсии.

    Хранит как рациональные u, v, w, ρ, так и приведённые числители
    x̄, ȳ, z̄, r̄, p̄ для вычислений в E-форме без деления.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    u: Fraction
    v: Fraction
    w: Fraction
    rho: Fraction
    pbar: Fraction = Field(..., description="Степень центра относительно полюса")
    xbar: DegreeTagged
    ybar: DegreeTagged
    zbar: DegreeTagged
    rbar: DegreeTagged
    pbar_tagged: DegreeTagged
    source: str = Field(..., description="Идентификатор исходной сферы")
    pole: str = Field(..., description="Идентификатор полюса")

    @field_validator("pbar")
    @classmethod
    def validate_pbar(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError("Степень p̄ должна быть положительной")
        return v


class DetQuery(BaseModel):
    """
    Запрос на вычисление определителя над набором сфер.

    Attributes
    ----------
        kind: Форма определителя.
        columns: Селекторы столбцов из {x,y,z,r,u,v,w,rho,p}.
        sites: Сферы, задающие строки.
        pole: Полюс для приведённых и инвертированных координат.

    """

    model_config = ConfigDict(frozen=True)

    kind: DetKind
    columns: tuple[str, ...]
    sites: tuple[Site, ...]
    pole: Optional[Site] = None

    @field_validator("columns")
    @classmethod
    def validate_columns(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        allowed = {"x", "y", "z", "r", "u", "v", "w", "rho", "p"}
        unknown = [c for c in v if c not in allowed]
        if unknown:
            raise ValueError(f"Неизвестные селекторы столбцов: {unknown}")
        return v


class DistancePair(BaseModel):
    """Знаки расстояний сферы S_α до касательных плоскостей Π⁻ и Π⁺."""

    model_config = ConfigDict(frozen=True)

    sigma_minus: Sign = Field(..., description="Знак δ(S_α, Π⁻)")
    sigma_plus: Sign = Field(..., description="Знак δ(S_α, Π⁺)")

    @property
    def token(self) -> str:
        return f"{self.sigma_minus.name},{self.sigma_plus.name}"


class VertexLabel(BaseModel):
    """
    Символическое имя вершины Аполлония.

    IJK обозначает вершину v_ijkn с положительно ориентированным тетраэдром
    точек касания T_iT_jT_kT_n, IKJ обозначает v_ikjn.
    """

    model_config = ConfigDict(frozen=True)

    orientation: Orientation
    i: str
    j: str
    k: str
    n: str

    @property
    def token(self) -> str:
        if self.orientation is Orientation.IJK:
            return f"v_{self.i}{self.j}{self.k}{self.n}"
        return f"v_{self.i}{self.k}{self.j}{self.n}"


class Ordering(BaseModel):
    """Последовательность существующих вершин вдоль ориентированной трисектрисы."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[VertexLabel, ...] = Field(..., min_length=1, max_length=4)

    @field_validator("labels")
    @classmethod
    def validate_distinct(cls, v: tuple[VertexLabel, ...]) -> tuple[VertexLabel, ...]:
        if len(set(v)) != len(v):
            raise ValueError("Метки вершин должны быть попарно различны")
        return v

    @property
    def token(self) -> str:
        return ",".join(label.token for label in self.labels)

    def index(self, label: VertexLabel) -> int:
        return self.labels.index(label)

    def __contains__(self, label: object) -> bool:
        return label in self.labels


class OrderTrace(BaseModel):
    """
    Разбор вызова Order: случай таблиц, номер OrderCase и решающие знаки InSphere.

    Для случая D знаки и номер относятся к таблице случая C после обмена S_a и S_b.
    """

    model_config = ConfigDict(frozen=True)

    case: str = Field(..., pattern="^[ABCD]$", description="Случай A, B, C или D")
    number: int = Field(..., ge=1, le=6, description="Номер OrderCase в таблице случая")
    signs: tuple[Sign, ...] = Field(..., description="Кортеж Q решающих знаков InSphere")
    tiebreak: bool = Field(default=False, description="Порядок выбран вспомогательными тестами")
    ordering: Ordering


class TangentPlaneW(BaseModel):
    """
    Касательная плоскость a·u + b·v + c·w + d = 0 в W-пространстве.

    Коэффициенты лежат в квадратичном расширении Q(√K) и умножены на общий
    положительный множитель scale, так что a² + b² + c² = scale².
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: QuadExtScalar
    b: QuadExtScalar
    c: QuadExtScalar
    d: QuadExtScalar
    scale: QuadExtScalar
    pole: str = Field(..., description="Идентификатор полюса инверсии")


class EdgeSpec(BaseModel):
    """
    Ребро диаграммы на трисектрисе (i, j, k) между вершинами v_ijkl и v_ikjm.

    Attributes
    ----------
        i, j, k: Сферы трисектрисы.
        l: Сфера левой вершины v_ijkl.
        m: Сфера правой вершины v_ikjm.

    """

    model_config = ConfigDict(frozen=True)

    i: Site
    j: Site
    k: Site
    l: Site  # noqa: E741
    m: Site

    @property
    def trisector(self) -> tuple[Site, Site, Site]:
        return (self.i, self.j, self.k)


class Scene(BaseModel):
    """Набор именованных сфер из файла сцены."""

    model_config = ConfigDict(frozen=True)

    sites: dict[str, Site] = Field(default_factory=dict, description="Сферы по идентификатору")

    @model_validator(mode="after")
    def validate_ids(self) -> "Scene":
        for key, site in self.sites.items():
            if site.id != key:
                raise ValueError(f"Ключ {key} не совпадает с идентификатором {site.id}")
        return self

    def resolve(self, ids: list[str]) -> list[Site]:
        from app.core.exceptions import UnknownSite

        missing = [i for i in ids if i not in self.sites]
        if missing:
            raise UnknownSite(f"Неизвестные сферы: {missing}", {"ids": missing})
        return [self.sites[i] for i in ids]


class FuzzConfig(BaseModel):
    """
    Параметры генерации случайных экземпляров.

    Один и тот же seed даёт один и тот же поток экземпляров.
    """

    model_config = ConfigDict(frozen=True)

    predicate: str = Field(..., description="Имя предиката")
    count: int = Field(..., ge=0, description="Количество экземпляров")
    seed: int = Field(..., ge=0, lt=2**64, description="64-битный seed")
    coord_range: int = Field(default=12, gt=0, description="Полуширина сетки центров")
    min_separation: int = Field(default=1, ge=0, description="Минимальный зазор между сферами")
    max_radius: int = Field(default=4, gt=0, description="Максимальный радиус")
    overlap: bool = Field(
        default=False, description="Допускать пересекающиеся сферы, отвергая только вложенные"
    )


class NumericSphere(BaseModel):
    """Численная сфера оракула (не используется в точных предикатах)."""

    model_config = ConfigDict(frozen=True)

    center: tuple[float, float, float]
    radius: float = Field(
        ..., description="Общее расстояние до сфер; отрицательно, если центр внутри всех сфер"
    )


class TrisectorPoint(BaseModel):
    """Точка трисектрисы и значение параметризации map."""

    model_config = ConfigDict(frozen=True)

    point: tuple[float, float, float]
    map_value: float

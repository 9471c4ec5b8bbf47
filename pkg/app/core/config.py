import logging
from typing import TYPE_CHECKING

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

if TYPE_CHECKING:
    from app.core.models import FuzzConfig


class Settings(BaseSettings):
    """
    Настройки приложения apollonius-predicates.

    Центральный класс конфигурации. Загружает значения из переменных окружения
    и .env файла с валидацией типов и значениями по умолчанию.

    Attributes
    ----------
        log_level: Уровень логирования.
        log_json: Выводить логи в формате JSON.
        oracle_margin: Минимальный решающий зазор численного оракула.
        fuzz_seed: Seed генератора случайных сцен по умолчанию.

    """

    # Приложение
    app_name: str = Field(default="Apollonius Predicates", description="Название приложения")
    app_version: str = Field(default="0.1.0", description="Версия приложения")

    # Логирование
    log_level: str = Field(default="INFO", description="Уровень логирования")
    log_format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s", description="Формат логов"
    )
    log_json: bool = Field(default=False, description="JSON-формат логов")

    # Численный оракул
    oracle_margin: float = Field(default=1e-6, description="Решающий зазор оракула")
    oracle_equidistance_tol: float = Field(
        default=1e-9, description="Допуск равноудалённости точки трисектрисы"
    )
    oracle_grid_span: float = Field(default=64.0, description="Полуширина сетки по параметру")
    oracle_grid_points: int = Field(default=4097, description="Количество узлов сетки")
    oracle_bisection_steps: int = Field(default=200, description="Шаги бисекции")

    # Генерация случайных сцен
    fuzz_seed: int = Field(default=20240517, description="Seed по умолчанию")
    fuzz_count: int = Field(default=1000, description="Количество экземпляров")
    fuzz_coord_range: int = Field(default=12, description="Полуширина целочисленной сетки центров")
    fuzz_min_separation: int = Field(default=1, description="Минимальный зазор между сферами")
    fuzz_max_radius: int = Field(default=4, description="Максимальный радиус сферы")
    fuzz_overlap: bool = Field(default=False, description="Допускать пересекающиеся сферы")
    gen_count: int = Field(default=16, ge=0, description="Количество сфер в сцене команды gen")

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
    }

    @field_validator("oracle_margin", "oracle_equidistance_tol", "oracle_grid_span")
    @classmethod
    def validate_positive(cls, v: float) -> float:
        """
        Проверка положительности допусков оракула.

        Args:
        ----
            v: Значение для проверки

        Returns:
        -------
            Проверенное значение

        """
        if v <= 0:
            raise ValueError("Допуск должен быть положительным")
        return v

    @field_validator("oracle_grid_points")
    @classmethod
    def validate_grid_points(cls, v: int) -> int:
        if v < 3:
            raise ValueError("Сетка должна содержать хотя бы 3 узла")
        return v

    @field_validator("fuzz_coord_range", "fuzz_max_radius")
    @classmethod
    def validate_ranges(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("Диапазон генерации должен быть положительным")
        return v

    @property
    def log_level_value(self) -> int:
        """
        Числовой уровень логирования.

        Returns
        -------
        int
            Значение из модуля logging, INFO для неизвестного имени.

        """
        level = logging.getLevelName(self.log_level.upper())
        return level if isinstance(level, int) else logging.INFO

    def fuzz_defaults(self, predicate: str = "shadow") -> "FuzzConfig":
        """
        Конфигурация фаззинга со значениями из настроек.

        Args:
        ----
            predicate (str): Имя проверяемого предиката.

        Returns:
        -------
        FuzzConfig
            Конфигурация генератора сцен.

        """
        from app.core.models import FuzzConfig

        return FuzzConfig(
            predicate=predicate,
            count=self.fuzz_count,
            seed=self.fuzz_seed,
            coord_range=self.fuzz_coord_range,
            min_separation=self.fuzz_min_separation,
            max_radius=self.fuzz_max_radius,
            overlap=self.fuzz_overlap,
        )


# Глобальный экземпляр настроек
settings = Settings()

from typing import Annotated, Literal

from pydantic import Field, PositiveInt
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.rootsys.domain.types import Lattice
from generic.utils.log_levels import LogLevel

type OutputFormat = Literal["tsv", "json", "dot"]


class BudgetSettings(BaseSettings):
    """Бюджеты вычислений."""

    model_config = SettingsConfigDict(env_prefix="qbg_budget_")
    max_group_size: Annotated[PositiveInt, Field(default=51_840, description="Максимальный порядок |W| для полного перебора (E6)")]
    adm_cap: Annotated[PositiveInt, Field(default=24, description="Максимальное значение <2rho, mu> при перечислении Adm(mu)")]
    path_cap: Annotated[PositiveInt, Field(default=10_000, description="Максимальное число кратчайших путей на пару вершин")]
    conjugacy_orbit_bound: Annotated[PositiveInt, Field(default=1_000_000, description="Порог |W| для проверки сопряжённости перебором орбиты")]
    threads: Annotated[PositiveInt, Field(default=4, description="Число потоков для разбиения переборов")]
    bfs_cache_size: Annotated[PositiveInt, Field(default=256, description="Размер LRU-кэша обходов графа из одной вершины")]
    sample_pairs: Annotated[PositiveInt, Field(default=100_000, description="Число случайных пар для выборочных проверок")]


class AlgebraSettings(BaseSettings):
    """Настройки алгебраических данных."""

    model_config = SettingsConfigDict(env_prefix="qbg_algebra_")
    lattice: Annotated[Lattice, Field(default="adjoint", description="Решётка кохарактеров: P^vee (adjoint) или Q^vee (sc)")]


class OutputSettings(BaseSettings):
    """Настройки вывода."""

    model_config = SettingsConfigDict(env_prefix="qbg_output_")
    format: Annotated[OutputFormat, Field(default="tsv", description="Формат вывода")]


class ApiSettings(BaseSettings):
    """Настройки HTTP API."""

    model_config = SettingsConfigDict(env_prefix="qbg_api_")
    host: Annotated[str, Field(default="127.0.0.1", description="Хост")]
    port: Annotated[int, Field(default=8000, description="Порт")]
    reload: Annotated[bool, Field(default=False, description="Перезапуск при изменении исходников")]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(extra="ignore", str_strip_whitespace=True, env_prefix="qbg_")
    budget: BudgetSettings = Field(default_factory=BudgetSettings, description="Бюджеты вычислений")
    algebra: AlgebraSettings = Field(default_factory=AlgebraSettings, description="Алгебраические данные")
    output: OutputSettings = Field(default_factory=OutputSettings, description="Вывод")
    api: ApiSettings = Field(default_factory=ApiSettings, description="HTTP API")
    log_level: LogLevel = Field(default=LogLevel.INFO, description="Уровень логирования")


# Экземпляр настроек, загружаемых из переменных окружения.
settings = Settings()

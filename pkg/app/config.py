from typing import Literal

from pydantic import computed_field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # 0 = sequential reference mode, N > 0 = thread pool across the two cover parts
    MAPPER_THREADS: int = 2

    DEFAULT_SLICES: int = 16
    DEFAULT_OVERLAP: float = 0.25
    CONNECTIVITY: Literal["four", "eight"] = "four"
    # contour cover margin, fraction of the value range
    CONTOUR_MARGIN: float = 0.01

    BENCH_SIZES: list[int] = [256, 512, 1024, 2048]
    BENCH_SLICES: list[int] = [16, 32, 64]
    BENCH_REPEATS: int = 3
    MAX_SIZE: int = 2048

    @computed_field
    @property
    def BENCH_SIZES_EFFECTIVE(self) -> list[int]:
        return [size for size in self.BENCH_SIZES if size <= self.MAX_SIZE]

    PERLIN_CELL: int = 8

    REDIS_URL: str = "redis://:@redis:6379/0"
    CELERY_BROKER: str = REDIS_URL
    CELERY_RESULT_BACKEND: str = REDIS_URL

    MEDIA_ROOT: str = "media"

    LOG_LEVEL: str = "INFO"

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")


settings = Settings()

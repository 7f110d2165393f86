from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="SEIFCALC_", env_file=".env", env_file_encoding="utf-8"
    )

    # Application
    log_level: str = "WARNING"
    log_format: str = "json"  # "json" or "console"

    # Census workers; when set it overrides --workers
    workers: int | None = None

    # Arithmetic
    brute_force_limit: int = 1_000_000  # largest modulus for the residue scan

    # Census defaults
    default_max_multiplicity: int = 12
    default_max_abs_h: int = 100
    census_output_dir: str = "census"

    # Prometheus text-format export after a search
    metrics_file: str | None = None


@lru_cache
def get_settings() -> Settings:
    return Settings()

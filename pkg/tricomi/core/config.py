# tricomi/core/config.py
import logging
from functools import lru_cache # For caching the settings object

from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_FORMAT = '%(asctime)s - %(levelname)s - [%(name)s] - %(message)s'


class Settings(BaseSettings):
    PROJECT_NAME: str = "Tricomi Fundamental Solutions API"
    API_PREFIX: str = "/api/v1"
    CORS_ORIGINS: list[str] = ["http://localhost:3000", "http://localhost:5173"]
    LOG_LEVEL: str = "INFO"

    # Special-function series
    SERIES_TRUNCATION_TOL: float = 1e-16
    SERIES_MAX_TERMS: int = 500
    SWITCHOVER_RADIUS: float = 12.0
    K_SERIES_RADIUS: float = 2.0 # below this K uses the I-difference form

    # Hypergeometric series
    HYP2F1_TOL: float = 1e-15
    HYP2F1_MAX_TERMS: int = 10_000
    HYP2F1_EULER_MAX_Z: float = 0.9 # above this the 1 - z connection formulas take over

    # Quadrature
    QUAD_ABS_TOL: float = 1e-12
    QUAD_REL_TOL: float = 1e-10
    QUAD_MAX_LEVELS: int = 12
    TAIL_MAX_PANELS: int = 4000

    # Epsilon ladder for the Abel-regularized transforms: EPS_START * 2**-k
    EPS_START: float = 0.2
    EPS_COUNT: int = 7
    EPS_ORDER: int = 3

    # Geometry
    CONE_TOL: float = 1e-9
    SINGULAR_MARGIN_FRACTION: float = 0.05

    # Delta pairing
    PAIRING_ABS_TOL: float = 1e-4
    PAIRING_MAX_LEVEL: int = 7

    # Worker threads for verification suites (TRICOMI_THREADS)
    THREADS: int = 1

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding='utf-8', extra='ignore', env_prefix="TRICOMI_"
    )


@lru_cache()
def get_settings() -> Settings:
    return Settings()

settings = get_settings() # Global settings object


def setup_logging(level: str | None = None) -> None:
    """Configures root logging once for the CLI and the API server."""
    logging.basicConfig(level=(level or settings.LOG_LEVEL).upper(), format=LOG_FORMAT)

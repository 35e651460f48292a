"""
Workbench configuration.
Values come from the process environment, optionally seeded from an env
file loaded with python-dotenv.
"""
import os
import logging
from functools import lru_cache
from pydantic import BaseModel, Field
from dotenv import load_dotenv

# Set up logging
logger = logging.getLogger(__name__)

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class Settings(BaseModel):
    """Runtime settings for the library, CLI and API"""
    fixtures_dir: str = Field(default=os.path.join(PROJECT_ROOT, "fixtures"))
    seed: int = 0
    max_den: int = Field(default=120, gt=0)
    random_samples: int = Field(default=10_000, gt=0)
    grid_limit: int = Field(default=250_000, gt=0)
    table_chunk: int = Field(default=2 ** 21, gt=0)
    log_level: str = "WARNING"


def load_settings() -> Settings:
    """
    Read settings from the environment.

    Returns:
        Settings: Parsed settings
    """
    env_file = os.getenv("SQMV_ENV_FILE", os.path.join(PROJECT_ROOT, "sqmv.env"))
    if os.path.exists(env_file):
        logger.info(f"Loading environment from: {env_file}")
        load_dotenv(env_file)

    defaults = Settings()
    return Settings(
        fixtures_dir=os.getenv("SQMV_FIXTURES", defaults.fixtures_dir),
        seed=int(os.getenv("SQMV_SEED", defaults.seed)),
        max_den=int(os.getenv("SQMV_MAX_DEN", defaults.max_den)),
        random_samples=int(os.getenv("SQMV_RANDOM_SAMPLES", defaults.random_samples)),
        grid_limit=int(os.getenv("SQMV_GRID_LIMIT", defaults.grid_limit)),
        table_chunk=int(os.getenv("SQMV_TABLE_CHUNK", defaults.table_chunk)),
        log_level=os.getenv("SQMV_LOG_LEVEL", defaults.log_level).upper(),
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Cached settings accessor"""
    return load_settings()


def configure_logging(level: str = None) -> None:
    """Configure process-level logging on stderr"""
    logging.basicConfig(
        level=getattr(logging, (level or get_settings().log_level), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

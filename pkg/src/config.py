"""Application configuration using Pydantic Settings."""

from functools import lru_cache
from pydantic_settings import BaseSettings

# ===========================================
# Product
# ===========================================
PRODUCT_NAME = "dcj-escape"
PRODUCT_TAGLINE = "Double-cut-and-join random walks, distances and their escape from parsimony."
PRODUCT_VERSION = "1.0.0"
PRODUCT_DESCRIPTION = (
    "Exact DCJ distances via breakpoint graphs, simulated genome evolution "
    "and label-graph distance estimates."
)

# Console styles
CONSOLE_COLORS = {
    "header": "#1E3A8A",  # table titles
    "accent": "#14B8A6",  # estimates
    "escape": "#DC2626",  # escape markers
    "ok": "#16A34A",  # passing certifications
}


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Replicate fan-out
    workers: int = 1

    # Logging
    log_level: str = "INFO"

    # Escape detection: mean(d) < (1 - epsilon) * c * n
    escape_epsilon: float = 0.05

    # Oracle
    oracle_max_n: int = 4

    # Gamma series
    gamma_tol: float = 1e-10
    gamma_critical_tol: float = 1e-4
    gamma_critical_window: float = 1e-3
    gamma_max_terms: int = 1_000_000

    # Sampled closure checks while validating a run
    validate_every: int = 1000

    class Config:
        env_file = ".env"
        env_prefix = "DCJ_"
        case_sensitive = False


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()

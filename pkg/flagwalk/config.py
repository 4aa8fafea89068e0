"""Application configuration using Pydantic Settings."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from environment variables prefixed with ``FLAGWALK_``."""

    # Application
    APP_NAME: str = "flagwalk"
    ENVIRONMENT: str = "development"
    DEBUG: bool = False
    LOG_LEVEL: str = Field(default="WARNING", description="Root log level when DEBUG is off")

    # Computation
    THREADS: int = Field(default=0, ge=0, description="Worker threads, 0 = one per CPU")
    MAX_FLAGS: int = Field(default=20000, ge=4, description="Largest mapfile accepted")

    # Fixtures
    FIXTURES_DIR: str = Field(default="fixtures", description="Export target for fixtures")

    model_config = SettingsConfigDict(
        env_prefix="FLAGWALK_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )


# Create global settings instance
settings = Settings()

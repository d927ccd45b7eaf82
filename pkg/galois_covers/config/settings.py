from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Engine settings.
    Loaded from COVER_* environment variables and a .env file.
    """

    model_config = SettingsConfigDict(
        env_prefix="COVER_", env_file=".env", env_file_encoding="utf-8"
    )

    # Coset enumeration cap (live cosets)
    max_cosets: int = Field(default=1_000_000, ge=1)

    # Longest word accepted by the word layer
    max_word_length: int = Field(default=2**20, ge=1)

    # Fan-out for the round-trip check and the lens sweep
    workers: int = Field(default=1, ge=1)

    log_level: str = "INFO"


@lru_cache
def get_settings() -> Settings:
    """Singleton instance, loaded on first use so a bad environment surfaces as an error."""
    return Settings()

"""
DebtDyn - Configuration
Settings for the HTTP service and the command-line tool
"""

from typing import Literal, Tuple, Type

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from debtdyn import __version__


class Settings(BaseSettings):
    # Basic Configuration
    PROJECT_NAME: str = "DebtDyn - Debt Sustainability Dynamics"
    VERSION: str = __version__
    API_V1_STR: str = "/api/v1"
    ENVIRONMENT: str = "development"

    # Service binding (HTTP surface only)
    HOST: str = "0.0.0.0"
    PORT: int = 8000

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: Literal["standard", "json"] = "standard"

    # Engine orchestration
    SWEEP_MAX_CONCURRENCY: int = Field(default=4, ge=1)
    DEFAULT_FORMAT: Literal["csv", "json"] = "csv"

    model_config = SettingsConfigDict(
        env_prefix="DEBTDYN_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )


class CliSettings(Settings):
    """Settings for one CLI invocation.

    Only explicit constructor input is honoured: environment variables and
    `.env` files never change what the command line tool emits.
    """

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


def get_settings() -> Settings:
    """Service settings, read from the environment on every call."""
    return Settings()


settings = Settings()

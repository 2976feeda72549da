from fractions import Fraction
from pathlib import Path

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    MAX_TOWER_DEPTH: int = 8

    REPORT_EPS: str = "1/1000000000000"
    BOUNDS_EPS: str = "1/1048576"

    NGON_PRECISION: int = 128

    SVG_DECIMALS: int = 6

    LOG_LEVEL: str = "WARNING"

    BASE_DIR: Path = Path(__file__).parent.parent

    model_config = SettingsConfigDict(
        extra="ignore", env_file=".env", env_file_encoding="utf-8"
    )

    @field_validator("MAX_TOWER_DEPTH", "NGON_PRECISION", "SVG_DECIMALS")
    @classmethod
    def validate_positive(cls, value):
        """
        The validate_positive function rejects depths and precisions below one.

        :param cls: Pass the class that is being validated
        :param value: Pass the configured integer
        :return: The value unchanged
        """
        if value < 1:
            raise ValueError("Value must be a positive integer")

        return value

    @field_validator("REPORT_EPS", "BOUNDS_EPS")
    @classmethod
    def validate_eps(cls, value):
        """
        The validate_eps function checks that an interval width is a positive rational
        written as "p/q" (or an integer).

        :param cls: Pass the class that is being validated
        :param value: Pass the width as a string
        :return: The value unchanged
        """
        try:
            eps = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError("Interval width must be a rational like 1/1000")
        if eps <= 0:
            raise ValueError("Interval width must be positive")

        return value

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, value):
        value = value.upper()
        if value not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            raise ValueError("Unknown log level")

        return value

    @property
    def report_eps(self) -> Fraction:
        return Fraction(self.REPORT_EPS)

    @property
    def bounds_eps(self) -> Fraction:
        return Fraction(self.BOUNDS_EPS)


config = Settings()

"""
Configuration loader for toric_mori.

Loads and validates engine configuration from config.json.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict

from toric_mori.errors import InputError


class ConfigError(InputError):
    """Raised when config cannot be loaded or is invalid."""
    pass


LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class EngineSection:
    """Limits of the combinatorial search routines."""
    max_primitive_collection_rays: int
    ample_search_bound: int
    ample_search_max_rays: int


@dataclass(frozen=True)
class OutputSection:
    """Report and fan file output settings."""
    json_indent: int
    write_intermediate_fans: bool


@dataclass(frozen=True)
class LoggingSection:
    """Logging settings applied by the CLI."""
    level: str

    @property
    def numeric_level(self) -> int:
        return getattr(logging, self.level)


@dataclass(frozen=True)
class RandomFanSection:
    """Parameters of the random complete smooth fan generator."""
    seed: int
    count: int
    min_rank: int
    max_rank: int
    max_subdivisions: int


@dataclass(frozen=True)
class EngineConfig:
    """Complete engine configuration."""
    engine: EngineSection
    output: OutputSection
    logging: LoggingSection
    random_fans: RandomFanSection


class ConfigLoader:
    """Loads and validates engine configuration from JSON files."""

    def load(self, filepath: str = "config.json") -> EngineConfig:
        """
        Load configuration from a JSON file.

        Args:
            filepath: Path to the configuration file (relative to the working directory)

        Returns:
            EngineConfig object with all configuration data

        Raises:
            ConfigError: If file cannot be loaded or config is invalid
        """
        try:
            config_path = Path(filepath)

            with open(config_path, 'r') as f:
                data = json.load(f)

            config = self._parse_config(data)
            self._validate(config)
            return config

        except FileNotFoundError as e:
            raise ConfigError(
                f"Configuration file not found: {filepath}\n"
                f"Pass --config or set TORIC_MORI_CONFIG."
            ) from e
        except json.JSONDecodeError as e:
            raise ConfigError(
                f"Invalid JSON in configuration file: {filepath}\n"
                f"Error at line {e.lineno}, column {e.colno}: {e.msg}"
            ) from e

    def _parse_config(self, data: Dict) -> EngineConfig:
        """Parse raw JSON data into typed EngineConfig object."""
        try:
            return EngineConfig(
                engine=EngineSection(**data['engine']),
                output=OutputSection(**data['output']),
                logging=LoggingSection(**data['logging']),
                random_fans=RandomFanSection(**data['random_fans']),
            )
        except KeyError as e:
            raise ConfigError(f"Missing required configuration field: {e}")
        except TypeError as e:
            raise ConfigError(f"Invalid configuration value type: {e}")

    def _validate(self, config: EngineConfig):
        """
        Validate configuration values.

        Every rule is checked; all violations are reported together.

        Raises:
            ConfigError: If any validation rules are violated
        """
        errors = []

        engine = config.engine
        if not isinstance(engine.max_primitive_collection_rays, int) or engine.max_primitive_collection_rays <= 0:
            errors.append(
                f"engine.max_primitive_collection_rays must be > 0 "
                f"(got: {engine.max_primitive_collection_rays})"
            )
        if not isinstance(engine.ample_search_bound, int) or engine.ample_search_bound < 0:
            errors.append(
                f"engine.ample_search_bound must be >= 0 (got: {engine.ample_search_bound})"
            )
        if not isinstance(engine.ample_search_max_rays, int) or engine.ample_search_max_rays < 0:
            errors.append(
                f"engine.ample_search_max_rays must be >= 0 (got: {engine.ample_search_max_rays})"
            )

        if not isinstance(config.output.json_indent, int) or config.output.json_indent < 0:
            errors.append(
                f"output.json_indent must be >= 0 (got: {config.output.json_indent})"
            )
        if not isinstance(config.output.write_intermediate_fans, bool):
            errors.append(
                f"output.write_intermediate_fans must be a boolean "
                f"(got: {config.output.write_intermediate_fans!r})"
            )

        if config.logging.level not in LOG_LEVELS:
            errors.append(
                f"logging.level must be one of {', '.join(LOG_LEVELS)} "
                f"(got: {config.logging.level})"
            )

        fans = config.random_fans
        if fans.count < 1:
            errors.append(f"random_fans.count must be >= 1 (got: {fans.count})")
        if fans.min_rank < 2:
            errors.append(f"random_fans.min_rank must be >= 2 (got: {fans.min_rank})")
        if fans.max_rank > 3:
            errors.append(f"random_fans.max_rank must be <= 3 (got: {fans.max_rank})")
        if fans.min_rank > fans.max_rank:
            errors.append(
                f"random_fans.min_rank must be <= max_rank "
                f"(got: {fans.min_rank} > {fans.max_rank})"
            )
        if fans.max_subdivisions < 0:
            errors.append(
                f"random_fans.max_subdivisions must be >= 0 (got: {fans.max_subdivisions})"
            )

        if errors:
            error_msg = "Invalid configuration:\n" + "\n".join(f"  - {e}" for e in errors)
            raise ConfigError(error_msg)

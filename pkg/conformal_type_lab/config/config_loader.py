import logging
import os
from typing import Any, Dict

import yaml


class ConfigLoader:
    """
    Load and manage configuration settings from YAML files for conformal_type_lab.

    This class is designed to be used as a singleton. A single instance is
    created at the module level, which should be imported by other parts of
    the application. The ``CTL_CONFIG`` environment variable selects an alternative
    YAML file and ``CTL_SEED`` overrides the configured seed.
    """

    def __init__(self, config_path=None):
        """
        Initialize the ConfigLoader, load the YAML file, and set key config
        properties as attributes.
        """
        self.logger = logging.getLogger(__name__)

        if config_path is None:
            config_path = os.environ.get("CTL_CONFIG")
        if config_path is None:
            # Default to config.yaml in the same directory as this script
            self.config_path = os.path.join(os.path.dirname(__file__), 'config.yaml')
        else:
            self.config_path = config_path

        self.config: Dict[str, Any] = self._load_config()

        # Expose the frequently used settings as direct attributes
        self.log_level: int = self._parse_log_level()
        self.log_file = self._parse_log_file()
        self.tolerance: float = float(self.config.get("tolerance", 1.0e-9))
        self.seed: int = self._parse_seed()
        self.show_progress: bool = bool(self.config.get("show_progress", True))

    def _load_config(self) -> Dict[str, Any]:
        """
        Load configuration from YAML file.

        Returns:
            dict: Configuration as a dictionary
        """
        try:
            with open(self.config_path, 'r') as f:
                config_data = yaml.safe_load(f) or {}
                self.logger.info(f"Loaded configuration from {self.config_path}")
                return config_data
        except FileNotFoundError:
            self.logger.error(f"Configuration file not found: {self.config_path}")
            raise
        except yaml.YAMLError as e:
            self.logger.error(f"Error parsing YAML configuration: {str(e)}")
            raise

    def _parse_log_level(self) -> int:
        """Get the logging level from the configuration.
        Returns:
            int: The logging level (e.g., logging.INFO, logging.DEBUG).
                 Defaults to logging.INFO if not specified or invalid.
        """
        log_level_str = str(self.config.get("log_level", "INFO")).upper()
        level = getattr(logging, log_level_str, None)

        if not isinstance(level, int):
            logging.warning(
                "Invalid log level '%s' in config. Defaulting to INFO.",
                log_level_str,
            )
            return logging.INFO

        return level

    def _parse_log_file(self):
        """Get the log file path from the configuration (None disables file logging)."""
        return self.config.get('log_file')

    def _parse_seed(self) -> int:
        env_seed = os.environ.get("CTL_SEED")
        if env_seed is not None:
            try:
                return int(env_seed)
            except ValueError:
                self.logger.warning(f"Ignoring non-integer CTL_SEED={env_seed!r}")
        return int(self.config.get("seed", 0))

    def get_line_complex_settings(self) -> Dict[str, Any]:
        """
        Get the line complex settings.

        Returns:
            dict: Settings with ``coset_budget``
        """
        return {"coset_budget": 200000, **self.config.get('line_complex', {})}

    def get_partitioner_settings(self) -> Dict[str, Any]:
        """
        Get the partitioner settings.

        Returns:
            dict: Settings with ``exhaustive_cap``, ``window_budget`` and ``parallel_workers``
        """
        defaults = {"exhaustive_cap": 15, "window_budget": 500000, "parallel_workers": 4}
        return {**defaults, **self.config.get('partitioner', {})}

    def get_spherical_settings(self) -> Dict[str, Any]:
        defaults = {"bisection_steps": 200, "inscribed_samples": 10000}
        return {**defaults, **self.config.get('spherical', {})}

    def get_record_settings(self) -> Dict[str, Any]:
        defaults = {"max_stages": 8, "window": 4}
        return {**defaults, **self.config.get('record', {})}


config = ConfigLoader()

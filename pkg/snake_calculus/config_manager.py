"""
Configuration manager for the snake graph calculus engine.
"""

import copy
import os
import yaml
import json
import logging
from typing import Dict, Any, Optional, List
from pathlib import Path

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

MAX_TILE_BOUND = 9


class ConfigManager:
    """Manages engine limits, worker fan-out and logging settings."""

    DEFAULT_CONFIG = {
        'engine': {
            'max_tiles': 5,
            'self_max_tiles': 7,
            'graft_max_tiles': 5,
            'band_max_tiles': 5,
            'workers': 4,
            'both_seeds': False
        },
        'output': {
            'golden_dir': None
        },
        'logging': {
            'level': 'INFO',
            'file': None
        }
    }

    ENV_MAPPINGS = {
        'SNAKE_CALCULUS_MAX_TILES': ('engine', 'max_tiles'),
        'SNAKE_CALCULUS_SELF_MAX_TILES': ('engine', 'self_max_tiles'),
        'SNAKE_CALCULUS_WORKERS': ('engine', 'workers'),
        'SNAKE_CALCULUS_GOLDEN_DIR': ('output', 'golden_dir'),
        'SNAKE_CALCULUS_LOG_LEVEL': ('logging', 'level'),
        'SNAKE_CALCULUS_LOG_FILE': ('logging', 'file'),
    }

    INTEGER_KEYS = ('max_tiles', 'self_max_tiles', 'graft_max_tiles', 'band_max_tiles', 'workers')

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration manager.

        Args:
            config_path: Path to configuration file. If None, will look for
                        config.yaml in the usual locations or use defaults.
        """
        self.config_path = config_path
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        self.logger = logging.getLogger(__name__)

        self._load_config()

    def _load_config(self) -> None:
        """Load configuration from file."""
        config_file = None

        if self.config_path:
            config_file = Path(self.config_path)
        else:
            possible_paths = [
                Path('config.yaml'),
                Path.home() / '.snake_calculus' / 'config.yaml',
                Path('/etc/snake_calculus/config.yaml')
            ]

            for path in possible_paths:
                if path.exists():
                    config_file = path
                    break

        if config_file and config_file.exists():
            try:
                self.logger.info(f"Loading configuration from {config_file}")
                with open(config_file, 'r', encoding='utf-8') as f:
                    file_config = yaml.safe_load(f)

                if isinstance(file_config, dict):
                    self._deep_merge(self.config, file_config)
                    self.logger.info("Configuration loaded successfully")
                elif file_config is None:
                    self.logger.warning("Configuration file is empty, using defaults")
                else:
                    self.logger.warning("Configuration file is not a mapping, using defaults")

            except Exception as e:
                self.logger.error(f"Error loading configuration: {e}")
                self.logger.info("Using default configuration")
        else:
            self.logger.debug("No configuration file found, using defaults")

        self._load_env_overrides()

    def _load_env_overrides(self) -> None:
        """Load configuration overrides from environment variables."""
        for env_var, (section, key) in self.ENV_MAPPINGS.items():
            value = os.environ.get(env_var)
            if value is None:
                continue
            if key in self.INTEGER_KEYS:
                try:
                    value = int(value)
                except ValueError:
                    self.logger.warning(f"Invalid integer value for {env_var}: {value}")
                    continue
            elif key == 'level':
                value = value.upper()

            if section not in self.config:
                self.config[section] = {}
            self.config[section][key] = value
            self.logger.debug(f"Environment override: {env_var} = {value}")

    def _deep_merge(self, base: Dict[str, Any], override: Dict[str, Any]) -> None:
        """Deep merge two dictionaries."""
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._deep_merge(base[key], value)
            else:
                base[key] = value

    def get_config(self) -> Dict[str, Any]:
        """Get the current configuration."""
        return copy.deepcopy(self.config)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value using dot notation.

        Args:
            key: Configuration key in dot notation (e.g., 'engine.max_tiles')
            default: Default value if key is not found

        Returns:
            Configuration value or default
        """
        value = self.config
        try:
            for k in key.split('.'):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value using dot notation."""
        keys = key.split('.')
        config = self.config
        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]
        config[keys[-1]] = value

    def save_config(self, path: Optional[str] = None) -> None:
        """
        Save current configuration to file.

        Args:
            path: Path to save configuration. If None, uses original config path.
        """
        save_path = path or self.config_path or 'config.yaml'

        try:
            Path(save_path).parent.mkdir(parents=True, exist_ok=True)

            with open(save_path, 'w', encoding='utf-8') as f:
                yaml.dump(self.config, f, default_flow_style=False, indent=2)

            self.logger.info(f"Configuration saved to {save_path}")

        except Exception as e:
            self.logger.error(f"Error saving configuration: {e}")
            raise

    def validate_config(self) -> List[str]:
        """
        Validate the current configuration.

        Returns:
            List of validation errors (empty if valid)
        """
        errors = []

        engine = self.config.get('engine', {})
        for key in ('max_tiles', 'self_max_tiles', 'graft_max_tiles', 'band_max_tiles'):
            value = engine.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= MAX_TILE_BOUND:
                errors.append(f"engine.{key} must be an integer between 1 and {MAX_TILE_BOUND}")

        workers = engine.get('workers')
        if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
            errors.append("engine.workers must be a positive integer")

        if not isinstance(engine.get('both_seeds'), bool):
            errors.append("engine.both_seeds must be true or false")

        golden_dir = self.config.get('output', {}).get('golden_dir')
        if golden_dir is not None and not isinstance(golden_dir, str):
            errors.append("output.golden_dir must be a path")

        level = self.config.get('logging', {}).get('level')
        if not isinstance(level, str) or level.upper() not in LOG_LEVELS:
            errors.append(f"logging.level must be one of {', '.join(LOG_LEVELS)}")

        return errors

    def to_json(self) -> str:
        """Convert configuration to JSON string."""
        return json.dumps(self.config, indent=2)

    def __str__(self) -> str:
        """String representation of configuration."""
        return self.to_json()


def generate_config(path: str) -> None:
    """Write the default configuration, with a short header, to ``path``."""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write("# snake-calculus configuration\n")
        f.write("# engine.*_max_tiles bound the exhaustive selftest suites (1-9)\n")
        f.write("# every key can be overridden by SNAKE_CALCULUS_* environment variables\n")
        yaml.dump(ConfigManager.DEFAULT_CONFIG, f, default_flow_style=False, indent=2)

import json

import pytest
import yaml

from snake_calculus.config_manager import ConfigManager, generate_config


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ConfigManager.ENV_MAPPINGS:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def missing(tmp_path):
    return str(tmp_path / 'missing.yaml')


def test_defaults(missing):
    config = ConfigManager(missing)
    assert config.get('engine.max_tiles') == 5
    assert config.get('engine.self_max_tiles') == 7
    assert config.get('output.golden_dir') is None
    assert config.get('engine.nothing', 'fallback') == 'fallback'
    assert config.validate_config() == []


def test_defaults_are_not_shared(missing):
    first = ConfigManager(missing)
    first.set('engine.max_tiles', 2)
    assert ConfigManager(missing).get('engine.max_tiles') == 5
    assert ConfigManager.DEFAULT_CONFIG['engine']['max_tiles'] == 5


def test_yaml_file_is_merged(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text("engine:\n  workers: 2\nlogging:\n  level: DEBUG\n", encoding='utf-8')
    config = ConfigManager(str(path))
    assert config.get('engine.workers') == 2
    assert config.get('engine.max_tiles') == 5
    assert config.get('logging.level') == 'DEBUG'


def test_non_mapping_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text("- just\n- a list\n", encoding='utf-8')
    assert ConfigManager(str(path)).get_config() == ConfigManager.DEFAULT_CONFIG


def test_environment_overrides(monkeypatch, missing):
    monkeypatch.setenv('SNAKE_CALCULUS_MAX_TILES', '3')
    monkeypatch.setenv('SNAKE_CALCULUS_LOG_LEVEL', 'debug')
    monkeypatch.setenv('SNAKE_CALCULUS_GOLDEN_DIR', 'tests/golden')
    config = ConfigManager(missing)
    assert config.get('engine.max_tiles') == 3
    assert config.get('logging.level') == 'DEBUG'
    assert config.get('output.golden_dir') == 'tests/golden'


def test_bad_integer_override_is_ignored(monkeypatch, missing):
    monkeypatch.setenv('SNAKE_CALCULUS_WORKERS', 'many')
    assert ConfigManager(missing).get('engine.workers') == 4


@pytest.mark.parametrize('key, value, fragment', [
    ('engine.max_tiles', 12, 'engine.max_tiles'),
    ('engine.band_max_tiles', 0, 'engine.band_max_tiles'),
    ('engine.self_max_tiles', True, 'engine.self_max_tiles'),
    ('engine.workers', 0, 'engine.workers'),
    ('engine.both_seeds', 'yes', 'engine.both_seeds'),
    ('output.golden_dir', 3, 'output.golden_dir'),
    ('logging.level', 'LOUD', 'logging.level'),
])
def test_validation(missing, key, value, fragment):
    config = ConfigManager(missing)
    config.set(key, value)
    errors = config.validate_config()
    assert len(errors) == 1
    assert fragment in errors[0]


def test_save_and_reload(tmp_path, missing):
    config = ConfigManager(missing)
    config.set('engine.workers', 8)
    target = tmp_path / 'nested' / 'saved.yaml'
    config.save_config(str(target))
    assert ConfigManager(str(target)).get('engine.workers') == 8


def test_generate_config(tmp_path):
    target = tmp_path / 'sample.yaml'
    generate_config(str(target))
    text = target.read_text(encoding='utf-8')
    assert text.startswith('# snake-calculus configuration')
    assert yaml.safe_load(text) == ConfigManager.DEFAULT_CONFIG


def test_json_view(missing):
    assert json.loads(str(ConfigManager(missing)))['engine']['workers'] == 4

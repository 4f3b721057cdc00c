import pytest

from snake_calculus.config_manager import ConfigManager
from snake_calculus.selftest import SUITES, SuiteResult, all_snakes, run_selftest, run_suite, surface_walks


@pytest.fixture
def small_config(tmp_path):
    config = ConfigManager(str(tmp_path / 'missing.yaml'))
    for key in ('max_tiles', 'self_max_tiles', 'graft_max_tiles', 'band_max_tiles'):
        config.set(f"engine.{key}", 3)
    config.set('engine.workers', 2)
    return config


def test_all_snakes_enumerates_every_word():
    graphs = list(all_snakes(4))
    assert len(graphs) == 1 + 2 + 4 + 8
    assert len({graph.word() for graph in graphs}) == len(graphs)


def test_surface_walks_never_repeat_an_arc_in_a_row(annulus):
    walks = list(surface_walks(annulus, 3))
    assert walks
    for walk in walks:
        assert 1 <= len(walk.crossings) <= 3
        assert all(a != b for a, b in zip(walk.crossings, walk.crossings[1:]))


def test_summary():
    result = SuiteResult('demo', checked=4, failures=1)
    assert not result.ok
    assert result.summary() == 'demo: 4 checked, 1 failures'
    assert SuiteResult('demo', checked=1).summary() == 'demo: 1 checked, 0 failures'


@pytest.mark.parametrize('name', ['pair-counting', 'graft-counting', 'good-matchings', 'sign-independence'])
def test_small_suites_pass(small_config, name):
    result = run_suite(name, small_config)
    assert result.ok, result.summary()
    assert result.checked > 0


def test_run_selftest_keeps_suite_order(small_config):
    names = ['positivity', 'pair-counting']
    results = run_selftest(small_config, names)
    assert [r.name for r in results] == names
    assert all(r.ok for r in results)


def test_unknown_suite(small_config):
    with pytest.raises(ValueError):
        run_selftest(small_config, ['everything'])


def test_every_suite_is_registered():
    assert set(SUITES) == {
        'pair-counting', 'self-counting', 'graft-counting', 'labeled-identities', 'torus-golden',
        'good-matchings', 'sign-independence', 'positivity',
    }


def test_every_self_crossing_resolves(small_config):
    small_config.set('engine.self_max_tiles', 6)
    result = run_suite('self-counting', small_config)
    assert result.ok, result.summary()
    assert result.checked > 0

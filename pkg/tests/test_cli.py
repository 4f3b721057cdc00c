import pytest

from snake_calculus.cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main


@pytest.fixture
def run(tmp_path, capsys):
    """Run the CLI with an empty configuration; returns (status, stdout, stderr)."""

    def runner(*argv):
        status = main(['-c', str(tmp_path / 'missing.yaml'), *argv])
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return runner


@pytest.fixture
def write(tmp_path):
    def writer(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    return writer


def test_matchings(run, write):
    path = write('graphs.txt', "snake:\nsnake: RU\nband: R glue=S\n")
    status, out, _ = run('matchings', path)
    assert status == EXIT_OK
    lines = out.splitlines()
    assert lines[:4] == ['snake:', '2 matchings', 'snake: RU', '4 matchings']
    assert lines[4] == 'band: R glue=S'
    assert lines[5].endswith('good matchings')


def test_matchings_listing_and_signs(run, write):
    path = write('graphs.txt', "snake: R\n")
    status, out, _ = run('matchings', path, '--list', '--both-seeds')
    assert status == EXIT_OK
    assert 'signs (seed +): +' in out
    assert 'signs (seed -): -' in out
    assert sum(1 for line in out.splitlines() if line.startswith('  ')) == 3


def test_parse_errors_exit_with_input_status(run, write):
    path = write('graphs.txt', "snake: R\nsnake: RQ\n")
    status, out, err = run('matchings', path)
    assert status == EXIT_INPUT
    assert out == ''
    assert 'graphs.txt:2:' in err


def test_missing_file(run, tmp_path):
    status, _, err = run('matchings', str(tmp_path / 'nope.txt'))
    assert status == EXIT_INPUT
    assert 'Error:' in err


def test_resolve_pair(run, write):
    path = write('pair.txt', "snake: RR\nsnake:\n")
    status, out, _ = run('resolve', path)
    assert status == EXIT_OK
    assert 'count identity: holds' in out
    assert 'matchings: 10 = 10' in out


def test_resolve_lists_overlaps(run, write):
    path = write('pair.txt', "snake: RR\nsnake:\n")
    status, out, _ = run('resolve', path, '--list')
    assert status == EXIT_OK
    assert out.startswith('[0] overlap')


def test_resolve_compatible_graphs(run, write):
    path = write('pair.txt', "snake:\nsnake:\n")
    status, out, _ = run('resolve', path)
    assert status == EXIT_OK
    assert out == 'compatible, nothing to smooth\n'


def test_resolve_bad_overlap_index(run, write):
    path = write('pair.txt', "snake: RR\nsnake:\n")
    status, _, _ = run('resolve', path, '--overlap', '99')
    assert status == EXIT_INPUT


def test_graft(run, write):
    path = write('graft.txt', "snake: RU\nsnake: R\n")
    status, out, _ = run('graft', path, '-s', '3', '--edge', 'N')
    assert status == EXIT_OK
    assert out.startswith('case: GRAFT-2')
    assert 'matchings: 12 = 12' in out


def test_self_graft_needs_an_edge_at_the_end(run, write):
    path = write('graft.txt', "snake: RU\n")
    status, _, err = run('graft', path, '-s', '3')
    assert status == EXIT_INPUT
    assert 'north or east' in err


def test_laurent(run, write):
    path = write('tile.txt', "snake: tiles=1 edges=a,b,c,d\n")
    status, out, _ = run('laurent', path, '--boundary', 'a,b')
    assert status == EXIT_OK
    assert out.splitlines()[1] == 'L = x1^-1*xc + x1^-1*xd*y1'


def test_cluster_var(run):
    status, out, _ = run('cluster-var', 'annulus', 'flip2', '--exchange', '2')
    assert status == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "x2 x2' = y2 + x1^2"
    assert "flip2 = x1^2*x2^-1 + x2^-1*y2" in lines
    assert '  F = 1 + y2' in lines


def test_cluster_var_on_the_second_annulus(run):
    status, out, _ = run('cluster-var', 'annulus2', 'flip3', '--exchange', '3')
    assert status == EXIT_OK
    assert '  F = 1 + y3' in out.splitlines()


def test_cluster_var_lists_curves(run):
    status, out, _ = run('cluster-var', 'torus', '--list')
    assert status == EXIT_OK
    assert out.split() == ['flip1', 'gamma1', 'gamma2', 'zeta']


def test_unknown_curve(run):
    status, _, err = run('cluster-var', 'torus', 'delta')
    assert status == EXIT_INPUT
    assert 'delta' in err


def test_skein_torus(run):
    status, out, _ = run('skein', 'torus')
    assert status == EXIT_OK
    assert 'closed formula: holds' in out
    assert 'flipped arc against exchange relation: holds' in out


def test_skein_smoothing(run):
    status, out, _ = run('skein', 'torus', 'gamma1', 'gamma2', '--overlap', '1', '--smooth')
    assert status == EXIT_OK
    assert out.startswith('smoothing gamma1 x gamma2')
    assert 'identity: holds' in out


def test_golden_files(run, write, tmp_path):
    path = write('graphs.txt', "snake: RR\n")
    golden = tmp_path / 'golden'
    assert run('matchings', path, '--golden', str(golden))[0] == EXIT_OK
    recorded = golden / 'matchings-graphs.txt'
    assert recorded.read_text(encoding='utf-8') == 'snake: RR\n5 matchings\n'
    assert run('matchings', path, '--golden', str(golden))[0] == EXIT_OK
    recorded.write_text('snake: RR\n6 matchings\n', encoding='utf-8')
    assert run('matchings', path, '--golden', str(golden))[0] == EXIT_FAILED


def test_selftest_suite(run):
    status, out, _ = run('selftest', '--suite', 'positivity', '--max-tiles', '2')
    assert status == EXIT_OK
    assert out.splitlines()[-1] == 'selftest: passed'


def test_selftest_rejects_bad_bounds(run):
    status, _, err = run('selftest', '--suite', 'positivity', '--max-tiles', '12')
    assert status == EXIT_INPUT
    assert 'max_tiles' in err


def test_generate_config(run, tmp_path):
    target = tmp_path / 'generated.yaml'
    status, out, _ = run('--generate-config', str(target))
    assert status == EXIT_OK
    assert target.exists()
    assert 'Sample configuration saved' in out


def test_no_command_prints_help(run):
    status, out, _ = run()
    assert status == EXIT_INPUT
    assert 'usage:' in out

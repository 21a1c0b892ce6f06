import configparser
import csv
import io

from argparse import Namespace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from main import main
from magnongate.core.scenario import BUILTIN_SCENARIOS, load_scenario
from magnongate.handlers.base import format_value
from magnongate.executor import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE_ERROR, Simulation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, list(csv.reader(io.StringIO(out)))


@pytest.mark.parametrize('command, header, rows', [
    ('dispersion', ['n', 'k_over_pi', 'energy_hz'], 21),
    ('levels', ['H_kOe', 'E_m_minus1_hz', 'E_m0_hz', 'E_m_plus1_hz'], 41),
    ('coupling', ['r', 'W_hz', 'W_abs_hz'], 1),
    ('sweep', ['r', 'W_hz', 'W_abs_hz'], 21),
    ('pump', ['t_s', 'n0', 'W_hz'], 101),
    ('address', ['qubit', 'position', 'field_kOe', 'omega_plus_mhz', 'omega_minus_mhz'], 4),
    ('gate', ['in_state', 'p00', 'p01', 'p10', 'p11'], 5),
    ('reproduce', ['quantity', 'computed', 'reference', 'unit'], 5),
])
def test_every_command_emits_its_table(capsys, command, header, rows):
    code, table = run(capsys, command)
    assert code == EXIT_OK
    assert table[0] == header
    assert len(table) - 1 == rows


def test_reproduce_benchmark(capsys):
    code, table = run(capsys, 'reproduce')
    assert code == EXIT_OK
    rows = {row[0]: row for row in table[1:]}
    assert float(rows['W_ij'][1]) == pytest.approx(14789.7, rel=1e-4)
    assert float(rows['W_ij'][2]) == 15000.0
    assert float(rows['n0_over_N'][1]) == pytest.approx(0.01)
    assert float(rows['gate_time'][1]) == pytest.approx(1 / (2 * 14789.7), rel=1e-4)
    assert rows['dipolar_3A'][2] == ''


def test_coupling_switched_off(capsys):
    code, table = run(capsys, 'coupling', '--n0', '0')
    assert code == EXIT_OK
    assert table[1] == ['10', '0', '0']


def test_sweep_range(capsys):
    code, table = run(capsys, 'sweep', '--r-max', '5')
    assert code == EXIT_OK
    assert [row[0] for row in table[1:]] == ['0', '1', '2', '3', '4', '5']


def test_gate_truth_table_and_fidelity(capsys):
    code, table = run(capsys, 'gate')
    assert code == EXIT_OK
    assert [row[0] for row in table[1:]] == ['00', '01', '10', '11', 'fidelity']
    assert [float(p) for p in table[3][1:]] == pytest.approx([0.0, 0.0, 0.0, 1.0], abs=1e-9)
    fidelity = table[5]
    assert float(fidelity[1]) >= 1 - 1e-9
    assert float(fidelity[2]) == pytest.approx(0.25, abs=1e-9)
    assert fidelity[3:] == ['', '']


def test_output_is_deterministic(capsys):
    main(['sweep'])
    first = capsys.readouterr().out
    main(['sweep'])
    assert capsys.readouterr().out == first


def test_out_path(tmp_path, capsys):
    path = tmp_path / 'levels.csv'
    assert main(['levels', '--out', str(path)]) == EXIT_OK
    assert capsys.readouterr().out == ''
    lines = path.read_text().splitlines()
    assert lines[0] == 'H_kOe,E_m_minus1_hz,E_m0_hz,E_m_plus1_hz'
    assert len(lines) == 42


def test_bad_config_is_a_usage_error(capsys):
    assert main(['coupling', '--config', '/nonexistent/scenario.conf']) == EXIT_USAGE_ERROR


def test_unknown_command_exits_through_argparse():
    with pytest.raises(SystemExit) as error:
        main(['teleport'])
    assert error.value.code == EXIT_USAGE_ERROR


@pytest.mark.parametrize('argv', [['coupling', '--n0', '-1'], ['gate', '--n0', '0'], ['gate', '--tau=-1e-6']])
def test_domain_errors_exit_with_one(capsys, argv):
    assert main(argv) == EXIT_DOMAIN_ERROR
    assert capsys.readouterr().out == ''


def test_simulation_rejects_unknown_handler():
    simulation = Simulation(load_scenario('paper'), Namespace(out=None))
    assert simulation.run_command('teleport', io.StringIO()) == EXIT_USAGE_ERROR


@pytest.mark.parametrize('coupling', ['15000.0', '-15000.0'])
def test_gate_with_coupling_override(tmp_path, capsys, coupling):
    configs = configparser.ConfigParser()
    configs.read(BUILTIN_SCENARIOS['paper'])
    configs.set('gate', 'W', coupling)
    path = tmp_path / 'override.conf'
    with open(path, 'w') as f:
        configs.write(f)
    code, table = run(capsys, 'gate', '--config', str(path))
    assert code == EXIT_OK
    expected = {'00': [1, 0, 0, 0], '01': [0, 1, 0, 0], '10': [0, 0, 0, 1], '11': [0, 0, 1, 0]}
    for row in table[1:5]:
        assert [float(p) for p in row[1:]] == pytest.approx(expected[row[0]], abs=1e-9)


@settings(max_examples=200)
@given(st.floats(allow_nan=False, allow_infinity=False))
def test_csv_values_round_trip(value):
    assert float(format_value(value)) == value


def test_gate_at_short_range_with_negative_coupling(tmp_path, capsys):
    configs = configparser.ConfigParser()
    configs.read(BUILTIN_SCENARIOS['paper'])
    configs.set('coupling', 'r_ij', '0')
    path = tmp_path / 'short.conf'
    with open(path, 'w') as f:
        configs.write(f)
    code, table = run(capsys, 'gate', '--config', str(path))
    assert code == EXIT_OK
    assert [float(p) for p in table[3][1:]] == pytest.approx([0.0, 0.0, 0.0, 1.0], abs=1e-9)
    assert float(table[5][1]) >= 1 - 1e-9


def test_unwritable_out_path_is_a_usage_error(tmp_path, capsys):
    path = tmp_path / 'missing' / 'levels.csv'
    assert main(['levels', '--out', str(path)]) == EXIT_USAGE_ERROR
    assert not path.exists()
    assert capsys.readouterr().out == ''


def test_reproduce_ignores_population_override(capsys):
    code, table = run(capsys, 'reproduce', '--n0', '0')
    assert code == EXIT_OK
    rows = {row[0]: row for row in table[1:]}
    assert float(rows['W_ij'][1]) == pytest.approx(14789.7, rel=1e-4)
    assert float(rows['n0_over_N'][1]) == pytest.approx(0.01)

import pytest, os, sys, json, subprocess
import jsonschema
test_dir = os.path.dirname(__file__)
src_dir = os.path.abspath(os.path.join(test_dir, '..', 'src'))

def cli(*args: str, env: dict[str, str]|None = None, cwd: str|None = None) -> subprocess.CompletedProcess:
    environment = {k: v for k, v in os.environ.items() if k != 'SLYMULTIPLICITY_N_MAX'}
    environment.update(PYTHONPATH=src_dir, **(env or {}))
    return subprocess.run([sys.executable, '-m', 'SlyMultiplicity', *args],
        capture_output=True, text=True, env=environment, cwd=cwd, timeout=600)

def instance(name: str) -> str:
    return os.path.join(test_dir, 'instances', F'{name}.inst')

def test_table():
    result = cli('table', instance('direct_sum'), '--n-max', '4')

    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == 'n\tH(n)\tIR(n)\tΔH(n)'
    assert lines[1:] == [F'{n}\t{n + 2}\t2\t{2 if n == 0 else 1}' for n in range(5)]

def test_table_json():
    result = cli('table', instance('regular_line'), '--n-max', '3', '--json')
    doc = json.loads(result.stdout)

    assert doc['schema_version'] == 1
    assert [row['hilbert'] for row in doc['result']] == ['1', '2', '3', '4']
    assert len(doc['instance_digest']) == 64

def test_multiplicities_json():
    result = cli('multiplicities', instance('staircase_d1_l2'), '--json')
    doc = json.loads(result.stdout)['result']

    assert result.returncode == 0
    assert (doc['t'], doc['e0'], doc['f0'], doc['bound']) == ('1', '1', '3', '3')

def test_verify():
    assert cli('verify', instance('staircase_d1_l1'), '--n-max', '12').returncode == 0
    assert cli('verify', instance('truncated_cubic'), '--n-max', '10').returncode == 0

def test_ulrich():
    result = cli('ulrich', instance('direct_sum'), '--n-max', '12')
    assert result.returncode == 0
    assert 'verdict: excluded: t = 1' in result.stdout
    assert cli('ulrich', instance('regular_line')).returncode == 2

def test_artin_rees():
    result = cli('artin-rees', instance('artin_rees_line'), '--n-max', '10')
    assert result.returncode == 0
    assert result.stdout.strip() == 'k = 1'
    assert cli('artin-rees', instance('artin_rees_line'), '--k-max', '0').returncode == 3
    assert cli('artin-rees', instance('regular_line')).returncode == 2

def test_examples():
    result = cli('examples', '--which', 'staircase', '--d', '1', '--l', '2')
    assert result.returncode == 0
    assert '[PASS] f0: expected 3, got 3' in result.stdout
    assert '[PASS] e0: expected 1, got 1' in result.stdout
    assert cli('examples', '--which', 'direct-sum').returncode == 0

def test_input_errors(tmp_path):
    bad = tmp_path / 'bad.inst'
    bad.write_text('vars x; component = (0); I = (x, );')
    result = cli('verify', str(bad))

    assert result.returncode == 2
    assert '1:34' in result.stderr
    assert cli('verify', str(tmp_path / 'missing.inst')).returncode == 2
    assert cli('nonsense').returncode == 2

def test_budget_exit(tmp_path):
    assert cli('multiplicities', instance('staircase_d1_l1'), '--n-max', '3').returncode == 3

def test_env_n_max():
    assert cli('multiplicities', instance('regular_line'), env={'SLYMULTIPLICITY_N_MAX': '3'}).returncode == 3
    # the flag wins over the environment
    assert cli('multiplicities', instance('regular_line'), '--n-max', '10',
        env={'SLYMULTIPLICITY_N_MAX': '3'}).returncode == 0

def test_fuzz_deterministic(tmp_path):
    args = ('fuzz', '--seed', '7', '--count', '6', '--vars', '2', '--n-max', '16', '--json')
    first, second = cli(*args, cwd=str(tmp_path)), cli(*args, cwd=str(tmp_path))

    # 3 would mean a seed ran out of samples; 1 would be a violation
    assert first.returncode in (0, 3)
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)['result']
    assert doc['summary']['total'] == '6'
    assert [v['seed'] for v in doc['verdicts']] == [str(s) for s in range(7, 13)]

def test_fuzz_ranges(tmp_path):
    result = cli('fuzz', '--seed', '2', '--count', '2', '--vars', '1', '--n-max', '12',
        '--n-search', '4', '--n-chain', '6', cwd=str(tmp_path))

    assert result.returncode in (0, 3)
    assert result.stdout.splitlines()[-1].endswith('invalid')
    assert cli('fuzz', '--n-search', 'many').returncode == 2

def report_schema() -> dict:
    with open(os.path.join(test_dir, '..', 'docs', 'report_schema.json'), encoding='utf-8') as f:
        return json.load(f)

@pytest.mark.parametrize('args', [
    ('table', instance('regular_line'), '--n-max', '3'),
    ('multiplicities', instance('staircase_d1_l2')),
    ('verify', instance('staircase_d1_l1'), '--n-max', '12'),
    ('ulrich', instance('direct_sum'), '--n-max', '12'),
    ('artin-rees', instance('artin_rees_line'), '--n-max', '10'),
    ('examples', '--which', 'direct-sum'),
    ('fuzz', '--seed', '3', '--count', '3', '--vars', '2', '--n-max', '16'),
])
def test_reports_match_schema(args: tuple[str, ...], tmp_path):
    result = cli(*args, '--json', cwd=str(tmp_path))

    assert result.returncode in (0, 3), result.stderr
    jsonschema.validate(json.loads(result.stdout), report_schema())

def test_schema_rejects_json_numbers():
    doc = json.loads(cli('multiplicities', instance('staircase_d1_l2'), '--json').stdout)
    doc['result']['e0'] = 1

    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, report_schema())

def test_very_verbose_logs_samples():
    result = cli('-vv', 'table', instance('direct_sum'), '--n-max', '2')

    assert result.returncode == 0
    assert 'DEBUG SlyMultiplicity.module: H(2) = 4' in result.stderr
    assert 'DEBUG SlyMultiplicity.module: IR(2) = 2' in result.stderr
    assert 'DEBUG' not in cli('table', instance('direct_sum'), '--n-max', '2').stderr

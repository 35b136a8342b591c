import pytest, os, glob, json
from SlyMultiplicity import *
from SlyMultiplicity import __version__
test_dir = os.path.dirname(__file__)

fixtures = sorted(glob.glob(F'{test_dir}/instances/*.inst'))

def test_parse_minimal():
    document = parse_instance('vars x; component = (0); I = (x);')
    ring = AmbientRing.of('x')

    assert document.module() == ModulePresentation.cyclic(ring.zero_ideal())
    assert document.ideal('I') == ring.maximal_ideal()
    assert document.ideal('Q') is None

def test_parse_staircase():
    document = parse_instance('vars x, y; component = (x*y, y^2); I = (x, y);')
    assert document.module().dimension == 1

def test_parse_options_and_blocks():
    with open(F'{test_dir}/instances/options.inst', encoding='utf-8') as f:
        document = parse_instance(f.read())
    assert (document.n_max, document.k_max, document.window) == (16, 8, 5)
    with open(F'{test_dir}/instances/direct_sum.inst', encoding='utf-8') as f:
        document = parse_instance(f.read())
    assert len(document.components) == 2
    assert document.ideal('Q') == AmbientRing.of('x').maximal_ideal()

def test_trailing_comma():
    with pytest.raises(InstanceSyntaxError) as e:
        parse_instance('vars x; component = (0); I = (x, );')
    assert (e.value.line, e.value.column) == (1, 34)
    assert 'name' in e.value.expected

def test_positions_across_lines():
    with pytest.raises(InstanceSyntaxError) as e:
        parse_instance('vars x;\ncomponent = (0);\nI = (x $);')
    assert (e.value.line, e.value.column) == (3, 8)

@pytest.mark.parametrize('text, message', [
    ('vars x; component = (y); I = (x);', 'Unknown variable'),
    ('vars x, x; component = (0); I = (x);', 'Duplicate variable'),
    ('vars x; component = (1); I = (x);', 'P/(1)'),
    ('vars x, y; component = (0); I = (x);', 'no pure power of y'),
    ('vars x; component = (0); I = (1);', 'unit ideal'),
    ('vars x; component = (0);', 'I is required'),
    ('vars x; I = (x);', 'At least one component'),
    ('vars x; component = (0); I = (x); I = (x);', 'Duplicate I'),
])
def test_semantic_errors(text: str, message: str):
    with pytest.raises(InstanceSemanticError) as e:
        parse_instance(text)
    assert message in str(e.value)

@pytest.mark.parametrize('text', [
    'component = (0); I = (x);',
    'vars x; component = (0); I = (x)',
    'vars x; foo = (x);',
    'vars x; component = (2); I = (x);',
    'vars x; component = (x^); I = (x);',
])
def test_syntax_errors(text: str):
    with pytest.raises(InstanceSyntaxError):
        parse_instance(text)

def test_fixture_corpus():
    assert len(fixtures) >= 20

@pytest.mark.parametrize('path', fixtures, ids=os.path.basename)
def test_serialize_reparses(path: str):
    with open(path, encoding='utf-8') as f:
        document = parse_instance(f.read())
    again = parse_instance(document.serialize())

    assert again == document
    assert again.digest() == document.digest()
    document.module()

def test_digest_is_canonical():
    a = parse_instance('vars x, y; component = (x^2, x*y, x^2*y); I = (y, x);')
    b = parse_instance('vars x, y;\ncomponent = (x*y, x^2);\nI = (x, y);')
    c = parse_instance('vars x, y; component = (x*y); I = (x, y);')

    assert a != b
    assert a.digest() == b.digest()
    assert a.digest() != c.digest()

def test_document_of_module():
    M, x = direct_sum_example()
    document = InstanceDocument.of(M, x, Q=x)

    assert document.serialize() == 'vars x;\ncomponent = (0);\ncomponent = (x);\nI = (x);\nQ = (x);\n'
    assert parse_instance(document.serialize()).module() == M

def test_report_document():
    M, x = direct_sum_example()
    report = multiplicity_report(M, x, 12)
    doc = json.loads(ReportDocument('multiplicities direct_sum.inst', 'abc', report).to_json())

    assert doc['schema_version'] == SCHEMA_VERSION
    assert doc['version'] == __version__
    assert doc['instance_digest'] == 'abc'
    assert doc['result']['e0'] == '1'
    assert doc['result']['f0'] == '2'
    assert doc['result']['inequality_holds'] is True
    assert doc['result']['hilbert_coefficients'] == ['1', '-1']

def test_report_big_integers():
    text = ReportDocument('table', None, {'value': 2**80, 'ideal': AmbientRing.of('x').maximal_ideal()}).to_json()
    assert json.loads(text)['result'] == {'value': str(2**80), 'ideal': '(x)'}

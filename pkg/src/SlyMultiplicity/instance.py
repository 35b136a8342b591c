'''
Instance files and JSON report documents.

    vars x, y;
    component = (x*y, y^2);
    I = (x, y);
    Q = (x);          # optional
    J = (x, y);       # optional
    n_max = 20;       # optional: n_max, k_max, window

`(0)` is the zero ideal, `(1)` the unit ideal. `#` starts a comment.
'''
import hashlib
import json
import re
from dataclasses import dataclass, field, fields, is_dataclass, replace
from enum import Enum
from typing import Any

from .errors import InstanceSemanticError, InstanceSyntaxError
from .module import ModulePresentation
from .monomial import AmbientRing, Exponents, MonomialIdeal

SCHEMA_VERSION = 1

IDEAL_BLOCKS = ('I', 'Q', 'J')
OPTIONS = ('n_max', 'k_max', 'window')

TOKEN = re.compile(r'''
    (?P<space>[ \t\r]+|\#[^\n]*)
  | (?P<newline>\n)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<punct>[(),;=*^])
  | (?P<other>.)
''', re.VERBOSE)

@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start = 1, 0
    for m in TOKEN.finditer(text):
        kind = m.lastgroup
        column = m.start() - line_start + 1
        match kind:
            case 'space':
                continue
            case 'newline':
                line, line_start = line + 1, m.end()
                continue
            case 'other':
                raise InstanceSyntaxError(F"Unexpected character {m.group()!r}", line, column, [])
            case 'punct':
                tokens.append(Token(m.group(), m.group(), line, column))
            case _:
                tokens.append(Token(kind, m.group(), line, column))
    tokens.append(Token('end', '', line, len(text) - line_start + 1))
    return tokens

@dataclass
class InstanceDocument:
    variables: list[str]
    components: list[list[Exponents]]
    ideal_I: list[Exponents]
    ideal_Q: list[Exponents]|None = None
    ideal_J: list[Exponents]|None = None
    n_max: int|None = None
    k_max: int|None = None
    window: int|None = None

    def ambient(self) -> AmbientRing:
        return AmbientRing(tuple(self.variables))

    def module(self) -> ModulePresentation:
        ring = self.ambient()
        return ModulePresentation(ring, [ring.ideal(*gens) for gens in self.components])

    def ideal(self, which: str) -> MonomialIdeal|None:
        gens = getattr(self, F"ideal_{which}")
        return None if gens is None else self.ambient().ideal(*gens)

    def serialize(self) -> str:
        ring = self.ambient()
        def ideal(gens: list[Exponents]) -> str:
            return '(' + (', '.join(ring.format(g) for g in gens) or '0') + ')'
        lines = [F"vars {', '.join(self.variables)};"]
        lines += [F"component = {ideal(gens)};" for gens in self.components]
        for block in IDEAL_BLOCKS:
            gens = getattr(self, F"ideal_{block}")
            if gens is not None:
                lines.append(F"{block} = {ideal(gens)};")
        for option in OPTIONS:
            value = getattr(self, option)
            if value is not None:
                lines.append(F"{option} = {value};")
        return '\n'.join(lines) + '\n'

    def canonical(self) -> 'InstanceDocument':
        '''The same instance with minimal generators in graded-lex order.'''
        ring = self.ambient()
        def minimal(gens: list[Exponents]|None) -> list[Exponents]|None:
            return None if gens is None else list(ring.ideal(*gens).gens)
        return replace(self,
            components=[minimal(gens) for gens in self.components],
            ideal_I=minimal(self.ideal_I),
            ideal_Q=minimal(self.ideal_Q),
            ideal_J=minimal(self.ideal_J))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().serialize().encode()).hexdigest()

    @staticmethod
    def of(M: ModulePresentation, I: MonomialIdeal,
        Q: MonomialIdeal|None = None, J: MonomialIdeal|None = None) -> 'InstanceDocument':
        return InstanceDocument(
            variables=list(M.ambient.variable_names),
            components=[list(c.gens) for c in M.components],
            ideal_I=list(I.gens),
            ideal_Q=None if Q is None else list(Q.gens),
            ideal_J=None if J is None else list(J.gens))

class _Parser:
    tokens: list[Token]
    position: int
    variables: dict[str, int]

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.position = 0
        self.variables = {}

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def expect(self, *kinds: str) -> Token:
        token = self.current
        if token.kind not in kinds:
            found = 'end of input' if token.kind == 'end' else repr(token.text)
            raise InstanceSyntaxError(F"Unexpected {found}", token.line, token.column,
                [repr(k) if len(k) == 1 else k for k in kinds])
        self.position += 1
        return token

    def parse(self) -> InstanceDocument:
        keyword = self.expect('name')
        if keyword.text != 'vars':
            raise InstanceSyntaxError(F"Unexpected {keyword.text!r}", keyword.line, keyword.column, ["'vars'"])
        self.parse_variables()

        components: list[list[Exponents]] = []
        blocks: dict[str, list[Exponents]] = {}
        options: dict[str, int] = {}
        while self.current.kind != 'end':
            head = self.expect('name')
            self.expect('=')
            match head.text:
                case 'component':
                    gens = self.parse_ideal()
                    if any(not any(g) for g in gens):
                        raise InstanceSemanticError(
                            'A component cannot be P/(1): unit-ideal components are zero summands',
                            head.line, head.column)
                    components.append(gens)
                case block if block in IDEAL_BLOCKS:
                    if block in blocks:
                        raise InstanceSemanticError(F"Duplicate {block} block", head.line, head.column)
                    blocks[block] = self.parse_ideal()
                case option if option in OPTIONS:
                    if option in options:
                        raise InstanceSemanticError(F"Duplicate {option} option", head.line, head.column)
                    options[option] = int(self.expect('int').text)
                case other:
                    raise InstanceSyntaxError(F"Unknown statement {other!r}", head.line, head.column,
                        ["'component'", *(repr(b) for b in IDEAL_BLOCKS), *(repr(o) for o in OPTIONS)])
            self.expect(';')

        end = self.current
        if not components:
            raise InstanceSemanticError('At least one component is required', end.line, end.column)
        if 'I' not in blocks:
            raise InstanceSemanticError('The ideal I is required', end.line, end.column)
        document = InstanceDocument(
            variables=list(self.variables), components=components,
            ideal_I=blocks['I'], ideal_Q=blocks.get('Q'), ideal_J=blocks.get('J'), **options)
        I = document.ideal('I')
        if I.is_unit():
            raise InstanceSemanticError(F"I = {I} is the unit ideal", end.line, end.column)
        if not I.is_m_primary():
            raise InstanceSemanticError(
                F"I = {I} is not 𝔪-primary: no pure power of {I.missing_pure_power()}",
                end.line, end.column)
        if document.ideal_J is not None and not document.ideal_J:
            raise InstanceSemanticError('J must be nonzero', end.line, end.column)
        return document

    def parse_variables(self):
        while True:
            token = self.expect('name')
            if token.text in self.variables:
                raise InstanceSemanticError(F"Duplicate variable {token.text!r}", token.line, token.column)
            self.variables[token.text] = len(self.variables)
            if self.expect(',', ';').kind == ';':
                return

    def parse_ideal(self) -> list[Exponents]:
        self.expect('(')
        if self.current.kind == 'int' and self.current.text == '0':
            self.position += 1
            self.expect(')')
            return []
        gens = [self.parse_monomial()]
        while self.expect(',', ')').kind == ',':
            gens.append(self.parse_monomial())
        return gens

    def parse_monomial(self) -> Exponents:
        exponents = [0] * len(self.variables)
        if self.current.kind == 'int':
            token = self.expect('int')
            if token.text != '1':
                raise InstanceSyntaxError(F"Unexpected {token.text!r}", token.line, token.column, ["'1'", 'name'])
            return tuple(exponents)
        while True:
            token = self.expect('name')
            if token.text not in self.variables:
                raise InstanceSemanticError(F"Unknown variable {token.text!r}", token.line, token.column)
            power = 1
            if self.current.kind == '^':
                self.position += 1
                power = int(self.expect('int').text)
            exponents[self.variables[token.text]] += power
            if self.current.kind != '*':
                return tuple(exponents)
            self.position += 1

def parse_instance(text: str) -> InstanceDocument:
    return _Parser(text).parse()

def _jsonable(value: Any) -> Any:
    '''Integers become decimal strings so no consumer loses precision.'''
    match value:
        case bool() | None | str():
            return value
        case int():
            return str(value)
        case Enum():
            return value.value
        case MonomialIdeal():
            return str(value)
        case dict():
            return {str(k): _jsonable(v) for k, v in value.items()}
        case list() | tuple():
            return [_jsonable(v) for v in value]
        case _ if is_dataclass(value):
            return {f.name: _jsonable(getattr(value, f.name)) for f in fields(value)}
        case _:
            return str(value)

@dataclass
class ReportDocument:
    command: str
    instance_digest: str|None
    result: Any
    version: str = field(default_factory=lambda: _package_version())
    schema_version: int = SCHEMA_VERSION

    def to_json(self) -> str:
        return json.dumps({
            'schema_version': self.schema_version,
            'version': self.version,
            'command': self.command,
            'instance_digest': self.instance_digest,
            'result': _jsonable(self.result),
        }, indent=2, sort_keys=True, ensure_ascii=False) + '\n'

def _package_version() -> str:
    from . import __version__
    return __version__

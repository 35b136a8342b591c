'''
Exceptions raised by SlyMultiplicity.
Input problems are also ValueErrors; budget problems are retryable.
'''

class MultiplicityError(Exception):
    '''Root of every error raised by this package.'''

class ArityMismatch(MultiplicityError, ValueError):
    def __init__(self, left: int, right: int):
        super().__init__(F"Arity mismatch: {left} variables vs {right} variables")
        self.left = left
        self.right = right

class NotArtinian(MultiplicityError, ValueError):
    '''An ideal (or a quotient) that should have finite colength does not.'''
    missing_variable: str|None

    def __init__(self, message: str, missing_variable: str|None = None):
        super().__init__(message)
        self.missing_variable = missing_variable

class UnitComponent(MultiplicityError, ValueError): pass

class ZeroColon(MultiplicityError, ValueError): pass

class NotParameterIdeal(MultiplicityError, ValueError): pass

class NotStabilized(MultiplicityError):
    '''Sampled differences are still moving; sample further and retry.'''
    def __init__(self, message: str, samples: int):
        super().__init__(message)
        self.samples = samples

class DegreeExceeded(MultiplicityError):
    def __init__(self, message: str, degree: int):
        super().__init__(message)
        self.degree = degree

class NotFoundWithinBound(MultiplicityError):
    '''The search budget ran out. This says nothing about existence.'''
    def __init__(self, k_max: int):
        super().__init__(F"No Artin-Rees exponent found with k <= {k_max}")
        self.k_max = k_max

class ExampleMismatch(MultiplicityError, AssertionError):
    def __init__(self, failures: list[str]):
        super().__init__('; '.join(failures))
        self.failures = failures

class InstanceError(MultiplicityError, ValueError):
    line: int
    column: int

    def __init__(self, message: str, line: int, column: int):
        super().__init__(F"{line}:{column}: {message}")
        self.line = line
        self.column = column

class InstanceSyntaxError(InstanceError):
    def __init__(self, message: str, line: int, column: int, expected: list[str]):
        if expected:
            message = F"{message} (expected {' or '.join(expected)})"
        super().__init__(message, line, column)
        self.expected = expected

class InstanceSemanticError(InstanceError): pass

BUDGET_ERRORS = (NotStabilized, NotFoundWithinBound, DegreeExceeded)

"""Exception hierarchy shared by all cyop modules."""


class CyopError(ValueError):
    pass


# exact
class DivisionByZeroSeries(CyopError, ZeroDivisionError):
    pass


class BadConstantTerm(CyopError):
    def __init__(self, value, message=None):
        self.value = value
        super().__init__(message or f"bad constant term {value}")


class NotReversible(CyopError):
    pass


class PrecisionError(CyopError, IndexError):
    """Raised when a coefficient beyond the truncation order is requested."""


# operator
class OperatorSyntaxError(CyopError, SyntaxError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")

    def __str__(self):
        return self.args[0]


class MixedVariableError(CyopError):
    pass


class DegenerateLeading(CyopError):
    pass


class WrongOrder(CyopError):
    pass


class WrongShape(CyopError):
    pass


class IrregularSingularity(CyopError):
    pass


class HighDegreeDiscriminant(CyopError):
    pass


# frobenius
class ResonantRecursion(CyopError):
    pass


class NotMUM(CyopError):
    pass


class InsufficientOrder(CyopError):
    pass


# transforms
class UnknownName(CyopError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class NoFit(CyopError):
    pass


class Ambiguous(CyopError):
    def __init__(self, message, dimension):
        self.dimension = dimension
        super().__init__(message)


class UnknownPair(CyopError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class BadArity(CyopError):
    pass


class DegenerateParams(CyopError):
    pass


class BadNormalization(CyopError):
    pass


# catalog
class CatalogParseError(CyopError):
    def __init__(self, message, row_id=None, line=None):
        self.row_id = row_id
        self.line = line
        where = f" (row {row_id})" if row_id else (f" (line {line})" if line else "")
        super().__init__(message + where)


class InvariantViolation(CyopError):
    def __init__(self, message, row_id=None, values=None):
        self.row_id = row_id
        self.values = values or {}
        super().__init__(f"{message} (row {row_id}): {self.values}" if row_id else message)

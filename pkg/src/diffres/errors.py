"""Exception hierarchy shared across the package."""


class DiffresError(Exception):
    """Base class for all errors raised by diffres."""


# --- coefficient domains ---

class DomainMismatch(DiffresError):
    """Two values from different coefficient domains were combined."""


class DivisionByZero(DiffresError):
    """Inversion or division by the zero element of a domain."""


# --- differential operators ---

class DivisionByZeroOperator(DiffresError):
    """Right division by the zero operator."""


class ZeroOperator(DiffresError):
    """An operation that needs a nonzero operator got the zero operator."""


# --- matrices and subresultants ---

class NotSquare(DiffresError):
    """Determinant of a non-square matrix."""


class RowsExceedCols(DiffresError):
    """Determinant polynomial of a matrix with more rows than columns."""


class ZeroOperand(DiffresError):
    """A Sylvester-style construction received a zero or constant operand."""


class BothConstant(DiffresError):
    """Both operators have order 0, so the Sylvester matrix is empty."""


class IndexOutOfRange(DiffresError):
    """Subresultant index outside 0 .. min(order(A), order(B)) - 1."""


class VerificationFailed(DiffresError):
    """An internal consistency identity did not hold (implementation bug)."""


# --- spectral toolkit ---

class NotCommuting(DiffresError):
    """The two operators do not commute."""


class NonConstantResultant(DiffresError):
    """The resultant of the shifted pair is not a constant-coefficient polynomial."""


class ZeroInput(DiffresError):
    """Square-free part of the zero polynomial."""


class NotMonicInEitherVariable(DiffresError):
    """The curve polynomial has no variable with a constant leading coefficient."""


class DenominatorInIdeal(DiffresError):
    """A denominator vanishes on the curve, so the element is undefined there."""


class UnknownParameter(DiffresError):
    """A symbol is not a registered constant parameter of the domain."""


class NonConstantValue(DiffresError):
    """A substitution value has a nonzero derivative."""


# --- parsing ---

class ExprSyntaxError(DiffresError):
    """Malformed operator expression."""

    def __init__(self, message, line=1, column=0):
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.line = line
        self.column = column


class UnknownSymbol(DiffresError):
    """An expression refers to a name the domain does not declare."""

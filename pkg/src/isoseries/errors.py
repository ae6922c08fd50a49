"""Error types shared across the library."""


class AlgebraError(Exception):
    """Base class for every error raised by isoseries."""


# -- series kernel ---------------------------------------------------------

class DivisionByZeroSeries(AlgebraError):
    """Divisor is identically zero up to its known order."""


class InvalidInnerValuation(AlgebraError):
    """Inner series of a composition must vanish at the origin."""


class NotReversible(AlgebraError):
    """Compositional inverse needs valuation 1 and a nonzero lead."""


class InsufficientPrecision(AlgebraError):
    """Too few known coefficients for the requested operation."""


class LaurentCapExceeded(AlgebraError):
    """Pole deeper than x^-4; nothing in this library needs one."""


class ParameterPole(AlgebraError):
    """Specialization value cancels a coefficient denominator."""

    def __init__(self, order, value):
        super().__init__(
            "parameter value %s is a pole of the coefficient at order %d"
            % (value, order))
        self.order = order
        self.value = value


# -- special-function generators -------------------------------------------

class InvalidLowerParameter(AlgebraError):
    """A lower hypergeometric parameter is a non-positive integer."""


class RecurrenceBreakdown(AlgebraError):
    """A series recurrence denominator vanished."""


class UnknownCase(AlgebraError):
    """Requested name is not in the operator catalog."""


# -- condition solvers ------------------------------------------------------

class PoleCollision(AlgebraError):
    """Pullback hits a pole of the coefficient function at the origin."""


class NoSolution(AlgebraError):
    """The ansatz admits no solution series."""


class OrderObstruction(NoSolution):
    """Order-by-order solving hit an inconsistent or degenerate order."""

    def __init__(self, order, message=""):
        super().__init__(message or "obstruction at order %d" % order)
        self.order = order


# -- curves ------------------------------------------------------------------

class UnknownCurve(AlgebraError):
    """Requested name is not in the curve registry."""


class NoIntegerBranch(AlgebraError):
    """Every branch of the curve at the origin has fractional exponents."""


class FactorizationFailure(AlgebraError):
    """An expected exact polynomial factor does not divide."""


# -- elliptic multiplication ---------------------------------------------------

class DegenerateRecurrence(AlgebraError):
    """A multiplication-map recurrence produced an identically zero map."""


class PoleAtExcludedM(AlgebraError):
    """j-invariant evaluated at M in {0, 1}."""


# -- catalog / CLI -------------------------------------------------------------

class ParseError(AlgebraError):
    """Catalog or registry file malformed; carries line information."""

    def __init__(self, message, line=None):
        pos = "" if line is None else " (line %d)" % line
        super().__init__(message + pos)
        self.line = line


class SchemaMismatch(AlgebraError):
    """Catalog schema version not supported."""


class DuplicateCase(AlgebraError):
    """Two catalog cases share a name."""

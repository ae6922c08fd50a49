"""Exact rational scalars.

Every coefficient in this library is an exact rational.  ``QQ`` is the
constructor: it is ``gmpy2.mpq`` when gmpy2 is importable (much faster on
the deep symbolic checks) and ``fractions.Fraction`` otherwise.  Both types
interoperate with Python ints, hash consistently and print as ``p/q``.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - exercised only without gmpy2
    QQ = Fraction

#: concrete types accepted wherever a plain rational scalar is expected
SCALAR_TYPES = (int, Fraction, type(QQ(0)))


def is_scalar(value):
    """True when ``value`` is a plain rational (not a polynomial tower element)."""
    return isinstance(value, SCALAR_TYPES)


def as_field(value):
    """Coerce Python ints to QQ; leave every other coefficient type alone."""
    return QQ(value) if isinstance(value, int) else value


def field_div(a, b):
    """Exact division that never silently produces a float."""
    return as_field(a) / as_field(b)


def parse_rational(text):
    """Parse ``p`` or ``p/q`` into an exact rational.

    Raises ``ValueError`` or ``ZeroDivisionError`` on malformed input; the
    catalog loader wraps these into its own error type.
    """
    return QQ(text.strip())


def format_rational(value) -> str:
    """Render a rational as a decimal-free ``num/den`` string."""
    return str(value)

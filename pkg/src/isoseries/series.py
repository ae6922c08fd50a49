"""Truncated Laurent series over an exact coefficient field.

The one computation carrier of the library.  A series knows the window of
exponents it is exact on: coefficients for ``val .. trunc-1`` are stored,
everything from ``trunc`` up is unknown.  Every operation propagates the
window pessimistically; precision is never lost silently.

Coefficients are duck typed: plain rationals (``QQ``) or rational functions
of a formal parameter (:class:`isoseries.ratfunc.RatFunc`), or towers of the
latter.  A series whose coefficients live in a rational-function field is
what the rest of the library calls a parameter series.
"""

from .rationals import QQ, as_field, is_scalar
from .errors import (
    DivisionByZeroSeries, InvalidInnerValuation, NotReversible,
    InsufficientPrecision, LaurentCapExceeded, ParameterPole,
)

#: deepest pole representable; every object in the problem domain fits
LAURENT_CAP = -4


def _is_zero(c):
    return not c


class LaurentSeries:
    """Exact coefficients for exponents ``val`` through ``trunc - 1``."""

    __slots__ = ("val", "coeffs", "trunc")

    def __init__(self, val, coeffs, trunc):
        coeffs = list(coeffs)
        if trunc < val:
            raise ValueError("trunc %d below valuation %d" % (trunc, val))
        window = trunc - val
        if len(coeffs) > window:
            coeffs = coeffs[:window]
        elif len(coeffs) < window:
            coeffs = coeffs + [QQ(0)] * (window - len(coeffs))
        while coeffs and _is_zero(coeffs[0]):
            coeffs.pop(0)
            val += 1
        if not coeffs:
            val = trunc
        elif val < LAURENT_CAP:
            raise LaurentCapExceeded(
                "valuation %d below the x^%d cap" % (val, LAURENT_CAP))
        self.val = val
        self.coeffs = coeffs
        self.trunc = trunc

    # -- construction helpers -------------------------------------------

    @staticmethod
    def zero(trunc):
        return LaurentSeries(trunc, [], trunc)

    @staticmethod
    def identity(trunc):
        """The series x."""
        return LaurentSeries(1, [QQ(1)], trunc)

    @staticmethod
    def constant(c, trunc):
        return LaurentSeries(0, [as_field(c)], trunc)

    @staticmethod
    def monomial(coeff, exponent, trunc):
        return LaurentSeries(exponent, [as_field(coeff)], trunc)

    @staticmethod
    def from_coeffs(coeffs, trunc, val=0):
        return LaurentSeries(val, [as_field(c) for c in coeffs], trunc)

    # -- inspection --------------------------------------------------------

    def __getitem__(self, exponent):
        """Coefficient of x**exponent; raises when the exponent is unknown."""
        if exponent >= self.trunc:
            raise InsufficientPrecision(
                "coefficient of x^%d unknown (trunc %d)" % (exponent, self.trunc))
        if exponent < self.val:
            return QQ(0)
        return self.coeffs[exponent - self.val]

    @property
    def is_zero(self):
        """Identically zero on the whole known window."""
        return not self.coeffs

    @property
    def known_terms(self):
        return len(self.coeffs)

    def lead(self):
        if not self.coeffs:
            raise InsufficientPrecision("series is zero to known order")
        return self.coeffs[0]

    def items(self):
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                yield self.val + i, c

    def __repr__(self):
        terms = ["(%s)*x^%d" % (c, e) for e, c in self.items()]
        body = " + ".join(terms) if terms else "0"
        return "<%s + O(x^%d)>" % (body, self.trunc)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.val == other.val and self.trunc == other.trunc
                and self.coeffs == other.coeffs)

    __hash__ = None

    def agree_order(self, other):
        """Compare up to the shared knowledge window.

        Returns ``(equal, order)``: the series provably agree on every
        exponent below ``order`` (the smaller truncation order).  Equality of
        truncated series is only ever decidable up to that order.
        """
        order = min(self.trunc, other.trunc)
        diff = self - other
        return diff.is_zero, order

    # -- ring operations ------------------------------------------------------

    def __neg__(self):
        return LaurentSeries(self.val, [-c for c in self.coeffs], self.trunc)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        val = min(self.val, other.val)
        out = [QQ(0)] * (trunc - val) if trunc > val else []
        for src in (self, other):
            for i, c in enumerate(src.coeffs):
                e = src.val + i
                if e < trunc:
                    out[e - val] = out[e - val] + c
        return LaurentSeries(val, out, trunc)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            c = as_field(other)
            return LaurentSeries(self.val, [c * a for a in self.coeffs], self.trunc)
        trunc = min(self.trunc + other.val, other.trunc + self.val)
        if self.is_zero or other.is_zero:
            return LaurentSeries.zero(trunc)
        val = self.val + other.val
        out = [QQ(0)] * max(trunc - val, 0)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            ea = self.val + i
            top = trunc - ea - other.val
            for j in range(min(len(other.coeffs), top)):
                b = other.coeffs[j]
                if not _is_zero(b):
                    k = ea + other.val + j - val
                    out[k] = out[k] + a * b
        return LaurentSeries(val, out, trunc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, LaurentSeries):
            return self * (as_field(1) / as_field(other))
        return divide(self, other)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("series powers must be integers")
        if n < 0:
            return invert(self) ** (-n)
        if n == 0:
            return LaurentSeries(0, [QQ(1)], max(self.trunc - self.val, 1))
        result, base, m = None, self, n
        while m:
            if m & 1:
                result = base if result is None else result * base
            m >>= 1
            if m:
                base = base * base
        return result

    # -- reshaping ---------------------------------------------------------------

    def scale_argument(self, c):
        """Return f(c*x)."""
        c = as_field(c)
        p = c ** self.val if self.val >= 0 else as_field(1) / (c ** (-self.val))
        out = []
        for coeff in self.coeffs:
            out.append(coeff * p)
            p = p * c
        return LaurentSeries(self.val, out, self.trunc)

    def shift(self, k):
        """Multiply by x**k."""
        return LaurentSeries(self.val + k, list(self.coeffs), self.trunc + k)

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise InsufficientPrecision(
                "cannot extend knowledge from %d to %d" % (self.trunc, trunc))
        return LaurentSeries(self.val, self.coeffs[:max(trunc - self.val, 0)], trunc)

    def derivative(self):
        out = [(self.val + i) * c for i, c in enumerate(self.coeffs)]
        return LaurentSeries(self.val - 1, out, self.trunc - 1)

    def map_coeffs(self, fn):
        """Apply fn to every known coefficient (parameter lifting and kin)."""
        return LaurentSeries(self.val, [fn(c) for c in self.coeffs], self.trunc)


# -- division -------------------------------------------------------------------


def divide(f, g):
    """Long division f/g; 1/g is never materialized, so no spurious cap hits."""
    if g.is_zero:
        raise DivisionByZeroSeries(
            "division by a series that is 0 to order %d" % g.trunc)
    trunc = min(f.trunc - g.val, f.val + g.trunc - 2 * g.val)
    val = f.val - g.val
    n = trunc - val
    if n <= 0:
        return LaurentSeries.zero(trunc)
    lead = g.lead()
    rem = [f[f.val + k] for k in range(n)]
    out = []
    for k in range(n):
        c = as_field(rem[k]) / lead
        out.append(c)
        if not _is_zero(c):
            for j in range(1, min(len(g.coeffs), n - k)):
                rem[k + j] = rem[k + j] - c * g.coeffs[j]
    return LaurentSeries(val, out, trunc)


def invert(f):
    rel = f.trunc - f.val
    return divide(LaurentSeries(0, [QQ(1)], rel), f)


# -- composition and reversion -------------------------------------------------


def compose(f, g):
    """f(g(x)) for an inner series g with valuation >= 1."""
    if g.val <= 0 and not g.is_zero:
        raise InvalidInnerValuation("inner series has valuation %d" % g.val)
    if g.is_zero:
        if f.val < 0:
            raise InvalidInnerValuation("inner series is zero to known order")
        out = LaurentSeries.zero(g.trunc)
        if f.val == 0:
            out = out + LaurentSeries(0, [f.coeffs[0]], g.trunc)
        return out
    trunc = min(g.val * f.trunc, g.trunc + (f.val - 1) * g.val)
    start = max(f.val, 0)
    acc = LaurentSeries.zero(trunc - start * g.val)
    for e in range(f.trunc - 1, start - 1, -1):
        acc = acc * g
        c = f[e]
        if not _is_zero(c):
            acc = acc + LaurentSeries(0, [c], acc.trunc)
    if start > 0:
        acc = acc * (g ** start)
    if f.val < 0:
        ginv = invert(g)
        p = ginv
        for e in range(-1, f.val - 1, -1):
            c = f[e]
            if not _is_zero(c):
                acc = acc + p * c
            if e > f.val:
                p = p * ginv
    return acc


def reverse(f):
    """Compositional inverse of a valuation-1 series with invertible lead."""
    if f.val != 1:
        raise NotReversible("valuation %d != 1" % f.val)
    a1 = f.lead()
    T = f.trunc
    inv_a1 = as_field(1) / a1
    g_coeffs = [inv_a1]
    for n in range(2, T):
        g = LaurentSeries(1, g_coeffs, n + 2)
        resid = compose(f, g) - LaurentSeries.identity(n + 1)
        g_coeffs.append(-resid[n] * inv_a1)
    return LaurentSeries(1, g_coeffs, T)


# -- differential operators ---------------------------------------------------


def schwarzian(y):
    """{y, x} = y'''/y' - (3/2)(y''/y')^2.

    Vanishes on Moebius germs; valuation -2 for y ~ a*x^N with N >= 2.
    """
    if y.trunc - y.val < 4:
        raise InsufficientPrecision("need at least 4 known coefficients")
    y1 = y.derivative()
    if y1.is_zero:
        raise InsufficientPrecision("derivative vanishes to known order")
    u = divide(y1.derivative(), y1)
    return u.derivative() - (u * u) * (as_field(3) / as_field(2))


# -- parameter series -----------------------------------------------------------


def param_specialize(f, value):
    """Evaluate every rational-function coefficient at ``value``.

    Plain rational coefficients pass through unchanged.  Raises
    :class:`ParameterPole` naming the first offending order when ``value``
    cancels a coefficient denominator.
    """
    out = []
    for i, c in enumerate(f.coeffs):
        if is_scalar(c):
            out.append(c)
            continue
        try:
            out.append(c.eval_at(value))
        except ZeroDivisionError:
            raise ParameterPole(f.val + i, value) from None
    return LaurentSeries(f.val, out, f.trunc)

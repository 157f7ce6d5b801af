"""Ordinary differential operators over a differential coefficient domain.

An :class:`ODO` is a finite coefficient vector c0..cn representing
``sum c_i * D^i`` where ``D`` is the derivation of the domain.  The ring
product follows the commutation rule ``D * a = a * D + a'``, which makes
the algebra non-commutative; composition order matters everywhere below.

Operators are immutable values and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domains import DomainElement, DomainMismatch
from .errors import DivisionByZeroOperator, ZeroOperator

#: Order of the zero operator.
NEG_INF = float("-inf")


class ODO:
    """A polynomial in the derivation D with coefficients in one domain.

    ``coeffs`` is stored in ascending powers of D; it is empty for the zero
    operator and otherwise ends with a nonzero leading coefficient.
    """

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        for c in coeffs:
            if c.domain is not domain:
                raise DomainMismatch("coefficient from a different domain")
        self.domain = domain
        self.coeffs = tuple(coeffs)

    # -- constructors --

    @classmethod
    def zero(cls, domain):
        return cls(domain, ())

    @classmethod
    def scalar(cls, domain, value):
        if isinstance(value, (int, Fraction)):
            value = domain.rational(value)
        return cls(domain, (value,))

    @classmethod
    def d(cls, domain, power=1):
        """The pure derivation operator D^power."""
        zero = domain.zero()
        return cls(domain, (zero,) * power + (domain.one(),))

    # -- structure --

    @property
    def order(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        """Coefficient of D^i (zero element when out of range)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.domain.zero()

    def leading_coeff(self):
        if not self.coeffs:
            raise ZeroOperator("the zero operator has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ODO) and other.domain is not self.domain:
            return False
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        from .rendering import odo_text
        return odo_text(self)

    # -- ring operations --

    def _coerce(self, other):
        if isinstance(other, ODO):
            if other.domain is not self.domain:
                raise DomainMismatch("operators over different domains")
            return other
        if isinstance(other, (int, Fraction, DomainElement)):
            return ODO.scalar(self.domain, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ODO(self.domain, out)

    __radd__ = __add__

    def __neg__(self):
        return ODO(self.domain, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def d_mul(self):
        """Left multiplication by D: D*A = sum (a_i D^{i+1} + a_i' D^i)."""
        if not self.coeffs:
            return self
        zero = self.domain.zero()
        out = [zero] * (len(self.coeffs) + 1)
        for i, c in enumerate(self.coeffs):
            out[i + 1] = out[i + 1] + c
            out[i] = out[i] + c.derive()
        return ODO(self.domain, out)

    def left_mul_dpow(self, k):
        """The product D^k * self."""
        out = self
        for _ in range(k):
            out = out.d_mul()
        return out

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ODO.zero(self.domain)
        zero = self.domain.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        shifted = other
        for i, a in enumerate(self.coeffs):
            if not a.is_zero:
                for j, b in enumerate(shifted.coeffs):
                    if not b.is_zero:
                        out[j] = out[j] + a * b
            if i + 1 < len(self.coeffs):
                shifted = shifted.d_mul()
        return ODO(self.domain, out)

    def __rmul__(self, other):
        # scalars commute with nothing except by this promotion, which
        # puts them on the left where they multiply coefficientwise
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative operator power")
        out = ODO.scalar(self.domain, 1)
        for _ in range(k):
            out = out * self
        return out

    # -- Euclidean structure --

    def monic(self):
        """Divide by the leading coefficient (fraction field arithmetic)."""
        if self.is_zero:
            raise ZeroOperator("monic of the zero operator")
        inv = self.coeffs[-1].inverse()
        return ODO(self.domain, [inv * c for c in self.coeffs])

    def right_divide(self, divisor):
        """A = Q*divisor + R with order(R) < order(divisor)."""
        other = self._coerce(divisor)
        if other is None or other.is_zero:
            raise DivisionByZeroOperator("right division by the zero operator")
        q = ODO.zero(self.domain)
        r = self
        lc = other.coeffs[-1]
        dorder = len(other.coeffs) - 1
        while r.coeffs and len(r.coeffs) - 1 >= dorder:
            k = len(r.coeffs) - 1 - dorder
            t = ODO(self.domain,
                    [self.domain.zero()] * k + [r.coeffs[-1] / lc])
            q = q + t
            r = r - t * other
        return DivisionResult(q, r)


@dataclass(frozen=True)
class DivisionResult:
    quotient: ODO
    remainder: ODO

    def __iter__(self):
        return iter((self.quotient, self.remainder))


def order(a):
    """Order of an operator; NEG_INF for the zero operator."""
    return a.order


def add(a, b):
    return a + b


def mul(a, b):
    """The non-commutative ring product."""
    return a * b


def left_mul_dpow(a, k):
    return a.left_mul_dpow(k)


def right_divide(a, b):
    return a.right_divide(b)


def monic(a):
    return a.monic()


def commutator(a, b):
    """A*B - B*A; zero exactly when the operators commute."""
    return a * b - b * a


def euclid_gcrd(a, b):
    """Monic greatest common right divisor by the Euclidean algorithm.

    Serves as the independent oracle for the subresultant route.
    Intermediate remainders are made monic to limit coefficient growth.
    """
    if a.is_zero and b.is_zero:
        raise ZeroOperator("gcrd of two zero operators")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.order < b.order:
        a, b = b, a
    while not b.is_zero:
        r = a.right_divide(b).remainder
        if not r.is_zero:
            r = r.monic()
        a, b = b, r
    return a.monic()

"""Exact rational scalars and q-arithmetic.

The ground field for the whole package is the rationals, represented by
``fractions.Fraction`` (always in lowest terms with positive denominator,
so equal values have identical representations).  Parameters that live on
the complex unit circle are not representable; see README.
"""

from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    """An argument is outside the operation's domain (e.g. zero where nonzero required)."""


def parse_rational(text):
    """Parse "p/r" or "p" (signed decimal integers, r positive) into a Fraction."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(x):
    """Serialize a Fraction as "p/r", or "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


@dataclass(frozen=True)
class DeformationParameter:
    """The deformation parameter q.

    Restricted to rational q with |q| > 1.  Over the rationals any
    q outside {0, 1, -1} is automatically not a root of unity; the
    stronger |q| > 1 makes power indices and q^2-coset representatives
    unique.  A caller wanting |q| < 1 should substitute q -> 1/q.
    """

    q: Fraction

    def __post_init__(self):
        q = Fraction(self.q)
        object.__setattr__(self, "q", q)
        if abs(q) <= 1:
            raise DomainError("deformation parameter q must satisfy |q| > 1, got %s"
                              % format_rational(q))

    def power(self, i):
        return self.q ** i

    def q_int(self, j):
        """The q-integer (q^j - q^-j) / (q - q^-1)."""
        q = self.q
        return (q ** j - q ** -j) / (q - q ** -1)

    def power_index(self, x, lo, hi):
        """The unique i in [lo, hi] with x = q^i, or None.

        Uniqueness holds because |q| > 1.  x must be nonzero.
        """
        if x == 0:
            raise DomainError("power_index: x must be nonzero")
        if lo > hi:
            raise DomainError("power_index: empty range [%d, %d]" % (lo, hi))
        for i in range(lo, hi + 1):
            if x == self.q ** i:
                return i
        return None

    def coset_normal_form(self, x):
        """Write x = rep * q^(2 e) with 1 <= |rep| < q^2.

        Two nonzero scalars share a representative iff their ratio is an
        even power of q.
        """
        if x == 0:
            raise DomainError("coset_normal_form: x must be nonzero")
        q2 = self.q ** 2
        e = 0
        rep = x
        while abs(rep) >= q2:
            rep /= q2
            e += 1
        while abs(rep) < 1:
            rep *= q2
            e -= 1
        return rep, e

"""Exact coefficient rings and the p-adic valuation on the rationals.

Four concrete rings are provided, selected by a tag:

* ``Q``      -- the rationals (``fractions.Fraction``)
* ``Z``      -- the integers
* ``Zp p``   -- the local ring Z_(p), i.e. rationals whose denominator is
  prime to ``p``; arithmetic that leaves the ring raises
  :class:`OutsideRingError`
* ``Fp p``   -- the prime field with ``p`` elements, stored as ``int`` in
  ``[0, p)``
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class OutsideRingError(ArithmeticError):
    """An intermediate value left the coefficient ring."""


class NotIntegralError(ValueError):
    """A rational is not integral at the configured prime."""


############################################################################
# valuation values
############################################################################
@total_ordering
class _Unbounded:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "Infinity" if self.sign > 0 else "NegInfinity"

    __str__ = __repr__

    def __eq__(self, other):
        return isinstance(other, _Unbounded) and other.sign == self.sign

    def __hash__(self):
        return hash(("unbounded", self.sign))

    def __lt__(self, other):
        if isinstance(other, _Unbounded):
            return self.sign < other.sign
        if isinstance(other, int):
            return self.sign < 0
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, int):
            return self
        if isinstance(other, _Unbounded):
            if other.sign != self.sign:
                raise ArithmeticError("Infinity + NegInfinity is undefined")
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return NEG_INFINITY if self.sign > 0 else INFINITY

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        if isinstance(other, _Unbounded):
            # the convention infinity - infinity = 0
            if other.sign == self.sign:
                return 0
            return self
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return -self
        return NotImplemented


INFINITY = _Unbounded(1)
NEG_INFINITY = _Unbounded(-1)

# A valuation value is either a Python int or one of the two sentinels above.
ValuationValue = "int | _Unbounded"


def valuation_to_json(value):
    if value == INFINITY:
        return "inf"
    if value == NEG_INFINITY:
        return "-inf"
    return value


def valuation_from_json(value):
    if value == "inf":
        return INFINITY
    if value == "-inf":
        return NEG_INFINITY
    return int(value)


############################################################################
# primes and rationals
############################################################################
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all ``n < 3.3 * 10**24``."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_RATIONAL_RE = re.compile(r"\s*(-?)\s*(\d+)(?:\s*/\s*(\d+))?\s*\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``a/b`` or ``a`` with an optional leading ``-``. No decimals."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    sign, num, den = m.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(int(num), den)
    return -value if sign else value


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _int_valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


############################################################################
# the valued field (Q, v_p)
############################################################################
@dataclass(frozen=True)
class ValuedRationalConfig:
    """The p-adic valuation on Q with its valuation ring and residue field."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")

    def v(self, x):
        """p-adic valuation; ``INFINITY`` for zero."""
        x = Fraction(x)
        if x == 0:
            return INFINITY
        return _int_valuation(abs(x.numerator), self.p) - _int_valuation(
            x.denominator, self.p
        )

    def in_Ov(self, x) -> bool:
        x = Fraction(x)
        return x.denominator % self.p != 0

    def in_mv(self, x) -> bool:
        x = Fraction(x)
        return x.denominator % self.p != 0 and x.numerator % self.p == 0

    def residue(self, x) -> int:
        """Image of ``x`` in F_p, as an int in ``[0, p)``."""
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise NotIntegralError(f"{format_rational(x)} is not integral at {self.p}")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def unit_part(self, x) -> Fraction:
        """``x * p**(-v(x))``, a unit of O_v (``x`` must be nonzero)."""
        x = Fraction(x)
        return x / Fraction(self.p) ** self.v(x)


############################################################################
# coefficient rings
############################################################################
class CoefficientRing:
    """Common interface of the coefficient rings.

    Elements are plain Python values (``Fraction`` or ``int``); the ring
    object carries the arithmetic so that ``F_p`` reduces mod ``p`` and
    ``Z_(p)`` can police its denominators.
    """

    tag = ""
    is_field = False
    zero = 0
    one = 1

    def convert(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def format(self, a) -> str:
        return format_rational(a)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return self.tag


class RationalField(CoefficientRing):
    tag = "Q"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        return Fraction(x)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        return 1 / Fraction(a)


class IntegerRing(CoefficientRing):
    tag = "Z"

    def convert(self, x):
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"{format_rational(x)} is not an integer")
        return x.numerator

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise ValueError(f"{a} is not a unit of Z")
        return a


class LocalRing(CoefficientRing):
    """Z_(p) inside Q; every result is checked to stay integral at ``p``."""

    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self, p: int):
        self.config = ValuedRationalConfig(p)
        self.p = p

    @property
    def tag(self):
        return f"Zp {self.p}"

    def __eq__(self, other):
        return isinstance(other, LocalRing) and other.p == self.p

    def __hash__(self):
        return hash(("Zp", self.p))

    def _check(self, x):
        if x.denominator % self.p == 0:
            raise OutsideRingError(f"{format_rational(x)} is not in Z_({self.p})")
        return x

    def convert(self, x):
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise NotIntegralError(f"{format_rational(x)} is not integral at {self.p}")
        return x

    def add(self, a, b):
        return self._check(a + b)

    def sub(self, a, b):
        return self._check(a - b)

    def mul(self, a, b):
        return self._check(a * b)

    def is_unit(self, a):
        return a != 0 and a.numerator % self.p != 0

    def inv(self, a):
        if not self.is_unit(a):
            raise OutsideRingError(f"{format_rational(a)} is not a unit of Z_({self.p})")
        return 1 / a


class PrimeField(CoefficientRing):
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p!r} is not a prime")
        self.p = p

    @property
    def tag(self):
        return f"Fp {self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def convert(self, x):
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ValueError(f"{format_rational(x)} has no image in F_{self.p}")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("0 is not invertible")
        return pow(a, -1, self.p)

    def format(self, a):
        return str(a)


QQ = RationalField()
ZZ = IntegerRing()


def ring_from_tag(text: str) -> CoefficientRing:
    """``"Q"``, ``"Z"``, ``"Fp 5"`` or ``"Zp 3"``."""
    parts = text.split()
    if parts == ["Q"]:
        return QQ
    if parts == ["Z"]:
        return ZZ
    if len(parts) == 2 and parts[0] in ("Fp", "Zp"):
        try:
            p = int(parts[1])
        except ValueError:
            raise ValueError(f"bad prime in coefficient tag {text!r}") from None
        return PrimeField(p) if parts[0] == "Fp" else LocalRing(p)
    raise ValueError(f"unknown coefficient ring {text!r} (expected Q, Z, Fp p or Zp p)")

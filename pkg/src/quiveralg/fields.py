"""Coefficient fields: exact rationals and prime fields.

Field objects do arithmetic on plain Python values (``Fraction`` for the
rationals, ``int`` in ``range(p)`` for a prime field) so that coefficient
dictionaries stay cheap to copy and hash.
"""

from fractions import Fraction


class Field:
    name = "?"
    characteristic = 0

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (field_from_name, (self.name,))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0


class Rationals(Field):
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, str):
            return Fraction(x.strip())
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def elements(self):
        raise ValueError("Q is infinite")

    def format(self, a):
        return str(a)


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField(Field):
    """The field with ``p`` elements, ``p`` prime and at most ``2**31``."""

    zero = 0
    one = 1

    def __init__(self, p):
        p = int(p)
        if p > 2**31 or not _is_prime(p):
            raise ValueError(f"F{p}: characteristic must be a prime <= 2^31")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self.name}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return pow(a, -1, self.p)

    def elements(self):
        return range(self.p)

    def units(self):
        return range(1, self.p)

    def format(self, a):
        # symmetric representative reads better: 4 in F5 prints as -1
        return str(a - self.p if 2 * a > self.p else a)


QQ = Rationals()


def GF(p):
    return PrimeField(p)


def field_from_name(name):
    """Parse ``"Q"``, ``"F5"`` or ``"f5"``."""
    name = name.strip()
    if name in ("Q", "q", "QQ"):
        return QQ
    if name[:1] in ("F", "f") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise ValueError(f"unknown field {name!r} (expected Q or Fp)")

"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are plain Python numbers in canonical form: ``fractions.Fraction``
over Q and ``int`` in ``[0, p)`` over F_p.  A :class:`Field` converts
anything integral or rational into that form and supplies the handful of
operations that differ between the two cases (reduction, inversion,
printing).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 65537

# numpy elimination squares residues in int64
MAX_PRIME = 2**31 - 1


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic Miller-Rabin for p < 3.3e24
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Field configuration.  ``p is None`` means Q."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if self.p == 2 or not _is_prime(self.p):
                raise ValueError(f"field characteristic must be an odd prime, got {self.p}")
            if self.p > MAX_PRIME:
                raise ValueError(f"prime {self.p} exceeds supported bound {MAX_PRIME}")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``q`` or ``fp:<p>`` (``fp`` alone means p = 65537)."""
        t = text.strip().lower()
        if t in ("q", "qq", "rational"):
            return cls()
        if t == "fp":
            return cls(DEFAULT_PRIME)
        if t.startswith("fp:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                raise ValueError(f"bad field specification {text!r}") from None
        raise ValueError(f"bad field specification {text!r}; expected 'q' or 'fp:<p>'")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def __call__(self, value):
        """Canonical scalar for an int, Fraction or (already canonical) scalar."""
        if self.p is None:
            return value if type(value) is Fraction else Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self(a * self.inv(b))

    def signed(self, a) -> int | Fraction:
        """Symmetric representative: residues map into (-p/2, p/2)."""
        if self.p is None:
            return a
        return a - self.p if a > self.p // 2 else a

    def format(self, a) -> str:
        a = self.signed(a)
        if isinstance(a, Fraction) and a.denominator == 1:
            return str(a.numerator)
        return str(a)

    def __str__(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"


QQ = Field()

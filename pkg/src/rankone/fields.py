"""Exact scalar arithmetic for the two supported coefficient fields.

Rational scalars are plain :class:`fractions.Fraction` values (always in
lowest terms, positive denominator); prime-field scalars are
:class:`Residue` values reduced mod p.  Both carry the full operator set,
so the polynomial and matrix layers stay field-agnostic.  A field object
(:data:`QQ` or a :class:`PrimeField`) supplies the identities, parsing,
rendering, and a canonical ordering of its scalars.
"""

from __future__ import annotations

import re
from fractions import Fraction

# int | int "/" int, optional leading minus on either part
_SCALAR_RE = re.compile(r"-?\d+(?:/-?\d+)?")

MAX_PRIME = 2**31  # products of two residues must fit comfortably in machine words


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3_215_031_751
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
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


class Residue:
    """An element of F_p, kept reduced to the range [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Residue(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Residue(v * pow(self.value, -1, self.p), self.p)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0 and self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Residue(pow(self.value, exponent, self.p), self.p)

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"


def _parse_parts(text: str):
    token = text.strip()
    if not _SCALAR_RE.fullmatch(token):
        raise ValueError(f"malformed scalar {text!r}")
    num, _, den = token.partition("/")
    return int(num), (int(den) if den else 1)


class Rationals:
    """The rational numbers, with arbitrary-precision integer arithmetic."""

    kind = "rationals"
    characteristic = 0
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def parse(self, text: str) -> Fraction:
        num, den = _parse_parts(text)
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(num, den)

    def render(self, x: Fraction) -> str:
        return str(x)

    def invert(self, x: Fraction) -> Fraction:
        if not x:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / x

    def sort_key(self, x: Fraction):
        return x

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The prime field F_p for a prime 2 <= p <= 2^31."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or p > MAX_PRIME:
            raise ValueError(f"prime field modulus out of range: {p!r}")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = Residue(0, p)
        self.one = Residue(1, p)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def from_int(self, k: int) -> Residue:
        return Residue(k, self.p)

    def parse(self, text: str) -> Residue:
        num, den = _parse_parts(text)
        if den % self.p == 0:
            raise ValueError(f"denominator of {text!r} is not invertible mod {self.p}")
        return Residue(num * pow(den, -1, self.p), self.p)

    def render(self, x: Residue) -> str:
        return str(x.value)

    def invert(self, x: Residue) -> Residue:
        if x.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Residue(pow(x.value, -1, self.p), self.p)

    def sort_key(self, x: Residue) -> int:
        return x.value

    def elements(self):
        """All p elements, in canonical order."""
        for v in range(self.p):
            yield Residue(v, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"F{self.p}"


QQ = Rationals()

_FIELD_NAME_RE = re.compile(r"(?:F_?|GF\()(\d+)\)?", re.IGNORECASE)


def field_by_name(text: str):
    """Resolve a field name like "Q", "F5", "F_7", or "GF(11)"."""
    token = text.strip()
    if token.upper() in ("Q", "QQ", "RATIONALS"):
        return QQ
    m = _FIELD_NAME_RE.fullmatch(token)
    if m:
        return PrimeField(int(m.group(1)))
    raise ValueError(f"unknown field {text!r}")

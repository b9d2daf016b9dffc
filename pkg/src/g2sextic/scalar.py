"""Exact arithmetic over Q and the degree-8 extension field Q(i, sqrt2, sqrt5).

Elements are stored as coordinate vectors in the fixed basis

    (1, i, r2, i*r2, r5, i*r5, r10, i*r10)

where r2 = sqrt(2), r5 = sqrt(5) and r10 = r2*r5.  The basis order is also
the serialization order, so reports are bit-exact reproducible.
"""

from __future__ import annotations

from fractions import Fraction

# Arbitrary-precision exact rationals; always lowest terms, positive denominator.
Rational = Fraction

BASIS_SYMBOLS = ("1", "i", "r2", "ir2", "r5", "ir5", "r10", "ir10")

# Basis index encodes exponents of (i, r2, r5): index = ei + 2*e2 + 4*e5.
_I_BIT, _R2_BIT, _R5_BIT = 1, 2, 4

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _basis_mul(a: int, b: int) -> tuple[Fraction, int]:
    """Product of two basis elements: (rational carry, result index)."""
    carry = _ONE
    if a & b & _I_BIT:
        carry = -carry
    if a & b & _R2_BIT:
        carry *= 2
    if a & b & _R5_BIT:
        carry *= 5
    return carry, a ^ b


_MUL_TABLE = tuple(tuple(_basis_mul(a, b) for b in range(8)) for a in range(8))


class AlgebraicScalar:
    """An element of Q(i, sqrt2, sqrt5), immutable and hashable."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        c = tuple(Fraction(x) for x in coords)
        if len(c) != 8:
            raise ValueError("AlgebraicScalar needs 8 coordinates")
        object.__setattr__(self, "coords", c)

    def __setattr__(self, *args):
        raise AttributeError("AlgebraicScalar is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(q) -> "AlgebraicScalar":
        return AlgebraicScalar((Fraction(q), 0, 0, 0, 0, 0, 0, 0))

    @staticmethod
    def coerce(x) -> "AlgebraicScalar":
        if isinstance(x, AlgebraicScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return AlgebraicScalar.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to AlgebraicScalar")

    # -- ring / field operations ------------------------------------------

    def __add__(self, other):
        o = AlgebraicScalar.coerce(other)
        return AlgebraicScalar(tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicScalar(tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-AlgebraicScalar.coerce(other))

    def __rsub__(self, other):
        return AlgebraicScalar.coerce(other) + (-self)

    def __mul__(self, other):
        o = AlgebraicScalar.coerce(other)
        acc = [_ZERO] * 8
        for a, ca in enumerate(self.coords):
            if not ca:
                continue
            row = _MUL_TABLE[a]
            for b, cb in enumerate(o.coords):
                if not cb:
                    continue
                carry, idx = row[b]
                acc[idx] += ca * cb * carry
        return AlgebraicScalar(acc)

    __rmul__ = __mul__

    def conj(self) -> "AlgebraicScalar":
        """Complex conjugation i -> -i; an involutive field automorphism."""
        return self._flip(_I_BIT)

    def conj_sqrt2(self) -> "AlgebraicScalar":
        return self._flip(_R2_BIT)

    def conj_sqrt5(self) -> "AlgebraicScalar":
        return self._flip(_R5_BIT)

    def _flip(self, bit: int) -> "AlgebraicScalar":
        return AlgebraicScalar(
            tuple(-c if idx & bit else c for idx, c in enumerate(self.coords))
        )

    def inv(self) -> "AlgebraicScalar":
        """Exact inverse via the conjugate tower; ZeroDivisionError on 0."""
        if not self:
            raise ZeroDivisionError("inversion of zero AlgebraicScalar")
        x1 = self.conj()
        b = self * x1  # fixed by i -> -i
        x2 = b.conj_sqrt2()
        c = b * x2  # fixed by i, sqrt2 flips
        x3 = c.conj_sqrt5()
        d = c * x3  # rational norm
        norm = d.coords[0]
        if any(d.coords[1:]):
            raise ArithmeticError("norm computation left the rationals")
        prod = x1 * x2 * x3
        return AlgebraicScalar(tuple(c / norm for c in prod.coords))

    def __truediv__(self, other):
        return self * AlgebraicScalar.coerce(other).inv()

    def __rtruediv__(self, other):
        return AlgebraicScalar.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = AlgebraicScalar.rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def __eq__(self, other):
        try:
            o = AlgebraicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_real(self) -> bool:
        """True when every i-bearing coordinate vanishes."""
        return not any(self.coords[idx] for idx in (1, 3, 5, 7))

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def real_part(self) -> "AlgebraicScalar":
        return AlgebraicScalar(
            tuple(c if not idx & _I_BIT else 0 for idx, c in enumerate(self.coords))
        )

    def imag_part(self) -> "AlgebraicScalar":
        """The real scalar b in a + i*b."""
        out = [_ZERO] * 8
        for idx, c in enumerate(self.coords):
            if idx & _I_BIT:
                out[idx ^ _I_BIT] = c
        return AlgebraicScalar(out)

    def to_complex(self) -> complex:
        """Float view, for human-readable annotations only."""
        r2, r5, r10 = 2 ** 0.5, 5 ** 0.5, 10 ** 0.5
        vals = (1.0, 1.0j, r2, 1.0j * r2, r5, 1.0j * r5, r10, 1.0j * r10)
        return sum(float(c) * v for c, v in zip(self.coords, vals))

    def __str__(self):
        return format_algebraic(self)

    def __repr__(self):
        return f"AlgebraicScalar({format_algebraic(self)!r})"


ZERO = AlgebraicScalar.rational(0)
ONE = AlgebraicScalar.rational(1)
I = AlgebraicScalar((0, 1, 0, 0, 0, 0, 0, 0))
SQRT2 = AlgebraicScalar((0, 0, 1, 0, 0, 0, 0, 0))
SQRT5 = AlgebraicScalar((0, 0, 0, 0, 1, 0, 0, 0))
SQRT10 = AlgebraicScalar((0, 0, 0, 0, 0, 0, 1, 0))


# -- textual serialization -------------------------------------------------


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.replace("−", "-").strip())


def format_algebraic(a: AlgebraicScalar) -> str:
    parts = []
    for idx, c in enumerate(a.coords):
        if not c:
            continue
        sym = BASIS_SYMBOLS[idx]
        coef = f"({format_rational(c)})"
        parts.append(coef if sym == "1" else f"{coef}*{sym}")
    return " + ".join(parts) if parts else "0"


def parse_algebraic(text: str) -> AlgebraicScalar:
    """Parse the serialization grammar: signed sum of (rational)*symbol terms."""
    s = text.replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty algebraic scalar")
    # split into signed terms at top level (no nested parens in the grammar)
    terms, buf, depth = [], "", 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and buf not in ("", "+", "-"):
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    coords = [_ZERO] * 8
    for term in terms:
        if term in ("0", "+0", "-0"):
            continue
        sign = _ONE
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if "*" in term:
            coef_text, sym = term.split("*", 1)
        elif term in BASIS_SYMBOLS:
            coef_text, sym = "1", term
        else:
            coef_text, sym = term, "1"
        coef_text = coef_text.strip("()")
        if sym not in BASIS_SYMBOLS:
            raise ValueError(f"unknown basis symbol {sym!r} in {text!r}")
        coords[BASIS_SYMBOLS.index(sym)] += sign * parse_rational(coef_text)
    return AlgebraicScalar(coords)

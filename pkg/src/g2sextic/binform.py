"""Binary forms, transvectants, and the sextic invariants I2 and I3.

A degree-n form is stored by its binomial-convention coefficients
v_0..v_n, i.e. the polynomial  sum_k C(n,k) v_k t^(n-k) s^k.  Coefficients
may be Fractions, AlgebraicScalars, or any commutative ring elements
supporting +, -, * (the orbit module feeds coframe-valued coefficients
through the same type).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

# I2(V) = c6 * <V,V>_6 for the bare 1/p! transvectant; fixed by the
# brute-force expansion oracle in the test suite.
I2_CALIBRATION = Fraction(1, 1440)

# rescaling constants c(n, m, p) making the printed invariant identities
# hold verbatim for the normalized transvectant
CALIBRATION = {(6, 6, 6): I2_CALIBRATION}


def _zero_like(c):
    return c - c


class BinaryForm:
    """Homogeneous polynomial of degree n in (s, t), binomial coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(coeffs)
        if degree < 0 or len(coeffs) != degree + 1:
            raise ValueError(f"need {degree + 1} coefficients for degree {degree}")
        self.degree = degree
        self.coeffs = coeffs

    @staticmethod
    def from_monomial_coeffs(degree: int, monomial):
        """Inverse of monomial_coeffs: divide out the binomial weights."""
        monomial = tuple(monomial)
        return BinaryForm(
            degree,
            tuple(c * Fraction(1, comb(degree, k)) for k, c in enumerate(monomial)),
        )

    def monomial_coeffs(self):
        """Coefficient of t^(n-k) s^k for k = 0..n."""
        return tuple(c * comb(self.degree, k) for k, c in enumerate(self.coeffs))

    def evaluate(self, s, t):
        total = _zero_like(self.coeffs[0])
        n = self.degree
        for k, c in enumerate(self.coeffs):
            total = total + c * comb(n, k) * t ** (n - k) * s ** k
        return total

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinaryForm(
            self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinaryForm(
            self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return BinaryForm(self.degree, tuple(-a for a in self.coeffs))

    def scale(self, c):
        return BinaryForm(self.degree, tuple(a * c for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __str__(self):
        return format_form(self)

    __repr__ = __str__


# -- transvectants -----------------------------------------------------------
#
# Internally a form is expanded to its monomial coefficient list
# m[k] = coefficient of t^(n-k) s^k, on which partial derivatives are
# index shifts.


def _dt(mono, n):
    # d/dt of sum m[k] t^(n-k) s^k
    return tuple(mono[k] * (n - k) for k in range(n))


def _ds(mono, n):
    return tuple(mono[k + 1] * (k + 1) for k in range(n))


def _mixed_derivative(mono, n, dt_count, ds_count):
    for _ in range(dt_count):
        mono = _dt(mono, n)
        n -= 1
    for _ in range(ds_count):
        mono = _ds(mono, n)
        n -= 1
    return mono, n


def _mono_mul(a, na, b, nb):
    out = [None] * (na + nb + 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            prod = ca * cb
            out[i + j] = prod if out[i + j] is None else out[i + j] + prod
    zero = _zero_like(a[0] * b[0]) if a and b else Fraction(0)
    return tuple(zero if c is None else c for c in out)


def transvectant(u: BinaryForm, v: BinaryForm, p: int, normalized: bool = False) -> BinaryForm:
    """The p-th transvectant with the bare 1/p! prefactor.

    <U,V>_p = (1/p!) sum_i (-1)^i C(p,i) d^pU/dt^(p-i)ds^i * d^pV/dt^i ds^(p-i)

    With normalized=True the stored calibration constant c(n, m, p)
    rescales the result (so the degree-6 self-pairing reproduces I2
    exactly).
    """
    n, m = u.degree, v.degree
    if p < 0 or p > min(n, m):
        raise ValueError(f"transvectant order {p} exceeds min degree ({n}, {m})")
    mu, mv = u.monomial_coeffs(), v.monomial_coeffs()
    acc = None
    for i in range(p + 1):
        du, ndu = _mixed_derivative(mu, n, p - i, i)
        dv, ndv = _mixed_derivative(mv, m, i, p - i)
        term = _mono_mul(du, ndu, dv, ndv)
        sign = comb(p, i) if i % 2 == 0 else -comb(p, i)
        term = tuple(c * sign for c in term)
        acc = term if acc is None else tuple(a + b for a, b in zip(acc, term))
    scale = Fraction(1, _factorial(p))
    if normalized:
        scale *= CALIBRATION.get((n, m, p), Fraction(1))
    acc = tuple(c * scale for c in acc)
    return BinaryForm.from_monomial_coeffs(n + m - 2 * p, acc)


def _factorial(p):
    out = 1
    for k in range(2, p + 1):
        out *= k
    return out


# -- invariants ---------------------------------------------------------------


def invariant_I2(v: BinaryForm):
    """v0 v6 - 6 v1 v5 + 15 v2 v4 - 10 v3^2 for a binary sextic."""
    if v.degree != 6:
        raise ValueError("I2 needs a degree-6 form")
    c = v.coeffs
    return c[0] * c[6] - 6 * (c[1] * c[5]) + 15 * (c[2] * c[4]) - 10 * (c[3] * c[3])


def invariant_I3(u: BinaryForm, v: BinaryForm, w: BinaryForm):
    """Scalar pairing <<U,V>_3, W>_6 of three sextics.

    The inner bracket has degree six, so the outer pairing is forced to
    be the sixth transvectant; antisymmetric in any pair of arguments.
    """
    for f in (u, v, w):
        if f.degree != 6:
            raise ValueError("I3 needs degree-6 forms")
    paired = transvectant(transvectant(u, v, 3), w, 6)
    return paired.coeffs[0]


# -- GL(2) action -------------------------------------------------------------


def gl2_act(v: BinaryForm, matrix) -> BinaryForm:
    """Exact substitution (t, s) -> (a t + b s, c t + d s) for N = [[a,b],[c,d]].

    With this convention an invariant of weight w picks up det(N)^w.
    """
    (a, b), (c, dd) = matrix
    n = v.degree
    mono = v.monomial_coeffs()
    # new_t = a t + b s, new_s = c t + d s; expand sum m[k] new_t^(n-k) new_s^k
    t_pows = _power_list((a, b), n)
    s_pows = _power_list((c, dd), n)
    zero = _zero_like(mono[0] * a)
    out = [zero] * (n + 1)
    for k, coef in enumerate(mono):
        if not coef:
            continue
        prod = _mono_mul(t_pows[n - k], n - k, s_pows[k], k)
        for j, p in enumerate(prod):
            out[j] = out[j] + coef * p
    return BinaryForm.from_monomial_coeffs(n, out)


def _power_list(linear, n):
    """Powers (x t + y s)^k for k = 0..n as monomial lists."""
    x, _ = linear
    pows = [(x - x + 1,)]  # multiplicative unit of the coefficient ring
    for k in range(1, n + 1):
        pows.append(_mono_mul(pows[k - 1], k - 1, linear, 1))
    return pows


def det2(matrix):
    (a, b), (c, d) = matrix
    return a * d - b * c


# -- serialization ------------------------------------------------------------


def format_form(v: BinaryForm) -> str:
    return ", ".join(f"v{k}={c}" for k, c in enumerate(v.coeffs))


def format_polynomial(v: BinaryForm) -> str:
    """Human-readable expansion in t and s."""
    n = v.degree
    parts = []
    for k, c in enumerate(v.monomial_coeffs()):
        if not c:
            continue
        t_part = f"t^{n - k}" if n - k > 1 else ("t" if n - k == 1 else "")
        s_part = f"s^{k}" if k > 1 else ("s" if k == 1 else "")
        mono = "*".join(x for x in (t_part, s_part) if x) or "1"
        parts.append(f"({c})*{mono}")
    return " + ".join(parts) if parts else "0"


def parse_form(text: str, degree: int | None = None) -> BinaryForm:
    """Parse 'v0=..., v1=..., ...' or a bare comma-separated coefficient list."""
    entries = [e.strip() for e in text.split(",") if e.strip()]
    values = []
    for i, entry in enumerate(entries):
        if "=" in entry:
            name, val = entry.split("=", 1)
            if name.strip() != f"v{i}":
                raise ValueError(f"expected v{i}, got {name.strip()!r}")
            entry = val
        values.append(Fraction(entry.strip()))
    if degree is not None and len(values) != degree + 1:
        raise ValueError(f"expected {degree + 1} coefficients")
    return BinaryForm(len(values) - 1, values)

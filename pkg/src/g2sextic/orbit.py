"""The cuspidal-curve family machinery.

Builds the coframe-valued form attached to the projective family of
y^p = x^q curves, derives the quadratic form and three-form it induces,
realizes both in the theta coframe, computes signatures of the three real
slices, and handles stabilizers, Aloff-Wallach index bookkeeping and the
Legendrian lift smoothness criterion.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .binform import BinaryForm
from .exterior import ExteriorForm, add as form_add, scale as form_scale, wedge
from .scalar import I, SQRT10, ZERO, AlgebraicScalar

# Independent sigma symbols after eliminating sigma^3_3 = -s11 - s22.
SYMBOLS = ((1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2))
_SYMBOL_INDEX = {s: i for i, s in enumerate(SYMBOLS)}


class RealityError(ValueError):
    """A realized tensor kept a nonzero imaginary component."""


class SigmaLinear:
    """Exact linear combination of Maurer-Cartan entries sigma^a_b.

    The trace relation is applied on construction, so comparisons are
    canonical.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        vec = [ZERO] * 8
        for key, val in (coeffs or {}).items():
            val = AlgebraicScalar.coerce(val)
            if key == (3, 3):
                vec[_SYMBOL_INDEX[(1, 1)]] = vec[_SYMBOL_INDEX[(1, 1)]] - val
                vec[_SYMBOL_INDEX[(2, 2)]] = vec[_SYMBOL_INDEX[(2, 2)]] - val
            else:
                vec[_SYMBOL_INDEX[key]] = vec[_SYMBOL_INDEX[key]] + val
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, *args):
        raise AttributeError("SigmaLinear is immutable")

    @staticmethod
    def sigma(a: int, b: int) -> "SigmaLinear":
        return SigmaLinear({(a, b): 1})

    def __add__(self, other):
        if isinstance(other, SigmaLinear):
            out = SigmaLinear()
            object.__setattr__(
                out, "coeffs", tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
            )
            return out
        if not other:  # allows sum() and the BinaryForm zero conventions
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        out = SigmaLinear()
        object.__setattr__(out, "coeffs", tuple(-a for a in self.coeffs))
        return out

    def __sub__(self, other):
        if isinstance(other, SigmaLinear):
            return self + (-other)
        if not other:
            return self
        return NotImplemented

    def __rsub__(self, other):
        if not other:
            return -self
        return NotImplemented

    def __mul__(self, c):
        c = AlgebraicScalar.coerce(c)
        out = SigmaLinear()
        object.__setattr__(out, "coeffs", tuple(a * c for a in self.coeffs))
        return out

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SigmaLinear):
            return self.coeffs == other.coeffs
        if not other:
            return not self
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        parts = [f"{c}*s{a}{b}" for (a, b), c in zip(SYMBOLS, self.coeffs) if c]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def sigma(a: int, b: int) -> SigmaLinear:
    return SigmaLinear.sigma(a, b)


# -- quadratic and cubic containers over sigma symbols ------------------------


class SymTensor:
    """Symmetric 2-tensor: value on V is sum over stored products."""

    __slots__ = ("terms",)

    def __init__(self):
        self.terms = {}

    def add_product(self, coef, x: SigmaLinear, y: SigmaLinear):
        coef = AlgebraicScalar.coerce(coef)
        for s in range(8):
            xs = x.coeffs[s]
            if not xs:
                continue
            for t in range(8):
                yt = y.coeffs[t]
                if not yt:
                    continue
                key = (s, t) if s <= t else (t, s)
                cur = self.terms.get(key, ZERO)
                self.terms[key] = cur + coef * xs * yt
        self.terms = {k: v for k, v in self.terms.items() if v}
        return self

    def __eq__(self, other):
        return isinstance(other, SymTensor) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __str__(self):
        names = ["s%d%d" % s for s in SYMBOLS]
        parts = [
            f"({c})*{names[i]}.{names[j]}" for (i, j), c in sorted(self.terms.items())
        ]
        return " + ".join(parts) if parts else "0"


class SigmaThreeForm:
    """Alternating 3-tensor over the sigma symbols."""

    __slots__ = ("terms",)

    def __init__(self):
        self.terms = {}

    def add_wedge(self, coef, x: SigmaLinear, y: SigmaLinear, z: SigmaLinear):
        coef = AlgebraicScalar.coerce(coef)
        vecs = (x.coeffs, y.coeffs, z.coeffs)
        for s in range(8):
            if not vecs[0][s]:
                continue
            for t in range(8):
                if t == s or not vecs[1][t]:
                    continue
                for u in range(8):
                    if u == s or u == t or not vecs[2][u]:
                        continue
                    key = tuple(sorted((s, t, u)))
                    sign = _parity((s, t, u))
                    c = coef * vecs[0][s] * vecs[1][t] * vecs[2][u]
                    cur = self.terms.get(key, ZERO)
                    self.terms[key] = cur + (c if sign > 0 else -c)
        self.terms = {k: v for k, v in self.terms.items() if v}
        return self

    def __eq__(self, other):
        return isinstance(other, SigmaThreeForm) and self.terms == other.terms

    def is_zero(self):
        return not self.terms


def _parity(seq):
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


# -- the family form ----------------------------------------------------------


def _check_pq(p: int, q: int):
    if not (0 < p < q) or gcd(p, q) != 1:
        raise ValueError(f"(p, q) = ({p}, {q}) must be coprime with 0 < p < q")


def _family_by_power(p: int, q: int) -> dict:
    """Gradient-contraction terms of the family, keyed by the power of t."""
    _check_pq(p, q)
    grad = {1: Fraction(-q), 2: Fraction(p), 3: Fraction(q - p)}
    grad_power = {1: p * (q - 1), 2: q * (p - 1), 3: p * q}
    t_power_of_delta = {1: p, 2: q, 3: 0}
    by_power: dict[int, dict] = {}
    for gamma in (1, 2, 3):
        for delta in (1, 2, 3):
            power = grad_power[gamma] + t_power_of_delta[delta]
            slot = by_power.setdefault(power, {})
            slot[(gamma, delta)] = slot.get((gamma, delta), Fraction(0)) + grad[gamma]
    return by_power


def family_sextic(p: int, q: int) -> BinaryForm:
    """Normal-direction form of the y^p = x^q family, degree 2q in (s, t).

    Built from the gradient of the homogeneous equation
    (Z2)^p (Z3)^(q-p) - (Z1)^q contracted with sigma along the rational
    parametrization T = (t^p, t^q, 1); the common power of t is pulled out
    and the remainder homogenized.  For (p, q) = (2, 3) this is the sextic
    with the t^3 factor removed.
    """
    by_power = _family_by_power(p, q)
    low = min(by_power)
    span = max(by_power) - low
    if span != 2 * q:
        raise ValueError(f"unexpected family form degree {span}")
    zero = SigmaLinear()
    monomial = [zero] * (2 * q + 1)
    for power, combo in by_power.items():
        monomial[2 * q - (power - low)] = SigmaLinear(
            {key: coef for key, coef in combo.items()}
        )
    return BinaryForm.from_monomial_coeffs(2 * q, monomial)


def pullout_power(p: int, q: int) -> int:
    """The power of t removed by family_sextic (vanishing order at the cusp)."""
    return min(_family_by_power(p, q))


def metric_from_sextic(s_form: BinaryForm) -> SymTensor:
    """a0.a6 - 6 a1.a5 + 15 a2.a4 - 10 a3^2 on a degree-6 coframe form."""
    if s_form.degree != 6:
        raise ValueError("metric extraction needs a degree-6 form")
    a = s_form.coeffs
    out = SymTensor()
    out.add_product(1, a[0], a[6])
    out.add_product(-6, a[1], a[5])
    out.add_product(15, a[2], a[4])
    out.add_product(-10, a[3], a[3])
    return out


def threeform_from_sextic(s_form: BinaryForm) -> SigmaThreeForm:
    """sqrt(5/2) (3(a1^a2^a6 + a0^a4^a5) + a3^(a0^a6 + 6 a1^a5 - 15 a2^a4))."""
    if s_form.degree != 6:
        raise ValueError("three-form extraction needs a degree-6 form")
    a = s_form.coeffs
    root = SQRT10 * Fraction(1, 2)  # sqrt(5/2)
    out = SigmaThreeForm()
    out.add_wedge(root * 3, a[1], a[2], a[6])
    out.add_wedge(root * 3, a[0], a[4], a[5])
    out.add_wedge(root, a[3], a[0], a[6])
    out.add_wedge(root * 6, a[3], a[1], a[5])
    out.add_wedge(root * (-15), a[3], a[2], a[4])
    return out


# -- realization in the theta coframe -----------------------------------------


def _covector(lin: SigmaLinear, dictionary) -> tuple:
    """theta components of a sigma-linear under the sigma_in_theta dictionary."""
    out = [ZERO] * 8
    for sym, c in zip(SYMBOLS, lin.coeffs):
        if not c:
            continue
        vec = dictionary[sym]
        for k in range(8):
            if vec[k]:
                out[k] = out[k] + c * vec[k]
    return tuple(out)


def realize_metric(tensor: SymTensor, dictionary) -> list:
    """Gram matrix over theta^1..theta^8; raises RealityError if not real."""
    covectors = [
        _covector(SigmaLinear.sigma(*sym), dictionary) for sym in SYMBOLS
    ]
    gram = [[ZERO] * 8 for _ in range(8)]
    half = Fraction(1, 2)
    for (s, t), coef in tensor.terms.items():
        vx, vy = covectors[s], covectors[t]
        for j in range(8):
            for k in range(8):
                contrib = coef * (vx[j] * vy[k] + vy[j] * vx[k]) * half
                if contrib:
                    gram[j][k] = gram[j][k] + contrib
    for j in range(8):
        for k in range(8):
            if not gram[j][k].is_real():
                raise RealityError(f"Gram entry ({j+1},{k+1}) not real: {gram[j][k]}")
    return gram


def realize_threeform(tf: SigmaThreeForm, dictionary) -> ExteriorForm:
    covectors = [
        ExteriorForm(
            1,
            {(k + 1,): c for k, c in enumerate(_covector(SigmaLinear.sigma(*sym), dictionary)) if c},
        )
        for sym in SYMBOLS
    ]
    out = ExteriorForm.zero(3)
    for (s, t, u), coef in tf.terms.items():
        piece = wedge(wedge(covectors[s], covectors[t]), covectors[u])
        out = form_add(out, form_scale(piece, coef))
    for idx, coef in out.terms.items():
        if not coef.is_real():
            raise RealityError(f"three-form term {idx} not real: {coef}")
    return out


def identity_gram(dim=7) -> list:
    gram = [[ZERO] * 8 for _ in range(8)]
    for j in range(dim):
        gram[j][j] = AlgebraicScalar.rational(1)
    return gram


# -- signatures of the real slices --------------------------------------------

REAL_FORMS = ("split", "su3", "su21")


def _real_slice_covectors(tag: str):
    """sigma symbols as 7-component coordinate covectors per reality condition.

    Coordinates: (x1..x6) spanning the off-diagonal block, x7 the diagonal
    combination transverse to the stabiliser (sigma^1_1 -> 0,
    sigma^2_2 -> -x7 resp. -i x7).
    """

    def unit(j, coef=1):
        vec = [ZERO] * 7
        vec[j] = AlgebraicScalar.coerce(coef)
        return vec

    def combo(*pairs):
        vec = [ZERO] * 7
        for j, coef in pairs:
            vec[j] = vec[j] + AlgebraicScalar.coerce(coef)
        return vec

    one = AlgebraicScalar.rational(1)
    if tag == "split":
        return {
            (2, 3): unit(0),
            (3, 2): unit(1),
            (1, 3): unit(2),
            (3, 1): unit(3),
            (1, 2): unit(4),
            (2, 1): unit(5),
            (1, 1): [ZERO] * 7,
            (2, 2): unit(6, -one),
        }
    if tag == "su21":
        return {
            (2, 3): combo((0, one), (1, I)),
            (3, 2): combo((0, one), (1, -I)),
            (1, 3): combo((2, one), (3, I)),
            (3, 1): combo((2, one), (3, -I)),
            (1, 2): combo((4, one), (5, I)),
            (2, 1): combo((4, -one), (5, I)),
            (1, 1): [ZERO] * 7,
            (2, 2): unit(6, -I),
        }
    if tag == "su3":
        return {
            (2, 3): combo((0, one), (1, I)),
            (3, 2): combo((0, -one), (1, I)),
            (1, 3): combo((2, one), (3, I)),
            (3, 1): combo((2, -one), (3, I)),
            (1, 2): combo((4, one), (5, I)),
            (2, 1): combo((4, -one), (5, I)),
            (1, 1): [ZERO] * 7,
            (2, 2): unit(6, -I),
        }
    raise ValueError(f"unknown real form {tag!r}")


def signature(tag: str) -> tuple[int, int]:
    """(n+, n-) of the family metric restricted to the chosen real slice."""
    tensor = metric_from_sextic(family_sextic(2, 3))
    slice_cov = _real_slice_covectors(tag)
    vectors = {}
    for sym in SYMBOLS:
        vectors[sym] = slice_cov[sym]
    gram = [[Fraction(0)] * 7 for _ in range(7)]
    half = Fraction(1, 2)
    for (s, t), coef in tensor.terms.items():
        vx, vy = vectors[SYMBOLS[s]], vectors[SYMBOLS[t]]
        for j in range(7):
            for k in range(7):
                entry = coef * (vx[j] * vy[k] + vy[j] * vx[k]) * half
                if not entry:
                    continue
                if not entry.is_real():
                    raise RealityError(f"slice Gram entry not real: {entry}")
                gram[j][k] += entry.rational_value()
    return rational_signature(gram)


def rational_signature(gram) -> tuple[int, int]:
    """Sylvester counts via exact congruence (Lagrange) elimination."""
    n = len(gram)
    a = [row[:] for row in gram]
    pos = neg = 0
    for k in range(n):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][i]), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j]), None)
                if j is None:
                    continue  # residual block row is zero; handled below
                for col in range(n):
                    a[k][col] += a[j][col]
                for row in a:
                    row[k] += row[j]
        pivot = a[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for col in range(n):
                    a[i][col] -= f * a[k][col]
                for row in a:
                    row[i] -= f * row[k]
    if pos + neg < n:
        raise ValueError("degenerate Gram matrix")
    return pos, neg


# -- stabilizers and index bookkeeping ----------------------------------------


def stabilizer_weights(p: int, q: int) -> tuple[int, int, int]:
    return (q - 2 * p, p - 2 * q, p + q)


def stabilizer_check(p: int, q: int, weights=None) -> bool:
    """Does diag(a^w1, a^w2, a^w3) preserve (Z2)^p (Z3)^(q-p) = (Z1)^q?

    Performed by exact substitution: each monomial of the homogeneous
    equation picks up a power of the unit a; the curve is preserved iff
    the powers agree.
    """
    if weights is None:
        weights = stabilizer_weights(p, q)
    w1, w2, w3 = weights
    monomials = {
        (q, 0, 0): -1,
        (0, p, q - p): 1,
    }
    exponents = {
        exp: exp[0] * w1 + exp[1] * w2 + exp[2] * w3 for exp in monomials
    }
    return len(set(exponents.values())) == 1


def aloff_wallach_from_pq(p: int, q: int) -> tuple[int, int]:
    """(k, l) solving p = (2l + k)/3, q = -(l + 2k)/3 exactly."""
    return (-p - 2 * q, 2 * p + q)


def pq_from_aloff_wallach(k: int, l: int) -> tuple[Fraction, Fraction]:
    p = Fraction(2 * l + k, 3)
    q = Fraction(-(l + 2 * k), 3)
    if p.denominator != 1 or q.denominator != 1:
        raise ValueError(f"(k, l) = ({k}, {l}) gives non-integer (p, q) = ({p}, {q})")
    return p, q


def aloff_wallach_report(p: int, q: int) -> dict:
    """Both index parameterizations side by side; reported, not asserted.

    The diagonal stabiliser weights (q-2p, p-2q, p+q) read as circle
    weights (l, k, -k-l) give one (k, l); the printed index relations give
    another.  Both describe the same family and are emitted together.
    """
    k, l = aloff_wallach_from_pq(p, q)
    weights = stabilizer_weights(p, q)
    kl_from_stabilizer = (2 * q - p, 2 * p - q)  # negated weight reading
    return {
        "pq": (p, q),
        "kl_from_index_relations": (k, l),
        "kl_circle_weights": (l, k, -k - l),
        "stabilizer_weights": weights,
        "kl_from_stabilizer_weights": kl_from_stabilizer,
        "stabilizer_matches_kl_space": sorted(
            map(abs, (kl_from_stabilizer[1], kl_from_stabilizer[0], -sum(kl_from_stabilizer)))
        )
        == sorted(map(abs, weights)),
    }


# -- Legendrian lift ------------------------------------------------------------


def legendrian_lift_smooth(p: int, q: int) -> bool:
    """Immersedness of gamma(t) = (t^p, t^q, (q/p) t^(q-p)) at t = 0.

    Evaluates gamma-dot at zero from the lift itself rather than pattern
    matching the p = 1 / q = p + 1 criterion.
    """
    _check_pq(p, q)
    components = [
        (Fraction(1), p),
        (Fraction(1), q),
        (Fraction(q, p), q - p),
    ]
    velocity_at_zero = []
    for coef, exponent in components:
        dcoef, dexp = coef * exponent, exponent - 1
        velocity_at_zero.append(dcoef if dexp == 0 else Fraction(0))
    return any(velocity_at_zero)

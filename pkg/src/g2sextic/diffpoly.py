"""Differential algebra on jet variables with exact rational coefficients.

Three layers:

* Poly - sparse multivariate (Laurent-capable) polynomials over Fraction,
  with a fixed variable universe per JetContext.
* JetFunction - rational functions stored as  num * prod f_i^e_i  with the
  f_i primitive integer polynomials; negative exponents are denominator
  factors.  Trial division against the factor basis keeps the localized
  arithmetic of the invariant pipelines reduced without any multivariate
  gcd; a full gcd reduction is available through normalize().
* ExtendedJetFunction - rank-3 algebraic extension by a formal generator u
  with u^3 = R, derivations acting by D(u) = (1/3)(D R / R) u.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


class DiffAlgebraError(ArithmeticError):
    pass


class PoleError(DiffAlgebraError):
    """Evaluation at a zero of the denominator."""


class CubeRootError(DiffAlgebraError):
    """Evaluation needs an irrational (or undeclared) cube root."""


class MissingJetError(DiffAlgebraError):
    """A total derivative needed a jet variable beyond the declared universe."""


class JetContext:
    """Fixed variable universe: jet coordinates plus optional constants."""

    def __init__(self, max_order: int, extra=(), with_x: bool = True):
        names = []
        if with_x:
            names.append("x")
        names.append("y")
        names.extend(f"y{k}" for k in range(1, max_order + 1))
        names.extend(extra)
        self.names = tuple(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.nvars = len(self.names)
        self.max_order = max_order
        self._zero_exp = (0,) * self.nvars

    @staticmethod
    def plain(names) -> "JetContext":
        """A context that is just a list of named variables (abstract rings)."""
        ctx = object.__new__(JetContext)
        ctx.names = tuple(names)
        ctx.index = {n: i for i, n in enumerate(ctx.names)}
        ctx.nvars = len(ctx.names)
        ctx.max_order = None
        ctx._zero_exp = (0,) * ctx.nvars
        return ctx

    def jet_name(self, order: int) -> str:
        return "y" if order == 0 else f"y{order}"

    # -- polynomial constructors -------------------------------------------

    def const(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self, {self._zero_exp: c} if c else {})

    def var(self, name: str) -> "Poly":
        exp = list(self._zero_exp)
        exp[self.index[name]] = 1
        return Poly(self, {tuple(exp): Fraction(1)})

    def fn(self, name_or_const) -> "JetFunction":
        if isinstance(name_or_const, str):
            return JetFunction(self, self.var(name_or_const), {})
        return JetFunction(self, self.const(name_or_const), {})


class Poly:
    """Immutable sparse polynomial; exponents may be negative (Laurent)."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: JetContext, terms: dict):
        self.ctx = ctx
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return Poly(self.ctx, out)

    def __neg__(self):
        return Poly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        out = {}
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    out.pop(e, None)
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly(self.ctx, {})
        return Poly(self.ctx, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Poly")
        out = self.ctx.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def diff(self, name: str) -> "Poly":
        v = self.ctx.index[name]
        out = {}
        for e, c in self.terms.items():
            k = e[v]
            if not k:
                continue
            ne = list(e)
            ne[v] = k - 1
            ne = tuple(ne)
            nc = out.get(ne, 0) + c * k
            if nc:
                out[ne] = nc
            else:
                out.pop(ne, None)
        return Poly(self.ctx, out)

    def degree(self, name: str) -> int:
        v = self.ctx.index[name]
        return max((e[v] for e in self.terms), default=0)

    def variables(self):
        used = set()
        for e in self.terms:
            for v, k in enumerate(e):
                if k:
                    used.add(v)
        return used

    def evaluate(self, point: dict) -> Fraction:
        """point: name -> Fraction; every used variable must be present."""
        vals = {}
        for name, value in point.items():
            vals[self.ctx.index[name]] = Fraction(value)
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in enumerate(e):
                if not k:
                    continue
                if v not in vals:
                    raise ValueError(f"no value for {self.ctx.names[v]}")
                base = vals[v]
                if not base and k < 0:
                    raise PoleError(f"negative power of zero at {self.ctx.names[v]}")
                term *= base ** k
            total += term
        return total

    # -- integer normal form -------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self = c * (primitive integer poly)."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> tuple[Fraction, "Poly"]:
        """(unit, poly) with self = unit * poly, poly primitive integer,
        positive lex-leading coefficient."""
        if not self.terms:
            return Fraction(0), self
        c = self.content()
        lead = self.terms[max(self.terms)]
        if lead < 0:
            c = -c
        return c, self.scale(1 / c)

    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, divisor: "Poly"):
        """Quotient when divisor divides self exactly, else None (lex)."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        for v in divisor.variables():
            name = self.ctx.names[v]
            if self.degree(name) < divisor.degree(name):
                return None
        de, dc = divisor.leading()
        rem = dict(self.terms)
        out = {}
        while rem:
            re = max(rem)
            qe = tuple(a - b for a, b in zip(re, de))
            if any(x < 0 for x in qe):
                return None
            qc = rem[re] / dc
            out[qe] = qc
            for e2, c2 in divisor.terms.items():
                e = tuple(a + b for a, b in zip(qe, e2))
                nc = rem.get(e, 0) - qc * c2
                if nc:
                    rem[e] = nc
                else:
                    rem.pop(e, None)
        return Poly(self.ctx, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for v, k in enumerate(e):
                if k == 1:
                    factors.append(self.ctx.names[v])
                elif k:
                    factors.append(f"{self.ctx.names[v]}^{k}")
            body = "*".join(factors)
            coef = str(c) if c.denominator == 1 else f"({c})"
            parts.append(f"{coef}*{body}" if body else coef)
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


# -- multivariate gcd (primitive PRS); used by normalize() and tests ---------


def _as_univar(p: Poly, v: int) -> dict:
    out = {}
    for e, c in p.terms.items():
        k = e[v]
        base = list(e)
        base[v] = 0
        base = tuple(base)
        slot = out.setdefault(k, {})
        slot[base] = slot.get(base, 0) + c
    return {k: Poly(p.ctx, t) for k, t in out.items()}


def _from_univar(ctx: JetContext, v: int, coeffs: dict) -> Poly:
    out = {}
    for k, poly in coeffs.items():
        for e, c in poly.terms.items():
            ne = list(e)
            ne[v] = ne[v] + k
            out[tuple(ne)] = out.get(tuple(ne), 0) + c
    return Poly(ctx, out)


def _pseudo_rem(f: dict, g: dict, ctx: JetContext):
    """Pseudo-remainder of dense univariate polys with Poly coefficients."""
    df, dg = max(f), max(g)
    lc_g = g[dg]
    r = dict(f)
    while r and max(r) >= dg:
        dr = max(r)
        lc_r = r.pop(dr)
        # r = lc_g * r - lc_r * g * x^(dr-dg)
        new = {}
        for k, c in r.items():
            new[k] = c * lc_g
        for k, c in g.items():
            if k == dg:
                continue
            kk = k + dr - dg
            cur = new.get(kk, ctx.const(0))
            new[kk] = cur - lc_r * c
        r = {k: c for k, c in new.items() if not c.is_zero()}
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd; the result is a primitive integer polynomial
    (constant 1 when the inputs are coprime)."""
    ctx = a.ctx
    if a.is_zero():
        return b.primitive()[1] if not b.is_zero() else ctx.const(0)
    if b.is_zero():
        return a.primitive()[1]
    used = a.variables() | b.variables()
    if not used:
        return ctx.const(1)
    v = min(used, key=lambda w: max(a.degree(ctx.names[w]), b.degree(ctx.names[w])))
    fa, fb = _as_univar(a, v), _as_univar(b, v)
    cont_a = _coeff_gcd(list(fa.values()))
    cont_b = _coeff_gcd(list(fb.values()))
    cont = poly_gcd(cont_a, cont_b)
    prim_a = {k: c.exact_div(cont_a) for k, c in fa.items()}
    prim_b = {k: c.exact_div(cont_b) for k, c in fb.items()}
    f, g = (prim_a, prim_b) if max(fa) >= max(fb) else (prim_b, prim_a)
    while True:
        if not g:
            result = _from_univar(ctx, v, f)
            break
        if max(g) == 0:
            result = ctx.const(1)
            break
        r = _pseudo_rem(f, g, ctx)
        if not r:
            result = _from_univar(ctx, v, g)
            break
        rc = _coeff_gcd(list(r.values()))
        f, g = g, {k: c.exact_div(rc) for k, c in r.items()}
    result = (result * cont)
    return result.primitive()[1]


def _coeff_gcd(polys):
    out = polys[0]
    for p in polys[1:]:
        out = poly_gcd(out, p)
        if out.is_constant():
            break
    return out.primitive()[1] if not out.is_zero() else out


# -- rational jet functions ---------------------------------------------------


class JetFunction:
    """num * prod f^e with primitive integer factors f (e in Z, nonzero)."""

    __slots__ = ("ctx", "num", "factors")

    def __init__(self, ctx: JetContext, num: Poly, factors: dict | None = None):
        self.ctx = ctx
        factors = dict(factors or {})
        if num.is_zero():
            factors = {}
        self.num, self.factors = self._split_monomials(ctx, num, factors)
        self._trial_reduce()

    @staticmethod
    def _split_monomials(ctx, num, factors):
        """Replace single-term factors by per-variable factors so that
        trial reduction sees them."""
        out = {}
        scale = Fraction(1)
        for f, e in factors.items():
            if not e:
                continue
            if len(f.terms) == 1:
                ((exps, coef),) = f.terms.items()
                if coef != 1:
                    scale *= Fraction(coef) ** e
                for v, k in enumerate(exps):
                    if k:
                        vp = ctx.var(ctx.names[v])
                        out[vp] = out.get(vp, 0) + k * e
            else:
                out[f] = out.get(f, 0) + e
        if scale != 1:
            num = num.scale(scale)
        return num, {f: e for f, e in out.items() if e}

    # -- representation maintenance ----------------------------------------

    def _trial_reduce(self):
        """Cancel denominator factors that exactly divide the numerator."""
        changed = True
        while changed:
            changed = False
            for f, e in list(self.factors.items()):
                if e >= 0:
                    continue
                while e < 0:
                    q = self._fast_div(self.num, f)
                    if q is None:
                        break
                    self.num = q
                    e += 1
                    changed = True
                if e:
                    self.factors[f] = e
                else:
                    del self.factors[f]
            if self.num.is_zero():
                self.factors = {}
                return

    @staticmethod
    def _fast_div(num: Poly, f: Poly):
        if len(f.terms) == 1:
            # monomial factor: exponent shift when every term allows it
            (fe, fc), = f.terms.items()
            out = {}
            for e, c in num.terms.items():
                ne = tuple(a - b for a, b in zip(e, fe))
                if any(x < 0 for x in ne):
                    return None
                out[ne] = c / fc
            return Poly(num.ctx, out)
        return num.exact_div(f)

    @staticmethod
    def from_polys(num: Poly, den: Poly) -> "JetFunction":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        unit, prim = den.primitive()
        factors = {} if prim.is_constant() else {prim: -1}
        scale = Fraction(1) / (unit * (prim.constant_value() if prim.is_constant() else 1))
        return JetFunction(num.ctx, num.scale(scale), factors)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(ctx, other):
        if isinstance(other, JetFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return JetFunction(ctx, ctx.const(other), {})
        return None

    def __add__(self, other):
        o = self._coerce(self.ctx, other)
        if o is None:
            return NotImplemented
        common = {}
        for f in set(self.factors) | set(o.factors):
            common[f] = min(self.factors.get(f, 0), o.factors.get(f, 0))
        left, right = self.num, o.num
        for f, base in common.items():
            k = self.factors.get(f, 0) - base
            if k:
                left = left * f ** k
            k = o.factors.get(f, 0) - base
            if k:
                right = right * f ** k
        return JetFunction(self.ctx, left + right, {f: e for f, e in common.items() if e})

    __radd__ = __add__

    def __neg__(self):
        return JetFunction(self.ctx, -self.num, self.factors)

    def __sub__(self, other):
        o = self._coerce(self.ctx, other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(self.ctx, other)
        if o is None:
            return NotImplemented
        factors = dict(self.factors)
        for f, e in o.factors.items():
            ne = factors.get(f, 0) + e
            if ne:
                factors[f] = ne
            else:
                factors.pop(f, None)
        return JetFunction(self.ctx, self.num * o.num, factors)

    __rmul__ = __mul__

    def inverse(self) -> "JetFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero jet function")
        factors = {f: -e for f, e in self.factors.items()}
        unit, prim = self.num.primitive()
        if not prim.is_constant():
            factors[prim] = factors.get(prim, 0) - 1
            if not factors[prim]:
                del factors[prim]
        num = self.ctx.const(Fraction(1) / unit)
        return JetFunction(self.ctx, num, factors)

    def __truediv__(self, other):
        o = self._coerce(self.ctx, other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = JetFunction(self.ctx, self.ctx.const(1), {})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(self.ctx, other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None  # value equality is by cross-multiplication; not hashable

    def as_factored(self) -> "JetFunction":
        """Move the numerator's primitive part into the factor table.

        Keeps powers and logarithmic derivatives of structured quantities
        (cube bases, pulled-back invariants) in factored form.
        """
        if self.is_zero():
            return self
        unit, prim = self.num.primitive()
        factors = dict(self.factors)
        if not prim.is_constant():
            factors[prim] = factors.get(prim, 0) + 1
            if not factors[prim]:
                del factors[prim]
            return JetFunction(self.ctx, self.ctx.const(unit), factors)
        return self

    # -- expanded views -------------------------------------------------------

    def numerator_polynomial(self) -> Poly:
        out = self.num
        for f, e in self.factors.items():
            if e > 0:
                out = out * f ** e
        return out

    def denominator_polynomial(self) -> Poly:
        out = self.ctx.const(1)
        for f, e in self.factors.items():
            if e < 0:
                out = out * f ** (-e)
        return out

    def normalize_pair(self) -> tuple[Poly, Poly]:
        """Fully reduced (num, den) by multivariate gcd; den primitive > 0."""
        num = self.numerator_polynomial()
        den = self.denominator_polynomial()
        if num.is_zero():
            return num, num.ctx.const(1)
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
        unit, prim = den.primitive()
        return num.scale(1 / unit), prim

    def normalize(self) -> "JetFunction":
        num, den = self.normalize_pair()
        return JetFunction.from_polys(num, den)

    # -- calculus ---------------------------------------------------------------

    def partial(self, name: str) -> "JetFunction":
        total = JetFunction(self.ctx, self.num.diff(name), self.factors)
        for f, e in self.factors.items():
            df = f.diff(name)
            if df.is_zero():
                continue
            shifted = dict(self.factors)
            shifted[f] = e - 1
            total = total + JetFunction(self.ctx, (self.num * df).scale(e), shifted)
        return total

    def derivative(self, dmap: dict):
        """Derivation given by dmap: name -> image (JetFunction/Extended/
        Ellipsis for 'needed but undefined')."""
        total = _apply_dmap(self.ctx, self.num, self.factors, dmap)
        return total

    def log_derivative(self, dmap: dict):
        """D(self)/self computed term-by-term; stays in the localization."""
        total = _derive_poly(self.ctx, self.num, dmap) / JetFunction(
            self.ctx, self.num, {}
        )
        for f, e in self.factors.items():
            dfv = _derive_poly(self.ctx, f, dmap)
            total = total + dfv * JetFunction(self.ctx, self.ctx.const(e), {f: -1})
        return total

    def evaluate(self, point: dict) -> Fraction:
        value = self.num.evaluate(point)
        for f, e in self.factors.items():
            fv = f.evaluate(point)
            if not fv:
                if e < 0:
                    raise PoleError("denominator factor vanishes at the point")
                return Fraction(0)
            value *= fv ** e
        return value

    def __str__(self):
        num, den = self.normalize_pair()
        return str(num) if den.is_constant() and den.constant_value() == 1 else f"({num}) / ({den})"

    __repr__ = __str__


def _derive_poly(ctx: JetContext, p: Poly, dmap: dict):
    """Sum over variables of dp/dv * dmap[v]; promotes to Extended as needed."""
    total = JetFunction(ctx, ctx.const(0), {})
    for v in p.variables():
        name = ctx.names[v]
        image = dmap.get(name)
        if image is None:
            continue
        dp = p.diff(name)
        if dp.is_zero():
            continue
        if image is Ellipsis:
            raise MissingJetError(
                f"derivative of {name} undefined: supply the equation right-hand side"
            )
        total = JetFunction(ctx, dp, {}) * image + total
    return total


def _apply_dmap(ctx: JetContext, num: Poly, factors: dict, dmap: dict):
    total = _derive_poly(ctx, num, dmap) * JetFunction(ctx, ctx.const(1), factors)
    for f, e in factors.items():
        dfv = _derive_poly(ctx, f, dmap)
        if isinstance(dfv, JetFunction) and dfv.is_zero():
            continue
        shifted = dict(factors)
        shifted[f] = e - 1
        if not shifted[f]:
            del shifted[f]
        total = dfv * JetFunction(ctx, num.scale(e), shifted) + total
    return total


def free_total_derivative_map(ctx: JetContext) -> dict:
    """D_x shifting each jet variable up; the top order raises if touched."""
    dmap = {"x": ctx.fn(1)} if "x" in ctx.index else {}
    if "y" in ctx.index:
        prev = "y"
        for k in range(1, (ctx.max_order or 0) + 1):
            dmap[prev] = ctx.fn(f"y{k}")
            prev = f"y{k}"
        dmap[prev] = Ellipsis
    return dmap


def on_equation_derivative_map(ctx: JetContext, order: int, rhs) -> dict:
    """D_x with y_(order) replaced by the right-hand side."""
    dmap = free_total_derivative_map(ctx)
    dmap[ctx.jet_name(order - 1)] = rhs
    return dmap


def total_derivative(f, rhs=None, order: int | None = None):
    """The total derivative D_x; with rhs given, on the equation
    y^(order) = rhs."""
    ctx = f.ctx
    if rhs is None:
        dmap = free_total_derivative_map(ctx)
    else:
        if order is None:
            raise ValueError("order required together with rhs")
        dmap = on_equation_derivative_map(ctx, order, rhs)
    return f.derivative(dmap)


# -- the cube-root extension ---------------------------------------------------


class ExtendedJetFunction:
    """c0 + c1 u + c2 u^2 with u^3 = base (a nonzero JetFunction)."""

    __slots__ = ("c0", "c1", "c2", "base")

    def __init__(self, c0: JetFunction, c1=None, c2=None, base: JetFunction | None = None):
        ctx = c0.ctx
        zero = JetFunction(ctx, ctx.const(0), {})
        self.c0 = c0
        self.c1 = c1 if c1 is not None else zero
        self.c2 = c2 if c2 is not None else zero
        self.base = base
        if base is None and (self.c1 or self.c2):
            raise ValueError("u-components need a declared cube base")

    @property
    def ctx(self):
        return self.c0.ctx

    @staticmethod
    def coerce(other, like: "ExtendedJetFunction"):
        if isinstance(other, ExtendedJetFunction):
            return other
        if isinstance(other, JetFunction):
            return ExtendedJetFunction(other)
        if isinstance(other, (int, Fraction)):
            return ExtendedJetFunction(like.ctx.fn(other))
        return None

    def _join_base(self, other: "ExtendedJetFunction"):
        if self.base is None:
            return other.base
        if other.base is None:
            return self.base
        if self.base is other.base or self.base == other.base:
            return self.base
        raise ValueError("incompatible cube-root bases")

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero() and self.c2.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def u_free(self) -> bool:
        return self.c1.is_zero() and self.c2.is_zero()

    def __add__(self, other):
        o = self.coerce(other, self)
        if o is None:
            return NotImplemented
        return ExtendedJetFunction(
            self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2, self._join_base(o)
        )

    __radd__ = __add__

    def __neg__(self):
        return ExtendedJetFunction(-self.c0, -self.c1, -self.c2, self.base)

    def __sub__(self, other):
        o = self.coerce(other, self)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self.coerce(other, self)
        if o is None:
            return NotImplemented
        base = self._join_base(o)
        a0, a1, a2 = self.c0, self.c1, self.c2
        b0, b1, b2 = o.c0, o.c1, o.c2
        if base is None:
            return ExtendedJetFunction(a0 * b0)
        r = base
        c0 = a0 * b0 + r * (a1 * b2 + a2 * b1)
        c1 = a0 * b1 + a1 * b0 + r * (a2 * b2)
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        return ExtendedJetFunction(c0, c1, c2, base)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExtendedJetFunction):
            if other.u_free():
                other = other.c0
            else:
                raise ValueError("division by u-bearing element not supported")
        if isinstance(other, (int, Fraction)):
            other = self.ctx.fn(other)
        inv = other.inverse()
        return ExtendedJetFunction(
            self.c0 * inv, self.c1 * inv, self.c2 * inv, self.base
        )

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of extended element")
        out = ExtendedJetFunction(self.ctx.fn(1), base=self.base)
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b if n > 1 else b
            n >>= 1
        return out

    def __eq__(self, other):
        o = self.coerce(other, self)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def partial(self, name: str) -> "ExtendedJetFunction":
        return self.derivative({name: self.ctx.fn(1)})

    def generator(self) -> "ExtendedJetFunction":
        zero = self.ctx.fn(0)
        return ExtendedJetFunction(zero, self.ctx.fn(1), zero, self.base)

    def derivative(self, dmap: dict) -> "ExtendedJetFunction":
        # the images under dmap may themselves carry u-components (the
        # on-equation total derivative does), so everything is assembled
        # with full extension arithmetic
        d0 = _to_ext(self.c0.derivative(dmap), self.base, self.ctx)
        if self.base is None:
            return d0
        u = self.generator()
        rho = _to_ext(self.base.log_derivative(dmap) / 3, self.base, self.ctx)
        out = d0
        if self.c1:
            d1 = _to_ext(self.c1.derivative(dmap), self.base, self.ctx) + rho * self.c1
            out = out + d1 * u
        if self.c2:
            d2 = _to_ext(self.c2.derivative(dmap), self.base, self.ctx) + rho * (
                self.c2 * 2
            )
            out = out + d2 * u * u
        return out

    def evaluate(self, point: dict) -> Fraction:
        if self.u_free():
            return self.c0.evaluate(point)
        r = self.base.evaluate(point)
        root = _rational_cube_root(r)
        if root is None:
            raise CubeRootError(f"{r} has no rational cube root")
        return (
            self.c0.evaluate(point)
            + self.c1.evaluate(point) * root
            + self.c2.evaluate(point) * root ** 2
        )

    def evaluate_components(self, point: dict) -> tuple:
        """Symbolic alternative to evaluate(): the triple (c0, c1, c2) at
        the point together with the cube base value, no root taken."""
        return (
            self.c0.evaluate(point),
            self.c1.evaluate(point),
            self.c2.evaluate(point),
            self.base.evaluate(point) if self.base is not None else None,
        )

    def __str__(self):
        if self.u_free():
            return str(self.c0)
        return f"({self.c0}) + ({self.c1})*u + ({self.c2})*u^2  [u^3 = {self.base}]"

    __repr__ = __str__


def _to_ext(value, base, ctx) -> ExtendedJetFunction:
    if isinstance(value, ExtendedJetFunction):
        return value
    if isinstance(value, JetFunction):
        return ExtendedJetFunction(value, base=base) if base is not None else ExtendedJetFunction(value)
    return ExtendedJetFunction(ctx.fn(value), base=base)


def _rational_cube_root(q: Fraction):
    def int_root(n: int):
        if n < 0:
            r = int_root(-n)
            return None if r is None else -r
        r = round(n ** (1 / 3)) if n < 2 ** 50 else None
        if r is None:
            lo, hi = 0, 1 << ((n.bit_length() + 2) // 3 + 1)
            while lo <= hi:
                mid = (lo + hi) // 2
                c = mid ** 3
                if c == n:
                    return mid
                if c < n:
                    lo = mid + 1
                else:
                    hi = mid - 1
            return None
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** 3 == n:
                return cand
        return None

    a, b = int_root(q.numerator), int_root(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


# -- expression parser ---------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    """Tokens: names from the context, integer literals, + - * / ^ ( )."""

    def __init__(self, text: str, ctx: JetContext):
        self.text = text
        self.ctx = ctx
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> JetFunction:
        value = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return value

    def _expr(self):
        value = self._term()
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                value = value + self._term()
            elif ch == "-":
                self.pos += 1
                value = value - self._term()
            else:
                return value

    def _term(self):
        value = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                value = value * self._factor()
            elif ch == "/":
                self.pos += 1
                divisor = self._factor()
                if divisor.is_zero():
                    raise ParseError("division by zero", self.pos)
                value = value / divisor
            else:
                return value

    def _factor(self):
        base = self._base()
        while self._peek() == "^":
            self.pos += 1
            exponent = self._integer()
            base = base ** exponent
        return base

    def _base(self):
        ch = self._peek()
        if ch == "-":
            self.pos += 1
            return -self._factor()
        if ch == "+":
            self.pos += 1
            return self._factor()
        if ch == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch.isdigit():
            return self.ctx.fn(self._integer())
        if ch.isalpha():
            return self.ctx.fn(self._name())
        raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end", self.pos)

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        if self._peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise ParseError("expected integer", start)
        return int(self.text[start : self.pos])

    def _name(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        name = self.text[start : self.pos]
        if name not in self.ctx.index:
            raise ParseError(f"unknown variable {name!r}", start)
        return name


def parse_jet_expression(text: str, ctx: JetContext) -> JetFunction:
    return _Parser(text, ctx).parse()

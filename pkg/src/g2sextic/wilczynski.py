"""Wilczynski invariants: classical, on curves, and generalized.

The classical pipeline works in two abstract differential polynomial
rings.  Conjugation by exp(-int p1) produces the semi-invariants P_i; the
formal change of independent variable is done in a ring carrying
v = sqrt(xi'), eta = xi''/xi' and the P_i, whose derivation implements the
substitutions  xi'' = xi' eta  and  eta' = (1/2) eta^2 + 6/(n+1) P2.  The
invariants Theta_r are assembled from the canonical-form coefficients by

    Theta_r = 1/2 sum_s (-1)^s (r-2)! r! (2r-s-2)!
              / ((r-s-1)! (r-s)! (2r-3)! s!) q_(r-s)^(s)

and every eta must cancel - a residual eta is a hard failure.

Generalized invariants of y^(n) = F substitute
-binom(n,r)^(-1) D_x^k(dF/dy^(n-r)) for p_r^(k), with D_x the on-equation
total derivative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .diffpoly import (
    DiffAlgebraError,
    ExtendedJetFunction,
    JetContext,
    JetFunction,
    Poly,
    PoleError,
    free_total_derivative_map,
    on_equation_derivative_map,
    total_derivative,
)


class EtaResidueError(DiffAlgebraError):
    """The eta-cancellation postcondition failed (implementation fault)."""


class DegenerateCurveError(DiffAlgebraError):
    """The curve is a line/conic where the construction degenerates."""


class CurvatureUndefinedError(DiffAlgebraError):
    """Theta_3 vanishes identically, so kappa is undefined."""


DEGENERATE_GAMMAS = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(1, 2),
)

# x-only coefficient functions (linear ODEs, curves given as graphs)
X_CTX = JetContext.plain(("x",))


def x_fn(value) -> JetFunction:
    return X_CTX.fn(value)


def x_derivative(f: JetFunction) -> JetFunction:
    return f.partial("x")


# -- abstract differential polynomial rings -----------------------------------


def _poly_derive(p: Poly, dmap: dict) -> Poly:
    total = p.ctx.const(0)
    for v in p.variables():
        img = dmap.get(p.ctx.names[v])
        if img is None:
            raise EtaResidueError(
                f"derivative of {p.ctx.names[v]} exceeds the declared order budget"
            )
        if img is False:
            continue  # constants of the ring
        dp = p.diff(p.ctx.names[v])
        if not dp.is_zero():
            total = total + dp * img
    return total


@lru_cache(maxsize=None)
def _p_ring(n: int):
    """Ring of p_i and their formal x-derivatives, i = 1..n."""
    depth = n + 3
    names = [f"p{i}_{k}" for i in range(1, n + 1) for k in range(depth + 1)]
    ctx = JetContext.plain(tuple(names))
    dmap = {}
    for i in range(1, n + 1):
        for k in range(depth):
            dmap[f"p{i}_{k}"] = ctx.var(f"p{i}_{k + 1}")
        dmap[f"p{i}_{depth}"] = None
    return ctx, dmap


@lru_cache(maxsize=None)
def _w_ring(n: int):
    """Ring carrying v = sqrt(xi'), eta, and the semi-invariants P_i."""
    depth = n + 3
    names = ["v", "eta"] + [
        f"P{i}_{k}" for i in range(2, n + 1) for k in range(depth + 1)
    ]
    ctx = JetContext.plain(tuple(names))
    v, eta = ctx.var("v"), ctx.var("eta")
    dmap = {
        "v": (v * eta).scale(Fraction(1, 2)),
        "eta": (eta * eta).scale(Fraction(1, 2)) + ctx.var("P2_0").scale(Fraction(6, n + 1)),
    }
    for i in range(2, n + 1):
        for k in range(depth):
            dmap[f"P{i}_{k}"] = ctx.var(f"P{i}_{k + 1}")
        dmap[f"P{i}_{depth}"] = None
    return ctx, dmap


class DiffOp:
    """sum_j M_(c_j) G^j with the composition rule G M_f = M_f G + M_(t d(f))."""

    __slots__ = ("ctx", "dmap", "twist", "coeffs")

    def __init__(self, ctx, dmap, twist, coeffs):
        self.ctx = ctx
        self.dmap = dmap
        self.twist = twist  # Poly or None for the plain derivation
        self.coeffs = list(coeffs)
        while self.coeffs and self.coeffs[-1].is_zero():
            self.coeffs.pop()

    def _delta(self, p: Poly) -> Poly:
        d = _poly_derive(p, self.dmap)
        return d if self.twist is None else d * self.twist

    def _g_compose(self, coeffs):
        """Coefficients of G o (sum M_b G^j)."""
        out = [self.ctx.const(0)] * (len(coeffs) + 1)
        for j, b in enumerate(coeffs):
            out[j + 1] = out[j + 1] + b
            db = self._delta(b)
            if not db.is_zero():
                out[j] = out[j] + db
        return out

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        zero = self.ctx.const(0)
        out = [
            (self.coeffs[j] if j < len(self.coeffs) else zero)
            + (other.coeffs[j] if j < len(other.coeffs) else zero)
            for j in range(size)
        ]
        return DiffOp(self.ctx, self.dmap, self.twist, out)

    def left_multiply(self, poly: Poly) -> "DiffOp":
        return DiffOp(
            self.ctx, self.dmap, self.twist, [poly * c for c in self.coeffs]
        )

    def __mul__(self, other: "DiffOp") -> "DiffOp":
        zero = self.ctx.const(0)
        total = DiffOp(self.ctx, self.dmap, self.twist, [])
        cur = list(other.coeffs)
        for i, a in enumerate(self.coeffs):
            if i > 0:
                cur = self._g_compose(cur)
            if not a.is_zero():
                total = total + DiffOp(
                    self.ctx, self.dmap, self.twist, [a * c for c in cur]
                )
        return total

    def __pow__(self, n: int) -> "DiffOp":
        out = DiffOp(self.ctx, self.dmap, self.twist, [self.ctx.const(1)])
        for _ in range(n):
            out = out * self
        return out

    def coefficient(self, j: int) -> Poly:
        return self.coeffs[j] if j < len(self.coeffs) else self.ctx.const(0)


# -- semi-invariants ------------------------------------------------------------


@lru_cache(maxsize=None)
def semi_invariants(n: int) -> dict:
    """P_2..P_n as differential polynomials in the p_i.

    Conjugating the operator by lambda with lambda'/lambda = -p1 replaces
    D by D - p1; the Y^(n-1) coefficient of the result vanishes
    identically (asserted).
    """
    ctx, dmap = _p_ring(n)
    one = ctx.const(1)
    ell = -ctx.var("p1_0")
    base = DiffOp(ctx, dmap, None, [ell, one])  # D + ell
    op = base ** n
    for i in range(1, n + 1):
        term = (base ** (n - i)).left_multiply(
            ctx.var(f"p{i}_0").scale(comb(n, i))
        )
        op = op + term
    if not op.coefficient(n - 1).is_zero():
        raise EtaResidueError("semi-canonical reduction left a Y^(n-1) term")
    assert op.coefficient(n) == one
    return {
        i: op.coefficient(n - i).scale(Fraction(1, comb(n, i)))
        for i in range(2, n + 1)
    }


def wil_coefficient(r: int, s: int) -> Fraction:
    num = factorial(r - 2) * factorial(r) * factorial(2 * r - s - 2)
    den = (
        factorial(r - s - 1)
        * factorial(r - s)
        * factorial(2 * r - 3)
        * factorial(s)
    )
    return Fraction((-1) ** s * num, 2 * den)


def _poly_subs(poly: Poly, mapping: dict, target_ctx: JetContext) -> Poly:
    """Image of poly under name -> Poly substitution (complete on used vars)."""
    total = target_ctx.const(0)
    powers: dict = {}
    for exps, coef in poly.terms.items():
        term = target_ctx.const(coef)
        for v, k in enumerate(exps):
            if not k:
                continue
            name = poly.ctx.names[v]
            key = (name, k)
            if key not in powers:
                powers[key] = mapping[name] ** k
            term = term * powers[key]
        total = total + term
    return total


def _orders_needed(polys) -> dict:
    """Max derivative order used per p-index across the given polynomials."""
    needed: dict = {}
    for poly in polys:
        ctx = poly.ctx
        for exps in poly.terms:
            for v, k in enumerate(exps):
                if not k:
                    continue
                name = ctx.names[v]
                idx, order = name[1:].split("_")
                cur = needed.get(int(idx), -1)
                needed[int(idx)] = max(cur, int(order))
    return needed


@lru_cache(maxsize=None)
def classical_theta(n: int) -> dict:
    """Theta_3..Theta_n for order n, in both P- and p-variables.

    Returns {r: {"P": Poly, "p": Poly}}; raises EtaResidueError if any
    eta monomial survives the assembly.
    """
    if n < 3:
        raise ValueError("need order n >= 3")
    ctx, dmap = _w_ring(n)
    zero = ctx.const(0)
    v = ctx.var("v")
    v2 = v * v
    vm2 = Poly(ctx, {tuple(-2 if i == ctx.index["v"] else 0 for i in range(ctx.nvars)): Fraction(1)})
    dx_op = DiffOp(ctx, dmap, vm2, [zero, v2])  # D_x = M_(v^2) E
    op = dx_op ** n
    for i in range(2, n + 1):
        term = (dx_op ** (n - i)).left_multiply(
            ctx.var(f"P{i}_0").scale(comb(n, i))
        )
        op = op + term
    # compose with multiplication by v^(1-n):  Y = (xi')^(-(n-1)/2) W
    m = Poly(
        ctx,
        {tuple((1 - n) if i == ctx.index["v"] else 0 for i in range(ctx.nvars)): Fraction(1)},
    )
    op = op * DiffOp(ctx, dmap, vm2, [m])
    lead = op.coefficient(n)
    expected_lead = Poly(
        ctx,
        {tuple(n + 1 if i == ctx.index["v"] else 0 for i in range(ctx.nvars)): Fraction(1)},
    )
    if lead != expected_lead:
        raise EtaResidueError("unexpected leading coefficient in canonical form")
    inv_lead = Poly(
        ctx,
        {tuple(-(n + 1) if i == ctx.index["v"] else 0 for i in range(ctx.nvars)): Fraction(1)},
    )
    coeffs = [op.coefficient(j) * inv_lead for j in range(n + 1)]
    if not coeffs[n - 1].is_zero():
        raise EtaResidueError("q_1 failed to vanish")
    q = {i: coeffs[n - i].scale(Fraction(1, comb(n, i))) for i in range(2, n + 1)}

    def e_derive(g: Poly) -> Poly:
        return _poly_derive(g, dmap) * vm2

    v_idx, eta_idx = ctx.index["v"], ctx.index["eta"]
    theta_P = {}
    for r in range(3, n + 1):
        theta = ctx.const(0)
        for s in range(0, r - 2):
            g = q[r - s]
            for _ in range(s):
                g = e_derive(g)
            theta = theta + g.scale(wil_coefficient(r, s))
        stripped = {}
        for exps, coef in theta.terms.items():
            if exps[eta_idx]:
                raise EtaResidueError(
                    f"Theta_{r} kept an eta monomial for order n = {n}"
                )
            if exps[v_idx] != -2 * r:
                raise EtaResidueError(
                    f"Theta_{r} is not homogeneous of weight {r} in xi'"
                )
            bare = list(exps)
            bare[v_idx] = 0
            stripped[tuple(bare)] = coef
        theta_P[r] = Poly(ctx, stripped)

    # P{i}_{k} -> k-th derivative of P_i(p), built only to the used orders
    p_ctx, p_dmap = _p_ring(n)
    semis = semi_invariants(n)
    needed = _orders_needed(theta_P.values())
    subs_map = {}
    for i, top in needed.items():
        cur = semis[i]
        for k in range(top + 1):
            subs_map[f"P{i}_{k}"] = cur
            if k < top:
                cur = _poly_derive(cur, p_dmap)

    return {
        r: {"P": poly, "p": _poly_subs(poly, subs_map, p_ctx)}
        for r, poly in theta_P.items()
    }


# -- linear ODEs ----------------------------------------------------------------


@dataclass(frozen=True)
class LinearODE:
    """Y^(n) + C(n,1) p1 Y^(n-1) + ... + p_n Y = 0 with rational-in-x p_i."""

    order: int
    p: tuple

    def __post_init__(self):
        if len(self.p) != self.order:
            raise ValueError("need exactly n coefficient functions")


def classical_theta_of_ode(ode: LinearODE) -> dict:
    """Theta_3..Theta_n of a concrete linear ODE as functions of x."""
    n = ode.order
    thetas = classical_theta(n)
    table = {}
    for i in range(1, n + 1):
        cur = ode.p[i - 1]
        for k in range(n + 4):
            table[f"p{i}_{k}"] = cur
            cur = x_derivative(cur)
    return {r: _subs_into_jets(data["p"], table) for r, data in thetas.items()}


def _subs_into_jets(poly: Poly, table: dict):
    total = None
    for exps, coef in poly.terms.items():
        term = None
        for v, k in enumerate(exps):
            if not k:
                continue
            factor = table[poly.ctx.names[v]] ** k
            term = factor if term is None else term * factor
        piece = term * coef if term is not None else None
        if piece is None:
            piece = _const_like(table) * coef
        total = piece if total is None else total + piece
    if total is None:
        total = _const_like(table) * 0
    return total


def _const_like(table):
    any_val = next(iter(table.values()))
    if isinstance(any_val, ExtendedJetFunction):
        return ExtendedJetFunction(any_val.ctx.fn(1), base=any_val.base)
    return any_val.ctx.fn(1)


def graph_ode(f: JetFunction) -> LinearODE:
    """Third-order ODE annihilating [1, x, f(x)]: p1 = -f'''/(3 f''), p2 = p3 = 0."""
    f2 = x_derivative(x_derivative(f))
    if f2.is_zero():
        raise DegenerateCurveError("the curve is a line: f'' = 0")
    f3 = x_derivative(f2)
    p1 = -(f3 / (f2 * 3))
    zero = x_fn(0)
    return LinearODE(3, (p1, zero, zero))


def power_curve_ode(gamma: Fraction) -> LinearODE:
    """The graph ODE of y = x^gamma, handled through p1 = -(gamma-2)/(3x)."""
    gamma = Fraction(gamma)
    if gamma in (Fraction(0), Fraction(1)):
        raise DegenerateCurveError("y = x^gamma degenerates for gamma in {0, 1}")
    p1 = x_fn(2 - gamma) / (x_fn("x") * 3)
    zero = x_fn(0)
    return LinearODE(3, (p1, zero, zero))


def log_curve_ode() -> LinearODE:
    """The graph ODE of the basis [1, x, ln x].

    ln x is not rational but its derivative is, so p1 = -y'''/(3 y'') is
    computed from the derivative data rather than hard-coded.
    """
    d1 = x_fn(1) / x_fn("x")
    d2 = x_derivative(d1)
    d3 = x_derivative(d2)
    p1 = -(d3 / (d2 * 3))
    zero = x_fn(0)
    return LinearODE(3, (p1, zero, zero))


def ode_from_basis(basis) -> LinearODE:
    """Solve Y''' + 3 p1 Y'' + 3 p2 Y' + p3 Y = 0 for rational-in-x basis."""
    rows = []
    rhs = []
    for f in basis:
        d1 = x_derivative(f)
        d2 = x_derivative(d1)
        d3 = x_derivative(d2)
        rows.append([d2 * 3, d1 * 3, f])
        rhs.append(-d3)
    sol = _solve_jet_system(rows, rhs)
    return LinearODE(3, tuple(sol))


def _solve_jet_system(rows, rhs):
    n = len(rows)
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if not aug[i][col].is_zero()), None)
        if pivot is None:
            raise DegenerateCurveError("degenerate curve basis")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


# -- curve invariants in jet variables ------------------------------------------


def halphen_theta3(ctx: JetContext) -> JetFunction:
    """(9 y2^2 y5 - 45 y2 y3 y4 + 40 y3^3) / y2^3, verbatim."""
    y2, y3, y4, y5 = (ctx.fn(f"y{k}") for k in (2, 3, 4, 5))
    num = y2 * y2 * y5 * 9 - y2 * y3 * y4 * 45 + y3 ** 3 * 40
    return num / y2 ** 3


HALPHEN_VS_SEMI = Fraction(-54)  # halphen_theta3 == -54 * (P3 - 3/2 P2')


def curve_p_substitution(ctx: JetContext, polys) -> dict:
    """p-variable table for a graph y = y(x): p1 = -y3/(3 y2), p2 = p3 = 0.

    Derivatives are built only to the orders the given polynomials use, so
    the jet universe is never exceeded.
    """
    dmap = free_total_derivative_map(ctx)
    needed = _orders_needed(polys)
    p1 = -(ctx.fn("y3") / (ctx.fn("y2") * 3))
    zero = ctx.fn(0)
    table = {}
    for i, top in needed.items():
        val = p1 if i == 1 else zero
        for k in range(top + 1):
            table[f"p{i}_{k}"] = val
            if k < top and i == 1:
                val = val.derivative(dmap)
    return table


def curve_theta3(ctx: JetContext) -> JetFunction:
    """Theta_3 = P3 - (3/2) P2' on graphs; equals halphen_theta3 / (-54)."""
    theta = classical_theta(3)[3]["p"]
    return _subs_into_jets(theta, curve_p_substitution(ctx, [theta]))


def curve_p2(ctx: JetContext) -> JetFunction:
    p2 = semi_invariants(3)[2]
    return _subs_into_jets(p2, curve_p_substitution(ctx, [p2]))


def theta_double(theta_r: JetFunction, p2: JetFunction, derive, r: int = 3):
    """Theta_(2r+2) = 2r T T'' - (2r+1) (T')^2 - 3 r^2 P2 T^2."""
    t1 = derive(theta_r)
    t2 = derive(t1)
    return (
        theta_r * t2 * (2 * r)
        - t1 * t1 * (2 * r + 1)
        - p2 * theta_r * theta_r * (3 * r * r)
    )


def theta8(theta3: JetFunction, p2: JetFunction, derive) -> JetFunction:
    return theta_double(theta3, p2, derive, r=3)


def curve_theta8(ctx: JetContext) -> JetFunction:
    dmap = free_total_derivative_map(ctx)
    return theta8(curve_theta3(ctx), curve_p2(ctx), lambda f: f.derivative(dmap))


# -- projective curvature --------------------------------------------------------


def kappa_closed_form(gamma: Fraction) -> Fraction:
    gamma = Fraction(gamma)
    num = 3 ** 9 * (1 + gamma * gamma - gamma) ** 3
    den = (gamma - 2) ** 2 * (2 * gamma - 1) ** 2 * (gamma + 1) ** 2
    return num / den


def curvature_kappa_of_ode(ode: LinearODE) -> Fraction:
    """kappa = Theta_8^3 / Theta_3^8 for a third-order linear ODE."""
    if ode.order != 3:
        raise ValueError("curvature needs the third-order curve ODE")
    thetas = classical_theta_of_ode(ode)
    theta3 = thetas[3]
    if theta3.is_zero():
        raise CurvatureUndefinedError("Theta_3 vanishes: conic or degenerate curve")
    semis = semi_invariants(3)
    table = {}
    for i in (1, 2, 3):
        cur = ode.p[i - 1]
        for k in range(7):
            table[f"p{i}_{k}"] = cur
            cur = x_derivative(cur)
    p2_semi = _subs_into_jets(semis[2], table)
    t8 = theta8(theta3, p2_semi, x_derivative)
    kappa = t8 ** 3 / theta3 ** 8
    if not kappa.partial("x").is_zero():
        raise DiffAlgebraError("curvature came out x-dependent")
    return _constant_value(kappa)


def _constant_value(f: JetFunction) -> Fraction:
    num, den = f.normalize_pair()
    return num.constant_value() / den.constant_value()


def curvature_kappa(gamma: Fraction) -> Fraction:
    """Exact kappa of y = x^gamma; must match the closed form."""
    gamma = Fraction(gamma)
    if gamma in DEGENERATE_GAMMAS:
        raise CurvatureUndefinedError(
            f"gamma = {gamma} excluded (gamma != 0, 1, -1, 2, 1/2)"
        )
    return curvature_kappa_of_ode(power_curve_ode(gamma))


def curvature_kappa_log_curve() -> Fraction:
    return curvature_kappa_of_ode(log_curve_ode())


# -- the 7th-order curvature ODE --------------------------------------------------


@dataclass(frozen=True)
class NonlinearODE:
    """y^(n) = F(x, y, y1, .., y_(n-1)), F free of y_n."""

    order: int
    rhs: ExtendedJetFunction

    def __post_init__(self):
        top = self.rhs.ctx.jet_name(self.order)
        if top in self.rhs.ctx.index and not self.rhs.partial(top).is_zero():
            raise ValueError(f"right-hand side must not contain {top}")

    @property
    def ctx(self) -> JetContext:
        return self.rhs.ctx


def linear_as_nonlinear(ode: LinearODE, ctx: JetContext) -> NonlinearODE:
    """View the linear equation as y^(n) = F with linear F."""
    n = ode.order
    embed = _embed_x_function
    total = ctx.fn(0)
    for i in range(1, n + 1):
        total = total + embed(ode.p[i - 1], ctx) * ctx.fn(ctx.jet_name(n - i)) * comb(n, i)
    return NonlinearODE(n, ExtendedJetFunction(-total))


def _embed_x_function(f: JetFunction, ctx: JetContext) -> JetFunction:
    mapping = {"x": ctx.var("x")}
    num = _poly_subs(f.num, mapping, ctx)
    factors = {}
    for poly, e in f.factors.items():
        factors[_poly_subs(poly, mapping, ctx)] = e
    return JetFunction(ctx, num, factors)


def curvature_context(symbolic: bool) -> JetContext:
    return JetContext(7, extra=("kappa",) if symbolic else ())


def curvature_ode(kappa=None) -> NonlinearODE:
    """Resolve Theta_8^3 = kappa Theta_3^8 for y^(7).

    Theta_8 = A y7 + B is linear in y7; the equation becomes u = A y7 + B
    for the cube-root generator u with u^3 = kappa Theta_3^8, so
    F = (u - B)/A.  kappa None means the symbolic constant.
    """
    symbolic = kappa is None
    if not symbolic and not Fraction(kappa):
        raise ValueError("kappa must be nonzero")
    ctx = curvature_context(symbolic)
    theta3 = curve_theta3(ctx)
    p2 = curve_p2(ctx)
    t8 = curve_theta8(ctx)
    a_coef = t8.partial("y7")
    if a_coef.is_zero():
        raise DiffAlgebraError("Theta_8 lost its y7 term")
    b_part = t8 - a_coef * ctx.fn("y7")
    if not b_part.partial("y7").is_zero():
        raise DiffAlgebraError("Theta_8 is not linear in y7")
    kappa_fn = ctx.fn("kappa") if symbolic else ctx.fn(Fraction(kappa))
    base = kappa_fn * theta3.as_factored() ** 8
    u = ExtendedJetFunction(ctx.fn(0), ctx.fn(1), ctx.fn(0), base)
    rhs = (u - b_part) / a_coef
    return NonlinearODE(7, rhs)


# -- generalized invariants --------------------------------------------------------


def generalized_theta(ode: NonlinearODE) -> dict:
    """Theta_3..Theta_n of the nonlinear equation via the substitution
    p_r^(k) -> -binom(n,r)^(-1) D_x^k(dF/dy^(n-r))."""
    n = ode.order
    ctx = ode.ctx
    thetas = classical_theta(n)
    dmap = on_equation_derivative_map(ctx, n, ode.rhs)
    needed = _orders_needed([data["p"] for data in thetas.values()])
    table = {}
    for i, top in needed.items():
        target = ctx.jet_name(n - i)
        val = ode.rhs.partial(target) * Fraction(-1, comb(n, i))
        for k in range(top + 1):
            table[f"p{i}_{k}"] = val
            if k < top:
                val = val.derivative(dmap)
    return {
        r: _subs_into_jets(data["p"], table) for r, data in sorted(thetas.items())
    }


def wunschmann_relations(theta3, theta4, ode: NonlinearODE):
    """W1 = -3430 T3;  W2 = -240100 (T4 + 2/5 D T3 - 12/35 dF/dy6 T3)."""
    if ode.order != 7:
        raise ValueError("the printed relations are for order 7")
    ctx = ode.ctx
    dmap = on_equation_derivative_map(ctx, 7, ode.rhs)
    w1 = theta3 * (-3430)
    d_theta3 = (
        theta3.derivative(dmap)
        if isinstance(theta3, (JetFunction, ExtendedJetFunction))
        else theta3
    )
    w2 = (
        theta4
        + d_theta3 * Fraction(2, 5)
        - ode.rhs.partial("y6") * theta3 * Fraction(12, 35)
    ) * (-240100)
    return w1, w2


# -- rational jets along parametrized curves -----------------------------------------


def jets_along_curve(xparam: JetFunction, yparam: JetFunction, k: int, t0: Fraction) -> dict:
    """Exact jets y1..y_k of the curve (x(t), y(t)) at t = t0.

    y1 = y'/x', then y_(j+1) = (d y_j / dt) / x'.  Rejects x'(t0) = 0.
    """
    t0 = Fraction(t0)
    dx = xparam.partial("t")
    point = {"t": t0}
    try:
        dx_val = dx.evaluate(point)
    except PoleError:
        raise PoleError("x'(t) has a pole at the sample point")
    if not dx_val:
        raise DegenerateCurveError("x'(t0) = 0: not a graph over x near the point")
    jets = {"x": xparam.evaluate(point), "y": yparam.evaluate(point)}
    cur = yparam
    for j in range(1, k + 1):
        cur = cur.partial("t") / dx
        jets[f"y{j}"] = cur.evaluate(point)
    return jets

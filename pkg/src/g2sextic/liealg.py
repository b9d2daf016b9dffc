"""3x3 matrix Lie algebra computations for the su(2,1) frame.

Provides the explicit basis e_1..e_8 (e_8 spanning the U(1) stabiliser
direction), exact commutators, structure-constant extraction by linear
solve over Q(i, sqrt2, sqrt5), and the expansion of the Maurer-Cartan
entries sigma^a_b in the dual coframe theta^1..theta^8.
"""

from __future__ import annotations

from fractions import Fraction

from .exterior import StructureConstants
from .scalar import I, ONE, SQRT2, SQRT10, ZERO, AlgebraicScalar, parse_algebraic


class ClosureError(ArithmeticError):
    """A commutator fell outside the span of the basis."""


class Matrix3:
    """Immutable 3x3 matrix over AlgebraicScalar."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        r = tuple(tuple(AlgebraicScalar.coerce(x) for x in row) for row in rows)
        if len(r) != 3 or any(len(row) != 3 for row in r):
            raise ValueError("Matrix3 needs 3x3 entries")
        object.__setattr__(self, "rows", r)

    def __setattr__(self, *args):
        raise AttributeError("Matrix3 is immutable")

    def __getitem__(self, ab):
        a, b = ab
        return self.rows[a][b]

    def __add__(self, other):
        return Matrix3(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
        )

    def __sub__(self, other):
        return Matrix3(
            tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
        )

    def __neg__(self):
        return Matrix3(tuple(-x for x in r) for r in self.rows)

    def __mul__(self, other):
        if isinstance(other, Matrix3):
            return Matrix3(
                tuple(
                    sum(
                        (self.rows[a][c] * other.rows[c][b] for c in range(3)),
                        ZERO,
                    )
                    for b in range(3)
                )
                for a in range(3)
            )
        c = AlgebraicScalar.coerce(other)
        return Matrix3(tuple(x * c for x in r) for r in self.rows)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Matrix3) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def trace(self) -> AlgebraicScalar:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def conj_transpose(self) -> "Matrix3":
        return Matrix3(
            tuple(self.rows[b][a].conj() for b in range(3)) for a in range(3)
        )

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + "]"


ZERO_MATRIX = Matrix3([[0, 0, 0]] * 3)


def matrix_from_text(rows) -> Matrix3:
    """Loader for user-supplied bases; entries in the scalar text grammar."""
    return Matrix3(tuple(tuple(parse_algebraic(x) for x in row) for row in rows))


def commutator(x: Matrix3, y: Matrix3) -> Matrix3:
    return x * y - y * x


def diag(a, b, c) -> Matrix3:
    return Matrix3([[a, 0, 0], [0, b, 0], [0, 0, c]])


def su21_basis() -> list[Matrix3]:
    """The eight frame matrices; e_8 = diag(i, 4i, -5i) spans the stabiliser.

    The square-root multiples make the dual one-forms orthonormal in the
    realized metric (enforced by tests, not assumed).
    """
    h = Fraction(1, 2)
    e1 = Matrix3([[0, 0, 0], [0, 0, 1], [0, 1, 0]]) * (SQRT2 * h)
    e5 = Matrix3([[0, 0, 0], [0, 0, I], [0, -I, 0]]) * (SQRT2 * h)
    e2 = Matrix3([[0, 0, 1], [0, 0, 0], [1, 0, 0]]) * SQRT2
    e6 = Matrix3([[0, 0, -I], [0, 0, 0], [I, 0, 0]]) * SQRT2
    e3 = Matrix3([[0, -1, 0], [1, 0, 0], [0, 0, 0]]) * (SQRT10 * h)
    e7 = Matrix3([[0, I, 0], [I, 0, 0], [0, 0, 0]]) * (SQRT10 * h)
    e4 = diag(-(I * 3), I * 2, I) * (SQRT10 * Fraction(1, 7))
    e8 = diag(I, I * 4, -(I * 5))
    return [e1, e2, e3, e4, e5, e6, e7, e8]


def _solve_field(rows, rhs):
    """Exact Gaussian elimination over Q(i,sqrt2,sqrt5) for Ax = b.

    rows: list of lists of AlgebraicScalar (m x n), rhs length m.
    Returns the unique solution; raises ClosureError when inconsistent or
    underdetermined.
    """
    m, n = len(rows), len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][col].inv()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    if len(pivots) < n:
        raise ClosureError("linear system is underdetermined")
    for i in range(r, m):
        if aug[i][n]:
            raise ClosureError("commutator outside the span of the basis")
    solution = [ZERO] * n
    for row_idx, col in enumerate(pivots):
        solution[col] = aug[row_idx][n]
    return solution


def expand_in_basis(x: Matrix3, basis) -> list[AlgebraicScalar]:
    """Coefficients of x in the given matrix basis (exact linear solve)."""
    rows = [[e.rows[a][b] for e in basis] for a in range(3) for b in range(3)]
    rhs = [x.rows[a][b] for a in range(3) for b in range(3)]
    return _solve_field(rows, rhs)


def extract_structure_constants(basis) -> StructureConstants:
    """c_{jk}^l from [e_j, e_k] = sum_l c_{jk}^l e_l."""
    entries = {}
    n = len(basis)
    for j in range(n):
        for k in range(j + 1, n):
            coeffs = expand_in_basis(commutator(basis[j], basis[k]), basis)
            for l, c in enumerate(coeffs):
                if c:
                    entries[(j + 1, k + 1, l + 1)] = c
    return StructureConstants(entries)


def sigma_in_theta(basis) -> dict:
    """Expand sigma = sum_k e_k theta^k entrywise.

    Returns {(a, b): 8-tuple of coefficients}, 1-based entries, so that
    sigma^a_b = sum_k coeff[k] * theta^{k+1}.
    """
    return {
        (a + 1, b + 1): tuple(e.rows[a][b] for e in basis)
        for a in range(3)
        for b in range(3)
    }


def derive_invariance_form(basis) -> Matrix3:
    """Solve X^dagger eta + eta X = 0 (all X in basis) for Hermitian eta.

    The kernel is expected to be one-dimensional; the result is scaled so
    that eta[0][0] = 1 and is reported rather than hard-coded.
    """
    # Hermitian eta parametrized by 9 real unknowns:
    #   diag h11, h22, h33; off-diag h12 = u1 + i u2, h13 = u3 + i u4,
    #   h23 = u5 + i u6.
    def eta_from(params):
        h11, h22, h33, u1, u2, u3, u4, u5, u6 = params
        h12 = u1 + I * u2
        h13 = u3 + I * u4
        h23 = u5 + I * u6
        return Matrix3(
            [
                [h11, h12, h13],
                [h12.conj(), h22, h23],
                [h13.conj(), h23.conj(), h33],
            ]
        )

    unit_etas = []
    for p in range(9):
        params = [AlgebraicScalar.rational(0)] * 9
        params[p] = ONE
        unit_etas.append(eta_from(params))

    # Rational homogeneous system: rows indexed by (basis element, entry,
    # field coordinate), columns by the 9 parameters.
    rows = []
    for x in basis:
        xd = x.conj_transpose()
        residuals = [xd * eta + eta * x for eta in unit_etas]
        for a in range(3):
            for b in range(3):
                for coord in range(8):
                    row = [r.rows[a][b].coords[coord] for r in residuals]
                    if any(row):
                        rows.append(row)

    # Rational kernel via Gauss-Jordan.
    m, n = len(rows), 9
    mat = [row[:] for row in rows]
    pivots = {}
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Fraction(1) / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(m):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots[col] = r
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ClosureError(f"invariance form kernel has dimension {len(free)}")
    params = [Fraction(0)] * n
    params[free[0]] = Fraction(1)
    for col, row_idx in pivots.items():
        params[col] = -mat[row_idx][free[0]]
    eta = eta_from([AlgebraicScalar.rational(q) for q in params])
    lead = eta.rows[0][0]
    if not lead:
        raise ClosureError("cannot normalize eta by its (1,1) entry")
    return eta * lead.inv()


def is_in_unitary_algebra(x: Matrix3, eta: Matrix3) -> bool:
    """Membership test: tr x = 0 and x^dagger eta + eta x = 0."""
    return (not x.trace()) and (x.conj_transpose() * eta + eta * x).is_zero()

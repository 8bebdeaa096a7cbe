"""Shuffle coordinates and the unfolding identities.

Everything here lives on GL(2n).  The card-shuffle permutation sigma
interleaves the first 2n-1 basis vectors; conjugating the relevant unipotent
by it produces a structured (2n-1) x (2n-1) block built from triangular
coordinate arrays c_{i,j} and z_{i,j}.  A sequence of affine determinant
conditions then shifts those entries ("tilde" values), yielding a matrix
whose triangular decomposition has monomial structure in the product
coordinates x_{i,j}.  This module constructs all of it and provides both
sides of every identity it relies on, so each formula can be checked against
an independent elimination path.

Index conventions (all 1-based, n = n_half):
  c_{i,j}, z_{i,j}        1 <= j <= i <= n-1, plus the structural c_{n,n} = 1
  y_{i,j}, x_{i,j}        1 <= i <= n-1, 2i <= j <= 2n-1
  y_{i,2r} = c_{r,i},  y_{i,2r+1} = z_{r,i},  y_{i,j} = prod_{j' >= j} x_{i,j'}
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .matrices import Matrix, _is_zero
from .polynomials import PolyRing, Polynomial
from .rational import format_rational, parse_rational
from .ratfunc import RatFunc
from .specialfn import as_parity, g_delta


# -- the card-shuffle permutation -------------------------------------------


@dataclass(frozen=True)
class ShuffleSigma:
    n_half: int
    permutation: tuple  # image of index k is permutation[k-1], 1-based values
    matrix: Matrix

    def det(self) -> int:
        return _perm_sign(self.permutation)


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sigma(n_half: int) -> ShuffleSigma:
    """Interleaving permutation k -> 2k-1 (mod 2n-1) for k < 2n, fixing 2n.

    Its determinant is +1 exactly when n_half = 0 or 1 (mod 4).
    """
    if n_half < 1:
        raise ValueError("n_half must be >= 1")
    two_n = 2 * n_half
    perm = []
    for k in range(1, two_n):
        perm.append((2 * k - 2) % (two_n - 1) + 1)
    perm.append(two_n)
    mat = [[0] * two_n for _ in range(two_n)]
    for j in range(1, two_n + 1):
        mat[perm[j - 1] - 1][j - 1] = 1
    return ShuffleSigma(n_half, tuple(perm), Matrix(mat))


# -- coordinate arrays -------------------------------------------------------


def _cz_index_set(n: int):
    return [(i, j) for i in range(1, n) for j in range(1, i + 1)]


def _x_index_set(n: int):
    return [(i, j) for i in range(1, n) for j in range(2 * i, 2 * n)]


class UnfoldVars:
    """Triangular coordinate data in both the c/z and the x presentation.

    Values may be exact rationals, complex numbers, or rational functions;
    both presentations are populated at construction (they determine each
    other when everything needed is nonzero).
    """

    def __init__(self, n_half: int, c: dict, z: dict, x: dict):
        self.n_half = n_half
        self._c = dict(c)
        self._z = dict(z)
        self._x = dict(x)
        need = set(_cz_index_set(n_half))
        if set(self._c) != need or set(self._z) != need:
            raise ValueError("c/z arrays must cover exactly 1 <= j <= i <= n-1")
        if set(self._x) != set(_x_index_set(n_half)):
            raise ValueError("x array must cover exactly 2i <= j <= 2n-1")

    def c(self, i: int, j: int):
        return self._c[(i, j)]

    def z(self, i: int, j: int):
        return self._z[(i, j)]

    def x(self, i: int, j: int):
        return self._x[(i, j)]

    def y(self, i: int, j: int):
        """prod_{j' >= j} x_{i,j'}; equals the c/z value at that slot."""
        r, rem = divmod(j, 2)
        if rem == 0:
            return self._c[(r, i)]
        return self._z[(r, i)]

    @property
    def cz_items(self):
        return sorted(self._c), sorted(self._z)

    # -- constructors --------------------------------------------------

    @classmethod
    def from_cz(cls, n_half: int, c: dict, z: dict) -> "UnfoldVars":
        x = {}
        for i in range(1, n_half):
            prev = None
            for j in range(2 * n_half - 1, 2 * i - 1, -1):
                r, rem = divmod(j, 2)
                val = c[(r, i)] if rem == 0 else z[(r, i)]
                if prev is None:
                    x[(i, j)] = val
                else:
                    x[(i, j)] = _div(val, prev)
                prev = val
        return cls(n_half, c, z, x)

    @classmethod
    def from_x(cls, n_half: int, x: dict) -> "UnfoldVars":
        c = {}
        z = {}
        for i in range(1, n_half):
            acc = None
            for j in range(2 * n_half - 1, 2 * i - 1, -1):
                acc = x[(i, j)] if acc is None else x[(i, j)] * acc
                r, rem = divmod(j, 2)
                if rem == 0:
                    c[(r, i)] = acc
                else:
                    z[(r, i)] = acc
        return cls(n_half, c, z, x)

    @classmethod
    def symbolic(cls, n_half: int) -> "UnfoldVars":
        """Independent c/z indeterminates; x becomes their monomial ratios."""
        names = sorted(
            [f"c{i}{j}" for i, j in _cz_index_set(n_half)]
            + [f"z{i}{j}" for i, j in _cz_index_set(n_half)]
        )
        ring = PolyRing(names)
        c = {
            (i, j): RatFunc.from_poly(ring.var(f"c{i}{j}"))
            for i, j in _cz_index_set(n_half)
        }
        z = {
            (i, j): RatFunc.from_poly(ring.var(f"z{i}{j}"))
            for i, j in _cz_index_set(n_half)
        }
        return cls.from_cz(n_half, c, z)

    @classmethod
    def symbolic_x(cls, n_half: int) -> "UnfoldVars":
        """Independent x indeterminates; c/z become monomials."""
        names = sorted(f"x{i}_{j}" for i, j in _x_index_set(n_half))
        ring = PolyRing(names)
        x = {
            (i, j): RatFunc.from_poly(ring.var(f"x{i}_{j}"))
            for i, j in _x_index_set(n_half)
        }
        return cls.from_x(n_half, x)

    # -- JSON -----------------------------------------------------------

    @classmethod
    def from_json(cls, obj) -> "UnfoldVars":
        n = obj["n"]
        if "x" in obj:
            x = {_parse_key(k): parse_rational(v) for k, v in obj["x"].items()}
            return cls.from_x(n, x)
        c = {_parse_key(k): parse_rational(v) for k, v in obj["c"].items()}
        z = {_parse_key(k): parse_rational(v) for k, v in obj["z"].items()}
        return cls.from_cz(n, c, z)

    def to_json(self) -> dict:
        return {
            "n": self.n_half,
            "c": {f"{i},{j}": _fmt(v) for (i, j), v in sorted(self._c.items())},
            "z": {f"{i},{j}": _fmt(v) for (i, j), v in sorted(self._z.items())},
        }


def _parse_key(k: str):
    i, j = k.split(",")
    return int(i), int(j)


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _div(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        if b == 0:
            raise ZeroDivisionError("zero value where a nonzero one is required")
        return Fraction(a) / Fraction(b)
    return a / b


# -- the interleaved block ---------------------------------------------------


def build_block_A(vars: UnfoldVars) -> Matrix:
    """The (2n-1) x (2n-1) block of the shuffled unipotent.

    Odd row 2i-1 carries c_{i,j} on the left (columns j <= i), the row sum
    sum_{l <= i} c_{i,l} in the middle column n, and z_{i-1,j} at column
    2n-j on the right; even row 2i carries c_{i,j} at column 2n-j.  The last
    row has 1 in the middle column and the z_{n-1,j} row on the right.
    """
    n = vars.n_half
    if n < 2:
        raise ValueError("need n_half >= 2")
    size = 2 * n - 1
    m = [[0] * size for _ in range(size)]
    for i in range(1, n):
        row_odd = 2 * i - 1
        acc = None
        for j in range(1, i + 1):
            v = vars.c(i, j)
            m[row_odd - 1][j - 1] = v
            acc = v if acc is None else acc + v
        m[row_odd - 1][n - 1] = acc
        for j in range(1, i):
            m[row_odd - 1][2 * n - j - 1] = vars.z(i - 1, j)
        for j in range(1, i + 1):
            m[2 * i - 1][2 * n - j - 1] = vars.c(i, j)
    m[size - 1][n - 1] = 1
    for j in range(1, n):
        m[size - 1][2 * n - j - 1] = vars.z(n - 1, j)
    return Matrix(m)


# positions of the shifted entries, 1-based (row, col)


def _z_position(n: int, i: int, j: int):
    return (2 * i + 1, 2 * n - j)


def _c_position(n: int, i: int, j: int):
    return (2 * i, 2 * n - j)


def _det_block(mat: Matrix, n: int, pos):
    """Determinant of the block whose top-right corner is pos."""
    r, c = pos
    k = 2 * n - r
    rows = range(r - 1, 2 * n - 1)
    cols = range(c - k, c)
    return mat.submatrix(rows, cols).det()


def _solve_affine(mat: Matrix, n: int, pos, target):
    """Set the entry at pos so the block determinant at pos equals target."""
    r, c = pos
    k = 2 * n - r
    rows = list(range(r - 1, 2 * n - 1))
    cols = list(range(c - k, c))
    # determinant is alpha * entry + beta; alpha is the corner cofactor
    sub = mat.submatrix(rows[1:], cols[:-1])
    alpha = sub.det()
    if k % 2 == 0:
        alpha = -alpha
    old = mat.data[r - 1][c - 1]
    mat.data[r - 1][c - 1] = 0
    beta = mat.submatrix(rows, cols).det()
    if _is_zero(alpha):
        raise ZeroDivisionError(
            f"vanishing pivot determinant while shifting entry at {pos}"
        )
    new = _div(target - beta, alpha)
    mat.data[r - 1][c - 1] = new
    return old, new


def build_B(vars: UnfoldVars) -> Matrix:
    """Shift entries until the determinant conditions hold everywhere.

    Every shiftable coordinate (each z_{i,j} with i <= n-2 and each
    off-diagonal c_{i,j}) gets a new value at its right-block position p;
    with k the block size at p the condition is

        det(block at p) = (-1)^(k-1) * (original value at p)
                          * det(block at the next position down-right),

    the down-right neighbor being c_{i+1,j+1} for a z entry and z_{i,j+1}
    for a c entry.  A shifted c value also replaces the other occurrences of
    its variable: its left-block slot and its contribution to the middle
    column, which carries the row sums of shifted values.  Each condition is
    affine in its own entry and involves only entries in rows at or below
    its own plus entries already shifted in its own row to the left, so one
    bottom-up sweep (rightmost entry first within a row) settles generic
    data; we re-sweep to fixpoint anyway, then verify every condition.
    """
    n = vars.n_half
    mat = build_block_A(vars)
    if n == 2:
        return mat  # no shiftable entries
    for _ in range(n + 4):
        changed = False
        for row in range(2 * n - 2, 2, -1):
            if row % 2 == 0:
                i = row // 2
                for j in range(i - 1, 0, -1):
                    k = 2 * (n - i)
                    partner = _det_block(mat, n, _z_position(n, i, j + 1))
                    target = _sign_pow(k - 1) * vars.c(i, j) * partner
                    old, new = _solve_affine(mat, n, _c_position(n, i, j), target)
                    changed = changed or not _same(old, new)
                    mat.data[2 * i - 2][j - 1] = new
                _refresh_middle_sum(mat, vars, i)
            else:
                i = (row - 1) // 2
                if i > n - 2:
                    continue
                for j in range(i, 0, -1):
                    k = 2 * (n - i) - 1
                    partner = _det_block(mat, n, _c_position(n, i + 1, j + 1))
                    target = _sign_pow(k - 1) * vars.z(i, j) * partner
                    old, new = _solve_affine(mat, n, _z_position(n, i, j), target)
                    changed = changed or not _same(old, new)
        if not changed:
            break
    _assert_tilde_relations(mat, vars)
    return mat


def _refresh_middle_sum(mat: Matrix, vars: UnfoldVars, i: int):
    n = vars.n_half
    acc = vars.c(i, i)
    for l in range(1, i):
        acc = acc + mat.data[2 * i - 1][2 * n - l - 1]
    mat.data[2 * i - 2][n - 1] = acc


def _sign_pow(k: int) -> int:
    return -1 if k % 2 else 1


def _same(a, b) -> bool:
    r = a == b
    return bool(r) if r is not NotImplemented else False


def _assert_tilde_relations(mat: Matrix, vars: UnfoldVars):
    n = vars.n_half
    for i in range(1, n - 1):
        for j in range(1, i + 1):
            k = 2 * (n - i) - 1
            lhs = _det_block(mat, n, _z_position(n, i, j))
            rhs = _sign_pow(k - 1) * vars.z(i, j) * _det_block(
                mat, n, _c_position(n, i + 1, j + 1)
            )
            if not _same(lhs, rhs):
                raise ArithmeticError(
                    f"determinant condition failed at shifted z({i},{j})"
                )
    for i in range(2, n):
        for j in range(1, i):
            k = 2 * (n - i)
            lhs = _det_block(mat, n, _c_position(n, i, j))
            rhs = _sign_pow(k - 1) * vars.c(i, j) * _det_block(
                mat, n, _z_position(n, i, j + 1)
            )
            if not _same(lhs, rhs):
                raise ArithmeticError(
                    f"determinant condition failed at shifted c({i},{j})"
                )


def tilde_c(mat: Matrix, n: int, i: int, j: int):
    r, c = _c_position(n, i, j)
    return mat[r - 1, c - 1]


def tilde_z(mat: Matrix, n: int, i: int, j: int):
    r, c = _z_position(n, i, j)
    return mat[r - 1, c - 1]


# -- superdiagonal sum -------------------------------------------------------


def superdiag_sum(vars: UnfoldVars):
    """Sum of the superdiagonal of the unit-upper factor of the shifted block.

    Computed through the elimination decomposition; the closed form
    superdiag_closed_form must agree exactly.
    """
    from .decomp import nhn_decompose

    b = build_B(vars)
    nhn = nhn_decompose(b)
    size = b.nrows
    total = None
    for i in range(size - 1):
        e = nhn.n[i, i + 1]
        total = e if total is None else total + e
    return total


def superdiag_closed_form(vars: UnfoldVars):
    """sum c_{i,j}/z_{i,j} + sum z_{i,j}/c_{i+1,j} - sum_j z_{n-1,j}.

    In x-coordinates this is sum_{2i <= j <= 2n-2} x_{i,j}
    - sum_{i < n} x_{i,2n-1}; both readings are computed from the same data.
    """
    n = vars.n_half
    total = None
    for i in range(1, n):
        for j in range(1, i + 1):
            t = _div(vars.c(i, j), vars.z(i, j))
            total = t if total is None else total + t
    for i in range(1, n - 1):
        for j in range(1, i + 1):
            t = _div(vars.z(i, j), vars.c(i + 1, j))
            total = total + t
    for j in range(1, n):
        total = total - vars.z(n - 1, j)
    return total


def superdiag_closed_form_x(vars: UnfoldVars):
    n = vars.n_half
    total = None
    for i in range(1, n):
        for j in range(2 * i, 2 * n - 1):
            t = vars.x(i, j)
            total = t if total is None else total + t
    for i in range(1, n):
        total = total - vars.x(i, 2 * n - 1)
    return total


# -- alternating sum ---------------------------------------------------------


def altsum_check(vars: UnfoldVars):
    """Both sides of the alternating-sum identity, computed independently.

    lhs = sum_j s_j where s_j is a signed ratio of a shifted-entry
    determinant e_j to a product of diagonal c's; rhs = sum_j z_{n-1,j}.
    """
    n = vars.n_half
    mat = build_B(vars)

    def tc(i, j):
        if i == j:
            return vars.c(i, i)
        return tilde_c(mat, n, i, j)

    def tz(i, j):
        if i == n - 1:
            return vars.z(n - 1, j)
        return tilde_z(mat, n, i, j)

    lhs = None
    for j in range(1, n):
        cols = list(range(n - 1, j - 1, -1))
        rows = []
        for r in range(j + 1, n):
            rows.append([tc(r, l) if l <= r else 0 for l in cols])
        rows.append([tz(n - 1, l) for l in cols])
        e_j = Matrix(rows).det()
        ctilde_row_sum = None
        for l in range(1, j + 1):
            v = tc(j, l)
            ctilde_row_sum = v if ctilde_row_sum is None else ctilde_row_sum + v
        den = None
        for r in range(j, n):
            den = vars.c(r, r) if den is None else den * vars.c(r, r)
        sgn = _sign_pow(1 + (n - j) * (n - j + 1) // 2)
        s_j = sgn * _div(ctilde_row_sum * e_j, den)
        lhs = s_j if lhs is None else lhs + s_j
    rhs = None
    for j in range(1, n):
        v = vars.z(n - 1, j)
        rhs = v if rhs is None else rhs + v
    return lhs, rhs


# -- recursive lower factor --------------------------------------------------


def _ones_lower(k: int) -> Matrix:
    return Matrix([[1 if j <= i else 0 for j in range(k)] for i in range(k)])


def _ones_lower_neg_bottom(k: int) -> Matrix:
    m = [[1 if j <= i else 0 for j in range(k)] for i in range(k)]
    for j in range(k):
        m[k - 1][j] = -1
    return Matrix(m)


def lower_factor_recursive(n_half: int, x: dict) -> Matrix:
    """Lower factor of the shifted block, built by the size recursion.

    Starting from the 1x1 identity, each step m conjugates in four sparse
    factors: interleaved all-ones lower-triangular blocks (the last with a
    negated bottom row) and two diagonals carrying x_{., 2m} and x_{., 2m+1}.
    The result equals the lower part (diagonal times unit-lower) of the
    elimination decomposition of build_B in x-coordinates.
    """
    if n_half < 1:
        raise ValueError("n_half must be >= 1")
    for key, v in x.items():
        if _is_zero(v):
            raise ZeroDivisionError(f"x value at {key} is zero")
    b = Matrix([[1]])
    for m in range(1, n_half):
        m1 = Matrix.block_diagonal(
            _ones_lower(m), _ones_lower_neg_bottom(m), Matrix([[1]])
        )
        d2 = (
            [x[(i, 2 * m)] for i in range(1, m + 1)]
            + [x[(i, 2 * m)] for i in range(m, 0, -1)]
            + [1]
        )
        m2 = Matrix.diagonal(d2)
        m3 = Matrix.block_diagonal(_ones_lower(m), _ones_lower(m + 1))
        d4 = (
            [x[(i, 2 * m + 1)] for i in range(1, m + 1)]
            + [1]
            + [x[(i, 2 * m + 1)] for i in range(m, 0, -1)]
        )
        m4 = Matrix.diagonal(d4)
        b = Matrix.block_diagonal(b, Matrix.identity(2)) * m1 * m2 * m3 * m4
    return b


# -- Whittaker evaluation ----------------------------------------------------


def _e(z) -> complex:
    return cmath.exp(2j * math.pi * float(z))


def _real_value(v) -> float:
    if isinstance(v, complex):
        if abs(v.imag) > 1e-12 * max(1.0, abs(v.real)):
            raise ValueError("expected a real diagonal value")
        return v.real
    return float(v)


def whittaker_eval(eparams, g: Matrix) -> complex:
    """Open-cell value: e(sum of superdiagonal of the unit-upper factor)
    times prod_j |h_j|^((m+1)/2 - j - lambda_j) sgn(h_j)^(delta_j)."""
    from .decomp import nhn_decompose

    m = g.nrows
    lam = list(eparams.lam)
    delta = list(eparams.delta)
    if len(lam) != m or len(delta) != m:
        raise ValueError("parameter length must match matrix size")
    nhn = nhn_decompose(g)
    ssum = 0.0
    for i in range(m - 1):
        ssum += _real_value(nhn.n[i, i + 1])
    val = _e(ssum)
    for j in range(1, m + 1):
        h = _real_value(nhn.h[j - 1, j - 1])
        if h == 0.0:
            return 0.0j
        expo = complex((m + 1) / 2 - j) - complex(lam[j - 1])
        val *= cmath.exp(expo * math.log(abs(h)))
        if h < 0.0 and delta[j - 1] % 2:
            val = -val
    return val


def assemble_shuffled(vars: UnfoldVars) -> Matrix:
    """The 2n x 2n matrix whose Whittaker value the closed form evaluates:
    sigma * [[C, Z], [0, C]] * diag(f1, f2), with C and Z triangular blocks
    holding the shifted coordinate values, f1 the identity with an all-ones
    last column, and f2 the reversal on the first n-1 coordinates.

    The x coordinates parameterize the shifted matrix, so the blocks carry
    the tilde values; the product then equals the shifted block bordered by
    a trailing 1.
    """
    n = vars.n_half
    b = build_B(vars)
    cmat = [[0] * n for _ in range(n)]
    zmat = [[0] * n for _ in range(n)]
    for i in range(1, n):
        for j in range(1, i):
            cmat[i - 1][j - 1] = tilde_c(b, n, i, j)
        cmat[i - 1][i - 1] = vars.c(i, i)
    cmat[n - 1][n - 1] = 1
    for i in range(2, n):
        for j in range(1, i):
            zmat[i - 1][j - 1] = tilde_z(b, n, i - 1, j)
    for j in range(1, n):
        zmat[n - 1][j - 1] = vars.z(n - 1, j)
    big = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            big[i][j] = cmat[i][j]
            big[i][n + j] = zmat[i][j]
            big[n + i][n + j] = cmat[i][j]
    f1 = [[1 if (i == j or j == n - 1) else 0 for j in range(n)] for i in range(n)]
    f2 = Matrix.block_diagonal(Matrix.reversal(n - 1), Matrix([[1]]))
    right = Matrix.block_diagonal(Matrix(f1), f2)
    return sigma(n).matrix * Matrix(big) * right


def kappa2_sign(delta) -> int:
    two_n = len(delta)
    return _sign_pow(sum(delta[k - 1] for k in range(2, two_n - 1, 2)))


def shuffled_whittaker_eval(vars: UnfoldVars, eparams) -> complex:
    """Closed form for the Whittaker value of the assembled shuffle matrix:

        e(sum x_{i,j} - sum x_{i,2n-1}) * kappa2
          * prod |x_{i,j}|^(-lam_i - lam_{j+1-i} + 2n - j)
                 sgn(x_{i,j})^(delta_i + delta_{j+1-i})

    over 2i <= j <= 2n-1.  The oracle path is whittaker_eval on
    assemble_shuffled(vars).
    """
    n = vars.n_half
    lam = list(eparams.lam)
    delta = list(eparams.delta)
    if len(lam) != 2 * n:
        raise ValueError("parameter length must be 2 n_half")
    phase = 0.0
    for i in range(1, n):
        for j in range(2 * i, 2 * n - 1):
            phase += float(vars.x(i, j))
        phase -= float(vars.x(i, 2 * n - 1))
    val = _e(phase) * kappa2_sign(delta)
    for i in range(1, n):
        for j in range(2 * i, 2 * n):
            xv = _real_value(vars.x(i, j))
            expo = -complex(lam[i - 1]) - complex(lam[j - i]) + (2 * n - j)
            val *= cmath.exp(expo * math.log(abs(xv)))
            if xv < 0.0 and (delta[i - 1] + delta[j - i]) % 2:
                val = -val
    return val


def shuffled_whittaker_oracle(vars: UnfoldVars, eparams) -> complex:
    return whittaker_eval(eparams, assemble_shuffled(vars))


# -- kappa bookkeeping -------------------------------------------------------


@dataclass(frozen=True)
class KappaSigns:
    kappa1: int
    kappa1_prime: int
    kappa2: int
    kappa3: int
    kappa: int


def kappa_signs(n_half: int, delta, eps, eta) -> KappaSigns:
    """All the unfolding signs, with the product identity enforced.

    Requires the parity constraint sum(delta) = eps + n_half * eta (mod 2).
    kappa is computed from its closed form and must equal
    kappa1_prime * kappa2 * kappa3 assembled from the piecewise formulas.
    """
    n = n_half
    delta = [as_parity(d) for d in delta]
    eps = as_parity(eps)
    eta = as_parity(eta)
    if len(delta) != 2 * n:
        raise ValueError("delta must have length 2 n_half")
    if sum(delta) % 2 != (eps + n * eta) % 2:
        raise ValueError("parity constraint sum(delta) = eps + n*eta (mod 2) fails")
    if n == 1:
        # no unfolding stage exists, so every sign degenerates to +1; the
        # piecewise formulas below assume at least two stages
        return KappaSigns(1, 1, 1, 1, 1)
    k1 = _sign_pow(
        sum(delta[k - 1] for k in range(2, n)) + delta[2 * n - 1] + eps
        + eta * (n * (n + 1) // 2)
    )
    k1p = k1 * _sign_pow(eta * (n * (n - 1) // 2))
    k2 = kappa2_sign(delta)
    k3 = _sign_pow(eta + delta[n - 1] + delta[2 * n - 1] + eps)
    closed = _sign_pow(
        (n + 1) * eta
        + sum(delta[k - 1] for k in range(2, n + 1))
        + sum(delta[2 * k - 1] for k in range(1, n))
    )
    if k1p * k2 * k3 != closed:
        raise ArithmeticError("kappa sign identity failed")
    return KappaSigns(k1, k1p, k2, k3, closed)


# -- the unfolded Gamma table ------------------------------------------------


@dataclass(frozen=True)
class GammaTable:
    entries: tuple  # ((shift, parity), ...) for pairs i < j with i+j <= 2n
    sign: int

    def value(self, s) -> complex:
        out = complex(1.0)
        for shift, parity in self.entries:
            out *= g_delta(parity, s + shift)
        return out


def unfolded_gamma_table(eparams, eta) -> GammaTable:
    """One G-factor per index pair i < j with i + j <= 2n: shift
    -lam_i - lam_j and parity delta_i + delta_j + eta.  The sign field is the
    overall kappa for the parity eps forced by the constraint."""
    eta = as_parity(eta)
    lam = list(eparams.lam)
    delta = list(eparams.delta)
    two_n = len(lam)
    n = two_n // 2
    if 2 * n != two_n:
        raise ValueError("parameter length must be even")
    entries = []
    for i in range(1, two_n + 1):
        for j in range(i + 1, two_n + 1):
            if i + j > two_n:
                continue
            entries.append(
                (-lam[i - 1] - lam[j - 1], (delta[i - 1] + delta[j - 1] + eta) % 2)
            )
    eps = (sum(delta) + n * eta) % 2
    signs = kappa_signs(n, delta, eps, eta)
    return GammaTable(tuple(entries), signs.kappa)

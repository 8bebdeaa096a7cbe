"""Triangular decompositions with explicit minor formulas.

A square matrix g with nonvanishing trailing principal minors d_i factors two
ways:

* minor form      g = b_plus * a^{-1} * b_minus, where b_plus is upper
  triangular with (b_plus)_{jj} = d_j, b_minus is lower triangular with
  (b_minus)_{ii} = d_i, and a = diag(d_i * d_{i+1}),
* normalized form g = n_upper * h * n_lower with unit triangular outer
  factors and h = diag(d_i / d_{i+1}).

Every entry of b_plus and b_minus is itself a single explicit minor of g, so
the first form needs no elimination at all; the second follows by scaling
rows and columns.  An independent elimination route (reversal conjugation
plus Doolittle LU) cross-checks both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import Matrix, _is_zero
from .polynomials import Polynomial
from .ratfunc import FactorBasis, FactoredFraction, RatFunc


class DegenerateMinorError(ZeroDivisionError):
    """A trailing principal minor needed by the decomposition vanishes."""

    def __init__(self, minor_index: int, size: int):
        self.minor_index = minor_index
        self.size = size
        super().__init__(
            f"trailing principal minor d_{minor_index} (size {size}) vanishes"
        )


@dataclass
class UDLFactors:
    b_plus: Matrix
    a: Matrix
    b_minus: Matrix


@dataclass
class NHNFactors:
    n: Matrix
    h: Matrix
    n_minus: Matrix


def trailing_minor(g: Matrix, i: int):
    """det of the lower-right block on rows/columns i..n (1-based); d_{n+1} = 1."""
    n = g.nrows
    if i == n + 1:
        return 1
    idx = range(i - 1, n)
    return g.submatrix(idx, idx).det()


def minor_upper(g: Matrix, i: int, j: int):
    """Entry (i, j), i <= j, of b_plus: det g[{i} u {j+1..n}, {j..n}]."""
    n = g.nrows
    rows = [i - 1] + list(range(j, n))
    cols = list(range(j - 1, n))
    return g.submatrix(rows, cols).det()


def minor_lower(g: Matrix, i: int, j: int):
    """Entry (i, j), i >= j, of b_minus: det g[{i..n}, {j} u {i+1..n}]."""
    n = g.nrows
    rows = list(range(i - 1, n))
    cols = [j - 1] + list(range(i, n))
    return g.submatrix(rows, cols).det()


def udl_explicit(g: Matrix) -> UDLFactors:
    """Minor-formula decomposition g = b_plus * a^{-1} * b_minus."""
    n = g.nrows
    d = [trailing_minor(g, i) for i in range(1, n + 2)]
    for i in range(1, n + 1):
        if _is_zero(d[i - 1]):
            raise DegenerateMinorError(i, n - i + 1)
    bp = [[0] * n for _ in range(n)]
    bm = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            bp[i - 1][j - 1] = minor_upper(g, i, j)
            bm[j - 1][i - 1] = minor_lower(g, j, i)
    a = Matrix.diagonal([d[i] * d[i + 1] for i in range(n)])
    return UDLFactors(Matrix(bp), a, Matrix(bm))


def _inv(e):
    if isinstance(e, int):
        return Fraction(1, e)
    return 1 / e


def nhn_from_udl(udl: UDLFactors) -> NHNFactors:
    """Rescale minor-form factors to unit triangular form.

    n_upper = b_plus * diag(b_plus)^{-1}, n_lower = diag(b_minus)^{-1} * b_minus,
    h_jj = (b_plus)_{jj} * (b_minus)_{jj} / a_jj.
    """
    n = udl.b_plus.nrows
    dp = [udl.b_plus[i, i] for i in range(n)]
    dm = [udl.b_minus[i, i] for i in range(n)]
    nu = Matrix(
        [[udl.b_plus[i, j] * _inv(dp[j]) for j in range(n)] for i in range(n)]
    )
    nl = Matrix(
        [[udl.b_minus[i, j] * _inv(dm[i]) for j in range(n)] for i in range(n)]
    )
    h = Matrix.diagonal(
        [dp[j] * dm[j] * _inv(udl.a[j, j]) for j in range(n)]
    )
    return NHNFactors(nu, h, nl)


def _as_pair(e):
    if isinstance(e, RatFunc):
        return e.num, e.den
    return e, 1


def _cross_equal(a, b, c):
    # a / b == c, written without any division
    an, ad = _as_pair(a)
    bn, bd = _as_pair(b)
    cn, cd = _as_pair(c)
    return an * bd * cd == cn * ad * bn


def nhn_matches_udl(udl: UDLFactors, nhn: NHNFactors) -> bool:
    """Division-free check that the rescaled minor factors equal nhn.

    Cross-multiplied entry comparisons avoid the fraction reductions that
    make nhn_from_udl expensive on large symbolic matrices.
    """
    n = udl.b_plus.nrows
    dp = [udl.b_plus[i, i] for i in range(n)]
    dm = [udl.b_minus[i, i] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i <= j and not _cross_equal(udl.b_plus[i, j], dp[j], nhn.n[i, j]):
                return False
            if i >= j and not _cross_equal(udl.b_minus[i, j], dm[i], nhn.n_minus[i, j]):
                return False
            if i < j and not _is_zero(nhn.n[j, i]):
                return False
            if i < j and not _is_zero(nhn.n_minus[i, j]):
                return False
    for j in range(n):
        if not _cross_equal(dp[j] * dm[j], udl.a[j, j], nhn.h[j, j]):
            return False
    return True


def _to_workfield(entry, basis):
    if basis is not None:
        if isinstance(entry, Polynomial):
            return FactoredFraction(basis, entry)
        if isinstance(entry, RatFunc):
            return FactoredFraction.from_ratfunc(basis, entry)
        if isinstance(entry, (int, Fraction)):
            return FactoredFraction(basis, basis.ring.const(entry))
        raise TypeError(f"cannot mix {type(entry).__name__} with symbolic entries")
    if isinstance(entry, int):
        return Fraction(entry)
    return entry


def _from_workfield(entry):
    if isinstance(entry, FactoredFraction):
        return entry.to_ratfunc()
    return entry


def nhn_decompose(g: Matrix, verify: bool = False) -> NHNFactors:
    """Decompose by elimination: conjugate by the reversal, run Doolittle LU.

    With J the reversal permutation and g' = J g J, an LU factorization
    g' = L U (L unit lower, U upper) conjugates back to
    g = (J L J)(J U J) = n_upper * lower, and splitting the diagonal off the
    lower factor gives the normalized form.  A zero pivot at elimination step
    i means the trailing minor d_{n-i} of g vanishes.

    Polynomial and rational-function entries are processed as factored
    fractions over a shared basis so pivot divisions stay cheap; other entry
    types use their native arithmetic.
    """
    n = g.nrows
    if n != g.ncols:
        raise ValueError("matrix must be square")
    basis = None
    for row in g.data:
        for e in row:
            if isinstance(e, (Polynomial, RatFunc)):
                basis = FactorBasis(e.ring)
                break
        if basis is not None:
            break
    gp = [
        [_to_workfield(g.data[n - 1 - i][n - 1 - j], basis) for j in range(n)]
        for i in range(n)
    ]
    low = [[0] * n for _ in range(n)]  # unit lower factor of g'
    up = [[0] * n for _ in range(n)]
    for i in range(n):
        low[i][i] = 1
        for j in range(i, n):
            acc = gp[i][j]
            for k in range(i):
                term = low[i][k] * up[k][j]
                acc = acc - term
            if isinstance(acc, FactoredFraction):
                acc = acc.reduce()
            up[i][j] = acc
        piv = up[i][i]
        if i < n - 1 and _is_zero(piv):
            raise DegenerateMinorError(n - i, i + 1)
        for r in range(i + 1, n):
            acc = gp[r][i]
            for k in range(i):
                acc = acc - low[r][k] * up[k][i]
            val = acc / piv
            if isinstance(val, FactoredFraction):
                val = val.reduce()
            low[r][i] = val
    # conjugate back: n_upper = J L J, lower = J U J
    nu = [
        [_from_workfield(low[n - 1 - i][n - 1 - j]) for j in range(n)]
        for i in range(n)
    ]
    lower = [
        [_from_workfield(up[n - 1 - i][n - 1 - j]) for j in range(n)]
        for i in range(n)
    ]
    hdiag = [lower[i][i] for i in range(n)]
    nl = [
        [
            lower[i][j] * _inv(hdiag[i]) if j < i else (1 if i == j else 0)
            for j in range(n)
        ]
        for i in range(n)
    ]
    out = NHNFactors(Matrix(nu), Matrix.diagonal(hdiag), Matrix(nl))
    if verify:
        _verify_superdiagonal(g, out)
    return out


def _verify_superdiagonal(g: Matrix, nhn: NHNFactors):
    """Check n_{i,i+1} = (b_plus)_{i,i+1} / d_{i+1} against explicit minors."""
    n = g.nrows
    for i in range(1, n):
        lhs = nhn.n[i - 1, i]
        num = minor_upper(g, i, i + 1)
        den = trailing_minor(g, i + 1)
        if not _entries_equal(lhs * den, num):
            raise ArithmeticError(
                f"superdiagonal entry ({i},{i + 1}) disagrees with its minor ratio"
            )


def _entries_equal(a, b, tol: float = 1e-9) -> bool:
    if isinstance(a, complex) or isinstance(b, complex) or isinstance(a, float) or isinstance(b, float):
        scale = max(abs(complex(a)), abs(complex(b)), 1.0)
        return abs(complex(a) - complex(b)) <= tol * scale
    return a == b


def udl_oracle(g: Matrix) -> UDLFactors:
    """Rebuild the minor-form factors from an elimination decomposition.

    Telescoping the normalized diagonal gives d_i = prod_{k >= i} h_kk, then
    b_plus = n_upper * diag(d), b_minus = diag(d) * n_lower, and
    a = diag(d_i * d_{i+1}).
    """
    nhn = nhn_decompose(g)
    n = g.nrows
    d = [1] * (n + 1)
    for i in range(n - 1, -1, -1):
        d[i] = nhn.h[i, i] * d[i + 1]
    bp = Matrix(
        [[nhn.n[i, j] * d[j] for j in range(n)] for i in range(n)]
    )
    bm = Matrix(
        [[d[i] * nhn.n_minus[i, j] for j in range(n)] for i in range(n)]
    )
    a = Matrix.diagonal([d[i] * d[i + 1] for i in range(n)])
    return UDLFactors(bp, a, bm)


def verify_udl_reconstruction(g: Matrix, udl: UDLFactors) -> bool:
    """Check g == b_plus * a^{-1} * b_minus exactly.

    For polynomial-valued matrices the check clears denominators: with
    d_i = (b_minus)_{ii}, each entry must satisfy
    sum_k (b_plus)_{ik} (b_minus)_{kj} / (d_k d_{k+1}) = g_{ij}, verified in
    factored-fraction form over the basis {d_1, ..., d_n}.  Field entries are
    multiplied out directly.
    """
    n = g.nrows
    poly_like = all(
        isinstance(e, (Polynomial, RatFunc)) for row in g.data for e in row
    )
    if poly_like and n > 0:
        return _verify_reconstruction_poly(g, udl)
    ainv = Matrix.diagonal([_inv(udl.a[i, i]) for i in range(n)])
    prod = udl.b_plus * ainv * udl.b_minus
    return all(
        _entries_equal(prod[i, j], g[i, j]) for i in range(n) for j in range(n)
    )


def _as_ratfunc(e, ring):
    if isinstance(e, RatFunc):
        return e
    if isinstance(e, Polynomial):
        return RatFunc.from_poly(e)
    return RatFunc.const(ring, e)


def _verify_reconstruction_poly(g: Matrix, udl: UDLFactors) -> bool:
    n = g.nrows
    first = next(
        e for row in g.data for e in row if isinstance(e, (Polynomial, RatFunc))
    )
    ring = first.ring
    basis = FactorBasis(ring)

    def ff(e):
        return FactoredFraction.from_ratfunc(basis, _as_ratfunc(e, ring))

    d = [ff(udl.b_minus[i, i]) for i in range(n)]
    one = FactoredFraction(basis, ring.one())
    d.append(one)
    for i in range(n):
        for j in range(n):
            acc = None
            for k in range(max(i, j), n):
                t = ff(udl.b_plus[i, k]) * ff(udl.b_minus[k, j]) / d[k] / d[k + 1]
                acc = t if acc is None else acc + t
            if acc is None:
                acc = FactoredFraction(basis, ring.zero())
            if acc.to_ratfunc() != _as_ratfunc(g[i, j], ring):
                return False
    return True


def nhn_reconstruct(nhn: NHNFactors) -> Matrix:
    return nhn.n * nhn.h * nhn.n_minus

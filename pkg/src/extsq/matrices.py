"""Dense matrices over exact scalars, with a JSON wire format.

Entries can be Fraction, complex, Polynomial, RatFunc, or FactoredFraction;
int 0/1 interoperate with all of them, so identity and padding need no ring
tag.  Determinants expand by cofactors up to 4x4 and switch to fraction-free
Bareiss elimination above that, using exact polynomial division when entries
are polynomials.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomials import Polynomial, PolyRing
from .rational import format_rational, parse_rational
from .ratfunc import RatFunc

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _is_zero(x) -> bool:
    if isinstance(x, (Polynomial, RatFunc)):
        return x.is_zero()
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return x == 0


class Matrix:
    __slots__ = ("data",)

    def __init__(self, rows):
        data = [list(r) for r in rows]
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged rows")
        self.data = data

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def ncols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.data)
        return f"<Matrix {self.nrows}x{self.ncols} [{body}]>"

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return cls(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def block_diagonal(cls, *blocks) -> "Matrix":
        n = sum(b.nrows for b in blocks)
        out = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[off + i][off + j] = b.data[i][j]
            off += b.nrows
        return cls(out)

    @classmethod
    def reversal(cls, n: int) -> "Matrix":
        """Antidiagonal permutation matrix (ones from top-right to bottom-left)."""
        return cls([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "Matrix":
        return Matrix([list(col) for col in zip(*self.data)])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.data))
        out = []
        for row in self.data:
            new = []
            for col in bt:
                acc = 0
                for a, b in zip(row, col):
                    if isinstance(a, int) and a == 0:
                        continue
                    if isinstance(b, int) and b == 0:
                        continue
                    acc = acc + a * b
                new.append(acc)
            out.append(new)
        return Matrix(out)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(e) for e in row] for row in self.data])

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        return Matrix([[self.data[i][j] for j in col_idx] for i in row_idx])

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        rows = self.data
        if all(
            isinstance(e, RatFunc) and e.den.is_one() for row in rows for e in row
        ):
            inner = Matrix([[e.num for e in row] for row in rows]).det()
            return RatFunc.from_poly(inner)
        if n <= 4:
            return _det_cofactor(rows)
        return _det_bareiss(rows)


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    sign = 1
    for i in range(n):
        a = rows[i][0]
        if not _is_zero(a):
            minor = [row[1:] for k, row in enumerate(rows) if k != i]
            term = a * _det_cofactor(minor)
            if sign < 0:
                term = -term
            total = term if total is None else total + term
        sign = -sign
    if total is None:
        return 0 * rows[0][0]
    return total


def _exact_div(a, b):
    if isinstance(a, Polynomial):
        if isinstance(b, int):
            b = a.ring.const(b)
        q = a.exact_div(b)
        if q is None:
            raise ArithmeticError("Bareiss division was not exact")
        return q
    return a / b


def _det_bareiss(rows):
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0 * rows[0][0]
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = _exact_div(num, prev) if not isinstance(prev, int) or prev != 1 else num
            m[i][k] = 0
        prev = pivot
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out


# -- JSON wire format ------------------------------------------------------


def genmatrix_from_json(obj) -> Matrix:
    """Parse {"rows": r, "cols": c, "entries": [[...strings...]]}.

    Entry strings are either rationals ("-3/4", "0.25") or indeterminate
    names.  With no names the matrix is over Fraction; otherwise every entry
    becomes a RatFunc over the ring of all names in sorted order.
    """
    try:
        r, c, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError("matrix object needs rows, cols, entries") from exc
    if len(entries) != r or any(len(row) != c for row in entries):
        raise ValueError("entries shape does not match rows/cols")
    names = set()
    parsed = []
    for row in entries:
        prow = []
        for cell in row:
            if not isinstance(cell, str):
                raise ValueError(f"entry {cell!r} is not a string")
            try:
                prow.append(parse_rational(cell))
            except ValueError:
                if not _NAME_RE.match(cell):
                    raise ValueError(f"entry {cell!r} is neither rational nor a name")
                names.add(cell)
                prow.append(cell)
        parsed.append(prow)
    if not names:
        return Matrix(parsed)
    ring = PolyRing(sorted(names))
    out = []
    for row in parsed:
        out.append(
            [
                RatFunc.from_poly(ring.var(cell))
                if isinstance(cell, str)
                else RatFunc.const(ring, cell)
                for cell in row
            ]
        )
    return Matrix(out)


def _entry_to_str(e) -> str:
    if isinstance(e, int):
        return str(e)
    if isinstance(e, Fraction):
        return format_rational(e)
    if isinstance(e, Polynomial):
        e = RatFunc.from_poly(e)
    if isinstance(e, RatFunc):
        if e.is_polynomial():
            p = e.num
            if p.is_constant():
                return format_rational(Fraction(p.constant_value()))
            if p.is_monomial():
                exps, coeff = p.leading()
                if coeff == 1 and sum(exps) == 1:
                    return p.ring.names[exps.index(1)]
        return str(e)
    return str(e)


def genmatrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.nrows,
        "cols": m.ncols,
        "entries": [[_entry_to_str(e) for e in row] for row in m.data],
    }


def generic_matrix(n: int, prefix: str = "x") -> Matrix:
    """Fully generic n x n matrix with entries prefix{i}{j} as RatFuncs."""
    names = sorted(f"{prefix}{i + 1}{j + 1}" for i in range(n) for j in range(n))
    ring = PolyRing(names)
    return Matrix(
        [
            [RatFunc.from_poly(ring.var(f"{prefix}{i + 1}{j + 1}")) for j in range(n)]
            for i in range(n)
        ]
    )

"""Sparse multivariate polynomials over the rationals.

Terms are exponent tuples mapped to nonzero int/Fraction coefficients over a
fixed, ordered variable ring.  Graded lexicographic order fixes leading terms,
and the gcd is layered: monomial content, trial division, an evaluation
coprimality certificate, and a primitive pseudo-remainder sequence as the
last resort.  This is enough to keep rational functions canonical without a
computer-algebra dependency.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd as _igcd
from math import lcm as _ilcm


def _as_coeff(value):
    """Normalize a coefficient to int when integral, Fraction otherwise."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"bad coefficient type {type(value).__name__}")


def _grlex(exps):
    return (sum(exps), exps)


class PolyRing:
    """An ordered tuple of variable names shared by compatible polynomials."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"PolyRing{self.names!r}"

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> "Polynomial":
        return Polynomial._make(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, value) -> "Polynomial":
        c = _as_coeff(Fraction(value) if not isinstance(value, int) else value)
        if not c:
            return self.zero()
        return Polynomial._make(self, {(0,) * self.nvars: c})

    def var(self, name) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index[name]] = 1
        return Polynomial._make(self, {tuple(exps): 1})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector")
        coeff = _as_coeff(coeff)
        return Polynomial._make(self, {exps: coeff} if coeff else {})


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {e: _as_coeff(c) for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _make(cls, ring, clean_terms):
        p = object.__new__(cls)
        p.ring = ring
        p.terms = clean_terms
        p._hash = None
        return p

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.is_constant() and self.constant_value() == 1

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- structure -----------------------------------------------------

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=-1)

    def support_vars(self):
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def coefficients_in(self, name: str) -> dict:
        """Exponent of `name` -> Polynomial in the remaining variables."""
        i = self.ring.index[name]
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: Polynomial._make(self.ring, t) for k, t in out.items()}

    def monomial_content(self):
        mins = None
        for e in self.terms:
            if mins is None:
                mins = list(e)
            else:
                for i, k in enumerate(e):
                    if k < mins[i]:
                        mins[i] = k
        return tuple(mins) if mins else (0,) * self.ring.nvars

    def shift_down(self, exps) -> "Polynomial":
        """Divide by the monomial with the given exponent vector."""
        if not any(exps):
            return self
        out = {}
        for e, c in self.terms.items():
            ne = tuple(a - b for a, b in zip(e, exps))
            if any(k < 0 for k in ne):
                raise ValueError("monomial does not divide")
            out[ne] = c
        return Polynomial._make(self.ring, out)

    def content_and_primitive(self):
        """self = c * p with c a signed Fraction and p primitive.

        Primitive means integer coefficients with gcd 1 and a positive
        graded-lex leading coefficient.  The zero polynomial returns (0, 0).
        """
        if not self.terms:
            return Fraction(0), self
        num_g = 0
        den_l = 1
        for c in self.terms.values():
            q = Fraction(c)
            num_g = _igcd(num_g, abs(q.numerator))
            den_l = _ilcm(den_l, q.denominator)
        c = Fraction(num_g, den_l)
        _, lead = self.leading()
        if lead < 0:
            c = -c
        inv = 1 / c
        prim = Polynomial._make(
            self.ring, {e: _as_coeff(Fraction(v) * inv) for e, v in self.terms.items()}
        )
        return c, prim

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomial rings differ")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            n = terms.get(e, 0) + c
            if n:
                terms[e] = n
            else:
                terms.pop(e, None)
        return Polynomial._make(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            n = terms.get(e, 0) - c
            if n:
                terms[e] = n
            else:
                terms.pop(e, None)
        return Polynomial._make(self.ring, terms)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return Polynomial._make(
                self.ring, {e: _as_coeff(c * other) for e, c in self.terms.items()}
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for e2, c2 in b.items():
            if not any(e2):
                for e1, c1 in a.items():
                    n = out.get(e1, 0) + c1 * c2
                    if n:
                        out[e1] = n
                    else:
                        out.pop(e1, None)
                continue
            for e1, c1 in a.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                n = out.get(key, 0) + c1 * c2
                if n:
                    out[key] = n
                else:
                    out.pop(key, None)
        return Polynomial._make(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, q) -> "Polynomial":
        return self * (q if isinstance(q, int) else Fraction(q))

    def exact_div(self, d: "Polynomial"):
        """Return self / d when the division is exact, else None."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        if d.is_constant():
            inv = 1 / Fraction(d.constant_value())
            return Polynomial._make(
                self.ring, {e: _as_coeff(Fraction(c) * inv) for e, c in self.terms.items()}
            )
        de, dc = d.leading()
        rem = dict(self.terms)
        out: dict = {}
        dterms = d.terms
        while rem:
            e = max(rem, key=_grlex)
            c = rem[e]
            diff = tuple(a - b for a, b in zip(e, de))
            if any(k < 0 for k in diff):
                return None
            q = _as_coeff(Fraction(c) / dc)
            out[diff] = q
            for e2, c2 in dterms.items():
                key = tuple(a + b for a, b in zip(diff, e2))
                n = rem.get(key, 0) - q * c2
                if n:
                    rem[key] = n
                else:
                    rem.pop(key, None)
        return Polynomial._make(self.ring, out)

    # -- evaluation ------------------------------------------------------

    def evaluate(self, values: dict):
        """Substitute a value for every variable; values may live in any ring."""
        vals = [values[name] for name in self.ring.names]
        total = None
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k == 1:
                    term = term * v
                elif k:
                    term = term * v**k
            total = term if total is None else total + term
        return 0 if total is None else total

    def eval_partial(self, values: dict) -> "Polynomial":
        """Substitute rationals for a subset of variables, staying in the ring."""
        idxs = [(self.ring.index[n], v) for n, v in values.items()]
        out: dict = {}
        for e, c in self.terms.items():
            coeff = c
            ne = list(e)
            for i, v in idxs:
                k = e[i]
                if k:
                    coeff = coeff * v**k
                ne[i] = 0
            if not coeff:
                continue
            key = tuple(ne)
            n = out.get(key, 0) + coeff
            if n:
                out[key] = n
            else:
                out.pop(key, None)
        return Polynomial._make(self.ring, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            c = self.terms[e]
            factors = [
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.ring.names, e)
                if k
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        s = " + ".join(parts).replace("+ -", "- ")
        return s

    def __repr__(self):
        return f"<Polynomial {self}>"


# -- gcd machinery -------------------------------------------------------


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Primitive gcd (positive leading coefficient), monomial part included."""
    if f.ring != g.ring:
        raise ValueError("polynomial rings differ")
    if f.is_zero():
        return g.content_and_primitive()[1] if not g.is_zero() else f
    if g.is_zero():
        return f.content_and_primitive()[1]
    mf, mg = f.monomial_content(), g.monomial_content()
    m = tuple(min(a, b) for a, b in zip(mf, mg))
    fp = f.shift_down(mf)
    gp = g.shift_down(mg)
    core = _gcd_core(fp.content_and_primitive()[1], gp.content_and_primitive()[1])
    return core * f.ring.monomial(m) if any(m) else core


def _gcd_core(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    if f.is_constant() or g.is_constant():
        return ring.one()
    if f.terms == g.terms:
        return f
    if f.total_degree() > g.total_degree():
        f, g = g, f
    if g.exact_div(f) is not None:
        return f
    if f.exact_div(g) is not None:
        return g
    shared = sorted(set(f.support_vars()) & set(g.support_vars()))
    if not shared:
        return ring.one()
    x = min(shared, key=lambda n: max(f.degree_in(n), g.degree_in(n)))
    others = sorted((set(f.support_vars()) | set(g.support_vars())) - {x})
    if not others:
        u = _univar_gcd(f, g, x)
        return u.content_and_primitive()[1]
    dfx, dgx = f.degree_in(x), g.degree_in(x)
    rng = random.Random(0x5EED)
    for _ in range(4):
        vals = {n: Fraction(rng.randint(1, 40) * rng.choice((1, -1))) for n in others}
        fi = f.eval_partial(vals)
        gi = g.eval_partial(vals)
        if fi.degree_in(x) != dfx or gi.degree_in(x) != dgx:
            continue
        u = _univar_gcd(fi, gi, x)
        if u.degree_in(x) == 0:
            cf = _content_in(f, x)
            cg = _content_in(g, x)
            return poly_gcd(cf, cg)
        break
    return _prs_gcd(f, g, x)


def _univar_gcd(f: Polynomial, g: Polynomial, x: str) -> Polynomial:
    """Euclidean gcd of polynomials supported on the single variable x."""
    ring = f.ring
    i = ring.index[x]

    def to_list(p):
        d = p.degree_in(x)
        coeffs = [Fraction(0)] * (d + 1)
        for e, c in p.terms.items():
            coeffs[e[i]] += Fraction(c)
        return coeffs

    def trim(a):
        while a and not a[-1]:
            a.pop()
        return a

    a, b = trim(to_list(f)), trim(to_list(g))
    while b:
        # a mod b
        while len(a) >= len(b) and a:
            q = a[-1] / b[-1]
            off = len(a) - len(b)
            for k in range(len(b)):
                a[off + k] -= q * b[k]
            trim(a)
        a, b = b, a
    prim = ring.zero()
    for k, c in enumerate(a):
        if c:
            exps = [0] * ring.nvars
            exps[i] = k
            prim = prim + ring.monomial(exps, _as_coeff(c))
    return prim.content_and_primitive()[1] if not prim.is_zero() else ring.one()


def _content_in(f: Polynomial, x: str) -> Polynomial:
    coeffs = list(f.coefficients_in(x).values())
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = poly_gcd(acc, c)
        if acc.is_one():
            break
    return acc


def _prs_gcd(f: Polynomial, g: Polynomial, x: str) -> Polynomial:
    """Primitive pseudo-remainder sequence gcd in the main variable x."""
    cf = _content_in(f, x)
    cg = _content_in(g, x)
    cont = poly_gcd(cf, cg)
    a = _pp_in(f, x, cf)
    b = _pp_in(g, x, cg)
    if a.degree_in(x) < b.degree_in(x):
        a, b = b, a
    while True:
        r = _pseudo_rem(a, b, x)
        if r.is_zero():
            gcd_pp = b
            break
        if r.degree_in(x) == 0:
            gcd_pp = f.ring.one()
            break
        r = _pp_in(r, x, _content_in(r, x)).content_and_primitive()[1]
        a, b = b, r
    result = cont * gcd_pp
    return result.content_and_primitive()[1]


def _pp_in(f: Polynomial, x: str, content: Polynomial) -> Polynomial:
    q = f.exact_div(content)
    if q is None:
        raise ArithmeticError("content does not divide")
    return q


def _pseudo_rem(a: Polynomial, b: Polynomial, x: str) -> Polynomial:
    ring = a.ring
    i = ring.index[x]
    db = b.degree_in(x)
    lb = b.coefficients_in(x)[db]
    r = a
    while not r.is_zero():
        dr = r.degree_in(x)
        if dr < db:
            break
        lr = r.coefficients_in(x)[dr]
        exps = [0] * ring.nvars
        exps[i] = dr - db
        shift = ring.monomial(exps)
        r = r * lb - b * (lr * shift)
    return r

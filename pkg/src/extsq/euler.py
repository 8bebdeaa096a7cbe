"""Unramified Euler factors for the exterior-square and standard lifts.

Everything here works with exact Satake parameters (rational complex
numbers) and evaluates factors in floating point only at the very end.
The reciprocal polynomials are computed by exact convolution, so degree
statements are checked symbolically rather than numerically.
"""

import cmath
from dataclasses import dataclass

from .rational import RationalComplex, parse_rational_complex


class VanishingFactorError(ArithmeticError):
    """A linear Euler factor vanished at the evaluation point."""

    def __init__(self, p, indices, message):
        super().__init__(message)
        self.p = p
        self.indices = indices


class ConvergenceGuardError(ArithmeticError):
    """A partial product was requested outside its guarded region."""


@dataclass(frozen=True)
class SatakeData:
    """Satake parameters at one unramified place: alpha has even length."""

    p: int
    alpha: tuple
    chi: RationalComplex

    def __post_init__(self):
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(
            self, "alpha", tuple(RationalComplex.from_value(a) for a in self.alpha)
        )
        object.__setattr__(self, "chi", RationalComplex.from_value(self.chi))
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if not self.alpha or len(self.alpha) % 2:
            raise ValueError("alpha must have positive even length")


def satake_from_json(obj) -> SatakeData:
    return SatakeData(
        int(obj["p"]),
        tuple(parse_rational_complex(a) for a in obj["alpha"]),
        parse_rational_complex(obj.get("chi", "1")),
    )


def satake_to_json(d: SatakeData) -> dict:
    return {"p": d.p, "alpha": [str(a) for a in d.alpha], "chi": str(d.chi)}


def satake_conjugate(d: SatakeData) -> SatakeData:
    """Conjugate every parameter; pairs with conjugating the variable s."""
    return SatakeData(d.p, tuple(a.conjugate() for a in d.alpha), d.chi.conjugate())


def ext2_factor(d: SatakeData, s) -> complex:
    """The local exterior-square factor, product over index pairs j < k."""
    s = complex(s)
    x = cmath.exp(-s * cmath.log(d.p))
    chi = complex(d.chi)
    out = complex(1.0)
    m = len(d.alpha)
    for j in range(m):
        aj = complex(d.alpha[j])
        for k in range(j + 1, m):
            lin = 1.0 - aj * complex(d.alpha[k]) * chi * x
            if lin == 0:
                raise VanishingFactorError(
                    d.p, (j + 1, k + 1),
                    f"factor for pair ({j + 1},{k + 1}) at p={d.p} vanishes",
                )
            out /= lin
    return out


def standard_factor(d: SatakeData, s) -> complex:
    """The local standard factor, one linear term per parameter."""
    s = complex(s)
    x = cmath.exp(-s * cmath.log(d.p))
    out = complex(1.0)
    for j, a in enumerate(d.alpha, 1):
        lin = 1.0 - complex(a) * x
        if lin == 0:
            raise VanishingFactorError(
                d.p, (j,), f"factor for index {j} at p={d.p} vanishes"
            )
        out /= lin
    return out


def _guard(d: SatakeData, s, pairwise: bool):
    mags = [abs(complex(a)) for a in d.alpha]
    if pairwise:
        top = max(mags) ** 2 * abs(complex(d.chi))
    else:
        top = max(mags)
    if top * d.p ** (-s.real) > 0.99:
        raise ConvergenceGuardError(
            f"p={d.p}: largest linear term has modulus above 0.99 at Re s = {s.real}"
        )


def partial_L(data, s, kind: str = "ext2") -> complex:
    """Product of local factors over the given places, smallest prime first.

    Each factor must sit inside the guarded region where its largest
    linear term has modulus at most 0.99, so truncations stay stable.
    """
    if kind not in ("ext2", "standard"):
        raise ValueError("kind must be 'ext2' or 'standard'")
    s = complex(s)
    seen = set()
    out = complex(1.0)
    for d in sorted(data, key=lambda d: d.p):
        if d.p in seen:
            raise ValueError(f"duplicate place p={d.p}")
        seen.add(d.p)
        _guard(d, s, kind == "ext2")
        out *= ext2_factor(d, s) if kind == "ext2" else standard_factor(d, s)
    return out


def _poly_mul(coeffs, root_factor):
    # multiply sum c_m T^m by (1 - r T)
    r = root_factor
    out = list(coeffs) + [RationalComplex(0, 0)]
    for m in range(len(coeffs), 0, -1):
        out[m] = out[m] - r * out[m - 1]
    return out


def ext2_reciprocal_poly(d: SatakeData):
    """Exact coefficients of the pairwise reciprocal polynomial in p^-s.

    The constant term is 1 and the degree equals the number of index
    pairs whenever no parameter vanishes.
    """
    coeffs = [RationalComplex(1, 0)]
    m = len(d.alpha)
    for j in range(m):
        for k in range(j + 1, m):
            coeffs = _poly_mul(coeffs, d.alpha[j] * d.alpha[k] * d.chi)
    return tuple(coeffs)


def standard_reciprocal_poly(d: SatakeData):
    """Exact coefficients of the standard reciprocal polynomial in p^-s."""
    coeffs = [RationalComplex(1, 0)]
    for a in d.alpha:
        coeffs = _poly_mul(coeffs, a)
    return tuple(coeffs)


def poly_degree(coeffs) -> int:
    deg = -1
    zero = RationalComplex(0, 0)
    for m, c in enumerate(coeffs):
        if c != zero:
            deg = m
    return deg


def lambda_assembly(r, data, s, archimedean=None) -> complex:
    """Completed partial product: archimedean factor times the finite part.

    The archimedean factor is built from the induction data unless one is
    passed in, and the finite part runs over the given places.
    """
    from .lfactors import l_inf

    s = complex(s)
    arch = archimedean if archimedean is not None else l_inf(r)
    return arch.value(s) * partial_L(data, s, kind="ext2")


def primes_below(limit: int):
    """All primes under the bound, by sieve."""
    limit = int(limit)
    if limit <= 2:
        return []
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    m = 2
    while m * m < limit:
        if flags[m]:
            flags[m * m :: m] = bytearray(len(flags[m * m :: m]))
        m += 1
    return [m for m in range(limit) if flags[m]]

"""Seeded verification checks shared by the command-line front end.

Every check draws randomness from its own stream, keyed by the run seed
and the check name, so the report is reproducible and independent of
execution order.  Each check returns a pass flag and a short detail
string; tolerances are fixed here unless the caller overrides them.
"""

import cmath
import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .decomp import (
    DegenerateMinorError,
    nhn_decompose,
    nhn_from_udl,
    nhn_matches_udl,
    udl_explicit,
    verify_udl_reconstruction,
)
from .euler import (
    SatakeData,
    ext2_factor,
    ext2_reciprocal_poly,
    poly_degree,
    standard_reciprocal_poly,
)
from .lfactors import (
    PoleProximityError,
    casselman_embedding,
    fe_ratio_check,
    holomorphy_check,
    pole_enumeration,
    random_repr_data,
    repr_to_json,
    script_g,
)
from .matrices import Matrix, generic_matrix
from .rational import RationalComplex
from .specialfn import CutoffSpec, PoleError, g_delta, g_delta_integral, gamma_c, gamma_r
from .unfold import (
    UnfoldVars,
    altsum_check,
    build_B,
    kappa_signs,
    lower_factor_recursive,
    shuffled_whittaker_eval,
    shuffled_whittaker_oracle,
    superdiag_closed_form,
    superdiag_closed_form_x,
    superdiag_sum,
    unfolded_gamma_table,
)
from .lfactors import EmbeddingParams

ORACLE_CUTOFF = CutoffSpec(1.0, 2.0, 4)


@dataclass(frozen=True)
class CheckContext:
    rng: random.Random
    trials: int | None
    tol: float | None
    seed: int

    def count(self, default: int) -> int:
        return self.trials if self.trials else default

    def rel(self, default: float) -> float:
        return self.tol if self.tol else default


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _matrices_equal(a: Matrix, b: Matrix) -> bool:
    if a.nrows != b.nrows or a.ncols != b.ncols:
        return False
    return all(
        a[i, j] == b[i, j] for i in range(a.nrows) for j in range(a.ncols)
    )


def _random_rational_matrix(rng, n: int) -> Matrix:
    return Matrix(
        [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
            for _ in range(n)
        ]
    )


def _random_x_vars(rng, n_half: int) -> dict:
    out = {}
    for i in range(1, n_half):
        for j in range(2 * i, 2 * n_half):
            out[(i, j)] = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
    return out


# -- the twelve checks -------------------------------------------------------


def check_anchors_gdelta(ctx: CheckContext):
    v = g_delta(0, 0.5)
    if abs(v - 1.0) > 1e-12:
        return False, f"closed-form value at 1/2 is {v!r}"
    q = g_delta_integral(0, 0.5, ORACLE_CUTOFF)
    if abs(q - 1.0) > 1e-6:
        return False, f"quadrature value at 1/2 is {q!r}"
    n_ref = ctx.count(100)
    for _ in range(n_ref):
        delta = ctx.rng.randint(0, 1)
        s = complex(ctx.rng.uniform(0.1, 0.9), ctx.rng.uniform(-2.0, 2.0))
        lhs = g_delta(delta, s) * g_delta(delta, 1 - s)
        rhs = -1.0 if delta else 1.0
        if abs(lhs - rhs) > ctx.rel(1e-10):
            return False, f"reflection fails at delta={delta}, s={s!r}: {lhs!r}"
    for _ in range(2 * n_ref):
        s = complex(ctx.rng.uniform(0.1, 2.5), ctx.rng.uniform(-2.0, 2.0))
        lhs = gamma_c(s)
        rhs = gamma_r(s) * gamma_r(s + 1)
        if abs(lhs - rhs) > 1e-12 * abs(rhs):
            return False, f"doubling fails at s={s!r}"
    return True, f"anchor, quadrature oracle, {n_ref} reflection and {2 * n_ref} doubling samples"


def check_udl_explicit(ctx: CheckContext):
    for n in range(2, 6):
        g = generic_matrix(n)
        udl = udl_explicit(g)
        if not verify_udl_reconstruction(g, udl):
            return False, f"generic reconstruction fails at n={n}"
        if not nhn_matches_udl(udl, nhn_decompose(g)):
            return False, f"generic factors disagree at n={n}"
    draws = ctx.count(50)
    done = 0
    while done < draws:
        n = ctx.rng.randint(2, 5)
        g = _random_rational_matrix(ctx.rng, n)
        try:
            udl = udl_explicit(g)
        except DegenerateMinorError:
            continue
        if not verify_udl_reconstruction(g, udl):
            return False, f"rational reconstruction fails for {g.data}"
        nhn_a = nhn_from_udl(udl)
        nhn_b = nhn_decompose(g)
        if not (
            _matrices_equal(nhn_a.n, nhn_b.n)
            and _matrices_equal(nhn_a.h, nhn_b.h)
            and _matrices_equal(nhn_a.n_minus, nhn_b.n_minus)
        ):
            return False, f"rational factor mismatch for {g.data}"
        done += 1
    return True, f"generic n=2..5 and {draws} rational matrices"


def check_superdiag(ctx: CheckContext):
    for n_half in (2, 3):
        v = UnfoldVars.symbolic(n_half)
        if superdiag_sum(v) != superdiag_closed_form(v):
            return False, f"symbolic mismatch at n_half={n_half}"
        vx = UnfoldVars.symbolic_x(n_half)
        if superdiag_sum(vx) != superdiag_closed_form_x(vx):
            return False, f"symbolic x-form mismatch at n_half={n_half}"
    draws = ctx.count(20)
    for _ in range(draws):
        v = UnfoldVars.from_x(4, _random_x_vars(ctx.rng, 4))
        if superdiag_sum(v) != superdiag_closed_form(v):
            return False, "rational mismatch at n_half=4"
        if superdiag_closed_form(v) != superdiag_closed_form_x(v):
            return False, "closed forms disagree at n_half=4"
    return True, f"symbolic n_half=2,3 and {draws} rational points at n_half=4"


def check_altsum(ctx: CheckContext):
    for n_half in (2, 3):
        v = UnfoldVars.symbolic(n_half)
        lhs, rhs = altsum_check(v)
        if lhs != rhs:
            return False, f"symbolic mismatch at n_half={n_half}"
    draws = ctx.count(10)
    for _ in range(draws):
        v = UnfoldVars.from_x(4, _random_x_vars(ctx.rng, 4))
        lhs, rhs = altsum_check(v)
        if lhs != rhs:
            return False, "rational mismatch at n_half=4"
    return True, f"symbolic n_half=2,3 and {draws} rational points at n_half=4"


def check_recursion(ctx: CheckContext):
    for n_half in (2, 3):
        vx = UnfoldVars.symbolic_x(n_half)
        x = {key: vx.x(*key) for key in _x_keys(n_half)}
        rec = lower_factor_recursive(n_half, x)
        nhn = nhn_decompose(build_B(vx))
        if not _matrices_equal(nhn.h * nhn.n_minus, rec):
            return False, f"symbolic mismatch at n_half={n_half}"
    draws = ctx.count(10)
    for _ in range(draws):
        n_half = ctx.rng.choice((2, 3))
        x = _random_x_vars(ctx.rng, n_half)
        rec = lower_factor_recursive(n_half, x)
        nhn = nhn_decompose(build_B(UnfoldVars.from_x(n_half, x)))
        if not _matrices_equal(nhn.h * nhn.n_minus, rec):
            return False, f"rational mismatch at n_half={n_half}"
    return True, f"symbolic n_half=2,3 and {draws} rational draws"


def _x_keys(n_half: int):
    return [
        (i, j) for i in range(1, n_half) for j in range(2 * i, 2 * n_half)
    ]


def check_whittaker(ctx: CheckContext):
    per = ctx.count(100)
    tol = ctx.rel(1e-10)
    worst = 0.0
    for n_half in (2, 3):
        for _ in range(per):
            x = _random_x_vars(ctx.rng, n_half)
            v = UnfoldVars.from_x(n_half, x)
            lam = tuple(Fraction(ctx.rng.randint(-4, 4), 2) for _ in range(2 * n_half))
            delta = tuple(ctx.rng.randint(0, 1) for _ in range(2 * n_half))
            e = EmbeddingParams(lam, delta)
            a = shuffled_whittaker_eval(v, e)
            b = shuffled_whittaker_oracle(v, e)
            err = abs(a - b) / max(abs(b), 1e-300)
            worst = max(worst, err)
            if err > tol:
                return False, f"dual paths differ by {err:.3e} at n_half={n_half}"
    return True, f"{per} draws per n_half in (2, 3), worst {worst:.3e}"


def check_kappa(ctx: CheckContext):
    total = 0
    for n_half in (2, 3):
        for delta in itertools.product((0, 1), repeat=2 * n_half):
            for eta in (0, 1):
                eps = (sum(delta) + n_half * eta) % 2
                kappa_signs(n_half, delta, eps, eta)
                total += 1
                try:
                    kappa_signs(n_half, delta, 1 - eps, eta)
                except ValueError:
                    pass
                else:
                    return False, "parity constraint is not enforced"
    return True, f"{total} exhaustive parameter choices"


def check_gamma_table(ctx: CheckContext):
    draws = ctx.count(50)
    tol = ctx.rel(1e-12)
    done = 0
    while done < draws:
        rd = random_repr_data(ctx.rng)
        e = casselman_embedding(rd)
        table = unfolded_gamma_table(e, rd.eta)
        ge = script_g(e, rd.eta)
        s = complex(ctx.rng.uniform(0.25, 1.3), ctx.rng.uniform(-1.1, 1.1))
        try:
            tv = table.value(s)
            gv = ge.value(s)
        except PoleError:
            continue
        if abs(tv - gv) > tol * max(1.0, abs(gv)):
            return False, f"table and product disagree for {repr_to_json(rd)} at s={s!r}"
        done += 1
    return True, f"{draws} random embeddings"


def check_fe_ratio(ctx: CheckContext):
    samples = ctx.count(50)
    tol = ctx.rel(1e-8)
    done = 0
    while done < samples:
        rd = random_repr_data(ctx.rng)
        s = complex(ctx.rng.uniform(0.2, 1.2), ctx.rng.uniform(-1.0, 1.0))
        try:
            res = fe_ratio_check(rd, s, tol=tol)
        except PoleProximityError:
            continue
        if abs(res.lhs - res.rhs) > tol * max(abs(res.lhs), 1e-300):
            return False, f"ratio identity fails for {repr_to_json(rd)} at s={s!r}"
        if abs(abs(res.omega) - 1.0) > 1e-12 or abs(res.omega**4 - 1.0) > 1e-12:
            return False, f"constant is not a fourth root of unity for {repr_to_json(rd)}"
        done += 1
    return True, f"{samples} samples across random data"


def check_holomorphy(ctx: CheckContext):
    draws = ctx.count(50)
    for _ in range(draws):
        rd = random_repr_data(ctx.rng)
        rep = holomorphy_check(rd)
        if not rep.ok:
            return False, f"analysis fails for {repr_to_json(rd)}: {rep.notes}"
        pole_enumeration(rd)
    return True, f"{draws} random data, lattice scans agree with family lists"


def check_euler(ctx: CheckContext):
    for size in (2, 4, 6):
        alpha = tuple(
            RationalComplex(
                Fraction(ctx.rng.randint(1, 9), 10), Fraction(ctx.rng.randint(1, 9), 10)
            )
            for _ in range(size)
        )
        d = SatakeData(3, alpha, RationalComplex(1, 1))
        if poly_degree(ext2_reciprocal_poly(d)) != size * (size - 1) // 2:
            return False, f"pairwise degree wrong at size {size}"
        if poly_degree(standard_reciprocal_poly(d)) != size:
            return False, f"standard degree wrong at size {size}"
    tol = ctx.rel(1e-14)
    draws = ctx.count(20)
    for _ in range(draws):
        p = ctx.rng.choice((2, 3, 5, 7))
        na, nb = 2 * ctx.rng.randint(1, 2), 2 * ctx.rng.randint(1, 2)
        chi = RationalComplex(Fraction(1, 2), Fraction(ctx.rng.randint(-3, 3), 7))
        draw = lambda: RationalComplex(
            Fraction(ctx.rng.randint(-9, 9), 10), Fraction(ctx.rng.randint(-9, 9), 10)
        )
        a = [draw() for _ in range(na)]
        b = [draw() for _ in range(nb)]
        s = complex(ctx.rng.uniform(1.5, 2.5), ctx.rng.uniform(-1.0, 1.0))
        x = cmath.exp(-s * cmath.log(p))
        try:
            whole = ext2_factor(SatakeData(p, tuple(a + b), chi), s)
            parts = ext2_factor(SatakeData(p, tuple(a), chi), s) * ext2_factor(
                SatakeData(p, tuple(b), chi), s
            )
            for ai in a:
                for bj in b:
                    parts /= 1.0 - complex(ai) * complex(bj) * complex(chi) * x
            perm = list(a + b)
            ctx.rng.shuffle(perm)
            shuffled = ext2_factor(SatakeData(p, tuple(perm), chi), s)
        except (ZeroDivisionError, ArithmeticError):
            continue
        if abs(whole - parts) > tol * abs(whole) * 10:
            return False, f"splitting fails at p={p}, s={s!r}"
        if abs(shuffled - whole) > tol * abs(whole) * 10:
            return False, f"permutation changes the factor at p={p}"
    return True, f"symbolic degrees at sizes 2, 4, 6 and {draws} numeric draws"


def check_report_determinism(ctx: CheckContext):
    sub = ("anchors-gdelta", "euler")
    first = [run_check(name, ctx.seed, ctx.trials, ctx.tol) for name in sub]
    second = [run_check(name, ctx.seed, ctx.trials, ctx.tol) for name in sub]
    if first != second:
        return False, "re-running seeded checks changed their results"
    return True, f"double-run of {len(sub)} seeded checks is bytewise stable"


CHECKS = {
    "anchors-gdelta": check_anchors_gdelta,
    "udl-explicit": check_udl_explicit,
    "superdiag": check_superdiag,
    "altsum": check_altsum,
    "recursion": check_recursion,
    "whittaker": check_whittaker,
    "kappa": check_kappa,
    "gamma-table": check_gamma_table,
    "fe-ratio": check_fe_ratio,
    "holomorphy": check_holomorphy,
    "euler": check_euler,
    "report-determinism": check_report_determinism,
}


def run_check(name: str, seed: int, trials=None, tol=None) -> CheckResult:
    fn = CHECKS[name]
    ctx = CheckContext(random.Random(f"{seed}:{name}"), trials, tol, seed)
    try:
        passed, detail = fn(ctx)
    except Exception as exc:
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    return CheckResult(name, bool(passed), detail)


def thread_count() -> int:
    raw = os.environ.get("EXTSQ_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(seed: int, trials=None, tol=None, names=None) -> list:
    """Run the named checks (all of them by default), sorted by name."""
    todo = sorted(names if names is not None else CHECKS)
    unknown = [n for n in todo if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    workers = thread_count()
    if workers == 1:
        return [run_check(n, seed, trials, tol) for n in todo]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futs = {n: pool.submit(run_check, n, seed, trials, tol) for n in todo}
        return [futs[n].result() for n in todo]

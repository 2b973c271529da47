"""High-precision Binet evaluation with exact integer recovery.

The characteristic cubic x**3 - x**2 - x - 1 has one real root
alpha ~ 1.8392867552 and a conjugate pair beta, gamma with
|beta| = alpha**-0.5.  Weighted powers of the three roots reproduce the
scalar sequences, and fixed complex matrices A1..C2 weighted the same
way reproduce the matrix sequences.  This module evaluates those forms
in mpmath arbitrary-precision arithmetic and rounds back to exact
integers under a strict 0.25 tolerance: a real part further than 0.25
from an integer (or an imaginary part above 0.25) raises
PrecisionExhausted instead of rounding silently.

Error growth: with p requested bits (plus guard bits for the arithmetic
itself) the dominant power term scales like alpha**n for n >= 0 and
roughly alpha**(|n|/2) for n < 0 (the conjugate pair dominates there).
Once a result's magnitude reaches 2**(p-2) its quarter-integer
neighborhood is no longer representable, so recovery is rejected on
magnitude at that point; measured, that makes the safe range
n <~ (p - 2) / log2(alpha), about 288 at the default 256 bits, and about
twice that magnitude for negative n.  Both rejection paths (magnitude
and the 0.25 window) raise PrecisionExhausted; no range is hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .errors import PrecisionExhausted
from .matrices import K_MAT_SEEDS, T_MAT_SEEDS, Mat3, MatrixKind

DEFAULT_PRECISION = 256
_GUARD_BITS = 32
_ROUND_TOL = 0.25

# 3x3 nested tuples of mpmath complex numbers
CMat = tuple


@dataclass(frozen=True)
class RootTriple:
    """Roots of the characteristic cubic: real alpha, conjugates beta/gamma."""

    alpha: mpc
    beta: mpc
    gamma: mpc
    precision: int


@dataclass(frozen=True)
class BinetConstants:
    """The six fixed complex matrices weighting the root powers."""

    a1: CMat
    b1: CMat
    c1: CMat
    a2: CMat
    b2: CMat
    c2: CMat
    precision: int


def _require_precision(precision: int) -> None:
    if precision < 64:
        raise ValueError(f"precision must be at least 64 bits, got {precision}")


def compute_roots(precision: int = DEFAULT_PRECISION) -> RootTriple:
    """Newton's method for alpha, then quadratic deflation for beta, gamma.

    beta + gamma = 1 - alpha and beta * gamma = 1/alpha follow from the
    symmetric functions of the roots, so the conjugate pair costs one
    square root.  beta is the root with positive imaginary part.
    """
    _require_precision(precision)
    with mp.workprec(precision + _GUARD_BITS):
        x = mpf(2)
        tol = mpf(2) ** (4 - (precision + _GUARD_BITS))
        for _ in range(64):  # quadratic convergence; 64 is far more than enough
            step = (x**3 - x**2 - x - 1) / (3 * x**2 - 2 * x - 1)
            x -= step
            if abs(step) < tol:
                break
        alpha = x
        half_sum = (1 - alpha) / 2
        half_imag = mp.sqrt(4 / alpha - (1 - alpha) ** 2) / 2
        return RootTriple(alpha=mpc(alpha),
                          beta=mpc(half_sum, half_imag),
                          gamma=mpc(half_sum, -half_imag),
                          precision=precision)


def radical_roots(precision: int = DEFAULT_PRECISION) -> RootTriple:
    """The roots from their nested-radical closed forms.

    Built from cbrt(19 +/- 3*sqrt(33)) combined with the primitive cube
    root of unity.  Kept separate from compute_roots so the two
    constructions can be compared as a cross-check.
    """
    _require_precision(precision)
    with mp.workprec(precision + _GUARD_BITS):
        omega = mp.expjpi(mpf(2) / 3)  # exp(2*pi*i/3)
        c_plus = mp.cbrt(19 + 3 * mp.sqrt(mpf(33)))
        c_minus = mp.cbrt(19 - 3 * mp.sqrt(mpf(33)))
        alpha = (1 + c_plus + c_minus) / 3
        beta = (1 + omega * c_plus + omega**2 * c_minus) / 3
        gamma = (1 + omega**2 * c_plus + omega * c_minus) / 3
        return RootTriple(mpc(alpha), beta, gamma, precision)


def _round_to_int(z, context: str, precision: int) -> int:
    real, imag = z.real, z.imag
    # A float of magnitude >= 2**(p-2) cannot resolve quarter-integers at
    # all: it is integral at ulp granularity and would "round cleanly" to
    # a wrong value.  Reject on magnitude before trusting the window test.
    if mp.mag(real) > precision - 2:
        raise PrecisionExhausted(
            f"{context}: magnitude 2^{int(mp.mag(real))} exceeds what "
            f"{precision} bits resolve to +/-{_ROUND_TOL}; raise the "
            "working precision")
    nearest = mp.nint(real)
    if abs(imag) > _ROUND_TOL or abs(real - nearest) > _ROUND_TOL:
        raise PrecisionExhausted(
            f"{context}: {mp.nstr(z, 12)} is not within {_ROUND_TOL} of an "
            "integer; raise the working precision")
    return int(nearest)


def binet_trib(n: int, precision: int = DEFAULT_PRECISION,
               roots: RootTriple | None = None) -> int:
    """T(n) from the three-root power form, rounded to an exact int."""
    r = roots if roots is not None else compute_roots(precision)
    with mp.workprec(precision + _GUARD_BITS):
        a, b, g = r.alpha, r.beta, r.gamma
        total = (a ** (n + 1) / ((a - b) * (a - g))
                 + b ** (n + 1) / ((b - a) * (b - g))
                 + g ** (n + 1) / ((g - a) * (g - b)))
        return _round_to_int(total, f"binet_trib({n})", precision)


def binet_lucas(n: int, precision: int = DEFAULT_PRECISION,
                roots: RootTriple | None = None) -> int:
    """K(n) as the plain power sum alpha**n + beta**n + gamma**n."""
    r = roots if roots is not None else compute_roots(precision)
    with mp.workprec(precision + _GUARD_BITS):
        total = r.alpha**n + r.beta**n + r.gamma**n
        return _round_to_int(total, f"binet_lucas({n})", precision)


def cmat_from_mat3(m: Mat3) -> CMat:
    return tuple(tuple(mpc(x) for x in row) for row in m.rows())


def cmat_scale(s, m: CMat) -> CMat:
    return tuple(tuple(s * x for x in row) for row in m)


def cmat_add(a: CMat, b: CMat) -> CMat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def cmat_sub(a: CMat, b: CMat) -> CMat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def cmat_mul(a: CMat, b: CMat) -> CMat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3))


def cmat_max_abs(m: CMat):
    return max(abs(x) for row in m for x in row)


def binet_constants(precision: int = DEFAULT_PRECISION,
                    roots: RootTriple | None = None) -> BinetConstants:
    """Solve the order-3 power form against the seed matrices.

    Each constant is (x*M2 + x*(x-1)*M1 + M0) / (x*(x-y)*(x-z)) with x
    running over the roots and (M0, M1, M2) the seed matrices of its
    family.  The six results satisfy A1+B1+C1 = I and A2+B2+C2 = KM(0)
    up to working precision.
    """
    r = roots if roots is not None else compute_roots(precision)
    with mp.workprec(precision + _GUARD_BITS):
        def constant(x, y, z, seeds):
            m0, m1, m2 = (cmat_from_mat3(s) for s in seeds)
            num = cmat_add(cmat_add(cmat_scale(x, m2),
                                    cmat_scale(x * (x - 1), m1)), m0)
            return cmat_scale(1 / (x * (x - y) * (x - z)), num)

        a, b, g = r.alpha, r.beta, r.gamma
        return BinetConstants(
            a1=constant(a, b, g, T_MAT_SEEDS),
            b1=constant(b, a, g, T_MAT_SEEDS),
            c1=constant(g, a, b, T_MAT_SEEDS),
            a2=constant(a, b, g, K_MAT_SEEDS),
            b2=constant(b, a, g, K_MAT_SEEDS),
            c2=constant(g, a, b, K_MAT_SEEDS),
            precision=precision,
        )


def binet_matrix(kind: MatrixKind, n: int,
                 precision: int = DEFAULT_PRECISION,
                 roots: RootTriple | None = None,
                 constants: BinetConstants | None = None) -> Mat3:
    """TM(n) or KM(n) from the matrix power form, rounded entrywise."""
    r = roots if roots is not None else compute_roots(precision)
    c = constants if constants is not None else binet_constants(precision, r)
    if kind is MatrixKind.TRIB_MATRIX:
        weights = (c.a1, c.b1, c.c1)
    else:
        weights = (c.a2, c.b2, c.c2)
    with mp.workprec(precision + _GUARD_BITS):
        acc = cmat_add(
            cmat_add(cmat_scale(r.alpha**n, weights[0]),
                     cmat_scale(r.beta**n, weights[1])),
            cmat_scale(r.gamma**n, weights[2]))
        context = f"binet_matrix({kind.value}, {n})"
        return Mat3.from_rows(
            tuple(tuple(_round_to_int(x, context, precision) for x in row)
                  for row in acc))


@dataclass(frozen=True)
class AlgebraCheck:
    """One product's max entrywise deviation from its exact value."""

    label: str
    deviation: float


@dataclass(frozen=True)
class ConstantAlgebraReport:
    precision: int
    epsilon: float
    checks: tuple[AlgebraCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.deviation < self.epsilon for c in self.checks)

    def worst(self) -> AlgebraCheck:
        return max(self.checks, key=lambda c: c.deviation)


def check_constant_algebra(precision: int = DEFAULT_PRECISION,
                           epsilon: float = 1e-50,
                           constants: BinetConstants | None = None,
                           ) -> ConstantAlgebraReport:
    """Check that A1, B1, C1 are idempotent and all cross-products vanish.

    Runs the nine products within {A1, B1, C1} (squares against
    idempotence, the six mixed products against zero) plus the six mixed
    products within {A2, B2, C2}, reporting each max entrywise deviation.
    Failures become report rows; nothing raises.
    """
    c = constants if constants is not None else binet_constants(precision)
    with mp.workprec(precision + _GUARD_BITS):
        family1 = {"A1": c.a1, "B1": c.b1, "C1": c.c1}
        family2 = {"A2": c.a2, "B2": c.b2, "C2": c.c2}
        checks = []
        for name, m in family1.items():
            dev = cmat_max_abs(cmat_sub(cmat_mul(m, m), m))
            checks.append(AlgebraCheck(f"{name}^2 - {name}", float(dev)))
        for family in (family1, family2):
            for x, mx in family.items():
                for y, my in family.items():
                    if x == y:
                        continue
                    dev = cmat_max_abs(cmat_mul(mx, my))
                    checks.append(AlgebraCheck(f"{x}*{y}", float(dev)))
        return ConstantAlgebraReport(precision, epsilon, tuple(checks))

"""Two independent evaluators of the colored Jones polynomial of a torus knot.

jones_sum is the exact finite cyclotomic sum (O(N) terms); jones_integral is
the contour-integral representation, a Gaussian times the torsion kernel along
a tilted line, used as an independent verification path.  Both normalize the
unknot to 1 and evaluate every power of q = e^(xi/N) through exp(xi * x / N),
so no root or branch ambiguity enters.

Chirality convention: the sum realizes J_2(T(2,3); q) = q^-1 + q^-3 - q^-4,
i.e. the mirror for which the contour representation holds verbatim; it is
applied uniformly to all (a, b).
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import arg, cos, cosh, exp, im, log, mp, mpc, mpf, pi, re, sin, sinh, sqrt

from .contour import LineContour, integrate_line
from .errors import DegenerateDenominator, InvalidXi
from .precision import DEFAULT_PRECISION, Precision, to_mpc
from .torus import TorusKnot, _tau_raw

# absolute guard for recognizing xi as an exact multiple of 2 pi i
ROOT_OF_UNITY_SNAP = mpf("1e-9")

# verification path only; beyond this the sum is the intended evaluator
_INTEGRAL_MAX_N = 5000


@dataclass(frozen=True)
class EvalPoint:
    """Spectral parameter xi (Im xi >= 0) and color N >= 1."""

    xi: complex
    N: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("N must be a positive integer")
        if float(im(to_mpc(self.xi))) < -1e-15:
            raise ValueError("Im xi must be non-negative")

    @property
    def u(self) -> mpc:
        """xi - 2 pi i at the default working precision."""
        with DEFAULT_PRECISION.workdps():
            return to_mpc(self.xi) - 2 * pi * mpc(0, 1)

    def region(self, knot: TorusKnot) -> str:
        """Convergence class of xi for the given knot."""
        from .asymptotics import classify_region

        return classify_region(knot, self.xi)

    def xi_half_is_pole(self, knot: TorusKnot, precision: Precision = DEFAULT_PRECISION) -> bool:
        """Whether xi/2 sits on a genuine pole of the torsion kernel."""
        from .torus import PoleSet, _pole_tolerance

        with precision.workdps():
            half = to_mpc(self.xi) / 2
            return PoleSet(knot).index_near(half, _pole_tolerance(knot, precision)) is not None


def _nearest_2pii_multiple(xi) -> tuple[int, mpf]:
    m = int(mp.nint(im(xi) / (2 * pi)))
    return m, abs(xi - 2 * pi * mpc(0, 1) * m)


def _sum_exponents(knot: TorusKnot, N: int) -> list[tuple[int, int]]:
    """Integer quadruples (P4, Q4) with term_j = q^(P4/4N) - q^(Q4/4N).

    Exact integers: with j = r/2, r = 2t - (N-1), the two exponents times 4N
    are ab r^2 + 2(a+b) r + ab(1-N^2) + 2 and ab r^2 + 2(a-b) r + ab(1-N^2) - 2.
    """
    a, b, ab = knot.a, knot.b, knot.ab
    base = ab * (1 - N * N)
    out = []
    for t in range(N):
        r = 2 * t - (N - 1)
        common = ab * r * r + base
        out.append((common + 2 * (a + b) * r + 2, common + 2 * (a - b) * r - 2))
    return out


def jones_sum(
    knot: TorusKnot, N: int, xi, precision: Precision = DEFAULT_PRECISION
) -> mpc:
    """J_N(T(a,b); e^(xi/N)) by the exact finite sum.

    At xi equal (within snap tolerance) to an exact multiple of 2 pi i the
    normalizing denominator 2 sinh(xi/2) vanishes together with the numerator
    and the value is the exact limit, evaluated by the derivative ratio at the
    snapped point.  A denominator that is nearly but not exactly degenerate
    raises DegenerateDenominator.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    with precision.workdps():
        xi = to_mpc(xi)
        m, dist = _nearest_2pii_multiple(xi)
        terms = _sum_exponents(knot, N)
        four_n = mpf(4 * N)
        if dist < ROOT_OF_UNITY_SNAP:
            xi0 = 2 * pi * mpc(0, 1) * m
            num_d = mpc(0)
            for p4, q4 in terms:
                P, Q = p4 / four_n, q4 / four_n
                num_d += P * exp(xi0 * P) - Q * exp(xi0 * Q)
            return num_d / cosh(xi0 / 2)
        den = 2 * sinh(xi / 2)
        if abs(den) < mpf(10) ** (-(precision.working_digits - 4)):
            raise DegenerateDenominator(
                "2 sinh(xi/2) nearly vanishes but xi is not an exact 2 pi i multiple"
            )
        acc = mpc(0)
        for p4, q4 in terms:
            acc += exp(xi * (p4 / four_n)) - exp(xi * (q4 / four_n))
        return acc / den


def jones_sum_oracle(
    knot: TorusKnot, N: int, q, precision: Precision = DEFAULT_PRECISION
) -> mpc:
    """Sum evaluator addressed by q itself; xi is recovered as N log q.

    The principal logarithm fixes the half-integer powers; callers needing a
    specific branch should use jones_sum with xi directly.
    """
    with precision.workdps():
        q = to_mpc(q)
        if q == 0:
            raise ValueError("q must be nonzero")
        return jones_sum(knot, N, N * log(q), precision=precision)


def _contour_angle(knot: TorusKnot, xi) -> mpf:
    """Contour angle inside the admissible window around arg(xi)/2.

    The midpoint maximizes the Gaussian decay rate.  The angle is nudged,
    deterministically, so that (i) the line is not parallel to the pole
    axis and (ii) the saddle line does not cross the imaginary axis next
    to a genuine kernel pole.
    """
    base = arg(xi) / 2
    window = pi / 4 - mpf("0.06")
    gap = pi / (4 * knot.ab)
    steps = [mpf(0)]
    for j in range(1, 8):
        steps.extend([j * mpf("0.045"), -j * mpf("0.045")])
    for step in steps:
        phi = base + step
        if abs(phi - base) > window or abs(phi - pi / 2) < mpf("0.05"):
            continue
        crossing = (im(xi) - re(xi) * mp.tan(phi)) / 2
        k0 = int(mp.nint(crossing * knot.ab / pi))
        if k0 % knot.a == 0 or k0 % knot.b == 0:
            return phi  # nearest grid point is a removable zero, not a pole
        if abs(crossing - k0 * pi / knot.ab) >= gap:
            return phi
    return base


def _crossed_pole_terms(knot: TorusKnot, xi, N: int, crossing) -> mpc:
    """2 pi i times the residue sum for poles between the two contour lines.

    The defining line passes through the origin and the saddle line through
    xi/2 crosses the imaginary axis at ``crossing``; shifting one onto the
    other collects the residues of e^(abN(-z^2/xi+z)) tau(z) at the genuine
    poles k pi i/(ab) strictly in between, signed by the shift direction.
    """
    a, b, ab = knot.a, knot.b, knot.ab
    lo, hi = (crossing, mpf(0)) if crossing < 0 else (mpf(0), crossing)
    orientation = 1 if crossing > 0 else -1
    total = mpc(0)
    k = int(mp.floor(lo * ab / pi)) - 1
    upper = int(mp.ceil(hi * ab / pi)) + 1
    while k <= upper:
        y = k * pi / ab
        if k != 0 and lo < y < hi and k % a and k % b:
            residue = (
                (-1) ** (k + 1)
                * 2
                * sin(k * pi / mpf(a))
                * sin(k * pi / mpf(b))
                / ab
                * exp(N * (k**2 * pi**2 / (ab * xi) + k * pi * mpc(0, 1)))
            )
            total += residue
        k += 1
    return orientation * 2 * pi * mpc(0, 1) * total


def jones_integral(
    knot: TorusKnot, point: EvalPoint, precision: Precision = DEFAULT_PRECISION
) -> mpc:
    """J_N by the contour-integral representation.

    The defining integral runs over the line through the origin at an angle
    in the admissible window around arg(xi)/2.  Evaluating it directly is
    numerically hopeless away from real xi (the integrand peak exceeds the
    integral by a factor exponential in N), so the quadrature is performed
    on the parallel line through the saddle xi/2, where the Gaussian factor
    decays monotonically, and the residues of the poles crossed by the shift
    are added in closed form.  By Cauchy's theorem the value is the defining
    integral itself.  This is the verification path; it refuses N > 5000,
    where the sum is the intended evaluator.
    """
    if point.N > _INTEGRAL_MAX_N:
        raise ValueError("integral path is a verification device; use jones_sum for N > 5000")
    with precision.workdps():
        xi = to_mpc(point.xi)
        N = point.N
        m, dist = _nearest_2pii_multiple(xi)
        if dist < ROOT_OF_UNITY_SNAP:
            raise InvalidXi("integral representation undefined at multiples of 2 pi i")
        a, b, ab = knot.a, knot.b, knot.ab
        phi = _contour_angle(knot, xi)
        tol = precision.rel_tol

        # Gaussian decay rate along the saddle line; positive inside the window
        decay = cos(2 * phi - arg(xi)) / abs(xi)
        half_length = sqrt((log(1 / tol) + 9) / (ab * N * decay)) + pi / ab + mpf("0.3")

        # resolve the kernel scale pi/(ab) and the mild residual oscillation
        waves = ab * N * half_length * abs(sin(2 * phi - arg(xi))) / (2 * pi * abs(xi))
        min_panels = max(8, int(mp.ceil(half_length * ab)), int(mp.ceil(4 * waves)))

        prefactor = (
            1
            / (2 * sinh(xi / 2))
            * sqrt(ab * N / (pi * xi))
            * exp(-ab * N * xi / 4 + (ab - mpf(a) / b - mpf(b) / a) * xi / (4 * N))
        )

        def integrand(z):
            return exp(ab * N * (-z * z / xi + z)) * _tau_raw(knot, z, precision)

        contour = LineContour(
            base_point=complex(xi / 2), angle=float(phi), half_length=float(half_length)
        )
        saddle_part = integrate_line(integrand, contour, precision=precision, min_panels=min_panels)
        crossing = (im(xi) - re(xi) * mp.tan(phi)) / 2
        return prefactor * (saddle_part + _crossed_pole_terms(knot, xi, N, crossing))


def unknot_bracket(N: int, xi, precision: Precision = DEFAULT_PRECISION) -> tuple[mpc, mpc]:
    """Unnormalized unknot value sinh(xi/2)/sinh(xi/(2N)) and its nu factor.

    nu = bracket * xi / (2 N sinh(xi/2)) tends to 1 as N grows; it is the
    correction by which the bracket deviates from its leading 2 sinh(xi/2) N/xi.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    with precision.workdps():
        xi = to_mpc(xi)
        den = sinh(xi / (2 * N))
        if abs(den) < mpf(10) ** (-(precision.working_digits - 4)):
            raise DegenerateDenominator("sinh(xi/(2N)) vanishes")
        bracket = sinh(xi / 2) / den
        # bracket * xi / (2 N sinh(xi/2)) simplifies to the nonsingular form
        nu = (xi / (2 * N)) / den
        return bracket, nu

"""Line and circle quadrature for analytic function handles.

Line integrals use composite Gauss-Legendre panels on a truncated line and
refine by doubling the panel count until two consecutive refinements agree to
the requested relative tolerance.  Derivatives and Laurent coefficients come
from trapezoidal quadrature of the Cauchy integral on a circle, which is
spectrally accurate for these periodic integrands.

All routines are deterministic: nodes are generated in ascending index order
and sums are accumulated in that fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from mpmath import mp, mpc, mpf, exp, pi, factorial

from .errors import NonDecayingIntegrand, RadiusTooLarge, ToleranceNotReached
from .precision import DEFAULT_PRECISION, Precision, to_mpc

_GL_ORDER = 32
_MAX_PANELS = 4096
_MAX_CIRCLE_NODES = 1 << 16

# (order, binary precision) -> (nodes, weights) on [-1, 1]
_gl_cache: dict[tuple[int, int], tuple[list, list]] = {}


@dataclass(frozen=True)
class LineContour:
    """Truncated straight line: base_point + e^{i*angle} * t, |t| <= half_length."""

    base_point: complex
    angle: float
    half_length: float

    def __post_init__(self) -> None:
        if not float(self.half_length) > 0:
            raise ValueError("half_length must be positive")


def _legendre_nodes(n: int) -> tuple[list, list]:
    """Gauss-Legendre nodes/weights on [-1,1] at the current mp precision.

    Float seeds from the classical Newton iteration are refined with mpmath
    Newton steps on P_n; cached per (n, mp.prec).
    """
    key = (n, mp.prec)
    cached = _gl_cache.get(key)
    if cached is not None:
        return cached

    import numpy as np

    seeds, _ = np.polynomial.legendre.leggauss(n)

    def legendre_pair(x):
        # returns (P_n(x), P_n'(x)) via the three-term recurrence
        p0, p1 = mpf(1), x
        for k in range(1, n):
            p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
        dp = n * (x * p1 - p0) / (x * x - 1)
        return p1, dp

    nodes = []
    weights = []
    for s in seeds:
        x = mpf(float(s))
        for _ in range(12):
            p, dp = legendre_pair(x)
            dx = p / dp
            x = x - dx
            if abs(dx) < mpf(10) ** (-(mp.dps + 2)):
                break
        p, dp = legendre_pair(x)
        nodes.append(x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    _gl_cache[key] = (nodes, weights)
    return nodes, weights


def _gl_line_sum(f, base, direction, half_length, n_panels: int, order: int) -> mpc:
    nodes, weights = _legendre_nodes(order)
    width = 2 * half_length / n_panels
    total = mpc(0)
    for p in range(n_panels):
        left = -half_length + p * width
        mid = left + width / 2
        half = width / 2
        acc = mpc(0)
        for x, w in zip(nodes, weights):
            t = mid + half * x
            acc += w * f(base + direction * t)
        total += acc * half
    return total * direction


def integrate_line(
    f: Callable[[mpc], mpc],
    contour: LineContour,
    precision: Precision = DEFAULT_PRECISION,
    min_panels: int = 8,
) -> mpc:
    """Integrate an analytic handle along a truncated line.

    The integrand must decay at the truncation ends: the endpoint magnitude is
    required to fall below target_rel_tol times the maximum sampled magnitude,
    with the half-length doubled at most twice before giving up.  Refinement
    then doubles the panel count until two consecutive composite rules agree.

    Raises:
        NonDecayingIntegrand: tail magnitude test fails after two doublings.
        ToleranceNotReached: panel refinement stalls.
    """
    with precision.workdps():
        base = to_mpc(contour.base_point)
        phi = mpf(contour.angle)
        half_length = mpf(contour.half_length)
        direction = exp(mpc(0, 1) * phi)
        tol = precision.rel_tol

        for attempt in range(3):
            coarse = [
                abs(f(base + direction * (-half_length + half_length * k / 32)))
                for k in range(65)
            ]
            max_mag = max(coarse)
            end_mag = max(coarse[0], coarse[-1])
            if max_mag == 0 or end_mag <= tol * max_mag:
                break
            if attempt == 2:
                raise NonDecayingIntegrand(
                    "integrand magnitude %s at truncation ends exceeds %s after "
                    "doubling half_length twice" % (mp.nstr(end_mag, 3), mp.nstr(tol * max_mag, 3))
                )
            half_length *= 2

        # a vanishing integral can only be pinned in absolute terms, at the
        # scale set by the integrand magnitude over the contour length
        zero_floor = tol * max_mag * 2 * half_length

        n_panels = max(4, int(min_panels))
        previous = None
        while n_panels <= _MAX_PANELS:
            value = _gl_line_sum(f, base, direction, half_length, n_panels, _GL_ORDER)
            if previous is not None:
                delta = abs(value - previous)
                scale = max(abs(value), abs(previous))
                if delta <= max(tol * scale, zero_floor):
                    return value
            previous = value
            n_panels *= 2
        raise ToleranceNotReached(
            "line quadrature did not converge within %d panels" % _MAX_PANELS
        )


def _check_radius(z0, radius, singularities) -> None:
    if singularities is None:
        return
    for s in singularities:
        if abs(to_mpc(s) - z0) <= radius:
            raise RadiusTooLarge(
                "circle of radius %s about %s encloses singularity %s"
                % (mp.nstr(radius, 6), mp.nstr(z0, 6), mp.nstr(to_mpc(s), 6))
            )


def _circle_coefficients(f, z0, radius, orders: Sequence[int], nodes: int):
    """Laurent coefficients c_n = (1/2pi i) oint f(z) (z-z0)^{-n-1} dz by trapezoid.

    Also returns the maximum sampled |f|, the natural error scale of the rule.
    """
    samples = []
    two_pi = 2 * pi
    for m in range(nodes):
        w = radius * exp(mpc(0, 1) * (two_pi * m / nodes))
        samples.append((w, f(z0 + w)))
    max_mag = max(abs(fw) for _, fw in samples)
    out = []
    for n in orders:
        acc = mpc(0)
        for w, fw in samples:
            acc += fw * w ** (-n)
        out.append(acc / nodes)
    return out, max_mag


def laurent_coefficients(
    f: Callable[[mpc], mpc],
    z0,
    radius,
    orders: Iterable[int],
    precision: Precision = DEFAULT_PRECISION,
    singularities: Iterable = None,
) -> list:
    """Laurent coefficients of f about z0 on a pole-free circle.

    ``orders`` may include -1 (the residue) when z0 is a simple pole of f;
    ``singularities``, when given, lists poles of f other than z0 and must
    stay outside the circle.
    """
    orders = list(orders)
    with precision.workdps():
        z0 = to_mpc(z0)
        radius = mpf(radius)
        if not radius > 0:
            raise ValueError("radius must be positive")
        _check_radius(z0, radius, singularities)
        tol = precision.rel_tol

        nodes = 32
        previous = None
        while nodes <= _MAX_CIRCLE_NODES:
            values, max_mag = _circle_coefficients(f, z0, radius, orders, nodes)
            if previous is not None:
                # quadrature error of c_n scales like max|f| / radius^n
                ok = True
                for v, pv, n in zip(values, previous, orders):
                    floor = tol * max_mag * radius ** (-n)
                    if abs(v - pv) > max(tol * abs(v), floor):
                        ok = False
                        break
                if ok:
                    return values
            previous = values
            nodes *= 2
        raise ToleranceNotReached(
            "circle quadrature did not converge within %d nodes" % _MAX_CIRCLE_NODES
        )


def cauchy_derivatives(
    f: Callable[[mpc], mpc],
    z0,
    radius,
    orders: Iterable[int],
    precision: Precision = DEFAULT_PRECISION,
    singularities: Iterable = None,
) -> list:
    """Derivatives f^(n)(z0) for each requested n via the Cauchy integral.

    f must be analytic on the closed disk; pass known singularities to get a
    RadiusTooLarge check instead of silent inaccuracy.
    """
    orders = list(orders)
    if any(n < 0 for n in orders):
        raise ValueError("derivative orders must be non-negative")
    with precision.workdps():
        coeffs = laurent_coefficients(
            f, z0, radius, orders, precision=precision, singularities=singularities
        )
        return [factorial(n) * c for n, c in zip(orders, coeffs)]


def laurent_at_simple_pole(
    f: Callable[[mpc], mpc],
    z0,
    radius,
    precision: Precision = DEFAULT_PRECISION,
    singularities: Iterable = None,
) -> tuple:
    """(residue, constant term) of the Laurent expansion at a simple pole z0."""
    res, const = laurent_coefficients(
        f, z0, radius, [-1, 0], precision=precision, singularities=singularities
    )
    return res, const

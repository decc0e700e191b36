"""Bundle-element arithmetic, Chern-Simons data, and twisted torsion values.

Chern-Simons data of a boundary-torus representation lives in a C*-bundle
over the boundary character variety, presented as triples [s, t; z] modulo
the group G generated by X, Y, B acting as

    X.(s,t;z) = (s+1, t;   z e^(-8 pi i t)),
    Y.(s,t;z) = (s,   t+1; z e^(+8 pi i s)),
    B.(s,t;z) = (-s, -t;   z).

Two closed forms for the invariant of an irreducible torus-knot representation
are provided: one indexed by the component label (alpha, beta) and one by the
residue index k.  Carrying the first to the coordinates of the second requires
a Y-power whose exponent (k - ab - 2)/2 may be a half-integer; that step is a
change of logarithmic lift rather than a G-element, so it is exposed as the
separate transport ``y_lift_shift`` while ``equivalent`` stays strictly
integer-shift G-equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from mpmath import exp, fabs, im, log, mp, mpc, mpf, pi, re, sin

from .asymptotics import saddle_exponent
from .charvar import alpha_beta_from_k, longitude_log_lift
from .errors import CoordinateMismatch, NonIntegerShift
from .precision import DEFAULT_PRECISION, Precision, to_mpc
from .torus import TorusKnot

_INT_SNAP = mpf("1e-8")


@dataclass(frozen=True)
class BundleElement:
    """Point (s, t; z) of Hom-coordinates times C*."""

    s: mpc
    t: mpc
    z: mpc

    def __post_init__(self) -> None:
        if to_mpc(self.z) == 0:
            raise ValueError("z must be nonzero")


@dataclass(frozen=True)
class CSValue:
    """A Chern-Simons value, defined modulo pi^2 times the integers.

    The canonical representative has real part in [0, pi^2).
    """

    value: mpc

    @staticmethod
    def canonical(value, precision: Precision = DEFAULT_PRECISION) -> "CSValue":
        with precision.workdps():
            value = to_mpc(value)
            period = pi * pi
            return CSValue(mpc(re(value) % period, im(value)))

    def distance(self, other: "CSValue", precision: Precision = DEFAULT_PRECISION) -> mpf:
        """Minimal |difference mod pi^2|."""
        with precision.workdps():
            period = pi * pi
            d = to_mpc(self.value) - to_mpc(other.value)
            shift = re(d) - mp.nint(re(d) / period) * period
            return fabs(mpc(shift, im(d)))

    def matches(self, other: "CSValue", tol, precision: Precision = DEFAULT_PRECISION) -> bool:
        return self.distance(other, precision) < tol


def g_act(generator: str, e: BundleElement, precision: Precision = DEFAULT_PRECISION) -> BundleElement:
    """Apply one generator of G to a bundle element."""
    with precision.workdps():
        s, t, z = to_mpc(e.s), to_mpc(e.t), to_mpc(e.z)
        if generator == "X":
            return BundleElement(s + 1, t, z * exp(-8 * pi * mpc(0, 1) * t))
        if generator == "Y":
            return BundleElement(s, t + 1, z * exp(8 * pi * mpc(0, 1) * s))
        if generator == "B":
            return BundleElement(-s, -t, z)
        raise ValueError(f"unknown generator {generator!r}")


def g_word(
    e: BundleElement, m: int, n: int, precision: Precision = DEFAULT_PRECISION
) -> BundleElement:
    """Apply X^m Y^n (they commute in G) with integer exponents in one step."""
    with precision.workdps():
        s, t, z = to_mpc(e.s), to_mpc(e.t), to_mpc(e.z)
        phase = exp(8 * pi * mpc(0, 1) * (n * s - m * t - m * n))
        return BundleElement(s + m, t + n, z * phase)


def y_lift_shift(e: BundleElement, n, precision: Precision = DEFAULT_PRECISION) -> BundleElement:
    """Formal Y-power with arbitrary real exponent: (s, t+n; z e^(8 pi i n s)).

    Integer n reproduces the G-action; half-integer n changes the chosen
    logarithmic lift of the second holonomy (its eigenvalue flips sign).
    """
    with precision.workdps():
        s, t, z = to_mpc(e.s), to_mpc(e.t), to_mpc(e.z)
        n = to_mpc(n)
        return BundleElement(s, t + n, z * exp(8 * pi * mpc(0, 1) * n * s))


def _near_int(x, tol) -> int | None:
    n = int(mp.nint(re(x)))
    if fabs(x - n) < tol:
        return n
    return None


def equivalent(
    e1: BundleElement,
    e2: BundleElement,
    precision: Precision = DEFAULT_PRECISION,
    tol=None,
) -> bool:
    """Whether some element of G carries e1 to e2.

    X and Y shift (s, t) by exactly one, so the only candidate word is read
    off the coordinate differences, optionally after B; the check is finite.
    Raises NonIntegerShift when neither reading gives near-integer shifts.
    """
    with precision.workdps():
        if tol is None:
            tol = precision.half_eps
        candidates = []
        m = _near_int(to_mpc(e2.s) - to_mpc(e1.s), _INT_SNAP)
        n = _near_int(to_mpc(e2.t) - to_mpc(e1.t), _INT_SNAP)
        if m is not None and n is not None:
            candidates.append((e1, m, n))
        mb = _near_int(to_mpc(e2.s) + to_mpc(e1.s), _INT_SNAP)
        nb = _near_int(to_mpc(e2.t) + to_mpc(e1.t), _INT_SNAP)
        if mb is not None and nb is not None:
            candidates.append((g_act("B", e1, precision), mb, nb))
        if not candidates:
            raise NonIntegerShift(
                "coordinate differences are neither near-integers nor near-negation-integers"
            )
        for base, mm, nn in candidates:
            moved = g_word(base, mm, nn, precision)
            scale = max(fabs(to_mpc(e2.z)), fabs(to_mpc(moved.z)))
            if (
                fabs(to_mpc(moved.s) - to_mpc(e2.s)) < tol
                and fabs(to_mpc(moved.t) - to_mpc(e2.t)) < tol
                and fabs(to_mpc(moved.z) - to_mpc(e2.z)) <= tol * scale
            ):
                return True
        return False


def _cd_pair(knot: TorusKnot) -> tuple[int, int]:
    """Integers (c, d) with a d - b c = 1 and d minimal non-negative."""
    d = pow(knot.a, -1, knot.b)
    c = (knot.a * d - 1) // knot.b
    return c, d


def cs_component_form(
    knot: TorusKnot,
    alpha: int,
    beta: int,
    eps: int,
    u,
    precision: Precision = DEFAULT_PRECISION,
) -> BundleElement:
    """CS bundle element of the component (alpha, beta) in its natural frame.

    Built from the component label with auxiliary integers (c, d) satisfying
    a d - b c = 1 and a sign eps = +-1; the element is
    [u/(4 pi i), 1/2 - ab u/(4 pi i); exp(-8 pi i ((beta a d + eps alpha b c)^2/(4ab) - u/(8 pi i)))].
    The choice of eps does not change the invariant.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    with precision.workdps():
        u = to_mpc(u)
        c, d = _cd_pair(knot)
        i_ = mpc(0, 1)
        s = u / (4 * pi * i_)
        t = mpf(1) / 2 - knot.ab * u / (4 * pi * i_)
        q = beta * knot.a * d + eps * alpha * knot.b * c
        z = exp(-8 * pi * i_ * (mpf(q * q) / (4 * knot.ab) - u / (8 * pi * i_)))
        return BundleElement(s, t, z)


def cs_closed_form(
    knot: TorusKnot, k: int, xi, precision: Precision = DEFAULT_PRECISION
) -> BundleElement:
    """CS bundle element for residue index k at u = xi - 2 pi i.

    [u/(4 pi i), v_k(u)/(4 pi i); exp((2/(pi i)) (S_k(xi) - pi i u - u v_k(u)/4))].
    """
    with precision.workdps():
        xi = to_mpc(xi)
        i_ = mpc(0, 1)
        u = xi - 2 * pi * i_
        v = longitude_log_lift(knot, k, u, precision)
        cs = saddle_exponent(knot, k, xi, precision) - pi * i_ * u - u * v / 4
        return BundleElement(u / (4 * pi * i_), v / (4 * pi * i_), exp(2 / (pi * i_) * cs))


def transported_component_form(
    knot: TorusKnot,
    k: int,
    u,
    eps: int = 1,
    precision: Precision = DEFAULT_PRECISION,
) -> BundleElement:
    """Component-form element carried to the frame of the closed form for k.

    The carrier is the formal Y-power with exponent (k - ab - 2)/2, a lift
    change when that is a half-integer; the result matches cs_closed_form at
    xi = u + 2 pi i elementwise.
    """
    with precision.workdps():
        alpha, beta = alpha_beta_from_k(knot, k)
        element = cs_component_form(knot, alpha, beta, eps, u, precision)
        return y_lift_shift(element, mpf(k - knot.ab - 2) / 2, precision)


def cs_extract(
    e: BundleElement, u, v, precision: Precision = DEFAULT_PRECISION, transport: bool = True
) -> CSValue:
    """Read the CS value off an element presented in the (u, v) frame.

    CS = (pi i / 2) log z modulo pi^2, after transporting e by the integer
    G-word dictated by the coordinate mismatch when one exists (transport=True).
    """
    with precision.workdps():
        u, v = to_mpc(u), to_mpc(v)
        i_ = mpc(0, 1)
        s_target = u / (4 * pi * i_)
        t_target = v / (4 * pi * i_)
        ds = s_target - to_mpc(e.s)
        dt = t_target - to_mpc(e.t)
        if fabs(ds) > _INT_SNAP or fabs(dt) > _INT_SNAP:
            if not transport:
                raise CoordinateMismatch("element coordinates do not match (u, v)")
            m = _near_int(ds, _INT_SNAP)
            n = _near_int(dt, _INT_SNAP)
            if m is None or n is None:
                raise CoordinateMismatch(
                    "element is not an integer G-shift away from the (u, v) frame"
                )
            e = g_word(e, m, n, precision)
        return CSValue.canonical(pi * i_ / 2 * log(to_mpc(e.z)), precision)


class TorsionMagnitude(NamedTuple):
    """Torsion defined up to sign: magnitude plus an undetermined-sign flag."""

    magnitude: mpf
    sign_determined: bool = False


def torsion_lambda(
    knot: TorusKnot, alpha: int, beta: int, precision: Precision = DEFAULT_PRECISION
) -> mpf:
    """Twisted torsion along the longitude: 16 sin^2(alpha pi/a) sin^2(beta pi/b) / (ab)^2."""
    with precision.workdps():
        sa = sin(alpha * pi / knot.a)
        sb = sin(beta * pi / knot.b)
        return 16 * sa * sa * sb * sb / (knot.ab * knot.ab)


def torsion_mu(
    knot: TorusKnot, alpha: int, beta: int, precision: Precision = DEFAULT_PRECISION
) -> TorsionMagnitude:
    """Twisted torsion along the meridian, up to sign: ab times the lambda value.

    The base-change factor is dv/du = -ab; only the magnitude is pinned, so
    the sign flag stays undetermined.
    """
    with precision.workdps():
        return TorsionMagnitude(magnitude=knot.ab * torsion_lambda(knot, alpha, beta, precision))

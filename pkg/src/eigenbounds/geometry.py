"""Scalar spectral-geometry helpers on the slit plane C \\ [0, inf).

Distance to the half-line, the square-root branch with positive real
part, the conformal map between the unit disk and the slit plane, the
Koebe distortion lower bound and the resolvent-distance estimates used
by the eigenvalue-sum machinery.
"""

from __future__ import annotations

import cmath

__all__ = [
    "delta",
    "on_halfline",
    "sqrt_neg",
    "psi",
    "psi_inv",
    "koebe_lower",
    "dist_to_segment",
    "resolvent_dist_lower",
]


def delta(z: complex) -> float:
    """Euclidean distance from ``z`` to the half-line [0, inf)."""
    z = complex(z)
    if z.real >= 0.0:
        return abs(z.imag)
    return abs(z)


def on_halfline(z: complex, tol: float = 0.0) -> bool:
    """True when ``z`` lies within ``tol`` of [0, inf)."""
    return delta(z) <= tol


def sqrt_neg(z: complex) -> complex:
    """The root ``w`` of ``w**2 = -z`` with positive real part.

    Defined off the half-line only; ``z`` on [0, inf) is rejected rather
    than assigned a limiting value.
    """
    z = complex(z)
    if on_halfline(z):
        raise ValueError(f"sqrt_neg undefined on [0, inf): z = {z}")
    w = cmath.sqrt(-z)
    if w.real <= 0.0:  # principal branch already has Re >= 0; guard exactly
        w = -w
    return w


def psi(a: float, w: complex) -> complex:
    """Conformal map ``w -> -a*((1+w)/(1-w))**2`` from the unit disk onto the slit plane."""
    if a <= 0:
        raise ValueError("map parameter a must be positive")
    w = complex(w)
    if abs(w) >= 1.0:
        raise ValueError(f"psi requires |w| < 1, got |w| = {abs(w)}")
    r = (1.0 + w) / (1.0 - w)
    return -a * r * r


def psi_inv(a: float, z: complex) -> complex:
    """Inverse of :func:`psi`: ``(sqrt(-z) - sqrt(a)) / (sqrt(-z) + sqrt(a))``."""
    if a <= 0:
        raise ValueError("map parameter a must be positive")
    s = sqrt_neg(z)
    sa = cmath.sqrt(a)
    return (s - sa) / (s + sa)


def koebe_lower(a: float, w: complex) -> float:
    """Koebe distortion lower bound for ``delta(psi(a, w))``.

    Equals ``(1/4)*|psi'(w)|*(1-|w|) = a*|1+w|*(1-|w|)/|1-w|**3``.
    """
    if a <= 0:
        raise ValueError("map parameter a must be positive")
    w = complex(w)
    if abs(w) >= 1.0:
        raise ValueError(f"koebe_lower requires |w| < 1, got |w| = {abs(w)}")
    return a * abs(1.0 + w) * (1.0 - abs(w)) / abs(1.0 - w) ** 3


def dist_to_segment(x: complex, a: float) -> float:
    """Euclidean distance from ``x`` to the real segment [0, 1/a]."""
    if a <= 0:
        raise ValueError("segment parameter a must be positive")
    x = complex(x)
    t = min(max(x.real, 0.0), 1.0 / a)
    return abs(x - t)


def resolvent_dist_lower(e: complex, a: float) -> float:
    """Lower bound ``delta(E) / (8*|E+a|*(|E|+a))`` for ``dist_to_segment((E+a)**-1, a)``."""
    if a <= 0:
        raise ValueError("shift a must be positive")
    e = complex(e)
    if e == -a:
        raise ValueError("E = -a makes (E+a)**-1 undefined")
    return delta(e) / (8.0 * abs(e + a) * (abs(e) + a))

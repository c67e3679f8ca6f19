"""Regularized determinants and multiplicity counting for analytic matrix families.

``det_n`` is evaluated from eigenvalues, which is exact at matrix scale
and avoids series truncation.  Zero orders come from the argument
principle applied to ``z -> det_n(1 + K(z))``; the trace-integral count
(Gohberg-Rouche) provides an independent route to the same number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import numerics
from .numerics import Contour, ConvergenceError

__all__ = [
    "AnalyticFamily",
    "det_n",
    "det_n_function",
    "zero_order",
    "gohberg_rouche_mult",
    "jordan_test_family",
    "detprod_correction",
    "verify_detprod",
]

FD_STEP_FACTOR = 1e-4  # finite-difference step relative to the contour radius


@dataclass(frozen=True)
class AnalyticFamily:
    """Analytic map ``z -> K(z)`` (the compact part of ``1 + K(z)``).

    ``derivative`` may be supplied for exactness; otherwise a 5-point
    central difference with caller-chosen step is used.
    """

    evaluator: Callable[[complex], np.ndarray]
    derivative: Callable[[complex], np.ndarray] | None = None
    domain: str = "slit-plane"

    def value(self, z: complex) -> np.ndarray:
        return numerics.as_cmatrix(self.evaluator(z), square=True)

    def derivative_at(self, z: complex, step: float) -> np.ndarray:
        if self.derivative is not None:
            return numerics.as_cmatrix(self.derivative(z), square=True)
        f = self.evaluator
        return numerics.as_cmatrix(
            (-f(z + 2 * step) + 8 * f(z + step) - 8 * f(z - step) + f(z - 2 * step))
            / (12.0 * step),
            square=True,
        )


def det_n(k, n: int) -> complex:
    """n-th regularized determinant of ``1 + K``.

    Defined spectrally as ``prod_j (1 + lam_j) * exp(sum_{m=1}^{n-1}
    (-1)^m lam_j^m / m)`` over the eigenvalues of ``K``; evaluated here as
    ``det(1 + K) * exp(sum_m (-1)^m tr(K^m)/m)``, which is the same number
    (exact at matrix scale, no series truncation) without an
    eigendecomposition.  ``n = 1`` is the ordinary determinant.
    """
    if n < 1:
        raise ValueError("regularization order n must be >= 1")
    m = numerics.as_cmatrix(k, square=True)
    value = complex(np.linalg.det(np.eye(m.shape[0]) + m))
    power = m
    corr = 0.0 + 0.0j
    for j in range(1, n):
        if j > 1:
            power = power @ m
        corr += (-1.0) ** j * complex(np.trace(power)) / j
    return value * complex(np.exp(corr))


def det_n_function(family: AnalyticFamily, n: int) -> Callable[[complex], complex]:
    """The scalar analytic function ``z -> det_n(1 + K(z))``."""
    return lambda z: det_n(family.value(z), n)


def zero_order(
    family: AnalyticFamily, z0: complex, contour: Contour, n: int
) -> int:
    """Order of the zero of ``det_n(1 + K(.))`` at ``z0`` via the argument principle.

    The contour must enclose ``z0``, keep the determinant nonzero on it,
    and enclose no other zero.
    """
    if abs(z0 - contour.center) >= contour.radius:
        raise ValueError("contour does not enclose z0")
    order = numerics.winding_number(det_n_function(family, n), contour)
    if order < 0:
        raise ConvergenceError(f"negative winding {order}: function not analytic inside")
    return order


def gohberg_rouche_mult(family: AnalyticFamily, contour: Contour) -> int:
    """Total algebraic multiplicity inside ``contour`` by the trace integral.

    Evaluates ``(1/2*pi*i) * integral of tr[(1+K)'(1+K)^-1] dz`` with the
    trapezoid rule, doubling nodes until the value rounds to an integer
    within 0.1.  Requires ``1 + K(z)`` invertible on the contour.
    """
    step = FD_STEP_FACTOR * contour.radius
    nodes = contour.nodes
    while True:
        z = contour.points(nodes)
        total = 0.0 + 0.0j
        for w in z:
            k = family.value(w)
            kp = family.derivative_at(w, step)
            one = np.eye(k.shape[0])
            try:
                total += np.trace(np.linalg.solve(one + k, kp)) * (w - contour.center)
            except np.linalg.LinAlgError as exc:
                raise ValueError(
                    f"1 + K(z) is singular on the contour near z = {w:.6g}"
                ) from exc
        total /= nodes
        residual = abs(total - round(total.real))
        if residual < numerics.WINDING_RESIDUAL_TOL:
            count = int(round(total.real))
            if count < 0:
                raise ConvergenceError(f"negative multiplicity count {count}")
            return count
        if nodes >= numerics.MAX_CONTOUR_NODES:
            raise ConvergenceError(
                f"trace integral residual {residual:.3g} at {nodes} nodes; "
                f"raw value {total:.6g}"
            )
        nodes *= 2


def _random_invertible(rng: np.random.Generator, dim: int, cond_cap: float) -> np.ndarray | None:
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return m if np.linalg.cond(m) <= cond_cap else None


def jordan_test_family(
    z0: complex,
    multiplicities: list[int],
    *,
    dim: int | None = None,
    seed: int = 0,
    max_tries: int = 40,
) -> AnalyticFamily:
    """Construct a family whose eigenvalue at ``z0`` has prescribed multiplicity.

    Builds ``W(z) = E(z) (P0 + sum (z-z0)^{k_i} P_i) G(z)`` with rank-one
    mutually disjoint projections ``P_i``, affine invertible ``E`` and ``G``
    (invertibility radius at least 1 around ``z0``), and returns the family
    of compact parts ``K(z) = W(z) - 1`` with its exact derivative.  The
    zero of ``det_n(W)`` at ``z0`` has order ``sum(multiplicities)`` by
    construction.
    """
    ks = [int(k) for k in multiplicities]
    if not ks or any(k < 1 for k in ks) or ks != sorted(ks):
        raise ValueError("multiplicities must be a nondecreasing list of positive integers")
    r = len(ks)
    dim = r + 2 if dim is None else dim
    if dim < r:
        raise ValueError(f"dimension {dim} too small for {r} rank-one projections")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        s = _random_invertible(rng, dim, cond_cap=50.0)
        e0 = _random_invertible(rng, dim, cond_cap=50.0)
        g0 = _random_invertible(rng, dim, cond_cap=50.0)
        if s is None or e0 is None or g0 is None:
            continue
        e1 = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        g1 = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        # keep E, G invertible on |z - z0| <= 1: ||E0^-1 E1|| <= 0.3
        e1 *= 0.3 / max(np.linalg.norm(np.linalg.solve(e0, e1), 2), 1e-300)
        g1 *= 0.3 / max(np.linalg.norm(np.linalg.solve(g0, g1), 2), 1e-300)
        s_inv = np.linalg.inv(s)

        exps = np.array(ks + [0] * (dim - r), dtype=float)

        def w_func(z, s=s, s_inv=s_inv, e0=e0, e1=e1, g0=g0, g1=g1, exps=exps):
            dz = z - z0
            diag = np.where(exps > 0, dz**exps, 1.0)
            d = s @ np.diag(diag) @ s_inv
            return (e0 + dz * e1) @ d @ (g0 + dz * g1) - np.eye(dim)

        def w_prime(z, s=s, s_inv=s_inv, e0=e0, e1=e1, g0=g0, g1=g1, exps=exps):
            dz = z - z0
            diag = np.where(exps > 0, dz**exps, 1.0)
            diag_p = np.where(exps > 0, exps * dz ** np.maximum(exps - 1, 0), 0.0)
            d = s @ np.diag(diag) @ s_inv
            dp = s @ np.diag(diag_p) @ s_inv
            e = e0 + dz * e1
            g = g0 + dz * g1
            return e1 @ d @ g + e @ dp @ g + e @ d @ g1

        return AnalyticFamily(evaluator=w_func, derivative=w_prime, domain="disk")
    raise ConvergenceError("could not draw a well-conditioned family")


def detprod_correction(k, f, ell, n: int) -> np.ndarray:
    """Correction polynomial ``p_n(K, F, L)`` of the three-factor determinant identity.

    ``p_n = sum_{m=1}^{n-1} ((-1)^m / m) * pi_m`` with
    ``pi_m = (K+F+L+KF+KL+FL+KFL)^m - (K+L+KL)^m``; with finite-rank F the
    result has finite rank.
    """
    if n < 1:
        raise ValueError("regularization order n must be >= 1")
    k = numerics.as_cmatrix(k, square=True)
    f = numerics.as_cmatrix(f, square=True)
    ell = numerics.as_cmatrix(ell, square=True)
    if not (k.shape == f.shape == ell.shape):
        raise ValueError("K, F, L must share one square shape")
    full = k + f + ell + k @ f + k @ ell + f @ ell + k @ f @ ell
    base = k + ell + k @ ell
    out = np.zeros_like(k)
    for m in range(1, n):
        pi_m = np.linalg.matrix_power(full, m) - np.linalg.matrix_power(base, m)
        out += ((-1.0) ** m / m) * pi_m
    return out


def verify_detprod(k, f, ell, n: int) -> float:
    """Relative residual of the identity
    ``det_n((1+K)(1+F)(1+L)) = det(1+F) det_n((1+K)(1+L)) exp(tr p_n)``."""
    k = numerics.as_cmatrix(k, square=True)
    f = numerics.as_cmatrix(f, square=True)
    ell = numerics.as_cmatrix(ell, square=True)
    one = np.eye(k.shape[0])
    lhs = det_n((one + k) @ (one + f) @ (one + ell) - one, n)
    rhs = (
        complex(np.linalg.det(one + f))
        * det_n((one + k) @ (one + ell) - one, n)
        * np.exp(np.trace(detprod_correction(k, f, ell, n)))
    )
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1.0)

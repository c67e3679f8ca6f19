"""Dense complex linear algebra primitives.

Eigenvalues, singular values, Schatten norms, linear solves and contour
integration on circles.  Everything here operates on plain 2-D complex
``numpy`` arrays; :func:`as_cmatrix` is the single entry point that
enforces the matrix contract (finite entries, two dimensions).

All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "ConvergenceError",
    "Contour",
    "as_cmatrix",
    "eig",
    "singular_values",
    "schatten_norm",
    "solve",
    "winding_number",
    "zero_centroid",
]

MAX_CONTOUR_NODES = 8192
WINDING_RESIDUAL_TOL = 0.1


class ConvergenceError(RuntimeError):
    """An iterative numerical procedure failed to reach its target."""


def as_cmatrix(a, *, square: bool = False) -> np.ndarray:
    """Validate and return ``a`` as a 2-D complex array.

    Rejects non-2-D input, NaN/Inf entries and (optionally) non-square
    shapes.  The returned array is a complex view or copy of ``a``.
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class Contour:
    """Counter-clockwise circle ``center + radius * exp(2*pi*i*t)``."""

    center: complex
    radius: float
    nodes: int = 256

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("contour radius must be positive")
        if self.nodes < 16:
            raise ValueError("contour needs at least 16 quadrature nodes")

    def points(self, nodes: int | None = None) -> np.ndarray:
        n = self.nodes if nodes is None else nodes
        t = np.arange(n) / n
        return self.center + self.radius * np.exp(2j * np.pi * t)


def _is_hermitian(a: np.ndarray) -> bool:
    return a.shape[0] == a.shape[1] and np.array_equal(a, a.conj().T)


def eig(a) -> np.ndarray:
    """Eigenvalues of a square matrix, repeated with algebraic multiplicity.

    Backed by LAPACK's Hessenberg reduction plus implicitly shifted QR
    iteration; Hermitian input is routed to the symmetric solver.  A
    convergence failure is reported as :class:`ConvergenceError`, never
    swallowed.
    """
    m = as_cmatrix(a, square=True)
    if m.size == 0:
        return np.zeros(0, dtype=complex)
    try:
        if _is_hermitian(m):
            real = m.real if not m.imag.any() else m
            return np.linalg.eigvalsh(real).astype(complex)
        return np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK cap
        raise ConvergenceError(f"QR iteration did not converge: {exc}") from exc


def singular_values(a) -> np.ndarray:
    """Singular values in descending order; ``s_i**2`` are eigenvalues of ``A*A``."""
    m = as_cmatrix(a)
    if m.size == 0:
        return np.zeros(0)
    return np.linalg.svd(m, compute_uv=False)


def schatten_norm(a, p: float) -> float:
    """``l^p`` norm of the singular value sequence; ``p = inf`` gives the operator norm."""
    if not (p >= 1):
        raise ValueError(f"Schatten exponent must satisfy p >= 1, got {p}")
    s = singular_values(a)
    if s.size == 0:
        return 0.0
    if np.isinf(p):
        return float(s[0])
    return float(np.sum(s**p) ** (1.0 / p))


def solve(a, b) -> np.ndarray:
    """Solve ``A x = b`` for square ``A``, guarding against near-singularity.

    The residual ``||Ax - b||`` is checked against ``1e-10 * ||b||`` scaled
    by an estimated condition number; failures raise ``LinAlgError`` with
    the condition estimate attached.
    """
    m = as_cmatrix(a, square=True)
    rhs = np.asarray(b, dtype=complex)
    try:
        x = np.linalg.solve(m, rhs)
    except np.linalg.LinAlgError as exc:
        cond = float(np.linalg.cond(m))
        raise np.linalg.LinAlgError(
            f"singular matrix in solve (cond estimate {cond:.3e})"
        ) from exc
    residual = float(np.linalg.norm(m @ x - rhs))
    bnorm = float(np.linalg.norm(rhs))
    if residual > 1e-10 * max(bnorm, 1e-300):
        cond = float(np.linalg.cond(m))
        if residual > 1e-10 * bnorm * max(cond, 1.0):
            raise np.linalg.LinAlgError(
                f"solve residual {residual:.3e} exceeds tolerance "
                f"(cond estimate {cond:.3e})"
            )
    return x


def _log_derivative_samples(
    f: Callable[[complex], complex],
    fprime: Callable[[complex], complex] | None,
    z: np.ndarray,
    radius: float,
) -> np.ndarray:
    """Sample ``f'/f`` on the nodes ``z``; derivative by central differences."""
    fz = np.array([f(w) for w in z])
    scale = float(np.max(np.abs(fz)))
    if scale == 0.0 or float(np.min(np.abs(fz))) < 1e-13 * scale:
        raise ValueError("f vanishes on the contour; shrink or move it")
    if fprime is not None:
        dfz = np.array([fprime(w) for w in z])
    else:
        h = 1e-5 * radius
        dfz = np.array([(f(w + h) - f(w - h)) / (2.0 * h) for w in z])
    return dfz / fz


def _winding_raw(f, contour: Contour, fprime, nodes: int) -> complex:
    """Trapezoid value of ``(1/2*pi*i) * integral of f'/f dz`` at a node count."""
    c = Contour(contour.center, contour.radius, nodes)
    z = c.points()
    g = _log_derivative_samples(f, fprime, z, c.radius)
    # dz/dt = 2*pi*i*(z - center); the 2*pi*i cancels the prefactor.
    return complex(np.sum(g * (z - c.center))) / nodes


def winding_number(
    f: Callable[[complex], complex],
    contour: Contour,
    fprime: Callable[[complex], complex] | None = None,
) -> int:
    """Number of zeros of ``f`` enclosed by ``contour``, via the argument principle.

    Evaluates ``(1/2*pi*i) * integral of f'/f`` by trapezoidal quadrature,
    doubling the node count until the result rounds to an integer within
    0.1 (node cap 8192).  ``f`` must be analytic and nonzero on the contour;
    ``fprime`` is used when supplied, otherwise central differences.
    """
    nodes = contour.nodes
    while True:
        total = _winding_raw(f, contour, fprime, nodes)
        residual = abs(total - round(total.real))
        if residual < WINDING_RESIDUAL_TOL:
            return int(round(total.real))
        if nodes >= MAX_CONTOUR_NODES:
            raise ConvergenceError(
                f"winding number residual {residual:.3g} >= {WINDING_RESIDUAL_TOL} "
                f"at {nodes} nodes; raw value {total:.6g}"
            )
        nodes *= 2


def zero_centroid(
    f: Callable[[complex], complex],
    contour: Contour,
    fprime: Callable[[complex], complex] | None = None,
) -> tuple[int, complex]:
    """Zero count inside ``contour`` and the multiplicity-weighted mean location.

    Returns ``(m, s1/m)`` where ``s1`` is the first moment of the enclosed
    zeros.  With a single (possibly multiple) zero inside, the second entry
    is its location.  Requires ``m >= 1``.
    """
    m = winding_number(f, contour, fprime)
    if m < 1:
        raise ValueError("no zero enclosed by the contour")
    z = contour.points()
    g = _log_derivative_samples(f, fprime, z, contour.radius)
    s1 = complex(np.sum(z * g * (z - contour.center))) / len(z)
    return m, s1 / m

"""Grids, complex potentials and discretized 1D Schrodinger operators.

The continuum operator is truncated to a box with Dirichlet boundary
conditions and discretized by second-order central differences on a
uniform grid of interior points.  Potentials are complex samples on the
interior points; L^p norms use the midpoint rule, matching the
piecewise-constant reading of a sampled potential.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import geometry, numerics

__all__ = [
    "Grid1D",
    "Potential",
    "EigRecord",
    "SpectralParams",
    "EnsembleSpec",
    "assemble_h0",
    "assemble_h",
    "eigenvalues_offaxis",
    "records_from_eigenvalues",
    "cluster_eigenvalues",
    "default_delta_floor",
    "lp_norm",
    "lp_norm_power",
    "free_resolvent_kernel_1d",
    "signed_sqrt",
    "birman_schwinger",
    "square_well",
    "potential_ensemble",
    "potential_to_csv",
    "potential_from_csv",
]


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid of ``n`` interior points on (x0, x1), Dirichlet walls at the ends."""

    x0: float
    x1: float
    n: int

    def __post_init__(self):
        if not self.x0 < self.x1:
            raise ValueError("grid requires x0 < x1")
        if self.n < 8:
            raise ValueError("grid needs at least 8 interior points")

    @property
    def h(self) -> float:
        return (self.x1 - self.x0) / (self.n + 1)

    @property
    def points(self) -> np.ndarray:
        return self.x0 + self.h * np.arange(1, self.n + 1)


@dataclass(frozen=True)
class Potential:
    """Complex potential samples on the interior points of a grid."""

    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid.n,):
            raise ValueError(
                f"potential needs {self.grid.n} samples, got shape {v.shape}"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("potential samples must be finite")
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class EigRecord:
    """One eigenvalue with its distance to [0, inf) and algebraic multiplicity."""

    e: complex
    delta: float = field(init=False)
    mult: int = 1

    def __post_init__(self):
        if self.mult < 1:
            raise ValueError("multiplicity must be >= 1")
        object.__setattr__(self, "delta", geometry.delta(self.e))


@dataclass(frozen=True)
class SpectralParams:
    """Exponent bundle consumed by the bound evaluators (d = 1 in core scope)."""

    gamma: float
    eps: float = 0.5
    eps_prime: float = 0.1
    mu: float = 1.0
    nu: float = 1.0
    a: float = 1.0
    d: int = 1

    def __post_init__(self):
        if self.d != 1:
            raise ValueError("only d = 1 is supported")
        if self.gamma < 0.5:
            raise ValueError("gamma must be >= 1/2 for d = 1")
        if self.eps <= 0 or self.eps_prime <= 0:
            raise ValueError("eps and eps_prime must be positive")
        if self.mu < 1 or self.nu < 1:
            raise ValueError("mu and nu must be >= 1")
        if self.a <= 0:
            raise ValueError("a must be positive")

    @property
    def p(self) -> float:
        """Lebesgue exponent gamma + d/2 of the potential norm."""
        return self.gamma + 0.5 * self.d


def assemble_h0(grid: Grid1D) -> np.ndarray:
    """Dirichlet discrete Laplacian: 2/h^2 on the diagonal, -1/h^2 off it."""
    inv_h2 = 1.0 / grid.h**2
    m = np.zeros((grid.n, grid.n), dtype=complex)
    np.fill_diagonal(m, 2.0 * inv_h2)
    idx = np.arange(grid.n - 1)
    m[idx, idx + 1] = -inv_h2
    m[idx + 1, idx] = -inv_h2
    return m


def assemble_h(grid: Grid1D, v: Potential) -> np.ndarray:
    """Discretized Schrodinger operator ``-Laplacian + V``."""
    if v.grid != grid:
        raise ValueError("potential lives on a different grid")
    m = assemble_h0(grid)
    m[np.diag_indices(grid.n)] += v.values
    return m


def default_delta_floor(grid: Grid1D) -> float:
    """Default cutoff separating genuine off-axis eigenvalues from band noise.

    Second-order discretization perturbs eigenvalues at O(h^2) scale, so
    anything within ``10*h^2`` of the half-line is treated as numerically
    on it.
    """
    return 10.0 * grid.h**2


def cluster_eigenvalues(values: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    """Greedy clustering of nearby eigenvalues into (mean, count) groups at tolerance ``tol``."""
    order = np.lexsort((values.imag, values.real))
    clusters: list[list[complex]] = []
    for z in values[order]:
        z = complex(z)
        if clusters and abs(z - clusters[-1][-1]) <= tol:
            clusters[-1].append(z)
        else:
            clusters.append([z])
    return [(complex(np.mean(c)), len(c)) for c in clusters]


def records_from_eigenvalues(
    values: np.ndarray, delta_floor: float, cluster_tol: float
) -> list[EigRecord]:
    """Filter raw eigenvalues by the delta floor and merge clusters into records."""
    if delta_floor < 0:
        raise ValueError("delta_floor must be >= 0")
    values = np.asarray(values, dtype=complex)
    keep = np.array([geometry.delta(z) > delta_floor for z in values], dtype=bool)
    if not np.any(keep):
        return []
    return [EigRecord(z, mult=k) for z, k in cluster_eigenvalues(values[keep], cluster_tol)]


def eigenvalues_offaxis(h, delta_floor: float, *, cluster_tol: float | None = None) -> list[EigRecord]:
    """Eigenvalues of ``h`` with ``delta(E) > delta_floor`` as multiplicity records.

    Clustering tolerance defaults to ``1e-6 * ||H||_F``; near-coincident
    eigenvalues are merged into a single record with their cluster size as
    algebraic multiplicity.
    """
    m = numerics.as_cmatrix(h, square=True)
    lam = numerics.eig(m)
    tol = 1e-6 * float(np.linalg.norm(m)) if cluster_tol is None else cluster_tol
    return records_from_eigenvalues(lam, delta_floor, tol)


def faithful_records(
    h,
    grid: Grid1D,
    delta_floor: float,
    *,
    min_mass: float = 0.9,
    window: float | None = None,
    energy_cap: float | None = None,
    cluster_tol: float | None = None,
) -> tuple[list[EigRecord], dict]:
    """Off-axis eigenvalues restricted to the discretization's trust region.

    Box truncation turns the continuous spectrum into a dense ladder of
    eigenvalues that a complex potential pushes off the real axis; those
    states are wall-filling, so they are rejected by requiring at least
    ``min_mass`` of the eigenvector mass inside ``|x - center| <= window``
    (default: half the distance to the walls).  Eigenvalues beyond
    ``energy_cap`` (default ``1/h**2``, a quarter of the band top) carry
    O(1) dispersion error and are rejected as well.  Returns the surviving
    records plus counts of what was dropped and why.
    """
    m = numerics.as_cmatrix(h, square=True)
    lam, vec = np.linalg.eig(m)
    if window is None:
        window = 0.25 * (grid.x1 - grid.x0)
    if energy_cap is None:
        energy_cap = 1.0 / grid.h**2
    center = 0.5 * (grid.x0 + grid.x1)
    inside = np.abs(grid.points - center) <= window
    mass = np.sum(np.abs(vec[inside, :]) ** 2, axis=0) / np.sum(np.abs(vec) ** 2, axis=0)
    dropped = {"floor": 0, "delocalized": 0, "energy_cap": 0}
    keep = []
    for j, z in enumerate(lam):
        if geometry.delta(z) <= delta_floor:
            dropped["floor"] += 1
        elif abs(z) > energy_cap:
            dropped["energy_cap"] += 1
        elif mass[j] < min_mass:
            dropped["delocalized"] += 1
        else:
            keep.append(z)
    tol = 1e-6 * float(np.linalg.norm(m)) if cluster_tol is None else cluster_tol
    records = (
        [EigRecord(z, mult=k) for z, k in cluster_eigenvalues(np.array(keep), tol)]
        if keep
        else []
    )
    return records, dropped


def lp_norm_power(v: Potential, p: float) -> float:
    """Midpoint-rule value of ``integral of |V|^p`` over the box."""
    if p < 1:
        raise ValueError("Lebesgue exponent must satisfy p >= 1")
    return float(v.grid.h * np.sum(np.abs(v.values) ** p))


def lp_norm(v: Potential, p: float) -> float:
    """Midpoint-rule L^p norm of the potential."""
    return lp_norm_power(v, p) ** (1.0 / p)


def free_resolvent_kernel_1d(z: complex, x, y):
    """Integral kernel of ``(-Laplacian - z)**-1`` on the line.

    Equals ``exp(-kappa*|x-y|) / (2*kappa)`` with ``kappa = sqrt(-z)``,
    ``Re kappa > 0``; symmetric in (x, y) and decaying in |x - y|.
    """
    kappa = geometry.sqrt_neg(z)
    dist = np.abs(np.asarray(x) - np.asarray(y))
    return np.exp(-kappa * dist) / (2.0 * kappa)


def signed_sqrt(v: np.ndarray) -> np.ndarray:
    """Signed square root ``V / sqrt(|V|)``, zero where V vanishes."""
    v = np.asarray(v, dtype=complex)
    out = np.zeros_like(v)
    mask = v != 0
    out[mask] = v[mask] / np.sqrt(np.abs(v[mask]))
    return out


def birman_schwinger(
    v: Potential,
    z: complex,
    mode: str = "discrete",
    *,
    h0: np.ndarray | None = None,
) -> np.ndarray:
    """Birman-Schwinger operator ``sqrt(V) (H0 - z)^-1 sqrt(|V|)``.

    ``discrete`` mode inverts the boxed difference operator; ``nystrom``
    mode assembles the h-weighted free-kernel matrix on the grid points.
    The signed root convention makes ``sqrt(V)*sqrt(|V|) = V`` for complex V.
    """
    if geometry.on_halfline(z):
        raise ValueError(f"z must lie off [0, inf), got {z}")
    left = signed_sqrt(v.values)
    right = np.sqrt(np.abs(v.values)).astype(complex)
    if mode == "discrete":
        m = assemble_h0(v.grid) if h0 is None else numerics.as_cmatrix(h0, square=True)
        m = m - z * np.eye(v.grid.n)
        resolvent_cols = np.linalg.solve(m, np.diag(right))
        return left[:, None] * resolvent_cols
    if mode == "nystrom":
        x = v.grid.points
        g = free_resolvent_kernel_1d(z, x[:, None], x[None, :])
        return left[:, None] * g * right[None, :] * v.grid.h
    raise ValueError(f"unknown mode {mode!r}; expected 'discrete' or 'nystrom'")


def square_well(grid: Grid1D, c: complex, ell: float, x_start: float = 0.0) -> Potential:
    """Well ``V = -(c/ell)`` on the half-open interval [x_start, x_start + ell).

    Membership is decided in grid-index arithmetic with a relative guard,
    so a well whose width is an exact multiple of ``h`` covers exactly
    ``ell/h`` points regardless of floating-point drift.
    """
    if ell <= 0:
        raise ValueError("well width must be positive")
    h = grid.h
    idx = np.arange(1, grid.n + 1)
    i_lo = (x_start - grid.x0) / h - 1e-9
    i_hi = (x_start + ell - grid.x0) / h - 1e-9
    mask = (idx >= i_lo) & (idx < i_hi)
    values = np.where(mask, -c / ell, 0.0).astype(complex)
    return Potential(grid, values)


@dataclass(frozen=True)
class EnsembleSpec:
    """Descriptor of a random potential family.

    Families:

    ``uniform_box``
        iid samples per grid point inside [-support, support], real and
        imaginary parts uniform in [-amplitude, amplitude].
    ``gaussian_bumps``
        Sum of ``bumps`` Gaussians with complex amplitudes in the same
        box, centers uniform in [-support, support] and widths log-uniform
        in [width_min, width_max].  Draws do not depend on the grid, so the
        same seed realizes the same continuum potential on any resolution.
    ``balanced_bumps``
        Gaussian bumps with attractive real parts (Re amplitude in
        [-amplitude, -0.3*amplitude]) and imaginary amplitudes balanced so
        the integral of Im V vanishes.  This removes the leading constant
        shift that box truncation would otherwise impose on high-energy
        states, keeping the spectrum's off-axis part dominated by genuine
        localized eigenvalues.  Grid-independent like ``gaussian_bumps``.
    ``wells``
        Single square well of width ``well_len`` starting at a random
        point in [-support, support - well_len], complex depth ``c/well_len``
        with Re c in (0, amplitude] and Im c in [-amplitude, amplitude].
    """

    family: str
    count: int
    grid: Grid1D
    amplitude: float = 4.0
    support: float = 1.0
    bumps: int = 3
    width_min: float = 0.1
    width_max: float = 0.4
    well_len: float = 0.5
    normalize_l1: float | None = None

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be >= 0")
        if self.family not in ("uniform_box", "gaussian_bumps", "balanced_bumps", "wells"):
            raise ValueError(f"unknown ensemble family {self.family!r}")
        if self.support <= 0 or self.amplitude <= 0:
            raise ValueError("support and amplitude must be positive")
        if not (self.grid.x0 < -self.support and self.support < self.grid.x1):
            raise ValueError("potential support must lie strictly inside the box")


def _complex_uniform(rng: np.random.Generator, amplitude: float, size) -> np.ndarray:
    re = rng.uniform(-amplitude, amplitude, size)
    im = rng.uniform(-amplitude, amplitude, size)
    return re + 1j * im


def potential_ensemble(seed: int, spec: EnsembleSpec) -> list[Potential]:
    """Deterministic list of random potentials drawn per ``spec``."""
    rng = np.random.default_rng(seed)
    x = spec.grid.points
    out: list[Potential] = []
    for _ in range(spec.count):
        if spec.family == "uniform_box":
            inside = np.abs(x) <= spec.support
            values = np.where(inside, _complex_uniform(rng, spec.amplitude, x.size), 0.0)
        elif spec.family in ("gaussian_bumps", "balanced_bumps"):
            if spec.family == "gaussian_bumps":
                amps = _complex_uniform(rng, spec.amplitude, spec.bumps)
            else:
                re = -rng.uniform(0.3 * spec.amplitude, spec.amplitude, spec.bumps)
                im = rng.uniform(-0.6 * spec.amplitude, 0.6 * spec.amplitude, spec.bumps)
                amps = re + 1j * im
            centers = rng.uniform(-spec.support, spec.support, spec.bumps)
            widths = np.exp(
                rng.uniform(np.log(spec.width_min), np.log(spec.width_max), spec.bumps)
            )
            if spec.family == "balanced_bumps":
                # integral of Im V is proportional to sum(Im amps * widths)
                shift = np.sum(amps.imag * widths) / np.sum(widths)
                amps = amps - 1j * shift
            values = np.zeros_like(x, dtype=complex)
            for amp, c0, w in zip(amps, centers, widths):
                values += amp * np.exp(-((x - c0) ** 2) / (2.0 * w**2))
        else:  # wells
            re = rng.uniform(0.1 * spec.amplitude, spec.amplitude)
            im = rng.uniform(-spec.amplitude, spec.amplitude)
            x_start = rng.uniform(-spec.support, spec.support - spec.well_len)
            well = square_well(spec.grid, re + 1j * im, spec.well_len, x_start)
            values = well.values
        v = Potential(spec.grid, values)
        if spec.normalize_l1 is not None:
            mass = lp_norm_power(v, 1.0)
            if mass > 0:
                v = Potential(spec.grid, values * (spec.normalize_l1 / mass))
        out.append(v)
    return out


def potential_to_csv(v: Potential, path: str | Path) -> None:
    """Write the potential as CSV with columns x, re V, im V."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "re_v", "im_v"])
        for x, val in zip(v.grid.points, v.values):
            writer.writerow([repr(float(x)), repr(float(val.real)), repr(float(val.imag))])


def potential_from_csv(path: str | Path) -> Potential:
    """Read a potential written by :func:`potential_to_csv`.

    The grid is reconstructed from the x column, which must be uniform.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["x", "re_v", "im_v"]:
            raise ValueError(f"unexpected potential CSV header {header}")
        rows = [(float(a), float(b), float(c)) for a, b, c in reader]
    if len(rows) < 8:
        raise ValueError("potential CSV needs at least 8 rows")
    x = np.array([r[0] for r in rows])
    h = np.diff(x)
    if not np.allclose(h, h[0], rtol=1e-9, atol=1e-12):
        raise ValueError("potential CSV x column is not uniformly spaced")
    step = float(h[0])
    grid = Grid1D(float(x[0]) - step, float(x[-1]) + step, len(rows))
    values = np.array([complex(r[1], r[2]) for r in rows])
    return Potential(grid, values)

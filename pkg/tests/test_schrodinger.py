import math

import numpy as np
import pytest

from eigenbounds import geometry, numerics
from eigenbounds import schrodinger as sch


class TestGrid:
    def test_spacing(self):
        g = sch.Grid1D(0.0, 1.0, 9)
        assert g.h == pytest.approx(0.1)
        assert np.allclose(g.points, np.linspace(0.1, 0.9, 9))

    def test_invariants(self):
        with pytest.raises(ValueError):
            sch.Grid1D(1.0, 0.0, 20)
        with pytest.raises(ValueError):
            sch.Grid1D(0.0, 1.0, 4)


class TestAssembly:
    def test_unit_spacing_stencil(self):
        g = sch.Grid1D(0.0, 9.0, 8)  # h = 1
        h0 = sch.assemble_h0(g)
        assert np.allclose(h0[:2, :2], [[2.0, -1.0], [-1.0, 2.0]])
        assert np.allclose(np.diag(h0), 2.0)
        assert np.allclose(np.diag(h0, 1), -1.0)
        assert np.allclose(np.diag(h0, -1), -1.0)
        assert np.count_nonzero(h0) == 3 * 8 - 2

    def test_h0_closed_form_spectrum(self):
        g = sch.Grid1D(0.0, 1.0, 40)
        lam = np.sort(numerics.eig(sch.assemble_h0(g)).real)
        k = np.arange(1, 41)
        closed = (4.0 / g.h**2) * np.sin(k * np.pi * g.h / (2.0 * (g.x1 - g.x0))) ** 2
        assert np.max(np.abs(lam - closed)) < 1e-10 * np.max(closed)

    def test_h0_hermitian_nonneg(self):
        g = sch.Grid1D(-2.0, 2.0, 30)
        h0 = sch.assemble_h0(g)
        assert np.allclose(h0, h0.conj().T)
        lam = np.sort(numerics.eig(h0).real)
        assert lam[0] >= -1e-10 * np.linalg.norm(h0)

    def test_ground_state_converges_second_order(self):
        # smallest eigenvalue -> pi^2 / (x1-x0)^2 at rate h^2
        target = np.pi**2
        errs = []
        for n in (32, 64, 128):
            g = sch.Grid1D(0.0, 1.0, n)
            lam = np.min(numerics.eig(sch.assemble_h0(g)).real)
            errs.append(abs(lam - target))
        order = np.log2(errs[0] / errs[1]), np.log2(errs[1] / errs[2])
        assert all(abs(p - 2.0) < 0.1 for p in order)

    def test_zero_potential(self):
        g = sch.Grid1D(-1.0, 1.0, 16)
        v = sch.Potential(g, np.zeros(16, dtype=complex))
        assert np.allclose(sch.assemble_h(g, v), sch.assemble_h0(g))

    def test_constant_shift(self):
        g = sch.Grid1D(-1.0, 1.0, 16)
        c = 0.7 - 0.3j
        v = sch.Potential(g, np.full(16, c))
        lam0 = np.sort_complex(numerics.eig(sch.assemble_h0(g)))
        lam1 = np.sort_complex(numerics.eig(sch.assemble_h(g, v)))
        assert np.max(np.abs(lam1 - (lam0 + c))) < 1e-9 * np.linalg.norm(sch.assemble_h0(g))

    def test_grid_mismatch(self):
        g1 = sch.Grid1D(-1.0, 1.0, 16)
        g2 = sch.Grid1D(-1.0, 1.0, 17)
        v = sch.Potential(g2, np.zeros(17, dtype=complex))
        with pytest.raises(ValueError, match="grid"):
            sch.assemble_h(g1, v)


class TestOffAxis:
    def test_free_operator_empty(self):
        g = sch.Grid1D(-1.0, 1.0, 20)
        assert sch.eigenvalues_offaxis(sch.assemble_h0(g), 1e-6) == []

    def test_diagonal_example(self):
        h = np.diag([-1.0, 3.0, 2.0 + 1.0j])
        recs = sch.eigenvalues_offaxis(h, 1e-6)
        assert len(recs) == 2
        es = sorted((r.e for r in recs), key=lambda z: z.real)
        assert es[0] == pytest.approx(-1.0)
        assert es[1] == pytest.approx(2.0 + 1.0j)
        assert all(r.delta == pytest.approx(1.0) for r in recs)

    def test_matches_filtered_dense_eig(self):
        g = sch.Grid1D(-6.0, 6.0, 60)
        rng = np.random.default_rng(1)
        vals = np.where(
            np.abs(g.points) <= 1.5,
            rng.uniform(-4, 4, 60) + 1j * rng.uniform(-4, 4, 60),
            0.0,
        )
        h = sch.assemble_h(g, sch.Potential(g, vals))
        floor = 0.05
        recs = sch.eigenvalues_offaxis(h, floor)
        oracle = [z for z in numerics.eig(h) if geometry.delta(z) > floor]
        assert sum(r.mult for r in recs) == len(oracle)
        for z in oracle:
            assert min(abs(z - r.e) for r in recs) < 1e-6 * np.linalg.norm(h)

    def test_multiplicity_clustering(self):
        h = np.diag([1.0j, 1.0j + 1e-9, -5.0])
        recs = sch.eigenvalues_offaxis(h, 1e-6, cluster_tol=1e-6)
        by_mult = {r.mult: r for r in recs}
        assert by_mult[2].e == pytest.approx(1.0j, abs=1e-8)
        assert by_mult[1].e == pytest.approx(-5.0)


class TestLpNorm:
    def test_constant_one(self):
        g = sch.Grid1D(0.0, 1.0, 50)
        v = sch.Potential(g, np.ones(50, dtype=complex))
        # midpoint rule gives h*n = n/(n+1), converging to the box length
        assert sch.lp_norm(v, 1.0) == pytest.approx(50.0 / 51.0)
        assert abs(sch.lp_norm(v, 1.0) - 1.0) < 2.0 / 50.0

    def test_constant_imaginary(self):
        g = sch.Grid1D(0.0, 1.0, 50)
        v = sch.Potential(g, np.full(50, 2.0j))
        expected = 2.0 * math.sqrt(50.0 / 51.0)
        assert sch.lp_norm(v, 2.0) == pytest.approx(expected)

    def test_gaussian_bump_against_fine_quadrature(self):
        def f(x):
            return (1.3 - 0.8j) * np.exp(-((x - 0.2) ** 2) / 0.18)

        g = sch.Grid1D(-6.0, 6.0, 400)
        v = sch.Potential(g, f(g.points))
        xs = np.linspace(-6.0, 6.0, 2_000_001)
        for p in (1.0, 1.5, 2.5):
            fine = np.trapz(np.abs(f(xs)) ** p, xs) ** (1.0 / p)
            assert sch.lp_norm(v, p) == pytest.approx(fine, rel=1e-4)

    def test_rejects_bad_exponent(self):
        g = sch.Grid1D(0.0, 1.0, 8)
        v = sch.Potential(g, np.ones(8, dtype=complex))
        with pytest.raises(ValueError):
            sch.lp_norm(v, 0.5)


class TestFreeKernel:
    def test_z_minus_one(self):
        assert sch.free_resolvent_kernel_1d(-1.0, 0.3, -0.4) == pytest.approx(
            0.5 * math.exp(-0.7)
        )

    def test_diagonal_value(self):
        assert sch.free_resolvent_kernel_1d(-4.0, 1.0, 1.0) == pytest.approx(0.25)

    def test_symmetry_exact(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            z = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
            if geometry.delta(z) < 1e-3:
                continue
            x, y = rng.uniform(-3, 3, 2)
            assert sch.free_resolvent_kernel_1d(z, x, y) == sch.free_resolvent_kernel_1d(z, y, x)

    def test_halfline_rejected(self):
        with pytest.raises(ValueError):
            sch.free_resolvent_kernel_1d(2.0, 0.0, 0.0)

    def test_nystrom_matches_matrix_resolvent(self):
        # the h-weighted kernel matrix applied to f approximates (H0-z)^{-1} f,
        # improving at second order in h
        z = -2.0 + 0.8j
        errs = []
        for n in (100, 200, 400):
            g = sch.Grid1D(-10.0, 10.0, n)
            x = g.points
            f = np.exp(-(x**2))
            direct = np.linalg.solve(
                sch.assemble_h0(g) - z * np.eye(n), f
            )
            kernel = sch.free_resolvent_kernel_1d(z, x[:, None], x[None, :])
            nystrom = kernel @ f * g.h
            errs.append(np.max(np.abs(direct - nystrom)))
        order = np.log2(errs[0] / errs[1]), np.log2(errs[1] / errs[2])
        assert all(p > 1.6 for p in order)


class TestBirmanSchwinger:
    def test_zero_potential(self):
        g = sch.Grid1D(-1.0, 1.0, 12)
        v = sch.Potential(g, np.zeros(12, dtype=complex))
        for mode in ("discrete", "nystrom"):
            assert np.allclose(sch.birman_schwinger(v, -1.0, mode), 0.0)

    def test_signed_root_convention(self):
        vals = np.array([0.0, -4.0, 4.0j, 3.0 - 4.0j])
        root = sch.signed_sqrt(vals)
        assert np.allclose(root * np.sqrt(np.abs(vals)), vals)
        assert root[0] == 0.0

    def test_attractive_real_gives_real_spectrum(self):
        # V <= 0 real at z = -a: K is sign-symmetrized, eigenvalues real <= 0
        g = sch.Grid1D(-4.0, 4.0, 40)
        vals = -np.where(np.abs(g.points) <= 1.0, 2.0, 0.0).astype(complex)
        v = sch.Potential(g, vals)
        k = sch.birman_schwinger(v, -1.5, "discrete")
        lam = numerics.eig(k)
        assert np.max(np.abs(lam.imag)) < 1e-9
        assert np.max(lam.real) < 1e-9

    def test_eigenvalue_correspondence_discrete(self):
        # -1 in spec(K(E)) exactly when E in spec(H)
        g = sch.Grid1D(-6.0, 6.0, 48)
        vals = -np.where(np.abs(g.points) <= 1.0, 3.0 + 1.0j, 0.0).astype(complex)
        v = sch.Potential(g, vals)
        h = sch.assemble_h(g, v)
        energies = [z for z in numerics.eig(h) if geometry.delta(z) > 0.2]
        assert energies
        for e in energies:
            k = sch.birman_schwinger(v, e, "discrete")
            assert np.min(np.abs(numerics.eig(k) + 1.0)) < 1e-7
        # and a non-eigenvalue point is far from -1
        k = sch.birman_schwinger(v, -40.0 + 3.0j, "discrete")
        assert np.min(np.abs(numerics.eig(k) + 1.0)) > 0.3

    def test_modes_converge_in_operator_norm(self):
        # discrete and Nystrom operators approach each other as h -> 0
        z = -1.0 + 1.0j  # delta(z) >= 1
        gaps = []
        for n in (60, 120, 240):
            g = sch.Grid1D(-12.0, 12.0, n)
            vals = (1.0 - 0.5j) * np.exp(-g.points**2)
            v = sch.Potential(g, vals)
            kd = sch.birman_schwinger(v, z, "discrete")
            kn = sch.birman_schwinger(v, z, "nystrom")
            gaps.append(numerics.schatten_norm(kd - kn, np.inf))
        assert gaps[1] < gaps[0] and gaps[2] < gaps[1]
        assert np.log2(gaps[0] / gaps[2]) / 2.0 > 0.9  # observed order >= ~1

    def test_halfline_rejected(self):
        g = sch.Grid1D(-1.0, 1.0, 12)
        v = sch.Potential(g, np.zeros(12, dtype=complex))
        with pytest.raises(ValueError):
            sch.birman_schwinger(v, 3.0, "discrete")

    def test_unknown_mode(self):
        g = sch.Grid1D(-1.0, 1.0, 12)
        v = sch.Potential(g, np.zeros(12, dtype=complex))
        with pytest.raises(ValueError, match="mode"):
            sch.birman_schwinger(v, -1.0, "spectral")


class TestScaling:
    def test_eigenvalues_scale_quadratically(self):
        # V_lam(x) = lam^2 V(lam x) on the rescaled grid: E -> lam^2 E
        lam = 2.0
        g1 = sch.Grid1D(-8.0, 8.0, 320)
        v1 = sch.Potential(g1, -(3.0 + 1.5j) * np.exp(-g1.points**2))
        g2 = sch.Grid1D(-8.0 / lam, 8.0 / lam, 320)
        v2 = sch.Potential(g2, lam**2 * (-(3.0 + 1.5j) * np.exp(-((lam * g2.points) ** 2))))
        r1 = sch.eigenvalues_offaxis(sch.assemble_h(g1, v1), 0.05)
        r2 = sch.eigenvalues_offaxis(sch.assemble_h(g2, v2), 0.05 * lam**2)
        assert len(r1) == len(r2) > 0
        e1 = sorted((r.e for r in r1), key=lambda z: (round(z.real, 4), z.imag))
        e2 = sorted((r.e for r in r2), key=lambda z: (round(z.real / lam**2, 4), z.imag))
        for a, b in zip(e1, e2):
            assert abs(lam**2 * a - b) < 5e-3 * max(abs(b), 1.0)


class TestEnsembles:
    def grid(self):
        return sch.Grid1D(-8.0, 8.0, 64)

    def test_deterministic(self):
        spec = sch.EnsembleSpec("uniform_box", 3, self.grid())
        a = sch.potential_ensemble(42, spec)
        b = sch.potential_ensemble(42, spec)
        assert len(a) == len(b) == 3
        for va, vb in zip(a, b):
            assert np.array_equal(va.values, vb.values)

    def test_well_family_definition(self):
        g = self.grid()
        v = sch.square_well(g, 2.0 - 1.0j, 0.5)
        inside = (g.points >= 0.0) & (g.points < 0.5)
        assert np.allclose(v.values[inside], -(2.0 - 1.0j) / 0.5)
        assert np.allclose(v.values[~inside], 0.0)

    def test_norm_target(self):
        spec = sch.EnsembleSpec(
            "gaussian_bumps", 5, self.grid(), amplitude=3.0, normalize_l1=2.5
        )
        for v in sch.potential_ensemble(7, spec):
            assert sch.lp_norm_power(v, 1.0) == pytest.approx(2.5, rel=1e-2)

    def test_balanced_family_zero_imag_integral(self):
        # the imaginary integral is balanced at continuum level; a resolved
        # grid reproduces it to rounding
        g = sch.Grid1D(-8.0, 8.0, 400)
        spec = sch.EnsembleSpec("balanced_bumps", 5, g, amplitude=5.0)
        for v in sch.potential_ensemble(11, spec):
            assert abs(np.sum(v.values.imag)) * v.grid.h < 1e-10
            assert np.all(v.values.real <= 1e-12)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="family"):
            sch.EnsembleSpec("lorentzian", 1, self.grid())

    def test_empty_count(self):
        spec = sch.EnsembleSpec("wells", 0, self.grid())
        assert sch.potential_ensemble(1, spec) == []


class TestCsvRoundTrip:
    def test_roundtrip(self, tmp_path):
        g = sch.Grid1D(-2.0, 2.0, 16)
        rng = np.random.default_rng(8)
        v = sch.Potential(g, rng.standard_normal(16) + 1j * rng.standard_normal(16))
        path = tmp_path / "pot.csv"
        sch.potential_to_csv(v, path)
        back = sch.potential_from_csv(path)
        assert back.grid.n == 16
        assert back.grid.x0 == pytest.approx(-2.0)
        assert back.grid.x1 == pytest.approx(2.0)
        assert np.allclose(back.values, v.values)

    def test_header_checked(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,c\n1,2,3\n")
        with pytest.raises(ValueError, match="header"):
            sch.potential_from_csv(path)


class TestFaithfulRecords:
    def test_drops_band_artifacts(self):
        g = sch.Grid1D(-12.0, 12.0, 200)
        spec = sch.EnsembleSpec("balanced_bumps", 1, g, amplitude=6.0, support=1.5)
        v = sch.potential_ensemble(5, spec)[0]
        h = sch.assemble_h(g, v)
        recs, dropped = sch.faithful_records(h, g, sch.default_delta_floor(g))
        assert dropped["floor"] > 100  # the band ladder stays below the floor
        for r in recs:
            assert abs(r.e) <= 1.0 / g.h**2

import numpy as np
import pytest

from eigenbounds import numerics
from eigenbounds.numerics import Contour, ConvergenceError


def random_complex(rng, shape, scale=1.0):
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


class TestEig:
    def test_diagonal(self):
        lam = sorted(numerics.eig(np.diag([1.0, 2.0j])), key=lambda z: z.real)
        assert lam[0] == pytest.approx(2.0j)
        assert lam[1] == pytest.approx(1.0)

    def test_nilpotent_jordan_block(self):
        lam = numerics.eig([[0.0, 1.0], [0.0, 0.0]])
        assert np.allclose(lam, 0.0)

    def test_prescribed_spectrum_via_similarity(self):
        # A = S J S^{-1} must return the diagonal of J as a multiset
        rng = np.random.default_rng(11_235)
        target = np.array([2.0, 2.0, -1.0 + 1.0j, 0.5j, 3.0])
        j = np.diag(target)
        while True:
            s = random_complex(rng, (5, 5))
            if np.linalg.cond(s) < 50:
                break
        a = s @ j @ np.linalg.inv(s)
        lam = numerics.eig(a)
        for t in target:
            assert np.min(np.abs(lam - t)) < 1e-8
            lam = np.delete(lam, np.argmin(np.abs(lam - t)))

    def test_defective_block_cluster_mean(self):
        # a defective eigenvalue splits at the eps^(1/k) scale, but the
        # cluster mean recovers it to full accuracy
        rng = np.random.default_rng(11_236)
        j = np.diag([2.0, 2.0, -1.0 + 1.0j, 0.5j, 3.0]).astype(complex)
        j[0, 1] = 1.0
        while True:
            s = random_complex(rng, (5, 5))
            if np.linalg.cond(s) < 50:
                break
        a = s @ j @ np.linalg.inv(s)
        lam = numerics.eig(a)
        pair = lam[np.argsort(np.abs(lam - 2.0))[:2]]
        assert abs(np.mean(pair) - 2.0) < 1e-8
        assert np.all(np.abs(pair - 2.0) < 1e-6)

    def test_characteristic_polynomial_residual(self):
        rng = np.random.default_rng(7)
        a = random_complex(rng, (6, 6))
        scale = np.linalg.norm(a) ** 6
        for lam in numerics.eig(a):
            res = abs(np.linalg.det(a - lam * np.eye(6)))
            assert res < 1e-9 * scale

    def test_similarity_invariance(self):
        rng = np.random.default_rng(8)
        a = random_complex(rng, (7, 7))
        while True:
            s = random_complex(rng, (7, 7))
            if np.linalg.cond(s) < 30:
                break
        lam1 = np.sort_complex(numerics.eig(a))
        lam2 = np.sort_complex(numerics.eig(s @ a @ np.linalg.inv(s)))
        assert np.max(np.abs(lam1 - lam2)) < 1e-6

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            numerics.eig(np.zeros((2, 3)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError, match="finite"):
            numerics.eig([[np.nan, 0.0], [0.0, 1.0]])


class TestSingularValues:
    def test_identity(self):
        assert np.allclose(numerics.singular_values(np.eye(3)), 1.0)

    def test_rank_one(self):
        rng = np.random.default_rng(3)
        u = random_complex(rng, 4)
        v = random_complex(rng, 4)
        s = numerics.singular_values(np.outer(u, v.conj()))
        assert s[0] == pytest.approx(np.linalg.norm(u) * np.linalg.norm(v))
        assert np.allclose(s[1:], 0.0, atol=1e-12)

    def test_matches_eig_of_gram_matrix(self):
        rng = np.random.default_rng(4)
        a = random_complex(rng, (4, 4))
        s = numerics.singular_values(a)
        gram = np.sort(numerics.eig(a.conj().T @ a).real)[::-1]
        assert np.max(np.abs(s - np.sqrt(np.maximum(gram, 0.0)))) < 1e-10

    def test_descending(self):
        rng = np.random.default_rng(5)
        s = numerics.singular_values(random_complex(rng, (6, 6)))
        assert np.all(np.diff(s) <= 0)
        assert np.all(s >= 0)


class TestSchattenNorm:
    def test_identity_p2(self):
        assert numerics.schatten_norm(np.eye(2), 2) == pytest.approx(np.sqrt(2))

    def test_identity_operator_norm(self):
        assert numerics.schatten_norm(np.eye(2), np.inf) == pytest.approx(1.0)

    def test_trace_norm_is_singular_value_sum(self):
        rng = np.random.default_rng(6)
        a = random_complex(rng, (3, 3))
        assert numerics.schatten_norm(a, 1) == pytest.approx(
            np.sum(numerics.singular_values(a)), abs=1e-12
        )

    def test_rejects_p_below_one(self):
        with pytest.raises(ValueError, match="p >= 1"):
            numerics.schatten_norm(np.eye(2), 0.5)

    def test_monotone_in_p(self):
        rng = np.random.default_rng(9)
        a = random_complex(rng, (5, 5))
        ps = [1.0, 1.5, 2.0, 3.0, 5.0, 10.0, np.inf]
        norms = [numerics.schatten_norm(a, p) for p in ps]
        assert all(n1 >= n2 - 1e-12 for n1, n2 in zip(norms, norms[1:]))

    def test_triangle_inequality(self):
        rng = np.random.default_rng(10)
        for _ in range(10):
            a = random_complex(rng, (4, 4))
            b = random_complex(rng, (4, 4))
            for p in (1.0, 1.7, 2.0, 4.0, np.inf):
                lhs = numerics.schatten_norm(a + b, p)
                assert lhs <= numerics.schatten_norm(a, p) + numerics.schatten_norm(b, p) + 1e-10

    def test_hoelder_inequality(self):
        rng = np.random.default_rng(11)
        for p, q in ((2.0, 2.0), (1.5, 3.0), (4.0, 4.0 / 3.0), (2.5, 5.0 / 3.0)):
            r = 1.0 / (1.0 / p + 1.0 / q)
            a = random_complex(rng, (5, 5))
            b = random_complex(rng, (5, 5))
            lhs = numerics.schatten_norm(a @ b, r)
            assert lhs <= numerics.schatten_norm(a, p) * numerics.schatten_norm(b, q) + 1e-10


class TestSolve:
    def test_identity(self):
        b = np.array([1.0, 2.0j, -3.0])
        assert np.allclose(numerics.solve(np.eye(3), b), b)

    def test_diagonal(self):
        x = numerics.solve(np.diag([2.0, 1.0j]), [2.0, 1.0j])
        assert np.allclose(x, [1.0, 1.0])

    def test_residual_well_conditioned(self):
        rng = np.random.default_rng(12)
        a = random_complex(rng, (6, 6)) + 4.0 * np.eye(6)
        b = random_complex(rng, 6)
        x = numerics.solve(a, b)
        residual = np.linalg.norm(a @ x - b)
        assert residual <= 1e-10 * np.linalg.norm(b) * np.linalg.cond(a)

    def test_singular_reports_condition(self):
        with pytest.raises(np.linalg.LinAlgError, match="cond"):
            numerics.solve(np.zeros((3, 3)), np.ones(3))


class TestWinding:
    def test_simple_zero(self):
        z0 = 0.3 + 0.1j
        c = Contour(z0, 0.7, 64)
        assert numerics.winding_number(lambda z: z - z0, c) == 1

    def test_triple_zero(self):
        z0 = -1.0 + 0.5j
        c = Contour(z0, 0.5, 64)
        assert numerics.winding_number(lambda z: (z - z0) ** 3, c) == 3

    def test_polynomial_zero_count_exact(self):
        roots = [0.2, -0.5 + 0.4j, 1.5, 0.1 - 0.3j]

        def poly(z):
            out = 1.0 + 0.0j
            for r in roots:
                out *= z - r
            return out

        c = Contour(0.0, 1.0, 128)
        inside = sum(1 for r in roots if abs(r) < 1.0)
        assert numerics.winding_number(poly, c) == inside

    def test_supplied_derivative(self):
        c = Contour(0.0, 1.0, 32)
        n = numerics.winding_number(lambda z: z**2, c, fprime=lambda z: 2 * z)
        assert n == 2

    def test_zero_on_contour_rejected(self):
        c = Contour(0.0, 1.0, 64)
        with pytest.raises(ValueError, match="vanishes"):
            numerics.winding_number(lambda z: z - 1.0, c)

    def test_centroid_locates_zero(self):
        z0 = 0.35 + 0.05j
        c = Contour(0.3, 0.5, 128)
        m, loc = numerics.zero_centroid(lambda z: (z - z0) ** 2, c)
        assert m == 2
        assert abs(loc - z0) < 1e-9


class TestContour:
    def test_invariants(self):
        with pytest.raises(ValueError):
            Contour(0.0, -1.0)
        with pytest.raises(ValueError):
            Contour(0.0, 1.0, nodes=8)

    def test_points_on_circle(self):
        c = Contour(1.0 + 1.0j, 2.0, 16)
        pts = c.points()
        assert len(pts) == 16
        assert np.allclose(np.abs(pts - (1.0 + 1.0j)), 2.0)

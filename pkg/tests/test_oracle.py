import math

import numpy as np
import pytest

from qgem import (COMPUTATIONAL, dicke, eigen_oracle, geometric_entanglement, ghz,
                  grid_oracle, make_state, random_state, reduced_density, split_qubit,
                  werner)

INVSQRT2 = 1.0 / math.sqrt(2.0)


class TestReducedDensity:
    def test_pure_zero_state(self):
        rho = reduced_density(make_state(2, (1, 0, 0, 0)), 1)
        assert rho.r00 == 1.0
        assert rho.r11 == 0.0
        assert rho.r01 == 0.0

    def test_ghz3_middle_qubit(self):
        rho = reduced_density(ghz(3, INVSQRT2, INVSQRT2), 2)
        assert abs(rho.r00 - 0.5) < 1e-12
        assert abs(rho.r11 - 0.5) < 1e-12
        assert abs(rho.r01) < 1e-15

    def test_matches_split_data(self):
        # diagonal entries are the squared split weights, the off-diagonal
        # modulus is a*b times the companion overlap
        rng = np.random.default_rng(41)
        for _ in range(30):
            psi = random_state(4, rng)
            for q in range(1, 5):
                split = split_qubit(psi, q, COMPUTATIONAL)
                rho = reduced_density(psi, q)
                assert abs(rho.r00 - split.a**2) < 1e-12
                assert abs(rho.r11 - split.b**2) < 1e-12
                assert abs(abs(rho.r01) - split.a * split.b * abs(split.overlap)) < 1e-12

    def test_invariants(self):
        rng = np.random.default_rng(42)
        for _ in range(20):
            rho = reduced_density(random_state(3, rng), 2)
            assert abs(rho.r00 + rho.r11 - 1.0) < 1e-12
            assert rho.r00 >= -1e-12 and rho.r11 >= -1e-12
            assert rho.r00 * rho.r11 - abs(rho.r01) ** 2 >= -1e-12

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError, match="out of range"):
            reduced_density(make_state(2, (1, 0, 0, 0)), 3)


class TestEigenOracle:
    @pytest.mark.parametrize("n", range(2, 13))
    def test_proper_werner(self, n):
        psi = werner([1.0 / math.sqrt(n)] * n)
        for q in range(1, n + 1):
            assert abs(eigen_oracle(psi, q) - 1.0 / n) < 1e-12

    def test_product_state(self):
        assert eigen_oracle(make_state(3, [1] + [0] * 7), 1) == 0.0

    def test_matches_closed_form_on_random_states(self):
        rng = np.random.default_rng(43)
        for _ in range(40):
            psi = random_state(5, rng)
            for q in range(1, 6):
                dev = abs(eigen_oracle(psi, q) - geometric_entanglement(psi, q).E)
                assert dev < 1e-10

    def test_bounds(self):
        rng = np.random.default_rng(44)
        for _ in range(30):
            e = eigen_oracle(random_state(4, rng), 2)
            assert 0.0 <= e <= 0.5


class TestGridOracle:
    def test_proper_ghz4(self):
        report = grid_oracle(ghz(4, INVSQRT2, INVSQRT2), 1,
                             coarse_points=64, refinement_rounds=6)
        assert abs(report.E_est - 0.5) < 1e-6

    def test_balanced_dicke(self):
        report = grid_oracle(dicke(6, 3), 1)
        assert abs(report.E_est - 0.5) < 1e-6

    def test_agrees_with_eigen_oracle(self):
        rng = np.random.default_rng(45)
        for _ in range(20):
            psi = random_state(4, rng)
            for q in range(1, 5):
                report = grid_oracle(psi, q, coarse_points=64, refinement_rounds=8)
                assert abs(report.E_est - eigen_oracle(psi, q)) < 1e-6

    def test_monotone_in_refinement_rounds(self):
        psi = random_state(5, np.random.default_rng(46))
        previous = math.inf
        for rounds in range(10):
            est = grid_oracle(psi, 2, coarse_points=64, refinement_rounds=rounds).E_est
            assert est <= previous
            previous = est

    def test_deterministic(self):
        psi = random_state(4, np.random.default_rng(47))
        first = grid_oracle(psi, 3)
        second = grid_oracle(psi, 3)
        assert first == second

    def test_analytic_maximizer_never_beaten(self):
        rng = np.random.default_rng(48)
        for _ in range(20):
            psi = random_state(3, rng)
            e_closed = geometric_entanglement(psi, 1).E
            e_grid = grid_oracle(psi, 1).E_est
            assert (1.0 - e_closed) >= (1.0 - e_grid) - 1e-9

    def test_report_fields(self):
        report = grid_oracle(ghz(2, 1, 0), 1, coarse_points=32, refinement_rounds=3)
        assert report.grid_points == 32
        assert report.refinement_rounds == 3
        assert -1e-9 <= report.E_est <= 0.5 + 1e-9
        assert 0.0 <= report.theta_best <= math.pi
        assert 0.0 <= report.alpha_best < 2 * math.pi

    def test_rejects_bad_resolution(self):
        psi = ghz(2, 1, 0)
        with pytest.raises(ValueError, match="16-point"):
            grid_oracle(psi, 1, coarse_points=8)
        with pytest.raises(ValueError, match="nonnegative"):
            grid_oracle(psi, 1, refinement_rounds=-1)


def test_independent_optimizer_agrees():
    """Direct product-manifold maximization (no analytic inner step) must
    land on the same value as the eigenvalue route."""
    from scipy.optimize import minimize

    psi = random_state(3, np.random.default_rng(49))
    q = 2
    m = 4

    def negf(x):
        chi = np.array([x[0] + 1j * x[1], x[2] + 1j * x[3]])
        phi = x[4:4 + m] + 1j * x[4 + m:4 + 2 * m]
        nc, npv = np.linalg.norm(chi), np.linalg.norm(phi)
        if nc < 1e-9 or npv < 1e-9:
            return 0.0
        arr = np.outer(chi / nc, phi / npv).reshape((2,) * 3)
        arr = np.moveaxis(arr, 0, q - 1).ravel()
        return -abs(np.vdot(psi.amps, arr)) ** 2

    rng = np.random.default_rng(50)
    best = max(-minimize(negf, rng.standard_normal(4 + 2 * m), method="L-BFGS-B").fun
               for _ in range(12))
    assert abs((1.0 - best) - eigen_oracle(psi, q)) < 1e-7


class TestRandomState:
    def test_reproducible(self):
        a = random_state(3, np.random.default_rng(51))
        b = random_state(3, np.random.default_rng(51))
        assert np.array_equal(a.amps, b.amps)

    def test_normalized(self):
        psi = random_state(6, np.random.default_rng(52))
        assert abs(np.linalg.norm(psi.amps) - 1.0) < 1e-12

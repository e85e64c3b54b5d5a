"""
tests/unit/potentials/test_weinstein.py

Unit tests for the Weinstein operator, its adjoint and the operator identities.
"""

import math

import numpy as np
import pytest

from axipot.data_models.geometry import CartesianPoint
from axipot.data_models.weinstein import AngleConvention, KernelBranch, ReferenceKind, WeinsteinParam
from axipot.potentials.weinstein import (
    apply_Lm,
    apply_Lm_star,
    conjugation_residuals,
    derivative_scale,
    lm_residuals,
    lm_star_residuals,
    mean_value_residual,
    random_smooth_field,
    reference_solution,
    weinstein_principle_residual,
)
from axipot.utils.exceptions import DomainError, StepError


def _y(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.asarray(y, dtype=complex) + 0.0 * x


def _x_squared(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x * x + 0.0 * y


def _one(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.ones(np.broadcast(x, y).shape, dtype=complex)


class TestWeinsteinParam:
    """Test cases for WeinsteinParam."""

    @pytest.mark.parametrize("m, branch", [(0.5, KernelBranch.RE_M_LT_1), (1.0, KernelBranch.RE_M_GE_1), (0.999 + 5j, KernelBranch.RE_M_LT_1), (3 - 2j, KernelBranch.RE_M_GE_1)])
    def test_branch(self, m: complex, branch: KernelBranch) -> None:
        """The branch flips at Re m = 1."""
        assert WeinsteinParam(m=m).branch is branch

    def test_mu(self) -> None:
        """mu = (m - 1)/2."""
        assert WeinsteinParam(m=2 + 2j).mu == pytest.approx(0.5 + 1j)

    def test_serialized_fields(self) -> None:
        """The derived fields are part of the dump."""
        dumped = WeinsteinParam(m=0.0).model_dump()
        assert dumped["branch"] == "re_m_lt_1"
        assert dumped["mu"] == -0.5


class TestApplyLm:
    """Test cases for apply_Lm and apply_Lm_star."""

    def test_linear_y(self) -> None:
        """u = y is annihilated for any m."""
        assert abs(apply_Lm(_y, 1.7 - 0.4j, CartesianPoint(x=1.0, y=2.0), 1e-4)) <= 1e-8

    def test_quadratic(self) -> None:
        """x^2 - 3y^2 solves L_2."""
        assert abs(apply_Lm(reference_solution("quadratic", 2.0), 2.0, CartesianPoint(x=0.7, y=-0.3), 1e-4)) <= 1e-6

    def test_x_squared(self) -> None:
        """L_3 x^2 = 2 + 2m = 8."""
        assert apply_Lm(_x_squared, 3.0, CartesianPoint(x=1.0, y=0.0), 1e-4) == pytest.approx(8.0, abs=1e-5)

    def test_default_step(self) -> None:
        """Omitting h uses Config.FD_STEP."""
        assert apply_Lm(_x_squared, 3.0, CartesianPoint(x=1.0, y=0.0)) == pytest.approx(8.0, abs=1e-5)

    def test_step_error(self) -> None:
        """p.x <= h raises StepError."""
        with pytest.raises(StepError):
            apply_Lm(_y, 1.0, CartesianPoint(x=1e-5, y=0.0), 1e-4)

    def test_adjoint_on_x(self) -> None:
        """L_1* x = -1/x + x/x^2 = 0."""
        assert abs(apply_Lm_star(lambda x, y: x + 0.0 * y, 1.0, CartesianPoint(x=1.3, y=0.4))) <= 1e-6

    def test_adjoint_on_constant(self) -> None:
        """L_4* 1 = 4/x^2 = 1 at x = 2."""
        assert apply_Lm_star(_one, 4.0, CartesianPoint(x=2.0, y=0.0)) == pytest.approx(1.0, abs=1e-6)

    def test_adjoint_on_y(self) -> None:
        """L_m* y = m y/x^2."""
        value = apply_Lm_star(_y, 2.0, CartesianPoint(x=1.0, y=0.5))
        assert value == pytest.approx(1.0, abs=1e-6)

    def test_adjoint_batch(self) -> None:
        """The batched adjoint agrees with the pointwise one."""
        x = np.array([0.8, 1.5, 3.0])
        y = np.array([-0.5, 0.0, 1.2])
        batch = lm_star_residuals(_x_squared, 1 + 0.5j, x, y)
        for xi, yi, value in zip(x, y, batch):
            assert value == pytest.approx(apply_Lm_star(_x_squared, 1 + 0.5j, CartesianPoint(x=xi, y=yi)), abs=1e-9)

    @pytest.mark.parametrize("kind", list(ReferenceKind))
    @pytest.mark.parametrize("m", [-1.0, 0.0, 0.5, 2.0, 1 + 1j])
    def test_reference_solutions_annihilated(self, kind: ReferenceKind, m: complex, rng: np.random.Generator) -> None:
        """Every reference solution solves L_m u = 0 at random points."""
        u = reference_solution(kind, m)
        x = rng.uniform(0.1, 5.0, size=100)
        y = rng.uniform(-3.0, 3.0, size=100)
        residuals = lm_residuals(u, m, x, y, 1e-4)
        for xi, yi, residual in zip(x, y, residuals):
            scale = derivative_scale(u, CartesianPoint(x=xi, y=yi))
            assert abs(residual) <= 1e-5 * (1.0 + scale)


class TestIdentities:
    """Test cases for the conjugation identities and the Weinstein principle."""

    def test_conjugation_polynomial(self) -> None:
        """x^2 y + y^3 with m = 1.5."""
        r1, r2 = conjugation_residuals(lambda x, y: x * x * y + y ** 3, 1.5, CartesianPoint(x=1.0, y=1.0))
        assert abs(r1) <= 1e-4
        assert abs(r2) <= 1e-4

    def test_conjugation_exponential(self) -> None:
        """exp(x) cos(y) with m = -1."""
        r1, r2 = conjugation_residuals(lambda x, y: np.exp(x) * np.cos(y), -1.0, CartesianPoint(x=0.5, y=0.2))
        assert abs(r1) <= 1e-4
        assert abs(r2) <= 1e-4

    def test_conjugation_constant(self) -> None:
        """S_m L_m* 1 = L_m x^(-m) for a constant field."""
        r1, _ = conjugation_residuals(_one, 2.5, CartesianPoint(x=1.2, y=0.0))
        assert abs(r1) <= 1e-4

    def test_conjugation_step_error(self) -> None:
        """Nested stencils need p.x > 2h."""
        with pytest.raises(StepError):
            conjugation_residuals(_one, 1.0, CartesianPoint(x=1.5e-3, y=0.0), 1e-3)

    def test_random_sweep(self, rng: np.random.Generator) -> None:
        """Both identities and the principle hold for random fields and parameters."""
        ms = [complex(rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 1.0)) for _ in range(5)]
        for _ in range(20):
            f = random_smooth_field(rng)
            p = CartesianPoint(x=float(rng.uniform(1.0, 2.0)), y=float(rng.uniform(-0.5, 0.5)))
            for m in ms:
                r1, r2 = conjugation_residuals(f, m, p, 5e-4)
                assert abs(r1) <= 1e-4
                assert abs(r2) <= 1e-4
                assert weinstein_principle_residual(f, m, p) <= 1e-4

    def test_principle_on_solution(self) -> None:
        """Both sides vanish for the quadratic solution."""
        u = reference_solution(ReferenceKind.QUADRATIC, 0.5)
        assert weinstein_principle_residual(u, 0.5, CartesianPoint(x=1.0, y=1.0)) <= 1e-4

    def test_principle_on_cube(self) -> None:
        """x^3 with m = 2, where both sides equal 12x."""
        assert weinstein_principle_residual(lambda x, y: x ** 3 + 0.0 * y, 2.0, CartesianPoint(x=1.0, y=0.0)) <= 1e-4

    def test_principle_complex_m(self) -> None:
        """sin(xy) with m = 1 + i."""
        assert weinstein_principle_residual(lambda x, y: np.sin(x * y), 1 + 1j, CartesianPoint(x=0.8, y=0.4)) <= 1e-4


class TestReferenceSolution:
    """Test cases for reference_solution."""

    def test_quadratic_value(self) -> None:
        """m = 2 at (1, 1) gives 1 - 3 = -2."""
        assert complex(reference_solution("quadratic", 2.0)(1.0, 1.0)) == pytest.approx(-2.0)

    def test_power_value(self) -> None:
        """x^(1-m) with m = 0.5 at (4, 0) is 2."""
        assert complex(reference_solution("power", 0.5)(4.0, 0.0)) == pytest.approx(2.0)

    def test_linear_value(self) -> None:
        """linear_y returns y."""
        assert complex(reference_solution("linear_y", 3.0)(0.1, -7.0)) == pytest.approx(-7.0)

    def test_unknown_kind(self) -> None:
        """Unknown kinds are rejected."""
        with pytest.raises(ValueError):
            reference_solution("cubic", 1.0)

    @pytest.mark.parametrize("kind", list(ReferenceKind))
    def test_gradient_matches_differences(self, kind: ReferenceKind) -> None:
        """The analytic gradient agrees with central differences."""
        u = reference_solution(kind, 0.3 + 0.2j)
        x, y, h = 1.4, -0.6, 1e-6
        u_x, u_y = u.gradient(x, y)
        assert complex(u_x) == pytest.approx(complex((u(x + h, y) - u(x - h, y)) / (2 * h)), abs=1e-7)
        assert complex(u_y) == pytest.approx(complex((u(x, y + h) - u(x, y - h)) / (2 * h)), abs=1e-7)


class TestMeanValue:
    """Test cases for mean_value_residual."""

    def test_quadratic(self) -> None:
        """x^2 - 3y^2 with m = 2 and r = 0.5."""
        assert mean_value_residual(2, reference_solution("quadratic", 2.0), 0.5) <= 1e-8

    def test_linear_y(self) -> None:
        """u = y with m = 1 has an odd integrand."""
        assert mean_value_residual(1, reference_solution("linear_y", 1.0), 1.0) <= 1e-8

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("r", [0.3, 1.0, 2.5])
    def test_constant(self, m: int, r: float) -> None:
        """u = 1 balances exactly."""
        assert mean_value_residual(m, _one, r) <= 1e-12

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("kind", [ReferenceKind.CONSTANT, ReferenceKind.LINEAR_Y, ReferenceKind.QUADRATIC])
    def test_axial_half_circle(self, m: int, kind: ReferenceKind) -> None:
        """Over the right half-circle the formula holds on all polynomial solutions."""
        assert mean_value_residual(m, reference_solution(kind, m), 0.8, AngleConvention.AXIAL) <= 1e-8

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_quadratic_default_convention(self, m: int) -> None:
        """The default convention balances the quadratic solution for m = 1, 2, 3."""
        assert mean_value_residual(m, reference_solution("quadratic", m), 0.8) <= 1e-8

    def test_default_convention_even_m_for_y(self) -> None:
        """From the y-axis on (-pi/2, pi/2), u = y leaves 2r/3 for m = 2."""
        residual = mean_value_residual(2, reference_solution("linear_y", 2.0), 1.5)
        assert residual == pytest.approx(1.0, rel=1e-8)

    def test_x_axis_convention_fails_for_y(self) -> None:
        """Measuring from the x-axis breaks the formula for u = y: the residual is r*pi/2."""
        residual = mean_value_residual(1, reference_solution("linear_y", 1.0), 1.0, AngleConvention.FROM_X_AXIS)
        assert residual == pytest.approx(math.pi / 2.0, rel=1e-8)

    @pytest.mark.parametrize("m", [0, -1, 1.5])
    def test_non_integer_m(self, m: float) -> None:
        """m must be a positive integer."""
        with pytest.raises(DomainError, match="positive integer"):
            mean_value_residual(m, _one, 1.0)  # type: ignore[arg-type]

    def test_radius(self) -> None:
        """r must be positive."""
        with pytest.raises(DomainError, match="radius"):
            mean_value_residual(1, _one, 0.0)

"""
tests/unit/numerics/test_complexcore.py

Unit tests for complex special functions and quadrature primitives.
"""

import cmath
import math

import numpy as np
import pytest
from scipy import integrate as sp_integrate
from scipy import special

from axipot.data_models.quadrature import EndpointMode, QuadratureConfig
from axipot.numerics.complexcore import (
    cpow_posbase,
    elliptic_K,
    gamma,
    gamma_ratio,
    geometric_breakpoints,
    integrate,
    integrate_vectorized,
    log_gamma,
    semi_infinite_integrate,
    truncation_point,
)
from axipot.utils.exceptions import DomainError, PoleError, QuadratureError


class TestGamma:
    """Test cases for the complex Gamma function."""

    def test_gamma_one(self) -> None:
        """Gamma(1) = 1."""
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-14)

    def test_gamma_half(self) -> None:
        """Gamma(1/2) = sqrt(pi)."""
        assert gamma(0.5) == pytest.approx(1.772453850905516, rel=1e-13)

    def test_recurrence(self) -> None:
        """Gamma(z+1) = z Gamma(z)."""
        z = 0.3 + 0.7j
        assert abs(gamma(z + 1.0) / (z * gamma(z)) - 1.0) < 1e-13

    @pytest.mark.parametrize("z", [0.0, -1.0, -2.0, -7.0])
    def test_poles(self, z: float) -> None:
        """Non-positive integers raise PoleError."""
        with pytest.raises(PoleError, match="pole"):
            gamma(z)

    def test_matches_scipy(self, rng: np.random.Generator) -> None:
        """Agrees with scipy on a box of the complex plane."""
        for _ in range(50):
            z = complex(rng.uniform(-8.0, 25.0), rng.uniform(-15.0, 15.0))
            if abs(z.imag) < 0.2 and z.real < 0.5:
                continue
            assert abs(gamma(z) / special.gamma(z) - 1.0) < 1e-11

    def test_reflection(self, rng: np.random.Generator) -> None:
        """Gamma(z) Gamma(1-z) sin(pi z) / pi = 1 off the integer lattice."""
        for _ in range(50):
            z = complex(rng.uniform(-5.0, 5.0), rng.uniform(-3.0, 3.0))
            value = gamma(z) * gamma(1.0 - z) * cmath.sin(math.pi * z) / math.pi
            assert abs(value - 1.0) < 1e-10

    def test_duplication(self, rng: np.random.Generator) -> None:
        """Gamma(2z) = pi^(-1/2) 2^(2z-1) Gamma(z) Gamma(z+1/2)."""
        for _ in range(30):
            z = complex(rng.uniform(0.1, 6.0), rng.uniform(-4.0, 4.0))
            rhs = 2.0 ** (2.0 * z - 1.0) * gamma(z) * gamma(z + 0.5) / math.sqrt(math.pi)
            assert abs(gamma(2.0 * z) / rhs - 1.0) < 1e-10

    def test_log_gamma_large_argument(self) -> None:
        """log_gamma agrees with scipy up to a multiple of 2*pi*i where Gamma overflows."""
        for z in (200.5 + 3.0j, 450.0 - 10.0j, 30.0 + 0.5j):
            difference = log_gamma(z) - special.loggamma(z)
            assert abs(cmath.exp(difference) - 1.0) < 1e-11

    def test_gamma_ratio(self) -> None:
        """Gamma(a)/Gamma(b) for large arguments stays finite."""
        ratio = gamma_ratio(300.5 + 0.2j, 300.0)
        expected = cmath.exp(special.loggamma(300.5 + 0.2j) - special.loggamma(300.0))
        assert abs(ratio / expected - 1.0) < 1e-11


class TestCpowPosbase:
    """Test cases for complex powers of positive bases."""

    def test_identity_exponent(self) -> None:
        """e^1 = e."""
        assert cpow_posbase(math.e, 1.0) == pytest.approx(math.e, rel=1e-15)

    def test_square_root(self) -> None:
        """4^(1/2) = 2."""
        assert cpow_posbase(4.0, 0.5) == pytest.approx(2.0, rel=1e-15)

    def test_conjugate_exponents(self) -> None:
        """2^i * 2^-i = 1."""
        assert abs(cpow_posbase(2.0, 1j) * cpow_posbase(2.0, -1j) - 1.0) < 1e-15

    def test_exponent_additivity(self, rng: np.random.Generator) -> None:
        """b^(z1+z2) = b^z1 b^z2."""
        for _ in range(20):
            b = rng.uniform(0.1, 10.0)
            z1 = complex(*rng.uniform(-2.0, 2.0, size=2))
            z2 = complex(*rng.uniform(-2.0, 2.0, size=2))
            lhs = cpow_posbase(b, z1 + z2)
            assert abs(lhs - cpow_posbase(b, z1) * cpow_posbase(b, z2)) <= 1e-13 * abs(lhs)

    def test_array_input(self) -> None:
        """Arrays broadcast against the exponent."""
        result = cpow_posbase(np.array([1.0, 4.0, 9.0]), 0.5)
        np.testing.assert_allclose(result, [1.0, 2.0, 3.0], rtol=1e-15)

    @pytest.mark.parametrize("b", [0.0, -1.0])
    def test_non_positive_base(self, b: float) -> None:
        """Bases <= 0 raise DomainError."""
        with pytest.raises(DomainError, match="positive base"):
            cpow_posbase(b, 0.5)


class TestEllipticK:
    """Test cases for the complete elliptic integral of the first kind."""

    def test_zero_modulus(self) -> None:
        """K(0) = pi/2."""
        assert elliptic_K(0.0) == pytest.approx(math.pi / 2.0, rel=1e-15)

    def test_against_quadrature(self) -> None:
        """K(0.6) equals the defining integral."""
        k = 0.6
        expected, _ = sp_integrate.quad(lambda p: 1.0 / math.sqrt(1.0 - (k * math.sin(p)) ** 2), 0.0, math.pi / 2.0, epsabs=1e-14, epsrel=1e-14)
        assert elliptic_K(k) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("k", [0.1, 0.5, 0.9, 0.999])
    def test_against_scipy(self, k: float) -> None:
        """scipy.special.ellipk takes the parameter k^2."""
        assert elliptic_K(k) == pytest.approx(special.ellipk(k * k), rel=1e-14)

    def test_monotone(self) -> None:
        """K grows toward k = 1."""
        assert elliptic_K(0.99) > elliptic_K(0.9)

    @pytest.mark.parametrize("k", [1.0, 1.5, -0.1])
    def test_domain(self, k: float) -> None:
        """k outside [0, 1) raises DomainError."""
        with pytest.raises(DomainError, match="0 <= k < 1"):
            elliptic_K(k)


class TestIntegrate:
    """Test cases for integrate and integrate_vectorized."""

    def test_sine(self) -> None:
        """Integral of sin over [0, pi] is 2."""
        assert integrate(math.sin, 0.0, math.pi) == pytest.approx(2.0, abs=1e-12)

    def test_inverse_square_root_singular_mode(self) -> None:
        """t^(-1/2) on [0, 1] integrates to 2 in singular mode."""
        cfg = QuadratureConfig(endpoint_mode=EndpointMode.ALGEBRAIC_SINGULARITY)
        assert integrate(lambda t: t ** -0.5, 0.0, 1.0, cfg) == pytest.approx(2.0, abs=1e-10)

    def test_sine_power(self) -> None:
        """Integral of sin^(1-m) for m = 0.5 matches the Beta-function value."""
        m = 0.5
        a = 1.0 - m
        expected = math.sqrt(math.pi) * special.gamma((a + 1.0) / 2.0) / special.gamma(a / 2.0 + 1.0)
        cfg = QuadratureConfig().singular()
        assert integrate(lambda t: math.sin(t) ** a, 0.0, math.pi, cfg) == pytest.approx(expected, rel=1e-10)

    def test_complex_integrand(self) -> None:
        """Real and imaginary parts are integrated together."""
        value = integrate(lambda t: cmath.exp(1j * t), 0.0, math.pi / 2.0)
        assert abs(value - (1.0 + 1j)) < 1e-12

    def test_linearity(self) -> None:
        """The integral is linear in the integrand."""
        f = math.cos
        g = lambda t: t * t  # noqa: E731
        a, b = 2.0 - 1.0j, 0.5
        combined = integrate(lambda t: a * f(t) + b * g(t), 0.0, 2.0)
        separate = a * integrate(f, 0.0, 2.0) + b * integrate(g, 0.0, 2.0)
        assert abs(combined - separate) < 1e-10

    def test_empty_interval(self) -> None:
        """a >= b raises DomainError."""
        with pytest.raises(DomainError, match="a < b"):
            integrate(math.sin, 1.0, 1.0)

    def test_divergent_integral(self) -> None:
        """A non-integrable singularity raises QuadratureError with the best estimate."""
        with pytest.raises(QuadratureError) as excinfo:
            integrate(lambda t: 1.0 / t, 0.0, 1.0)
        assert excinfo.value.achieved_error >= 0.0

    def test_vectorized_batch(self) -> None:
        """Batch members share nodes and each converges."""
        values, error = integrate_vectorized(lambda t: np.array([np.ones_like(t), t, t * t]), 0.0, 1.0)
        np.testing.assert_allclose(values.real, [1.0, 0.5, 1.0 / 3.0], atol=1e-12)
        assert error < 1e-9

    def test_vectorized_breakpoints(self) -> None:
        """Breakpoints do not change the result for a smooth integrand."""
        f = lambda t: np.exp(-t) * np.ones((2, 1))  # noqa: E731
        plain, _ = integrate_vectorized(f, 0.0, 3.0)
        split, _ = integrate_vectorized(f, 0.0, 3.0, breakpoints=[0.5, 1.0, 5.0])
        np.testing.assert_allclose(plain, split, atol=1e-12)
        np.testing.assert_allclose(plain.real, 1.0 - math.exp(-3.0), atol=1e-12)


class TestSemiInfinite:
    """Test cases for semi-infinite integration and its helpers."""

    def test_exponential_with_decay_rate(self) -> None:
        """Integral of e^-t over [0, inf) is 1."""
        assert semi_infinite_integrate(lambda t: math.exp(-t), 0.0, decay_rate=1.0) == pytest.approx(1.0, abs=1e-9)

    def test_exponential_without_decay_rate(self) -> None:
        """The infinite-range rule handles the same integral."""
        assert semi_infinite_integrate(lambda t: math.exp(-t), 0.0) == pytest.approx(1.0, abs=1e-10)

    def test_whole_line(self) -> None:
        """Integral of 1/(1+t^2) over the line is pi."""
        assert semi_infinite_integrate(lambda t: 1.0 / (1.0 + t * t), -math.inf) == pytest.approx(math.pi, abs=1e-9)

    def test_singular_lower_endpoint(self) -> None:
        """e^-3t (cosh t - 1)^(-1/4) = 2^(1/4) e^(-13t/4) (1 - e^-t)^(-1/2), against a weighted QUADPACK oracle."""
        def f(t: float) -> float:
            # no overflow as t -> inf
            return 2.0 ** 0.25 * math.exp(-3.25 * t) / math.sqrt(-math.expm1(-t))

        def smooth(t: float) -> float:
            # f(t) * t^(1/2), regular at 0
            if t == 0.0:
                return 2.0 ** -0.25 * math.sqrt(2.0)
            return math.exp(-3.0 * t) * 2.0 ** -0.25 * (math.sinh(0.5 * t) / t) ** -0.5

        head, _ = sp_integrate.quad(smooth, 0.0, 1.0, weight="alg", wvar=(-0.5, 0.0), epsabs=1e-13)
        tail, _ = sp_integrate.quad(f, 1.0, math.inf, epsabs=1e-13)
        cfg = QuadratureConfig().singular()
        value = semi_infinite_integrate(f, 0.0, cfg, decay_rate=3.0, amplitude=2.0)
        assert value == pytest.approx(head + tail, abs=1e-8)

    def test_truncation_point_tail_bound(self) -> None:
        """The exponential tail beyond the cut is below the tolerance."""
        a, rate, amplitude, tol = 1.0, 2.5, 3.0, 1e-10
        cut = truncation_point(a, rate, amplitude, tol)
        assert amplitude * math.exp(-rate * (cut - a)) / rate <= tol * (1.0 + 1e-12)

    def test_truncation_point_rejects_growth(self) -> None:
        """A non-positive decay rate raises DomainError."""
        with pytest.raises(DomainError, match="decay rate"):
            truncation_point(0.0, 0.0, 1.0, 1e-10)

    def test_geometric_breakpoints(self) -> None:
        """Split points grow by a factor 4 from the layer width."""
        points = geometric_breakpoints(0.0, 1.0, 1e-3)
        np.testing.assert_allclose(points, [1e-3, 4e-3, 1.6e-2, 6.4e-2, 2.56e-1])

    def test_geometric_breakpoints_thick_layer(self) -> None:
        """No split points when the layer is as wide as the interval."""
        assert geometric_breakpoints(0.0, 1.0, 1.0) == []

"""
tests/unit/numerics/test_legendre.py

Unit tests for associated Legendre functions of half-integer degree and complex order.
"""

import cmath
import math

import numpy as np
import pytest
from scipy import integrate as sp_integrate
from scipy import special

from axipot.data_models.legendre import LegendreEval, LegendreKind, LegendreMethod
from axipot.numerics.legendre import (
    asymptotic_eval,
    asymptotic_P,
    asymptotic_Q,
    legendre_derivative,
    legendre_derivative_values,
    legendre_P,
    legendre_P_degree,
    legendre_Q,
    legendre_Q_degree,
    legendre_Q_whipple,
    legendre_ratio,
    legendre_ratio_derivative,
    legendre_values,
    whipple_check,
)
from axipot.utils.exceptions import DomainError, LegendreParameterError, PoleError


def _p_half(n: int, tau: float) -> float:
    """Closed form of P_{n-1/2}^{1/2}(cosh tau)."""
    return math.sqrt(2.0 / (math.pi * math.sinh(tau))) * math.cosh(n * tau)


def _p_minus_half(n: int, tau: float) -> float:
    """Closed form of P_{n-1/2}^{-1/2}(cosh tau), n >= 1."""
    return math.sqrt(2.0 / (math.pi * math.sinh(tau))) * math.sinh(n * tau) / n


def _q_minus_half(n: int, tau: float) -> complex:
    """Closed form of Q_{n-1/2}^{-1/2}(cosh tau) with the exp(i*pi*mu) phase, n >= 1."""
    return -1j * math.sqrt(math.pi / (2.0 * math.sinh(tau))) * math.exp(-n * tau) / n


def _rel(a: complex, b: complex) -> float:
    """Relative difference."""
    return abs(a - b) / abs(b)


class TestLegendreP:
    """Test cases for the first kind."""

    def test_degree_zero_anchor(self) -> None:
        """P_0^0 = 1 from the exponent-zero integrand."""
        value = legendre_P_degree(0.0, 0.0, 0.8)
        assert abs(value.value - 1.0) < 1e-12
        assert value.method is LegendreMethod.INTEGRAL_P2

    def test_degree_symmetry(self) -> None:
        """P_nu = P_{-nu-1}: n = 3 and n = -3 agree exactly."""
        mu, tau = 0.2 + 0.1j, 0.8
        assert legendre_P(3, mu, tau).value == legendre_P(-3, mu, tau).value

    def test_degree_symmetry_independent(self) -> None:
        """The symmetric degree evaluated directly agrees numerically."""
        mu, tau = 0.2 + 0.1j, 0.8
        direct = legendre_P_degree(-3.5, mu, tau)
        assert _rel(direct.value, legendre_P(3, mu, tau).value) < 1e-8

    def test_against_quadrature_oracle(self) -> None:
        """P_{3/2}^{-1}(cosh 1) agrees with an independent quadrature of the same integral."""
        mu, nu, tau = -1.0, 1.5, 1.0
        ch, sh = math.cosh(tau), math.sinh(tau)
        integral, _ = sp_integrate.quad(lambda t: (ch + sh * math.cos(t)) ** (mu + nu) * math.sin(t) ** (-2.0 * mu), 0.0, math.pi, epsabs=1e-14, epsrel=1e-14)
        expected = 2.0 ** mu * sh ** (-mu) / (math.sqrt(math.pi) * special.gamma(0.5 - mu)) * integral
        assert _rel(legendre_P(2, mu, tau).value, expected) < 1e-9

    @pytest.mark.parametrize("n", [0, 1, 4, 15])
    def test_order_minus_half_closed_form(self, n: int) -> None:
        """P^{-1/2} is elementary."""
        tau = 0.9
        expected = math.sqrt(2.0 / (math.pi * math.sinh(tau))) * tau if n == 0 else _p_minus_half(n, tau)
        assert _rel(legendre_P(n, -0.5, tau).value, expected) < 1e-9

    @pytest.mark.parametrize("n", [0, 2, 7, 20])
    def test_order_half_by_recursion(self, n: int) -> None:
        """P^{1/2} goes through one order-raising step."""
        tau = 0.6
        value = legendre_P(n, 0.5, tau)
        assert value.method is LegendreMethod.RECURSION
        assert _rel(value.value, _p_half(n, tau)) < 1e-9

    def test_order_three_halves_by_recursion(self) -> None:
        """Two raising steps reproduce the order recursion applied to the closed forms."""
        n, tau = 3, 0.7
        ch, sh = math.cosh(tau), math.sinh(tau)
        nu = n - 0.5
        # P_nu^{3/2} = [(nu - 1/2) ch P_nu^{1/2} - (nu + 1/2) P_{nu-1}^{1/2}] / sh
        expected = ((nu - 0.5) * ch * _p_half(n, tau) - (nu + 0.5) * _p_half(n - 1, tau)) / sh
        assert _rel(legendre_P(n, 1.5, tau).value, expected) < 1e-9

    def test_non_positive_tau(self) -> None:
        """tau <= 0 raises DomainError."""
        with pytest.raises(DomainError, match="tau > 0"):
            legendre_P(1, 0.0, 0.0)


class TestLegendreQ:
    """Test cases for the second kind."""

    def test_degree_zero_anchor(self) -> None:
        """Q_0^0(cosh 1) = 1/2 ln((ch 1 + 1)/(ch 1 - 1))."""
        ch = math.cosh(1.0)
        expected = 0.5 * math.log((ch + 1.0) / (ch - 1.0))
        assert abs(legendre_Q_degree(0.0, 0.0, 1.0).value - expected) < 1e-11
        assert expected == pytest.approx(0.7719368, abs=1e-6)

    def test_degree_symmetry(self) -> None:
        """Q_{-nu-1} = Q_nu at half-integer nu: n = -3 and n = 3 agree exactly."""
        assert legendre_Q(-3, 0.4j, 0.6).value == legendre_Q(3, 0.4j, 0.6).value

    def test_against_quadrature_oracle(self) -> None:
        """Q_{1/2}^{-1}(cosh 0.9) agrees with scipy on the unfolded (0, pi) integral."""
        mu, nu, tau = -1.0, 0.5, 0.9
        ch, sh = math.cosh(tau), math.sinh(tau)
        integral, _ = sp_integrate.quad(lambda t: (ch + math.cos(t)) ** (mu - nu - 1.0) * math.sin(t) ** (2.0 * nu + 1.0), 0.0, math.pi, epsabs=1e-14, epsrel=1e-14)
        expected = cmath.exp(1j * math.pi * mu) * 2.0 ** (-nu - 1.0) * special.gamma(nu + mu + 1.0) / special.gamma(nu + 1.0) * sh ** (-mu) * integral
        assert _rel(legendre_Q(1, mu, tau).value, expected) < 1e-9

    @pytest.mark.parametrize("n", [1, 3, 8, 12, 40])
    def test_order_minus_half_closed_form(self, n: int) -> None:
        """Q^{-1/2} is elementary in both representations."""
        tau = 0.8
        assert _rel(legendre_Q(n, -0.5, tau).value, _q_minus_half(n, tau)) < 1e-9

    @pytest.mark.parametrize("n", [0, 3, 10])
    def test_order_half_closed_form(self, n: int) -> None:
        """Q^{1/2} = i sqrt(pi/(2 sh)) exp(-n tau)."""
        tau = 1.1
        expected = 1j * math.sqrt(math.pi / (2.0 * math.sinh(tau))) * math.exp(-n * tau)
        assert _rel(legendre_Q(n, 0.5, tau).value, expected) < 1e-9

    @pytest.mark.parametrize("mu", [0.0, -1.0, 0.3 + 0.4j, -0.7j])
    def test_representation_crossover(self, mu: complex) -> None:
        """At n = 8 the exponential and (0, pi) representations agree."""
        tau = 0.7
        exponential = legendre_Q(8, mu, tau)
        trigonometric = legendre_Q_degree(7.5, mu, tau)
        assert _rel(exponential.value, trigonometric.value) < 1e-8

    @pytest.mark.parametrize("n, mu", [(0, -0.5), (1, -1.5), (2, -3.5)])
    def test_gamma_pole(self, n: int, mu: float) -> None:
        """nu + mu + 1 a non-positive integer raises LegendreParameterError."""
        with pytest.raises(LegendreParameterError, match="non-positive integer"):
            legendre_Q(n, mu, 1.0)

    def test_small_tau(self) -> None:
        """Close to the axis Q_{-1/2}^0 behaves like ln(8/tau)."""
        tau = 1e-4
        value = legendre_Q(0, 0.0, tau).value
        assert abs(value - math.log(8.0 / tau)) < 1e-6


class TestIdentities:
    """Connection, recursion and derivative identities on random parameters."""

    def _random_parameters(self, rng: np.random.Generator, count: int) -> list[tuple[int, complex, float]]:
        return [
            (int(rng.integers(1, 7)), complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.8, 0.8)), float(rng.uniform(0.3, 1.8)))
            for _ in range(count)
        ]

    def test_q_order_connection(self, rng: np.random.Generator) -> None:
        """e^{i pi mu} Gamma(nu+mu+1) Q^{-mu} = e^{-i pi mu} Gamma(nu-mu+1) Q^{mu}."""
        for n, mu, tau in self._random_parameters(rng, 50):
            nu = n - 0.5
            lhs = cmath.exp(1j * math.pi * mu) * special.gamma(nu + mu + 1.0) * legendre_Q(n, -mu, tau).value
            rhs = cmath.exp(-1j * math.pi * mu) * special.gamma(nu - mu + 1.0) * legendre_Q(n, mu, tau).value
            assert _rel(lhs, rhs) < 1e-8

    def test_p_order_connection(self, rng: np.random.Generator) -> None:
        """P^{-mu} = Gamma(nu-mu+1)/Gamma(nu+mu+1) [P^mu - (2/pi) e^{-i pi mu} sin(pi mu) Q^mu]."""
        for n, mu, tau in self._random_parameters(rng, 25):
            nu = n - 0.5
            bracket = legendre_P(n, mu, tau).value - 2.0 / math.pi * cmath.exp(-1j * math.pi * mu) * cmath.sin(math.pi * mu) * legendre_Q(n, mu, tau).value
            rhs = special.gamma(nu - mu + 1.0) / special.gamma(nu + mu + 1.0) * bracket
            assert _rel(legendre_P(n, -mu, tau).value, rhs) < 1e-8

    @pytest.mark.parametrize("kind", [LegendreKind.P, LegendreKind.Q])
    def test_three_term_recursion(self, kind: LegendreKind, rng: np.random.Generator) -> None:
        """(nu-mu+1) F_{nu+1} = (2nu+1) ch F_nu - (nu+mu) F_{nu-1}."""
        for n, mu, tau in self._random_parameters(rng, 15):
            nu = n - 0.5
            f = legendre_P if kind is LegendreKind.P else legendre_Q
            lhs = (nu - mu + 1.0) * f(n + 1, mu, tau).value
            rhs = (2.0 * nu + 1.0) * math.cosh(tau) * f(n, mu, tau).value - (nu + mu) * f(n - 1, mu, tau).value
            assert _rel(lhs, rhs) < 1e-8

    @pytest.mark.parametrize("kind", [LegendreKind.P, LegendreKind.Q])
    def test_derivative_identity(self, kind: LegendreKind) -> None:
        """The degree-recursion derivative matches central differences in tau."""
        h = 1e-5
        for n, mu, tau in [(2, 0.3 + 0.2j, 0.9), (5, -1.0, 0.5), (1, 0.75, 1.3), (9, -0.2j, 0.8)]:
            around = legendre_values(kind, n, mu, np.array([tau - h, tau + h]))
            values = around.mantissa * np.exp(around.log_scale)
            fd = (values[1] - values[0]) / (2.0 * h)
            assert _rel(legendre_derivative(kind, n, mu, tau).value, fd) < 1e-5

    def test_derivative_closed_form(self) -> None:
        """d/dtau of P_{n-1/2}^{1/2} from its elementary form."""
        n, tau = 4, 0.8
        sh, ch = math.sinh(tau), math.cosh(tau)
        expected = math.sqrt(2.0 / math.pi) * (n * math.sinh(n * tau) * sh ** -0.5 - 0.5 * math.cosh(n * tau) * ch * sh ** -1.5)
        assert _rel(legendre_derivative(LegendreKind.P, n, 0.5, tau).value, expected) < 1e-9

    @pytest.mark.parametrize("kind", [LegendreKind.P, LegendreKind.Q])
    def test_derivative_batch(self, kind: LegendreKind) -> None:
        """A tau array gives the pointwise derivatives."""
        taus = np.array([0.4, 0.9, 1.7])
        batch = legendre_derivative_values(kind, 3, 0.25 + 0.1j, taus)
        values = batch.mantissa * np.exp(batch.log_scale)
        for tau, value in zip(taus, values):
            assert _rel(value, legendre_derivative(kind, 3, 0.25 + 0.1j, float(tau)).value) < 1e-10


class TestWhipple:
    """Test cases for the Whipple formula."""

    @pytest.mark.parametrize("n, mu, tau", [(1, 0.0, 1.0), (2, 0.25, 0.7), (0, 0.0, 2.0), (3, -0.4 + 0.3j, 0.5), (10, -1.0, 0.9)])
    def test_residual(self, n: int, mu: complex, tau: float) -> None:
        """Direct Q and Q through P at coth(tau) agree."""
        assert whipple_check(n, mu, tau) <= 1e-8

    def test_method_recorded(self) -> None:
        """The Whipple path is labelled as such."""
        assert legendre_Q_whipple(1, 0.0, 1.0).method is LegendreMethod.WHIPPLE

    def test_pole(self) -> None:
        """A pole of Gamma(mu + nu + 1) raises PoleError."""
        with pytest.raises(PoleError):
            legendre_Q_whipple(1, -1.5, 1.0)


class TestAsymptotics:
    """Test cases for the large-degree equivalents."""

    def test_p_ratio_at_100(self) -> None:
        """P / asymptotic_P within 1% at n = 100."""
        direct = legendre_P(100, 0.3, 1.0)
        assert abs(direct.ratio_to(asymptotic_eval(LegendreKind.P, 100, 0.3, 1.0)) - 1.0) < 1e-2

    def test_q_ratio_at_100(self) -> None:
        """Q / asymptotic_Q within 1% at n = 100."""
        direct = legendre_Q(100, -1.0, 0.5)
        assert abs(direct.value / asymptotic_Q(100, -1.0, 0.5) - 1.0) < 1e-2

    @pytest.mark.parametrize("kind, mu, tau", [(LegendreKind.P, -0.5, 0.8), (LegendreKind.Q, -0.5, 0.8), (LegendreKind.Q, 0.3, 1.0)])
    def test_error_decreases(self, kind: LegendreKind, mu: complex, tau: float) -> None:
        """|F / asymptotic - 1| shrinks along n = 25, 50, 100, 200."""
        errors = []
        for n in (25, 50, 100, 200):
            direct = legendre_values(kind, n, mu, tau)
            reference = asymptotic_eval(kind, n, mu, tau)
            ratio = direct.mantissa[0] / reference.mantissa * math.exp(direct.log_scale[0] - reference.log_scale)
            errors.append(abs(ratio - 1.0))
        assert errors == sorted(errors, reverse=True)

    def test_q_ratio_between_circles(self) -> None:
        """The asymptotic Q ratio reduces to sqrt(sh t0/sh t1) exp(-n (t1 - t0))."""
        n, mu, t0, t1 = 30, 0.2 + 0.1j, 0.4, 0.9
        ratio = asymptotic_Q(n, mu, t1) / asymptotic_Q(n, mu, t0)
        expected = math.sqrt(math.sinh(t0) / math.sinh(t1)) * math.exp(-n * (t1 - t0))
        assert _rel(ratio, expected) < 1e-12

    def test_p_equivalent_value(self) -> None:
        """asymptotic_P at n = 1 is the displayed formula."""
        tau = 0.5
        expected = math.exp(tau / 2.0) / math.sqrt(2.0 * math.pi * math.sinh(tau)) * 0.5 ** -0.5 * math.exp(tau * 0.5)
        assert _rel(asymptotic_P(1, 0.0, tau), expected) < 1e-14

    def test_degree_below_one(self) -> None:
        """n < 1 raises DomainError."""
        with pytest.raises(DomainError, match="n >= 1"):
            asymptotic_P(0, 0.0, 1.0)


class TestRatios:
    """Test cases for scaled ratios."""

    def test_p_ratio_closed_form(self) -> None:
        """P^{-1/2} ratio between two circles."""
        n, t, t_ref = 12, np.array([0.6, 0.9]), 1.2
        ratio = legendre_ratio(LegendreKind.P, n, -0.5, t, t_ref)
        expected = [_p_minus_half(n, float(x)) / _p_minus_half(n, t_ref) for x in t]
        np.testing.assert_allclose(ratio, expected, rtol=1e-9)

    def test_ratio_at_reference_is_one(self) -> None:
        """F(tau_ref)/F(tau_ref) = 1."""
        ratio = legendre_ratio(LegendreKind.Q, 5, 0.3 + 0.2j, 0.7, 0.7)
        assert abs(ratio[0] - 1.0) < 1e-14

    def test_large_degree_ratio_underflows_gracefully(self) -> None:
        """A Q ratio of order e^-100 is resolved through log-scales."""
        ratio = legendre_ratio(LegendreKind.Q, 200, -1.0, 1.0, 0.5)[0]
        expected = math.sqrt(math.sinh(0.5) / math.sinh(1.0)) * math.exp(-100.0)
        assert abs(ratio / expected - 1.0) < 1e-2

    def test_q_ratio_at_gamma_pole(self) -> None:
        """Q_{-1/2}^{-1/2} has a Gamma pole, yet its ratio is sqrt(sh(tau_ref)/sh(tau))."""
        with pytest.raises(LegendreParameterError):
            legendre_Q(0, -0.5, 1.0)
        ratio = legendre_ratio(LegendreKind.Q, 0, -0.5, np.array([0.4, 1.0, 2.0]), 0.5)
        expected = [math.sqrt(math.sinh(0.5) / math.sinh(t)) for t in (0.4, 1.0, 2.0)]
        np.testing.assert_allclose(ratio, expected, rtol=1e-9)

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_derivative_ratio_near_gamma_pole(self, n: int) -> None:
        """For mu = -1/2, Q_{n-1/2} is proportional to e^(-n tau) / sqrt(sh tau), poles or not."""
        t, t_ref = np.array([0.3, 0.8, 1.5]), 0.6
        ratio, d_ratio = legendre_ratio_derivative(LegendreKind.Q, n, -0.5, t, t_ref)
        expected = np.exp(-n * (t - t_ref)) * np.sqrt(np.sinh(t_ref) / np.sinh(t))
        np.testing.assert_allclose(ratio, expected, rtol=1e-9)
        np.testing.assert_allclose(d_ratio, (-n - 0.5 / np.tanh(t)) * expected, rtol=1e-8)

    @pytest.mark.parametrize("kind", [LegendreKind.P, LegendreKind.Q])
    def test_derivative_ratio_matches_derivative(self, kind: LegendreKind) -> None:
        """Away from poles the derivative ratio is F'(tau) / F(tau_ref)."""
        mu, n, t, t_ref = 0.2 - 0.3j, 3, 0.9, 0.6
        _, d_ratio = legendre_ratio_derivative(kind, n, mu, t, t_ref)
        reference = legendre_P(n, mu, t_ref) if kind is LegendreKind.P else legendre_Q(n, mu, t_ref)
        expected = legendre_derivative(kind, n, mu, t).ratio_to(reference)
        assert abs(d_ratio[0] - expected) <= 1e-9 * abs(expected)

    def test_eval_overflow_keeps_scaled_form(self) -> None:
        """Values past the float range keep a usable mantissa and log-scale."""
        evaluation = LegendreEval.from_scaled(1.0 + 0.0j, 800.0, LegendreMethod.INTEGRAL_P2)
        assert math.isinf(evaluation.value.real)
        assert evaluation.ratio_to(LegendreEval.from_scaled(2.0 + 0.0j, 799.0, LegendreMethod.INTEGRAL_P2)) == pytest.approx(0.5 * math.e)

from __future__ import annotations

import numpy as np
import pytest
from pytest import approx

from octoline.errors import SingularPointError
from octoline.invariants.determinant import det_rho
from octoline.invariants.metric import (
    check_regular,
    closed_form_hessian_at_identity,
    grad_det,
    hessian_det,
    hessian_log_det,
    trace_form,
)
from octoline.models import OctMatrix2, Rho, Twistor
from octoline.sampling import random_rho, random_twistor


class TestGradient:
    def test_euler_identity(self, rng):
        rho = random_rho(rng)
        assert float(grad_det(rho) @ rho.as_vector()) == approx(4.0 * det_rho(rho), rel=1e-10)

    def test_reference_point(self, rho0):
        expected = np.zeros(32)
        expected[0] = expected[24] = 2.0
        assert np.allclose(grad_det(rho0), expected)

    def test_finite_difference(self, rng):
        rho = random_rho(rng)
        r = rho.as_vector()
        h = 1e-5
        numeric = np.array(
            [(det_rho((r + h * e).reshape(4, 8)) - det_rho((r - h * e).reshape(4, 8))) / (2 * h) for e in np.eye(32)]
        )
        g = grad_det(rho)
        assert np.abs(numeric - g).max() <= 1e-5 * max(1.0, np.abs(g).max())


class TestHessian:
    def test_closed_form_at_reference(self, rho0):
        assert np.abs(hessian_det(rho0) - closed_form_hessian_at_identity()).max() <= 1e-12

    def test_symmetric(self, rng):
        h = hessian_det(random_rho(rng))
        assert np.allclose(h, h.T)

    def test_homogeneity(self, rng):
        rho = random_rho(rng)
        h = hessian_det(rho)
        r = rho.as_vector()
        assert float(r @ h @ r) == approx(12.0 * det_rho(rho), rel=1e-10)

    def test_log_hessian_finite_difference(self, rng):
        rho = random_rho(rng)
        r = rho.as_vector()
        a = rng.standard_normal(32)
        h = 1e-4

        def log_det(t: float) -> float:
            return float(np.log(det_rho((r + t * a).reshape(4, 8))))

        numeric = (log_det(h) - 2 * log_det(0.0) + log_det(-h)) / h**2
        exact = float(a @ hessian_log_det(rho) @ a)
        assert numeric == approx(exact, rel=1e-4, abs=1e-6)

    def test_log_hessian_is_scale_invariant(self, rng):
        rho = random_rho(rng)
        assert np.allclose(hessian_log_det(rho.scaled(3.0)) * 9.0, hessian_log_det(rho))


class TestRegularity:
    def test_reference_is_regular(self, rho0):
        assert check_regular(rho0) == approx(1.0)

    def test_collapsed_rho(self, rng):
        rho = Rho(random_twistor(rng), Twistor.primal(np.zeros(8), np.zeros(8)))
        with pytest.raises(SingularPointError):
            check_regular(rho)
        with pytest.raises(SingularPointError):
            hessian_log_det(rho)

    def test_floor_is_relative(self, rho0):
        with pytest.raises(SingularPointError):
            check_regular(rho0.scaled(1e-3), floor=2.0)
        assert check_regular(rho0.scaled(1e-3), floor=1e-9) == approx(1e-12)


class TestTraceForm:
    def test_matches_closed_form(self, rng):
        h = closed_form_hessian_at_identity()
        for _ in range(10):
            v = rng.standard_normal(32)
            v[24] = -v[0]
            tangent = OctMatrix2.from_vector(v)
            assert tangent.is_trace_imaginary()
            assert float(v @ h @ v) == approx(trace_form(tangent), rel=1e-10, abs=1e-10)

from __future__ import annotations

import numpy as np
import pytest
from pytest import approx

from octoline.algebra.lorentz import clifford_action, lorentz_form, vector_action
from octoline.algebra.octonion import basis, oct_mul
from octoline.algebra.twistor import (
    act,
    act_word,
    as_point,
    dual_pairing,
    evaluate,
    is_null,
    null_vector,
    point_from_zero,
    project,
    ray_distance,
    zero_point,
)
from octoline.errors import ChiralityError, DomainError
from octoline.models import DUAL, PRIMAL, ConformalWord, Dilation, Inversion, LorentzVector, Reflection, Translation, Twistor
from octoline.sampling import random_generator, random_lorentz, random_twistor, random_unit


def zero_twistor(c: np.ndarray, m: np.ndarray) -> Twistor:
    return Twistor.primal(m, -oct_mul(c, m))


class TestEvaluate:
    def test_origin_of_minus_part(self, rng):
        psi = Twistor.primal(rng.standard_normal(8), np.zeros(8))
        assert not np.any(evaluate(psi, np.zeros(8)).coords)

    def test_constant_part(self, rng):
        p = rng.standard_normal(8)
        psi = Twistor.primal(np.zeros(8), p)
        assert np.allclose(evaluate(psi, rng.standard_normal(8)).coords, p)

    def test_vanishes_at_its_zero(self, rng):
        c = rng.standard_normal(8)
        psi = zero_twistor(c, rng.standard_normal(8))
        assert np.linalg.norm(evaluate(psi, c).coords) <= 1e-12 * np.linalg.norm(c) * np.linalg.norm(psi.as_array())

    def test_dual_twistor_is_rejected(self, rng):
        psi = act(Inversion(), random_twistor(rng))
        with pytest.raises(ChiralityError):
            evaluate(psi, rng.standard_normal(8))


class TestAction:
    def test_translation(self, rng):
        psi, t = random_twistor(rng), rng.standard_normal(8)
        out = act(Translation(t), psi)
        assert out.duality == PRIMAL
        assert np.allclose(out.phi_minus.coords, psi.phi_minus.coords)
        assert np.allclose(out.phi_plus.coords, oct_mul(t, psi.phi_minus.coords) + psi.phi_plus.coords)

    def test_translation_moves_evaluation(self, rng):
        psi, t, x = random_twistor(rng), rng.standard_normal(8), rng.standard_normal(8)
        moved = act(Translation(t), psi)
        assert np.allclose(evaluate(moved, x).coords, evaluate(psi, x + t).coords)

    @pytest.mark.parametrize("g", [Inversion(), Reflection(basis(5))], ids=["inversion", "reflection"])
    def test_odd_generators_flip_duality(self, rng, g):
        psi = random_twistor(rng)
        out = act(g, psi)
        assert out.duality == DUAL
        assert act(g, out).duality == PRIMAL

    def test_inversion_twice_is_minus_one(self, rng):
        psi = random_twistor(rng)
        twice = act_word(ConformalWord((Inversion(), Inversion())), psi)
        assert np.allclose(twice.as_array(), -psi.as_array())

    def test_unit_dilation_is_identity(self, rng):
        psi = random_twistor(rng)
        assert np.allclose(act(Dilation(1.0), psi).as_array(), psi.as_array())

    def test_linearity(self, rng):
        psi1, psi2 = random_twistor(rng), random_twistor(rng)
        for _ in range(10):
            g = random_generator(rng)
            lhs = act(g, psi1 + psi2.scaled(2.0))
            rhs = act(g, psi1) + act(g, psi2).scaled(2.0)
            assert np.allclose(lhs.as_array(), rhs.as_array())


class TestProjection:
    def test_minus_part_projects_to_origin(self, rng):
        point = project(Twistor.primal(rng.standard_normal(8), np.zeros(8)))
        assert not point.is_infinity
        assert np.allclose(point.finite_point(), np.zeros(8))
        assert np.allclose(point.ray.as_array(), LorentzVector(1.0, np.zeros(8), 0.0).as_array())

    def test_plus_part_projects_to_infinity(self, rng):
        point = project(Twistor.primal(np.zeros(8), rng.standard_normal(8)))
        assert point.is_infinity
        assert zero_point(Twistor.primal(np.zeros(8), np.ones(8))) is None

    def test_projection_lands_on_zero(self, rng):
        c = rng.standard_normal(8)
        psi = zero_twistor(c, rng.standard_normal(8))
        assert np.allclose(project(psi).finite_point(), c)
        assert np.allclose(zero_point(psi), c)
        assert ray_distance(project(psi), point_from_zero(c)) <= 1e-12

    def test_null_vector_is_null(self, rng):
        for _ in range(20):
            psi = random_twistor(rng)
            f = null_vector(psi)
            assert is_null(f)
            assert f.a + f.c > 0

    def test_dual_twistor_zero(self, rng):
        psi = act(Inversion(), random_twistor(rng))
        c = zero_point(psi)
        assert c is not None
        assert np.allclose(project(psi).finite_point(), c)

    def test_equivariance(self, rng):
        for _ in range(50):
            psi, g = random_twistor(rng), random_generator(rng)
            direct = null_vector(act(g, psi)).as_array()
            via_vector = vector_action(g, null_vector(psi)).as_array()
            scale = max(1.0, float(np.linalg.norm(direct)))
            assert np.allclose(direct, via_vector, rtol=0.0, atol=1e-10 * scale)

    def test_zero_twistor_has_no_point(self):
        zero = Twistor.primal(np.zeros(8), np.zeros(8))
        with pytest.raises(DomainError):
            project(zero)
        with pytest.raises(DomainError):
            zero_point(zero)

    def test_past_cone_is_rejected(self):
        with pytest.raises(DomainError):
            as_point(LorentzVector(-1.0, np.zeros(8), 0.0))


class TestDualPairing:
    def test_clifford_action_is_symmetric(self, rng):
        for _ in range(20):
            f = random_lorentz(rng)
            psi1, psi2 = random_twistor(rng), random_twistor(rng)
            left = dual_pairing(clifford_action(f, psi1), psi2)
            right = dual_pairing(clifford_action(f, psi2), psi1)
            assert left == approx(right, abs=1e-10 * max(1.0, abs(left)))

    def test_needs_opposite_duality(self, rng):
        with pytest.raises(ChiralityError):
            dual_pairing(random_twistor(rng), random_twistor(rng))

    def test_reflection_keeps_null_vector_null(self, rng):
        psi = act(Reflection(random_unit(rng)), random_twistor(rng))
        f = null_vector(psi)
        assert abs(lorentz_form(f, f)) <= 1e-10 * f.norm() ** 2

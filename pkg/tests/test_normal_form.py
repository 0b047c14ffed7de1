from __future__ import annotations

import numpy as np
import pytest
from pytest import approx

from octoline.algebra.lorentz import TIMELIKE_UNIT
from octoline.algebra.twistor import act_rho, zero_point
from octoline.config import Tolerances
from octoline.errors import DomainError, PreconditionError, SingularPointError
from octoline.invariants.determinant import det_rho, right_multiply
from octoline.invariants.duality import duality_residual
from octoline.invariants.normal_form import (
    centering_word,
    normal_form_residual,
    normalize,
    replay,
    retract,
    sl2_generators_at,
)
from octoline.models import Dilation, Inversion, Rho, Twistor
from octoline.payloads import load_rho
from octoline.sampling import random_rho, random_unit_det_rho


class TestNormalize:
    def test_reference_is_already_normal(self, rho0):
        form = normalize(rho0)
        assert len(form.word) == 0
        assert np.allclose(form.p, np.eye(2))
        assert np.allclose(form.rho.as_array(), rho0.as_array())

    def test_anti_diagonal_needs_inversion(self, examples_dir):
        form = normalize(load_rho(examples_dir / "antidiagonal.json"))
        assert any(isinstance(g, Inversion) for g in form.word.generators)
        assert form.word.parity == 0
        assert form.rho.is_primal
        assert normal_form_residual(form) <= 1e-12

    def test_random_inputs(self, rng):
        for _ in range(20):
            rho = random_rho(rng)
            value = det_rho(rho)
            if value <= 1e-6:
                continue
            form = normalize(rho)
            assert normal_form_residual(form) <= 1e-8
            assert form.word.parity == 0
            assert np.allclose(replay(rho, form).as_array(), form.rho.as_array(), atol=1e-10)
            assert det_rho(form.rho) == approx(value * np.linalg.det(form.p) ** 2, rel=1e-8)

    @pytest.mark.parametrize("eps", [1e-6, 1e-8, 1e-10, 1e-11])
    def test_far_zero_of_second_twistor(self, rng, eps):
        psi1 = Twistor.primal(rng.standard_normal(8), rng.standard_normal(8))
        psi2 = Twistor.primal(eps * rng.standard_normal(8), rng.standard_normal(8))
        rho = Rho(psi1, psi2)
        form = normalize(rho)
        assert normal_form_residual(form) <= 1e-8
        assert form.word.parity == 0
        assert form.rho.is_primal
        assert isinstance(form.word.generators[0], Inversion)

    def test_residual_above_tolerance_is_rejected(self, rng):
        rho = random_unit_det_rho(rng)
        with pytest.raises(DomainError):
            normalize(rho, Tolerances(normalization=-1.0))

    def test_shared_zero_is_singular(self, examples_dir):
        with pytest.raises(SingularPointError):
            normalize(load_rho(examples_dir / "shared_zero.json"))

    def test_both_zeros_at_infinity(self, rng):
        rho = Rho(Twistor.primal(np.zeros(8), rng.standard_normal(8)), Twistor.primal(np.zeros(8), rng.standard_normal(8)))
        with pytest.raises(SingularPointError):
            normalize(rho)


class TestRetract:
    def test_reference_is_fixed(self, rho0):
        assert np.allclose(retract(rho0).as_array(), rho0.as_array())

    def test_dilated_reference(self, rho0):
        assert np.allclose(retract(act_rho(Dilation(4.0), rho0)).as_array(), rho0.as_array())

    def test_lands_on_compact_locus(self, rng):
        for _ in range(10):
            landed = retract(random_unit_det_rho(rng))
            assert landed.is_primal
            assert duality_residual(landed, TIMELIKE_UNIT) <= 1e-8

    def test_centering_makes_zeros_antipodal(self, rng):
        rho = random_unit_det_rho(rng)
        moved = act_rho(centering_word(rho), rho)
        z1, z2 = zero_point(moved.psi1), zero_point(moved.psi2)
        assert z1 is not None and z2 is not None
        assert np.linalg.norm(z1) == approx(1.0)
        assert np.allclose(z1, -z2)

    def test_singular_input(self, examples_dir):
        with pytest.raises(DomainError):
            retract(load_rho(examples_dir / "shared_zero.json"))


class TestSl2Generators:
    def test_words_act_as_right_multiplication(self, rng):
        rho = Rho(Twistor.primal(rng.standard_normal(8), np.zeros(8)), Twistor.primal(np.zeros(8), rng.standard_normal(8)))
        for name, word, p in sl2_generators_at(rho, s=0.7, t=3.0):
            moved = act_rho(word, rho)
            assert moved.is_primal, name
            assert np.allclose(moved.as_array(), right_multiply(rho, p).as_array(), atol=1e-12), name
            assert np.linalg.det(p) == approx(1.0)

    def test_needs_diagonal_rho(self, rng):
        with pytest.raises(PreconditionError):
            sl2_generators_at(random_rho(rng))

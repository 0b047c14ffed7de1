from __future__ import annotations

import numpy as np
import pytest
from pytest import approx

from octoline.algebra.lorentz import SPACELIKE_UNIT, TIMELIKE_UNIT
from octoline.algebra.twistor import act_rho
from octoline.errors import DomainError, PreconditionError, SingularPointError
from octoline.invariants.duality import (
    calibrate_kappa,
    duality_covector,
    duality_operator,
    duality_residual,
    locus_tangent_basis,
)
from octoline.invariants.metric import grad_det
from octoline.models import LorentzVector, OctMatrix2, Rho, Twistor
from octoline.payloads import load_rho
from octoline.sampling import random_rho, random_unit, stabilizer_word


def diagonal_rho(m: np.ndarray, p: np.ndarray) -> Rho:
    return Rho(Twistor.primal(m, np.zeros(8)), Twistor.primal(np.zeros(8), p))


class TestResidual:
    @pytest.mark.parametrize("v", [TIMELIKE_UNIT, SPACELIKE_UNIT], ids=["timelike", "spacelike"])
    def test_reference_point(self, rho0, v):
        assert duality_residual(rho0, v) <= 1e-12

    def test_diagonal_off_the_locus(self, examples_dir):
        rho = load_rho(examples_dir / "diag23.json")
        assert duality_residual(rho, TIMELIKE_UNIT) > 1.0

    def test_rotated_unit_spinors(self, rng):
        rho = diagonal_rho(random_unit(rng), random_unit(rng))
        assert duality_residual(rho, TIMELIKE_UNIT) <= 1e-12

    def test_timelike_stabilizer(self, rng, rho0):
        for _ in range(10):
            moved = act_rho(stabilizer_word(rng, timelike=True), rho0)
            assert duality_residual(moved, TIMELIKE_UNIT) <= 1e-8

    def test_spacelike_stabilizer(self, rng, rho0):
        for _ in range(10):
            moved = act_rho(stabilizer_word(rng, timelike=False), rho0)
            assert duality_residual(moved, SPACELIKE_UNIT) <= 1e-8

    @pytest.mark.parametrize(
        "v",
        [LorentzVector(1.0, np.zeros(8), 0.0), LorentzVector(0.0, np.zeros(8), 0.0)],
        ids=["null", "zero"],
    )
    def test_null_vector_is_rejected(self, rho0, v):
        with pytest.raises(DomainError):
            duality_residual(rho0, v)

    def test_singular_rho_is_rejected(self, rng):
        rho = Rho(Twistor.primal(rng.standard_normal(8), np.zeros(8)), Twistor.primal(np.zeros(8), np.zeros(8)))
        with pytest.raises(SingularPointError):
            duality_residual(rho, TIMELIKE_UNIT)


class TestOperator:
    def test_matches_covector(self, rng):
        rho = random_rho(rng)
        k = duality_operator(TIMELIKE_UNIT)
        assert np.allclose(k @ rho.as_vector(), duality_covector(rho, TIMELIKE_UNIT))

    def test_timelike_covector_is_minus_two_rho(self, rng):
        rho = random_rho(rng)
        assert np.allclose(duality_covector(rho, TIMELIKE_UNIT), -2.0 * rho.as_vector())

    def test_calibration(self):
        assert calibrate_kappa() == approx(-1.0)

    def test_calibration_is_consistent_on_the_locus(self, rng):
        rho = diagonal_rho(random_unit(rng), random_unit(rng))
        assert calibrate_kappa(rho) == approx(-1.0)
        assert np.allclose(grad_det(rho), 2.0 * rho.as_vector())


class TestTangentSpace:
    def test_compact_locus_at_reference(self, rho0):
        tangent = locus_tangent_basis(rho0, TIMELIKE_UNIT)
        assert tangent.shape == (32, 22)
        for column in tangent.T:
            assert OctMatrix2.from_vector(column).is_skew_type(tol=1e-8)

    def test_split_locus_at_reference(self, rho0):
        tangent = locus_tangent_basis(rho0, SPACELIKE_UNIT)
        assert tangent.shape == (32, 22)
        for column in tangent.T:
            assert OctMatrix2.from_vector(column).is_trace_imaginary(tol=1e-8)

    def test_off_locus_point(self, examples_dir):
        with pytest.raises(PreconditionError):
            locus_tangent_basis(load_rho(examples_dir / "diag23.json"), TIMELIKE_UNIT)

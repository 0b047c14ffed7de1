from __future__ import annotations

import numpy as np
import pytest
from pytest import approx

from octoline.algebra.quaternion import (
    cdet_oracle,
    charpoly_imag_residual,
    embed_complex,
    embed_quaternion,
    q_conj,
    q_mul,
    qdet,
    qdet_log_signature,
    qmat_identity,
    qmat_mul,
)
from octoline.models import QMat2
from octoline.sampling import random_qmat2

I, J, K = np.eye(4)[1], np.eye(4)[2], np.eye(4)[3]


class TestHamilton:
    def test_units(self):
        assert np.allclose(q_mul(I, J), K)
        assert np.allclose(q_mul(J, K), I)
        assert np.allclose(q_mul(K, I), J)
        assert np.allclose(q_mul(I, I), -np.eye(4)[0])

    def test_norm_from_conjugate(self, rng):
        q = rng.standard_normal(4)
        assert np.allclose(q_mul(q, q_conj(q)), [np.dot(q, q), 0, 0, 0])


class TestComplexEmbedding:
    def test_identity(self):
        assert np.allclose(embed_complex(qmat_identity()), np.eye(4))

    def test_j_block(self):
        assert np.allclose(embed_quaternion(J), [[0, 1], [-1, 0]])

    @pytest.mark.parametrize("axis", ["i", "j"])
    def test_homomorphism(self, rng, axis):
        m, n = random_qmat2(rng), random_qmat2(rng)
        assert np.allclose(embed_complex(qmat_mul(m, n), axis), embed_complex(m, axis) @ embed_complex(n, axis))

    def test_charpoly_is_real(self, rng):
        m = random_qmat2(rng)
        assert charpoly_imag_residual(m) <= 1e-10 * max(1.0, np.abs(m.entries).max() ** 4)


class TestDeterminant:
    def test_identity(self):
        assert qdet(qmat_identity()) == approx(1.0)
        assert cdet_oracle(qmat_identity()) == approx(1.0)

    def test_diagonal(self, rng):
        q1, q2 = rng.standard_normal(4), rng.standard_normal(4)
        m = QMat2(np.stack([q1, np.zeros(4), np.zeros(4), q2]))
        assert qdet(m) == approx(np.dot(q1, q1) * np.dot(q2, q2))

    def test_dependent_columns(self, rng):
        a, c, q = rng.standard_normal(4), rng.standard_normal(4), rng.standard_normal(4)
        m = QMat2(np.stack([a, q_mul(a, q), c, q_mul(c, q)]))
        scale = np.dot(a, a) * np.dot(c, c) * np.dot(q, q)
        assert abs(qdet(m)) <= 1e-12 * scale
        assert abs(cdet_oracle(m)) <= 1e-10 * scale

    @pytest.mark.parametrize("axis", ["i", "j"])
    def test_matches_complex_oracle(self, rng, axis):
        for _ in range(100):
            m = random_qmat2(rng)
            value = qdet(m)
            assert value >= -1e-12
            assert value == approx(cdet_oracle(m, axis), rel=1e-9, abs=1e-12)

    def test_multiplicative(self, rng):
        m, n = random_qmat2(rng), random_qmat2(rng)
        assert qdet(qmat_mul(m, n)) == approx(qdet(m) * qdet(n), rel=1e-9)


class TestLogSignature:
    def test_signature_at_identity(self):
        assert qdet_log_signature() == (10, 5, 0)

    def test_signature_is_invariant(self, rng):
        m = random_qmat2(rng)
        if qdet(m) < 1e-2:
            pytest.skip("ill-conditioned draw")
        assert qdet_log_signature(m) == (10, 5, 0)

from __future__ import annotations

import numpy as np

from octoline.algebra.lorentz import lorentz_form
from octoline.algebra.octonion import oct_mul
from octoline.algebra.quaternion import (
    cdet_oracle,
    charpoly_imag_residual,
    complex_determinant,
    qdet,
    qdet_log_signature,
)
from octoline.algebra.twistor import act_rho, zero_point
from octoline.config import Tolerances
from octoline.invariants.determinant import (
    det_array,
    det_by_lorentz,
    det_rho,
    f_ab,
    mu,
    mu_null,
    p_map,
    q_map,
    reference_rho,
    right_multiply,
)
from octoline.invariants.embedding import mu_vs_qdet
from octoline.invariants.metric import (
    TANGENT_BASIS,
    closed_form_hessian_at_identity,
    grad_det,
    hessian_det,
    hessian_log_det,
    trace_form,
)
from octoline.models import OctMatrix2, Rho, Twistor
from octoline.sampling import (
    random_even_word,
    random_gl2r,
    random_qmat2,
    random_rho,
    random_sl2r,
    random_subalgebra,
    random_twistor,
    random_unit_det_rho,
)
from octoline.suites.base import SuiteOutcome, Tracker, VerificationSuite, rel


class IdentitySuite(VerificationSuite):
    name = "identity"

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        for _ in range(samples):
            rho = random_rho(rng)
            scale = rho.norm() ** 4
            f11, f22 = q_map(rho.psi1), q_map(rho.psi2)
            f12 = f_ab(rho.psi1, rho.psi2)
            value = det_rho(rho)
            tr.add("minus_two_identity", rel(abs(lorentz_form(f11, f22) + 2.0 * lorentz_form(f12, f12)), scale))
            tr.add("det_routes", rel(abs(det_by_lorentz(rho) - value), scale))
            tr.add("mu_null_route", rel(abs(mu_null(rho) + 2.0 * value), scale))
            tr.add("mu_quadratic", rel(abs(mu(rho) + 3.0 * value), scale))
            tr.add("det_nonnegative", rel(max(-value, 0.0), scale))

            pairing = p_map(rho.psi1, rho.psi2, route="pairing")
            tr.add("p_routes", rel(np.linalg.norm(pairing.as_array() - f12.as_array()), rho.norm() ** 2))
            polar = (q_map(rho.psi1 + rho.psi2) - q_map(rho.psi1 - rho.psi2)).scaled(0.25)
            tr.add("p_polarization", rel(np.linalg.norm(polar.as_array() - f12.as_array()), rho.norm() ** 2))

            # ψ₂ 与 ψ₁ 零点相同时 det = 0
            psi1 = rho.psi1
            c = zero_point(psi1)
            if c is not None:
                m2 = rng.standard_normal(8)
                psi2 = Twistor.primal(m2, -oct_mul(c, m2))
                shared = Rho(psi1, psi2)
                tr.add("shared_zero", rel(abs(det_rho(shared)), shared.norm() ** 4))
        return tr.outcome()


class NullitySuite(VerificationSuite):
    name = "nullity"

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        for _ in range(samples):
            q = q_map(random_twistor(rng))
            tr.add("null_q", rel(abs(lorentz_form(q, q)), q.norm() ** 2))
        return tr.outcome()


class InvarianceSuite(VerificationSuite):
    name = "invariance"

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        for _ in range(samples):
            rho = random_unit_det_rho(rng, min_det=0.02)
            base = mu(rho)
            moved = act_rho(random_even_word(rng), rho)
            tr.add("even_word", rel(abs(mu(moved) - base), abs(base)))
            tr.add("even_word_primal", 0.0 if moved.is_primal else np.inf)
            tr.add("sl2r", rel(abs(mu(right_multiply(rho, random_sl2r(rng))) - base), abs(base)))
            p = random_gl2r(rng)
            expected = np.linalg.det(p) ** 2 * base
            tr.add("gl2r_covariance", rel(abs(mu(right_multiply(rho, p)) - expected), abs(expected)))
            t = float(np.exp(rng.standard_normal()))
            tr.add("homogeneity", rel(abs(det_rho(rho.scaled(t)) - t**4 * det_rho(rho)), t**4 * abs(det_rho(rho))))
        return tr.outcome()


class QuaternionOracleSuite(VerificationSuite):
    name = "quaternion-oracle"

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        for _ in range(samples):
            m = random_qmat2(rng)
            scale = float(np.sum(m.entries**2)) ** 2
            sub = random_subalgebra(rng)
            mu_value, q_value = mu_vs_qdet(m, sub)
            tr.add("mu_minus_three_qdet", rel(abs(mu_value + 3.0 * q_value), scale))
            cdet = complex_determinant(m)
            tr.add("qdet_vs_cdet", rel(abs(q_value - cdet.real), scale))
            tr.add("cdet_real", rel(abs(cdet.imag), scale))
            tr.add("cdet_nonnegative", rel(max(-cdet.real, 0.0), scale))
            tr.add("j_axis", rel(abs(cdet_oracle(m, "j") - q_value), scale))
            tr.add("charpoly_real", rel(charpoly_imag_residual(m), max(scale, 1.0)))
        signature = qdet_log_signature()
        tr.add("log_qdet_signature", 0.0 if signature == (10, 5, 0) else np.inf)
        return tr.outcome(log_qdet_signature=list(signature))


class HessianSuite(VerificationSuite):
    name = "hessian"

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        rho0 = reference_rho()
        tr.add("closed_form", float(np.max(np.abs(hessian_det(rho0) - closed_form_hessian_at_identity()))))
        h_log = hessian_log_det(rho0)
        for _ in range(max(samples, 1) * 10):
            a = rng.standard_normal(32)
            # 迹为纯虚：Re a + Re d = 0
            a[24] = -a[0]
            tangent = OctMatrix2.from_vector(a)
            value = float(a @ h_log @ a)
            tr.add("trace_form", rel(abs(value - trace_form(tangent)), float(a @ a)))
        return tr.outcome()


class DerivativesSuite(VerificationSuite):
    name = "derivatives"

    def __init__(self, step: float | None = None) -> None:
        self.step = Tolerances().finite_difference_step if step is None else step

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        h = self.step
        for _ in range(samples):
            r = random_unit_det_rho(rng, min_det=0.02).as_array()
            g = grad_det(r)
            fd = (det_array(r + h * TANGENT_BASIS) - det_array(r - h * TANGENT_BASIS)) / (2.0 * h)
            tr.add("gradient", rel(np.linalg.norm(fd - g), np.linalg.norm(g)))

            def log_grad(x: np.ndarray) -> np.ndarray:
                return grad_det(x) / det_rho(x)

            fd_hess = np.stack(
                [(log_grad(r + h * e) - log_grad(r - h * e)) / (2.0 * h) for e in TANGENT_BASIS]
            )
            exact = hessian_log_det(r)
            tr.add("hessian_log_det", rel(np.linalg.norm(fd_hess - exact), np.linalg.norm(exact)))
        return tr.outcome(step=h)

from __future__ import annotations

import numpy as np

from octoline.algebra.lorentz import clifford_action, lorentz_form, vector_action, vector_action_word
from octoline.algebra.octonion import (
    ONE,
    cayley_dickson_mul,
    oct_conj,
    oct_inv,
    oct_mul,
    quaternion_subalgebra,
    subalgebra_closure_residual,
)
from octoline.algebra.triality import pair_array, triple_form, v_on_minus_array, v_on_plus_array
from octoline.algebra.twistor import act, as_point, project, ray_distance
from octoline.models import MINUS, PLUS, Spinor
from octoline.sampling import (
    random_generator,
    random_lorentz,
    random_orthonormal_imaginary_pair,
    random_twistor,
    random_word,
)
from octoline.suites.base import SuiteOutcome, Tracker, VerificationSuite, rel


class OctonionSuite(VerificationSuite):
    name = "octonion"

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        x, y, z = (rng.standard_normal((samples, 8)) for _ in range(3))
        nx, ny, nz = (np.linalg.norm(v, axis=1) for v in (x, y, z))
        xy = oct_mul(x, y)
        tr.add("norm_multiplicativity", np.max(np.abs(np.linalg.norm(xy, axis=1) - nx * ny) / (nx * ny)))
        alt = oct_mul(x, xy) - oct_mul(oct_mul(x, x), y)
        tr.add("alternativity", np.max(np.linalg.norm(alt, axis=1) / (nx**2 * ny)))
        moufang = oct_mul(xy, oct_mul(z, x)) - oct_mul(x, oct_mul(oct_mul(y, z), x))
        tr.add("moufang", np.max(np.linalg.norm(moufang, axis=1) / (nx**2 * ny * nz)))
        trace = oct_mul(xy, z)[:, 0] - oct_mul(x, oct_mul(y, z))[:, 0]
        tr.add("trace_identity", np.max(np.abs(trace) / (nx * ny * nz)))
        conj = oct_mul(x, oct_conj(x)) - nx[:, None] ** 2 * ONE
        tr.add("conjugate_norm", np.max(np.linalg.norm(conj, axis=1) / nx**2))
        for k in range(min(samples, 50)):
            tr.add("inverse", float(np.linalg.norm(oct_mul(x[k], oct_inv(x[k])) - ONE)))
            tr.add("table_vs_doubling", rel(np.linalg.norm(xy[k] - cayley_dickson_mul(x[k], y[k])), nx[k] * ny[k]))
            u, v = random_orthonormal_imaginary_pair(rng)
            tr.add("subalgebra_closure", subalgebra_closure_residual(quaternion_subalgebra(u, v)))
        return tr.outcome()


class CliffordSuite(VerificationSuite):
    name = "clifford"

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        x, y, phi, psi = (rng.standard_normal((samples, 8)) for _ in range(4))
        nx, ny, nphi, npsi = (np.linalg.norm(v, axis=1) for v in (x, y, phi, psi))
        for label, first, second in (
            ("plus", v_on_plus_array, v_on_minus_array),
            ("minus", v_on_minus_array, v_on_plus_array),
        ):
            twice = second(x, first(x, phi)) + nx[:, None] ** 2 * phi
            tr.add(f"clifford_{label}", np.max(np.linalg.norm(twice, axis=1) / (nx**2 * nphi)))
            polar = second(x, first(y, phi)) + second(y, first(x, phi)) + 2.0 * np.sum(x * y, axis=1)[:, None] * phi
            tr.add(f"polarized_{label}", np.max(np.linalg.norm(polar, axis=1) / (nx * ny * nphi)))
            tr.add(
                f"norm_{label}",
                np.max(np.abs(np.linalg.norm(first(x, phi), axis=1) - nx * nphi) / (nx * nphi)),
            )
        pair = pair_array(phi, psi)
        scale = nx * nphi * npsi
        lhs = np.sum(x * pair, axis=1)
        tr.add("adjoint_minus", np.max(np.abs(lhs - np.sum(v_on_minus_array(x, psi) * phi, axis=1)) / scale))
        tr.add("adjoint_plus", np.max(np.abs(lhs + np.sum(v_on_plus_array(x, phi) * psi, axis=1)) / scale))
        tr.add("norm_pair", np.max(np.abs(np.linalg.norm(pair, axis=1) - nphi * npsi) / (nphi * npsi)))
        unit = triple_form(ONE, Spinor(PLUS, ONE), Spinor(MINUS, ONE))
        tr.add("unit_triple", abs(unit - 1.0))
        return tr.outcome(unit_triple=unit)


class LorentzSuite(VerificationSuite):
    name = "lorentz"

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        for _ in range(samples):
            f = random_lorentz(rng)
            psi = random_twistor(rng)
            twice = clifford_action(f, clifford_action(f, psi))
            expected = psi.scaled(-lorentz_form(f, f))
            scale = f.norm() ** 2 * np.linalg.norm(psi.as_array())
            tr.add("clifford_twice", rel(np.linalg.norm(twice.as_array() - expected.as_array()), scale))

            word = random_word(rng)
            g = random_lorentz(rng)
            fw, gw = vector_action_word(word, f), vector_action_word(word, g)
            drift = abs(lorentz_form(fw, gw) - lorentz_form(f, g))
            tr.add("form_invariance", rel(drift, fw.norm() * gw.norm() + f.norm() * g.norm()))

            letter = random_generator(rng)
            moved = project(act(letter, psi))
            pushed = as_point(vector_action(letter, project(psi).ray))
            tr.add("projection_equivariance", ray_distance(moved, pushed))
        return tr.outcome()

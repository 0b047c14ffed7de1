from __future__ import annotations

from dataclasses import replace

import numpy as np

from octoline.algebra.lorentz import SPACELIKE_UNIT, TIMELIKE_UNIT
from octoline.algebra.twistor import act_rho
from octoline.config import DUALITY_KAPPA, AppConfig
from octoline.invariants.determinant import det_rho, reference_rho
from octoline.invariants.duality import calibrate_kappa, duality_residual
from octoline.invariants.normal_form import normal_form_residual, normalize, replay, retract
from octoline.invariants.signature import restricted_signature
from octoline.models import Inversion
from octoline.sampling import random_even_word, random_rho, random_subalgebra, random_unit_det_rho, stabilizer_word
from octoline.suites.base import SuiteOutcome, Tracker, VerificationSuite, rel

EXPECTED_SIGNATURES = {
    "sl2o": (22, 9, 0),
    "su2o": (22, 0, 0),
    "su11o": (14, 8, 0),
    "sl2h": (10, 5, 0),
}


class SignatureSuite(VerificationSuite):

    name = "signature"

    def __init__(self, config: AppConfig | None = None) -> None:
        self.config = config or AppConfig()

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        rho0 = reference_rho()
        observed: dict[str, list[int]] = {}
        mismatches = 0
        for name in ("sl2o", "su2o", "su11o", "sl2h"):
            sig = restricted_signature(rho0, name, config=self.config)
            observed[name] = list(sig)
            mismatches += sig != EXPECTED_SIGNATURES[name]
        orbit: list[list[int]] = []
        for _ in range(samples):
            sig = restricted_signature(act_rho(random_even_word(rng), rho0), "sl2o", config=self.config)
            orbit.append(list(sig))
            mismatches += sig != EXPECTED_SIGNATURES["sl2o"]
        quaternionic: list[list[int]] = []
        for _ in range(10):
            sig = restricted_signature(rho0, "sl2h", sub=random_subalgebra(rng), config=self.config)
            quaternionic.append(list(sig))
            mismatches += sig != EXPECTED_SIGNATURES["sl2h"]
        return SuiteOutcome(
            float(mismatches),
            {
                "reference": observed,
                "orbit_sl2o": orbit,
                "random_sl2h": quaternionic,
            },
        )


class NormalizationSuite(VerificationSuite):
    name = "normalization"

    def __init__(self, config: AppConfig | None = None) -> None:
        self.config = config or AppConfig()

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        done = 0
        with_inversion = 0
        # 残差由套件自己记账，不在 normalize 内拦截
        tols = replace(self.config.tolerances, normalization=float("inf"))
        while done < samples:
            rho = random_rho(rng)
            value = det_rho(rho)
            if value <= 1e-6:
                continue
            form = normalize(rho, tols)
            tr.add("normal_form", normal_form_residual(form))
            tr.add("parity", float(form.word.parity))
            tr.add("replay", rel(np.linalg.norm(replay(rho, form).as_array() - form.rho.as_array()), 1.0))
            expected = value * np.linalg.det(form.p) ** 2
            tr.add("det_covariance", rel(abs(det_rho(form.rho) - expected), abs(expected)))
            with_inversion += any(isinstance(g, Inversion) for g in form.word.generators)
            done += 1
        return tr.outcome(words_with_inversion=with_inversion)


class DualitySuite(VerificationSuite):
    name = "duality"

    def __init__(self, config: AppConfig | None = None) -> None:
        self.config = config or AppConfig()

    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        tr = Tracker()
        kappa = self.config.duality.kappa
        tols = self.config.tolerances
        rho0 = reference_rho()
        tr.add("reference_timelike", duality_residual(rho0, TIMELIKE_UNIT, kappa, tols))
        tr.add("reference_spacelike", duality_residual(rho0, SPACELIKE_UNIT, kappa, tols))
        calibrated = calibrate_kappa()
        tr.add("kappa_calibration", abs(calibrated - DUALITY_KAPPA))
        for _ in range(samples):
            moved = act_rho(stabilizer_word(rng, timelike=True), rho0)
            tr.add("stabilizer_timelike", duality_residual(moved, TIMELIKE_UNIT, kappa, tols))
            moved = act_rho(stabilizer_word(rng, timelike=False), rho0)
            tr.add("stabilizer_spacelike", duality_residual(moved, SPACELIKE_UNIT, kappa, tols))
            landed = retract(random_unit_det_rho(rng), tols)
            tr.add("retract", duality_residual(landed, TIMELIKE_UNIT, kappa, tols))
        return tr.outcome(kappa=kappa, calibrated_kappa=calibrated)

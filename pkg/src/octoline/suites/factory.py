from __future__ import annotations

from octoline.config import AppConfig
from octoline.suites.algebra_suites import CliffordSuite, LorentzSuite, OctonionSuite
from octoline.suites.base import VerificationSuite
from octoline.suites.geometry_suites import DualitySuite, NormalizationSuite, SignatureSuite
from octoline.suites.invariant_suites import (
    DerivativesSuite,
    HessianSuite,
    IdentitySuite,
    InvarianceSuite,
    NullitySuite,
    QuaternionOracleSuite,
)

SUITE_NAMES: tuple[str, ...] = (
    "octonion",
    "clifford",
    "lorentz",
    "identity",
    "nullity",
    "invariance",
    "quaternion-oracle",
    "hessian",
    "derivatives",
    "signature",
    "normalization",
    "duality",
)


def build_suite(name: str, config: AppConfig | None = None) -> VerificationSuite:
    cfg = config or AppConfig()
    mode = name.strip().lower()
    if mode == "octonion":
        return OctonionSuite()
    if mode == "clifford":
        return CliffordSuite()
    if mode == "lorentz":
        return LorentzSuite()
    if mode == "identity":
        return IdentitySuite()
    if mode == "nullity":
        return NullitySuite()
    if mode == "invariance":
        return InvarianceSuite()
    if mode == "quaternion-oracle":
        return QuaternionOracleSuite()
    if mode == "hessian":
        return HessianSuite()
    if mode == "derivatives":
        return DerivativesSuite(cfg.tolerances.finite_difference_step)
    if mode == "signature":
        return SignatureSuite(cfg)
    if mode == "normalization":
        return NormalizationSuite(cfg)
    if mode == "duality":
        return DualitySuite(cfg)
    raise ValueError(f"不支持的验证套件: {name}")


def resolve_names(selection: str) -> list[str]:
    mode = selection.strip().lower()
    if mode == "all":
        return list(SUITE_NAMES)
    names = [part.strip().lower() for part in mode.split(",") if part.strip()]
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown or not names:
        raise ValueError(f"不支持的验证套件: {', '.join(unknown) or selection}")
    return names

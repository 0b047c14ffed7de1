from __future__ import annotations

import json
import logging
import time
from datetime import datetime, timezone
from pathlib import Path

from octoline.config import AppConfig
from octoline.models import SuiteReport
from octoline.sampling import derive_seed, make_rng
from octoline.suites.factory import build_suite

logger = logging.getLogger(__name__)


def _diag_ok(stage: str, started_at: float, detail: str, **meta: object) -> dict:
    return {
        "stage": stage,
        "status": "ok",
        "duration_ms": round((time.perf_counter() - started_at) * 1000, 2),
        "detail": detail,
        "meta": meta,
    }


def _diag_error(stage: str, started_at: float, exc: Exception, **meta: object) -> dict:
    return {
        "stage": stage,
        "status": "error",
        "duration_ms": round((time.perf_counter() - started_at) * 1000, 2),
        "error_type": type(exc).__name__,
        "error": str(exc),
        "meta": meta,
    }


def _diag_warn(stage: str, started_at: float, detail: str, **meta: object) -> dict:
    return {
        "stage": stage,
        "status": "warning",
        "duration_ms": round((time.perf_counter() - started_at) * 1000, 2),
        "detail": detail,
        "meta": meta,
    }


def run_verify(
    names: list[str],
    seed: int = 0,
    samples: int | None = None,
    tol: float | None = None,
    config: AppConfig | None = None,
    output_dir: str | None = None,
) -> dict:
    cfg = config or AppConfig()
    diagnostics: list[dict] = []
    reports: list[SuiteReport] = []
    status = "ok"
    failed_stages: list[str] = []

    for name in names:
        n = samples if samples is not None else cfg.suites.samples.get(name, 1)
        tolerance = tol if tol is not None else cfg.suites.tolerances.get(name, 0.0)
        suite_seed = derive_seed(seed, name)
        t = time.perf_counter()
        try:
            outcome = build_suite(name, cfg).run(make_rng(suite_seed), n)
            report = SuiteReport(
                suite=name,
                samples=n,
                max_residual=outcome.max_residual,
                tolerance=tolerance,
                seed=suite_seed,
                wall_time=time.perf_counter() - t,
                detail=outcome.detail,
            )
            reports.append(report)
            if report.passed:
                diagnostics.append(_diag_ok(name, t, "验证通过", max_residual=report.max_residual))
            else:
                status = "failed"
                failed_stages.append(name)
                diagnostics.append(
                    _diag_warn(
                        name,
                        t,
                        "残差超过容差",
                        max_residual=report.max_residual,
                        tolerance=tolerance,
                    )
                )
        except Exception as e:
            status = "failed"
            failed_stages.append(name)
            logger.debug("suite %s raised", name, exc_info=True)
            diagnostics.append(_diag_error(name, t, e, seed=suite_seed))

    report_dict = {
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "status": status,
        "failed_stages": failed_stages,
        "seed": seed,
        "policy": {
            "samples_override": samples,
            "tol_override": tol,
            "suite_tolerances": {name: (tol if tol is not None else cfg.suites.tolerances.get(name, 0.0)) for name in names},
            "singular_floor": cfg.tolerances.singular_floor,
            "normal_form_residual_max": cfg.tolerances.normalization,
            "zero_eigen_ratio": cfg.tolerances.zero_eigen_ratio,
            "infinity_ratio": cfg.tolerances.infinity_ratio,
            "finite_difference_step": cfg.tolerances.finite_difference_step,
            "duality_kappa": cfg.duality.kappa,
        },
        "diagnostics": diagnostics,
        "suites": [r.to_dict() for r in reports],
    }

    if output_dir:
        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        stamp = datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")
        path = out / f"verify_{stamp}.json"
        path.write_text(json.dumps(report_dict, ensure_ascii=False, indent=2, default=str), encoding="utf-8")
        report_dict["report_path"] = str(path)
    return report_dict

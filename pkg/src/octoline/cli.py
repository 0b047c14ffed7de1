from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from octoline.config import AppConfig
from octoline.errors import OctolineError, PayloadError
from octoline.invariants.determinant import mu_conventions
from octoline.invariants.normal_form import normal_form_residual, normalize, replay
from octoline.invariants.signature import SUBSPACES, restricted_spectrum
from octoline.numerics import sign_counts
from octoline.payloads import dumps, encode_normal_form, load_rho
from octoline.pipelines.verify_run import run_verify
from octoline.suites.factory import SUITE_NAMES, resolve_names

EXIT_SUITE_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _config(args: argparse.Namespace) -> AppConfig:
    cfg = AppConfig()
    floor = getattr(args, "floor", None)
    if floor is not None:
        cfg.tolerances.singular_floor = floor
    return cfg


def _fail(message: str, code: int) -> None:
    Console(stderr=True).print(f"[red]{message}[/red]")
    raise SystemExit(code)


def _print_diagnostics(report: dict) -> None:
    diagnostics = report.get("diagnostics", [])
    if not diagnostics:
        return

    table = Table(title="执行诊断")
    table.add_column("套件")
    table.add_column("状态")
    table.add_column("耗时(ms)")
    table.add_column("说明")

    for item in diagnostics:
        detail = item.get("detail") or item.get("error") or ""
        table.add_row(
            str(item.get("stage", "-")),
            str(item.get("status", "unknown")),
            str(item.get("duration_ms", "-")),
            str(detail),
        )

    Console().print(table)


def cmd_verify(args: argparse.Namespace) -> None:
    try:
        names = resolve_names(args.suite)
    except ValueError as e:
        _fail(f"{e}；可选: all, {', '.join(SUITE_NAMES)}", EXIT_USAGE)
    if args.samples is not None and args.samples < 1:
        _fail("--samples 必须 ≥ 1", EXIT_USAGE)

    report = run_verify(
        names,
        seed=args.seed,
        samples=args.samples,
        tol=args.tol,
        config=_config(args),
        output_dir=args.output_dir,
    )

    if args.json:
        sys.stdout.write(dumps(report) + "\n")
    else:
        _print_diagnostics(report)
        table = Table(title="octoline 验证结果")
        table.add_column("套件")
        table.add_column("样本数")
        table.add_column("最大残差")
        table.add_column("容差")
        table.add_column("结果")
        table.add_column("种子")
        for item in report["suites"]:
            table.add_row(
                item["suite"],
                str(item["samples"]),
                f"{item['max_residual']:.3e}",
                f"{item['tolerance']:.1e}",
                "[green]通过[/green]" if item["pass"] else "[red]失败[/red]",
                str(item["seed"]),
            )
        console = Console()
        console.print(table)
        if "report_path" in report:
            console.print(f"\n报告已保存: {report['report_path']}")

    if report["status"] == "failed":
        if not args.json:
            Console().print(f"[red]验证失败，失败套件：{', '.join(report['failed_stages'])}[/red]")
        raise SystemExit(EXIT_SUITE_FAILED)


def cmd_det(args: argparse.Namespace) -> None:
    rho = load_rho(args.input)
    values = mu_conventions(rho)
    if args.json:
        sys.stdout.write(dumps(values) + "\n")
        return
    table = Table(title=f"det ρ：{args.input}")
    table.add_column("量")
    table.add_column("值")
    for key, value in values.items():
        table.add_row(key, f"{value:.15g}")
    Console().print(table)


def cmd_normalize(args: argparse.Namespace) -> None:
    cfg = _config(args)
    rho = load_rho(args.input)
    form = normalize(rho, cfg.tolerances)
    payload = encode_normal_form(form)
    payload["residual"] = normal_form_residual(form)
    payload["replay_error"] = float(np.linalg.norm(replay(rho, form).as_array() - form.rho.as_array()))
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(dumps(payload), encoding="utf-8")
    console = Console()
    console.print(f"正规形已写入: {out}")
    console.print(f"字长 {len(form.word)}，偶性 {form.word.parity}，残差 {payload['residual']:.3e}")


def cmd_signature(args: argparse.Namespace) -> None:
    cfg = _config(args)
    rho = load_rho(args.input)
    eig = restricted_spectrum(rho, args.subspace, config=cfg)
    p, n, z = sign_counts(eig, cfg.tolerances.zero_eigen_ratio)
    ordered = np.sort(eig)
    console = Console()
    console.print(f"子空间 {args.subspace}：维数 {eig.size}，符号差 (p, n, z) = ({p}, {n}, {z})")
    table = Table(title="特征值（最小 5 个 / 最大 5 个）")
    table.add_column("最小")
    table.add_column("最大")
    for lo, hi in zip(ordered[:5], ordered[::-1][:5]):
        table.add_row(f"{lo:.10g}", f"{hi:.10g}")
    console.print(table)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="octoline")
    parser.add_argument("--verbose", action="store_true", help="输出调试日志")
    sub = parser.add_subparsers(required=True)

    verify = sub.add_parser("verify", help="运行数值验证套件")
    verify.add_argument("--suite", type=str, default="all", help=f"套件名、逗号分隔列表或 all（{', '.join(SUITE_NAMES)}）")
    verify.add_argument("--samples", type=int, default=None, help="覆盖各套件的默认样本数")
    verify.add_argument("--tol", type=float, default=None, help="覆盖各套件的默认容差")
    verify.add_argument("--seed", type=int, default=0, help="根种子")
    verify.add_argument("--json", action="store_true", help="把 JSON 报告写到标准输出")
    verify.add_argument("--output-dir", type=str, default=None, help="报告目录，例如 data/reports")
    verify.set_defaults(func=cmd_verify)

    det = sub.add_parser("det", help="计算 det ρ 与两种 μ")
    det.add_argument("input", type=str, help="ρ 的 JSON 文件")
    det.add_argument("--json", action="store_true", help="以 JSON 输出")
    det.set_defaults(func=cmd_det)

    norm = sub.add_parser("normalize", help="把 ρ 化为对角单位正规形")
    norm.add_argument("input", type=str, help="ρ 的 JSON 文件")
    norm.add_argument("-o", "--output", type=str, required=True, help="输出 JSON 文件")
    norm.add_argument("--floor", type=float, default=None, help="奇异阈值（相对 ‖ρ‖⁴）")
    norm.set_defaults(func=cmd_normalize)

    sig = sub.add_parser("signature", help="Hessian 度量在子空间上的符号差")
    sig.add_argument("input", type=str, help="ρ 的 JSON 文件")
    sig.add_argument("--subspace", type=str, default="sl2o", choices=list(SUBSPACES))
    sig.add_argument("--floor", type=float, default=None, help="奇异阈值（相对 ‖ρ‖⁴）")
    sig.set_defaults(func=cmd_signature)
    return parser


def main(argv: list[str] | None = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(message)s", handlers=[RichHandler(rich_tracebacks=True)])
    try:
        args.func(args)
    except PayloadError as e:
        _fail(f"输入解析失败: {e}", EXIT_USAGE)
    except OctolineError as e:
        _fail(f"数值错误: {e}", EXIT_DOMAIN)


if __name__ == "__main__":
    main()

"""Command-line front end.

Subcommands
    estimate   fit/accept marginal tails, estimate the failure probability
    scan       the same estimate along a ke grid (stability curve)
    simulate   write a synthetic claims CSV from the polar model
    oracle     closed-form and Monte Carlo answers for the polar model

Input CSV: header ``building,contents,profits``, decimal point ``.``, comma
separator, UTF-8, blank lines ignored.  Estimation uses building as the
first coordinate and contents as the second; records are kept when any
component strictly exceeds the filter threshold, and the reported
probability is conditional on passing that filter.

A config file (``--config``) holds ``key = value`` lines with the long flag
names (``fit1``, ``set``, ``ke``, ``lambda``, ...); flags override the file.

Result documents are JSON with sorted keys; identical inputs produce
byte-identical documents when ``--no-timestamp`` is given.  Exit codes:
0 success, 2 config error, 3 data error, 4 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import __version__
from .errors import (
    BadGrid,
    BadK,
    BadN,
    BadRect,
    BadTuning,
    EmptyAfterFilter,
    FailProbError,
    InvalidFailureSet,
    InvalidFit,
    InvalidMeasure,
    InvalidModel,
    InvalidSample,
    LengthMismatch,
    NonPositiveArg,
    NonPositiveGamma,
    NonPositiveTail,
    NotHalfplane,
    ParseError,
    RetentionTooSmall,
)
from .estimator import FailureProbabilityEstimate, estimate_full, stability_scan
from .failure_sets import LinearHalfplane, TuningParams, crude_ke_bound
from .marginals import GpdTailFit, MarginalSample, fit_marginal_hill, make_fit
from .polar import BetaAngle, PolarModel, UniformAngle, monte_carlo_p, sample_polar, true_p_halfplane

__all__ = ["ClaimsRecord", "RunConfig", "ingest_claims_csv", "main"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_NUMERIC = 4


class CliConfigError(FailProbError, ValueError):
    """Flag or config-file value could not be interpreted."""


_CONFIG_ERRORS = (
    CliConfigError,
    BadTuning,
    BadGrid,
    BadK,
    BadN,
    BadRect,
    InvalidFit,
    InvalidFailureSet,
    InvalidModel,
    NotHalfplane,
    RetentionTooSmall,
)
_DATA_ERRORS = (
    ParseError,
    EmptyAfterFilter,
    InvalidSample,
    InvalidMeasure,
    LengthMismatch,
    FileNotFoundError,
    IsADirectoryError,
    PermissionError,
)
_NUMERIC_ERRORS = (
    NonPositiveTail,
    NonPositiveGamma,
    NonPositiveArg,
    FloatingPointError,
    OverflowError,
    ZeroDivisionError,
)


class ClaimsRecord(NamedTuple):
    """One claims row, in millions of currency; all components >= 0."""

    building: float
    contents: float
    profits: float


_CSV_HEADER = ("building", "contents", "profits")


def ingest_claims_csv(path, filter_threshold: float) -> list[ClaimsRecord]:
    """Read and filter a claims CSV.

    Keeps rows whose largest component strictly exceeds ``filter_threshold``,
    preserving order.  Raises :class:`ParseError` with a 1-based line number
    on any malformed content and :class:`EmptyAfterFilter` when nothing
    survives.
    """
    path = Path(path)
    records: list[ClaimsRecord] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = None
        for lineno, row in enumerate(reader, start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if header is None:
                header = tuple(cell.strip().lower() for cell in row)
                if header != _CSV_HEADER:
                    raise ParseError(
                        f"expected header {','.join(_CSV_HEADER)!r}, got {','.join(header)!r}",
                        line=lineno,
                    )
                continue
            if len(row) != 3:
                raise ParseError(f"expected 3 fields, got {len(row)}", line=lineno)
            try:
                values = tuple(float(cell) for cell in row)
            except ValueError:
                raise ParseError(f"non-numeric field in {row!r}", line=lineno) from None
            if any(not math.isfinite(v) or v < 0 for v in values):
                raise ParseError(f"fields must be finite and >= 0, got {row!r}", line=lineno)
            if max(values) > filter_threshold:
                records.append(ClaimsRecord(*values))
    if header is None:
        raise ParseError("file is empty", line=1)
    if not records:
        raise EmptyAfterFilter(
            f"no record has a component above the filter threshold {filter_threshold}"
        )
    return records


# --------------------------------------------------------------------------
# flag / config-file value parsing


def _parse_kv(body: str, what: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for item in body.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise CliConfigError(f"{what}: expected key=value, got {item!r}")
        out[key.strip().lower()] = value.strip()
    return out


def _kv_floats(kv: dict[str, str], required: Sequence[str], what: str) -> dict[str, float]:
    missing = [k for k in required if k not in kv]
    if missing:
        raise CliConfigError(f"{what}: missing {', '.join(missing)}")
    extra = [k for k in kv if k not in required]
    if extra:
        raise CliConfigError(f"{what}: unknown key(s) {', '.join(extra)}")
    try:
        return {k: float(v) for k, v in kv.items()}
    except ValueError as exc:
        raise CliConfigError(f"{what}: {exc}") from None


@dataclass(frozen=True)
class FitSpec:
    """Either a Hill fit (k only) or manual parameters."""

    kind: str  # "hill" | "manual"
    k: int
    gamma: float | None = None
    sigma: float | None = None
    mu: float | None = None

    def resolve(self, sample: MarginalSample) -> GpdTailFit:
        if self.kind == "hill":
            return fit_marginal_hill(sample, self.k)
        return make_fit(self.gamma, self.sigma, self.mu, self.k, len(sample))


def parse_fit_spec(text: str) -> FitSpec:
    kind, sep, body = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind == "hill":
        kv = _kv_floats(_parse_kv(body, "hill fit"), ["k"], "hill fit")
        return FitSpec(kind="hill", k=int(kv["k"]))
    if kind == "manual":
        kv = _kv_floats(
            _parse_kv(body, "manual fit"), ["gamma", "sigma", "mu", "k"], "manual fit"
        )
        return FitSpec(
            kind="manual",
            k=int(kv["k"]),
            gamma=kv["gamma"],
            sigma=kv["sigma"],
            mu=kv["mu"],
        )
    raise CliConfigError(f"fit spec must start with 'hill:' or 'manual:', got {text!r}")


def parse_set_spec(text: str) -> LinearHalfplane:
    kind, sep, body = text.strip().partition(":")
    if kind.strip().lower() != "halfplane":
        raise CliConfigError(
            f"only 'halfplane:a1=..,a2=..,r=..' sets are supported on the CLI, got {text!r}"
        )
    kv = _kv_floats(_parse_kv(body, "halfplane"), ["a1", "a2", "r"], "halfplane")
    return LinearHalfplane(alpha1=kv["a1"], alpha2=kv["a2"], retention=kv["r"])


def parse_model_spec(text: str) -> PolarModel:
    kind, sep, body = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind == "uniform":
        if body.strip():
            raise CliConfigError("'uniform' takes no parameters")
        return PolarModel(UniformAngle())
    if kind == "beta":
        kv = _kv_floats(_parse_kv(body, "beta model"), ["shape1", "shape2"], "beta model")
        return PolarModel(BetaAngle(shape1=kv["shape1"], shape2=kv["shape2"]))
    raise CliConfigError(f"model must be 'uniform' or 'beta:shape1=..,shape2=..', got {text!r}")


def parse_grid_spec(text: str) -> list[float]:
    """``START:STOP:COUNTlog`` (log-spaced) or ``START:STOP:COUNTlin``."""
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise CliConfigError(f"grid spec must be START:STOP:COUNT[log|lin], got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise CliConfigError(f"grid spec: {exc}") from None
    count_text = parts[2].strip().lower()
    spacing = "log"
    for suffix in ("log", "lin"):
        if count_text.endswith(suffix):
            spacing = suffix
            count_text = count_text[: -len(suffix)]
            break
    try:
        count = int(count_text)
    except ValueError:
        raise CliConfigError(f"grid spec: bad count {parts[2]!r}") from None
    if count < 1 or not 0 < start < stop:
        raise CliConfigError(f"grid spec needs 0 < START < STOP and COUNT >= 1, got {text!r}")
    if count == 1:
        return [start]
    if spacing == "log":
        return list(np.geomspace(start, stop, count))
    return list(np.linspace(start, stop, count))


def load_config_file(path) -> dict[str, str]:
    """Flat ``key = value`` lines; '#' starts a comment; keys are flag names."""
    values: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CliConfigError(f"{path}: line {lineno}: expected key = value, got {raw!r}")
        values[key.strip().lower().replace("-", "_")] = value.strip()
    return values


_CONFIG_FIELDS = {
    "data": str,
    "filter_threshold": float,
    "fit1": str,
    "fit2": str,
    "set": str,
    "ke": float,
    "ell": float,
    "lambda": float,
    "level": float,
    "grid": str,
    "seed": int,
    "out": str,
    "model": str,
    "n": int,
    "n_draws": int,
}
_DEST_BY_KEY = {"lambda": "lam", "set": "set_spec"}


def _merge_config_file(args: argparse.Namespace) -> None:
    if getattr(args, "config", None) is None:
        return
    file_values = load_config_file(args.config)
    for key, raw in file_values.items():
        if key not in _CONFIG_FIELDS:
            raise CliConfigError(f"unknown config key {key!r}")
        dest = _DEST_BY_KEY.get(key, key)
        if not hasattr(args, dest) or getattr(args, dest) is not None:
            continue  # flag wins, or key not used by this subcommand
        try:
            setattr(args, dest, _CONFIG_FIELDS[key](raw))
        except ValueError as exc:
            raise CliConfigError(f"config key {key!r}: {exc}") from None


@dataclass(frozen=True)
class RunConfig:
    """Resolved configuration of an estimate/scan run."""

    data: str
    fit1: FitSpec
    fit2: FitSpec
    failure_set: LinearHalfplane
    tuning: TuningParams
    filter_threshold: float = 1.0
    ke_grid: Optional[tuple[float, ...]] = None
    seed: Optional[int] = None


# --------------------------------------------------------------------------
# document helpers


def _fit_doc(fit: GpdTailFit, source: str) -> dict:
    return {
        "source": source,
        "gamma": fit.gamma,
        "sigma": fit.sigma,
        "mu": fit.mu,
        "k": fit.k_i,
        "n": fit.n,
    }


def _set_doc(failure_set: LinearHalfplane) -> dict:
    return {
        "type": "halfplane",
        "alpha1": failure_set.alpha1,
        "alpha2": failure_set.alpha2,
        "retention": failure_set.retention,
    }


def _estimate_doc(est: FailureProbabilityEstimate) -> dict:
    return {
        "p_hat": est.p_hat,
        "sigma_hat": est.sigma_hat,
        "ci_lower": est.ci_lower,
        "ci_upper": est.ci_upper,
        "ke": est.ke,
        "n": est.n,
        "count_in_inflated": est.count_in_inflated,
        "i_hat_1": est.i_hat_1,
        "i_hat_2": est.i_hat_2,
        "cov_term": est.cov_term,
    }


def _model_doc(model: PolarModel) -> dict:
    if isinstance(model.spectral, UniformAngle):
        return {"angle": "uniform"}
    return {
        "angle": "beta",
        "shape1": model.spectral.shape1,
        "shape2": model.spectral.shape2,
    }


def _finish_doc(doc: dict, args: argparse.Namespace) -> dict:
    doc["tool"] = {"name": "failprob", "version": __version__}
    if not getattr(args, "no_timestamp", False):
        doc["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return doc


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


_FLAG_BY_DEST = {"set_spec": "set", "n_draws": "n-draws", "filter_threshold": "filter-threshold"}


def _require(args: argparse.Namespace, dests: Sequence[str]) -> None:
    missing = [d for d in dests if getattr(args, d, None) is None]
    if missing:
        flags = ", ".join("--" + _FLAG_BY_DEST.get(d, d) for d in missing)
        raise CliConfigError(f"missing required option(s): {flags}")


# --------------------------------------------------------------------------
# subcommand bodies


def _prepare_run(args: argparse.Namespace, need: str) -> tuple[RunConfig, dict]:
    """Shared estimate/scan setup: ingest, fit, tune; returns config + doc base."""
    _require(args, ["data", "fit1", "fit2", "set_spec"])
    if need == "ke":
        _require(args, ["ke"])
    else:
        _require(args, ["grid"])
    threshold = 1.0 if args.filter_threshold is None else float(args.filter_threshold)
    if threshold < 0:
        raise CliConfigError(f"filter threshold must be >= 0, got {threshold}")
    fit1_spec = parse_fit_spec(args.fit1)
    fit2_spec = parse_fit_spec(args.fit2)
    failure_set = parse_set_spec(args.set_spec)
    grid = tuple(parse_grid_spec(args.grid)) if need == "grid" else None
    tuning = TuningParams(
        ke=args.ke if need == "ke" else float(max(grid)),
        ell=0.1 if args.ell is None else args.ell,
        lam=1.0 if args.lam is None else args.lam,
        level=0.95 if args.level is None else args.level,
    )
    cfg = RunConfig(
        data=args.data,
        fit1=fit1_spec,
        fit2=fit2_spec,
        failure_set=failure_set,
        tuning=tuning,
        filter_threshold=threshold,
        ke_grid=grid,
        seed=args.seed,
    )

    tuning_doc = {
        "ell": tuning.ell,
        "lambda": tuning.lam,
        "level": tuning.level,
    }
    if need == "ke":
        tuning_doc["ke"] = tuning.ke
    else:
        tuning_doc["ke_grid"] = list(grid)

    records = ingest_claims_csv(cfg.data, cfg.filter_threshold)
    xs = MarginalSample([rec.building for rec in records])
    ys = MarginalSample([rec.contents for rec in records])
    fit1 = cfg.fit1.resolve(xs)
    fit2 = cfg.fit2.resolve(ys)

    warnings: list[str] = []
    bound = crude_ke_bound(cfg.failure_set, fit1, fit2)
    check_kes = cfg.ke_grid if cfg.ke_grid is not None else (cfg.tuning.ke,)
    offending = [ke for ke in check_kes if ke > bound]
    if offending:
        warnings.append(
            f"ke={max(offending):g} exceeds the crude bound {bound:g}; "
            "membership decisions rely on the fitted tails outside their validated range"
        )

    doc = {
        "input": {
            "data": str(cfg.data),
            "filter_threshold": cfg.filter_threshold,
            "n_records": len(records),
        },
        "fits": {
            "coord1": _fit_doc(fit1, cfg.fit1.kind),
            "coord2": _fit_doc(fit2, cfg.fit2.kind),
        },
        "failure_set": _set_doc(cfg.failure_set),
        "tuning": tuning_doc,
        "crude_ke_bound": bound,
        "warnings": warnings,
    }
    return cfg, {"doc": doc, "xs": xs, "ys": ys, "fit1": fit1, "fit2": fit2}


def _cmd_estimate(args: argparse.Namespace) -> int:
    cfg, ctx = _prepare_run(args, need="ke")
    est = estimate_full(
        ctx["xs"], ctx["ys"], (ctx["fit1"], ctx["fit2"]), cfg.failure_set, cfg.tuning
    )
    doc = ctx["doc"]
    doc["command"] = "estimate"
    doc["estimate"] = _estimate_doc(est)
    doc["warnings"].extend(est.diagnostics())
    _emit(_finish_doc(doc, args), args.out)
    return EXIT_OK


def _cmd_scan(args: argparse.Namespace) -> int:
    cfg, ctx = _prepare_run(args, need="grid")
    curve = stability_scan(
        ctx["xs"],
        ctx["ys"],
        (ctx["fit1"], ctx["fit2"]),
        cfg.failure_set,
        cfg.tuning,
        list(cfg.ke_grid),
    )
    doc = ctx["doc"]
    doc["command"] = "scan"
    doc["curve"] = [_estimate_doc(est) for est in curve.estimates]
    for est in curve.estimates:
        for note in est.diagnostics():
            note_ke = f"ke={est.ke:g}: {note}"
            if note_ke not in doc["warnings"]:
                doc["warnings"].append(note_ke)

    csv_path = args.curve_csv
    if csv_path is None and args.out:
        csv_path = str(Path(args.out).with_suffix(".csv"))
    if csv_path:
        with Path(csv_path).open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["ke", "p_hat", "ci_lower", "ci_upper"])
            for est in curve.estimates:
                writer.writerow(
                    [repr(float(v)) for v in (est.ke, est.p_hat, est.ci_lower, est.ci_upper)]
                )
    doc["curve_csv"] = csv_path

    if args.svg:
        _write_svg(curve, args.svg)
    doc["svg"] = args.svg

    _emit(_finish_doc(doc, args), args.out)
    return EXIT_OK


def _write_svg(curve, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    kes = list(curve.kes)
    ests = curve.estimates
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(kes, [e.p_hat for e in ests], color="tab:blue", label="estimate")
    ax.plot(kes, [e.ci_lower for e in ests], color="black", linestyle="--", label="confidence bounds")
    ax.plot(kes, [e.ci_upper for e in ests], color="black", linestyle="--")
    ax.set_xscale("log")
    ax.set_xlabel("ke")
    ax.set_ylabel("failure probability")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def _cmd_simulate(args: argparse.Namespace) -> int:
    _require(args, ["n", "out"])
    model = parse_model_spec(args.model) if args.model else PolarModel()
    seed = 0 if args.seed is None else args.seed
    xs, ys = sample_polar(model, args.n, seed)
    with Path(args.out).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(_CSV_HEADER)
        for x, y in zip(xs.values, ys.values):
            writer.writerow([repr(float(x)), repr(float(y)), "0.0"])
    doc = {
        "command": "simulate",
        "model": _model_doc(model),
        "n": int(args.n),
        "seed": seed,
        "out": args.out,
    }
    _emit(_finish_doc(doc, args), None)
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    _require(args, ["set_spec"])
    model = parse_model_spec(args.model) if args.model else PolarModel()
    failure_set = parse_set_spec(args.set_spec)
    doc = {
        "command": "oracle",
        "model": _model_doc(model),
        "failure_set": _set_doc(failure_set),
        "p_true": true_p_halfplane(
            model, failure_set.alpha1, failure_set.alpha2, failure_set.retention
        ),
    }
    n_draws = 0 if args.n_draws is None else args.n_draws
    if n_draws:
        seed = 0 if args.seed is None else args.seed
        result = monte_carlo_p(model, failure_set, n_draws, seed)
        doc["monte_carlo"] = {
            "p_mc": result.p_mc,
            "stderr": result.mc_stderr,
            "n_draws": result.n_draws,
            "seed": seed,
        }
    else:
        doc["monte_carlo"] = None
    _emit(_finish_doc(doc, args), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="failprob",
        description="Failure-probability estimation for bivariate heavy-tailed data.",
    )
    parser.add_argument("--version", action="version", version=f"failprob {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="config file with key = value lines; flags override")
        p.add_argument("--out", help="write the JSON result document here (default: stdout)")
        p.add_argument("--seed", type=int, help="random seed where applicable")
        p.add_argument(
            "--no-timestamp",
            action="store_true",
            help="omit the timestamp so identical runs emit identical bytes",
        )

    def add_estimation(p: argparse.ArgumentParser) -> None:
        p.add_argument("--data", help="claims CSV (building,contents,profits)")
        p.add_argument(
            "--filter-threshold",
            type=float,
            dest="filter_threshold",
            help="keep records with any component strictly above this (default 1.0)",
        )
        p.add_argument("--fit1", help="'hill:k=900' or 'manual:gamma=..,sigma=..,mu=..,k=..'")
        p.add_argument("--fit2", help="same syntax, second coordinate")
        p.add_argument("--set", dest="set_spec", help="'halfplane:a1=..,a2=..,r=..'")
        p.add_argument("--ell", type=float, help="boundary half-width (default 0.1)")
        p.add_argument("--lambda", dest="lam", type=float, help="covariance relaxation (default 1.0)")
        p.add_argument("--level", type=float, help="confidence level (default 0.95)")

    p_est = sub.add_parser("estimate", help="failure-probability estimate at one ke")
    add_estimation(p_est)
    p_est.add_argument("--ke", type=float, help="inflation product; must exceed the sample size")
    add_common(p_est)
    p_est.set_defaults(func=_cmd_estimate)

    p_scan = sub.add_parser("scan", help="stability scan over a ke grid")
    add_estimation(p_scan)
    p_scan.add_argument("--grid", help="grid spec START:STOP:COUNT[log|lin], e.g. 1e4:5e5:40log")
    p_scan.add_argument("--curve-csv", dest="curve_csv", help="write the curve CSV here (default: --out with .csv)")
    p_scan.add_argument("--svg", help="optional SVG plot of the curve")
    add_common(p_scan)
    p_scan.set_defaults(func=_cmd_scan)

    p_sim = sub.add_parser("simulate", help="write a synthetic claims CSV")
    p_sim.add_argument("--model", help="'uniform' or 'beta:shape1=..,shape2=..' (default uniform)")
    p_sim.add_argument("--n", type=int, help="number of rows")
    p_sim.add_argument("--out", help="output CSV path", default=None)
    p_sim.add_argument("--config", help="config file with key = value lines; flags override")
    p_sim.add_argument("--seed", type=int, help="random seed (default 0)")
    p_sim.add_argument("--no-timestamp", action="store_true")
    p_sim.set_defaults(func=_cmd_simulate)

    p_orc = sub.add_parser("oracle", help="closed-form and Monte Carlo truth for the polar model")
    p_orc.add_argument("--model", help="'uniform' or 'beta:shape1=..,shape2=..' (default uniform)")
    p_orc.add_argument("--set", dest="set_spec", help="'halfplane:a1=..,a2=..,r=..'")
    p_orc.add_argument("--n-draws", dest="n_draws", type=int, help="Monte Carlo draws (0 = skip)")
    add_common(p_orc)
    p_orc.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config_file(args)
        return args.func(args)
    except _CONFIG_ERRORS as exc:
        _emit_error(exc, EXIT_CONFIG)
        return EXIT_CONFIG
    except _DATA_ERRORS as exc:
        _emit_error(exc, EXIT_DATA)
        return EXIT_DATA
    except _NUMERIC_ERRORS as exc:
        _emit_error(exc, EXIT_NUMERIC)
        return EXIT_NUMERIC


def _emit_error(exc: Exception, code: int) -> None:
    doc = {"error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}}
    sys.stderr.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

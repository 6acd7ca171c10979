"""Deterministic command-line front end.

Subcommands:
  table     build one K table and export it as CSV
  verify    Deligne + character-sum identity sweep over primes
  bilinear  seeded sweep of bilinear sums and bound evaluations (JSON config)
  energy    one J(H, M) count with bounds, as a CSV row
  diag      proof-diagnostics JSON report (JSON config)

Every output is a pure function of the config bytes and seeds: rows are
sorted, floats rendered with 17 significant digits, seeds derived with the
SHA-256 mixer in kloosum.seeding.  Exit codes: 0 success, 1 a checked
inequality failed, 2 invalid input, 3 operation budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import energy as energy_mod
from . import kloosterman
from .bilinear import (
    IntervalSpec,
    SampleSet,
    corollary_check,
    make_weights,
    polynomial_twist_sum,
    theorem_delta,
    trivial_bound,
    type2_sum,
)
from .diagnostics import (
    block_sum_S,
    nu_r1_r2,
    parameter_choices,
    sigma_decomposition,
)
from .errors import INPUT_ERRORS, ConfigError, Infeasible, ValidationError
from .field import build_field, is_prime
from .seeding import mix_seed

SWEEP_COLUMNS = [
    "p",
    "r",
    "ell",
    "M",
    "N",
    "weight_kind",
    "seed",
    "abs_S",
    "trivial_bound",
    "delta",
    "theorem_bound",
    "ratio_S_over_trivial",
    "ratio_S_over_MN",
]


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    return cfg


def _require(cfg: dict, key: str):
    if key not in cfg:
        raise ConfigError(f"config is missing required key {key!r}")
    return cfg[key]


def _resolve_size(p: int, spec: dict, size_key: str = "size") -> int:
    if size_key in spec:
        return int(spec[size_key])
    exp_key = size_key + "_exponent"
    if exp_key in spec:
        return math.ceil(float(p) ** float(spec[exp_key]))
    raise ConfigError(f"need {size_key!r} or {exp_key!r}")


def _build_set(p: int, spec: dict, seed: int) -> SampleSet:
    kind = spec.get("kind", "random")
    if kind == "random":
        return SampleSet.random(p, _resolve_size(p, spec), seed)
    if kind == "interval":
        iv = IntervalSpec(p, int(spec.get("offset", 0)), _resolve_size(p, spec))
        return SampleSet(p, iv.elements)
    if kind == "poly":
        return SampleSet.poly_image(p, spec["coeffs"], int(spec["count"]))
    if kind == "list":
        return SampleSet.from_values(p, spec["elements"])
    raise ConfigError(f"unknown set kind {kind!r}")


def _build_interval(p: int, spec: dict) -> IntervalSpec:
    return IntervalSpec(p, int(spec.get("offset", 0)), _resolve_size(p, spec, "length"))


def _parse_set_arg(p: int, text: str) -> SampleSet:
    """Set spec grammar for --set: random:SIZE:SEED | interval:OFFSET:LENGTH
    | list:v1,v2,... | poly:c0,c1,...:COUNT"""
    parts = text.split(":")
    kind = parts[0]
    try:
        if kind == "random" and len(parts) == 3:
            return SampleSet.random(p, int(parts[1]), int(parts[2]))
        if kind == "interval" and len(parts) == 3:
            return SampleSet(p, IntervalSpec(p, int(parts[1]), int(parts[2])).elements)
        if kind == "list" and len(parts) == 2:
            return SampleSet.from_values(p, [int(v) for v in parts[1].split(",")])
        if kind == "poly" and len(parts) == 3:
            coeffs = [int(v) for v in parts[1].split(",")]
            return SampleSet.poly_image(p, coeffs, int(parts[2]))
    except ValueError as exc:
        raise ValidationError(f"bad set spec {text!r}: {exc}") from exc
    raise ValidationError(f"bad set spec {text!r}")


# ---------------------------------------------------------------- table


def cmd_table(args) -> int:
    fld = build_field(args.p)
    if args.method == "spectral":
        table = kloosterman.spectral_table(fld, args.r)
    elif args.method == "convolution":
        table = kloosterman.convolution_table(fld, args.r, budget=args.budget)
    else:
        table = kloosterman.naive_table(fld, args.r, budget=args.budget)
    kloosterman.write_csv(table, args.out)
    print(f"wrote {args.out}: p={fld.p} r={args.r} method={table.method_tag}")
    return 0


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    violations = []
    checked = 0
    for p in range(3, args.p_max + 1):
        if not is_prime(p):
            continue
        fld = build_field(p)
        tau = kloosterman.gauss_sums(fld)
        for r in range(1, args.r_max + 1):
            table = kloosterman.spectral_from_gauss(fld, tau, r)
            checked += 1
            excess = kloosterman.deligne_excess(table)
            if excess > 1e-9:
                violations.append((p, r, "deligne", excess))
            expected = (-1) ** r * float(p) ** (-(r - 1) / 2)
            gap = abs(table.character_sum() - expected)
            if gap > 1e-8:
                violations.append((p, r, "character-sum", gap))
    print(f"checked {checked} tables (p <= {args.p_max}, r <= {args.r_max})")
    if violations:
        for p, r, what, err in violations:
            print(f"VIOLATION p={p} r={r} {what} excess={err:.3e}")
        return 1
    print("all Deligne and character-sum checks passed")
    return 0


# ---------------------------------------------------------------- bilinear


def run_sweep(cfg: dict) -> dict:
    """Execute a sweep config; returns {'rows': [...], 'summary': {...}}.

    Raises on invalid configuration; inequality violations are collected in
    the summary (the CLI turns them into exit code 1).
    """
    primes = _require(cfg, "primes")
    r = int(_require(cfg, "r"))
    ell = int(cfg.get("ell", 2))
    trials = int(_require(cfg, "trials"))
    master = int(_require(cfg, "seed"))
    set_spec = _require(cfg, "set")
    iv_spec = _require(cfg, "interval")
    kinds = cfg.get("weight_kinds", ["ones"])
    if not isinstance(kinds, list) or not kinds:
        raise ConfigError("weight_kinds must be a non-empty list")
    budget = cfg.get("budget")
    eval_theorem = bool(cfg.get("theorem", True))
    eps = cfg.get("corollary_eps")
    poly = cfg.get("polynomial")
    energy_cfg = cfg.get("energy")

    fields = {int(p): build_field(int(p)) for p in primes}
    tables = {p: kloosterman.spectral_table(fld, r) for p, fld in fields.items()}

    rows = []
    poly_rows = []
    energy_reports = []
    violations = []
    corollary_results = {}
    for p in sorted(fields):
        fld = fields[p]
        table = tables[p]
        n_iv = _build_interval(p, iv_spec)
        if eps is not None:
            m_probe = _resolve_size(p, set_spec)
            corollary_results[p] = corollary_check(m_probe, n_iv.length, p, eps).passed
        for t in range(trials):
            trial_seed = mix_seed(master, p, t)
            m_set = _build_set(p, set_spec, mix_seed(master, p, t, "set"))
            kind = kinds[t % len(kinds)]
            alpha = make_weights(kind, m_set.cardinality, mix_seed(master, p, t, "alpha"))
            beta = make_weights(kind, n_iv.length, mix_seed(master, p, t, "beta"))
            s = type2_sum(table, m_set, n_iv, alpha, beta)
            abs_s = abs(s)
            triv = trivial_bound(r, beta, m_set.cardinality, n_iv.length)
            delta = theorem_val = None
            if eval_theorem:
                bb = theorem_delta(
                    m_set.cardinality, n_iv.length, p, ell, beta_norm2=beta.norm2, r=r
                )
                delta, theorem_val = bb.delta, bb.theorem_bound
            mn = m_set.cardinality * n_iv.length
            if abs_s > triv * (1 + 1e-9) + 1e-9:
                violations.append(
                    f"p={p} trial={t}: |S|={abs_s!r} exceeds trivial bound {triv!r}"
                )
            rows.append(
                {
                    "p": p,
                    "r": r,
                    "ell": ell,
                    "M": m_set.cardinality,
                    "N": n_iv.length,
                    "weight_kind": kind,
                    "seed": trial_seed,
                    "abs_S": abs_s,
                    "trivial_bound": triv,
                    "delta": delta,
                    "theorem_bound": theorem_val,
                    "ratio_S_over_trivial": abs_s / triv,
                    "ratio_S_over_MN": abs_s / mn,
                    "_trial": t,
                }
            )
            if poly is not None:
                sp = polynomial_twist_sum(
                    table, poly, m_set.cardinality, n_iv, alpha, beta
                )
                poly_rows.append({"p": p, "trial": t, "abs_S_poly": abs(sp)})
            if energy_cfg is not None:
                rep = energy_mod.energy_report(
                    fld,
                    int(energy_cfg["H"]),
                    m_set,
                    method=energy_cfg.get("method", "fast"),
                    include_grh=bool(energy_cfg.get("grh", False)),
                    budget=budget,
                )
                energy_reports.append(rep)
                if rep.J < rep.diagonal_lb or rep.J < rep.cauchy_lb - 1e-9:
                    violations.append(
                        f"p={p} trial={t}: J={rep.J} below an exact lower bound"
                    )

    rows.sort(key=lambda row: (row["p"], row["_trial"]))
    per_prime = {}
    for p in sorted(fields):
        sub = [row for row in rows if row["p"] == p]
        per_prime[str(p)] = {
            "mean_abs_S": math.fsum(row["abs_S"] for row in sub) / len(sub),
            "mean_ratio_S_over_trivial": math.fsum(
                row["ratio_S_over_trivial"] for row in sub
            )
            / len(sub),
            "mean_ratio_S_over_MN": math.fsum(row["ratio_S_over_MN"] for row in sub)
            / len(sub),
        }
        if eps is not None:
            per_prime[str(p)]["corollary_passed"] = corollary_results[p]
    summary = {
        "rows": len(rows),
        "violations": violations,
        "per_prime": per_prime,
    }
    if poly_rows:
        summary["polynomial_rows"] = poly_rows
    return {"rows": rows, "summary": summary, "energy_reports": energy_reports}


def _write_sweep_csv(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            writer.writerow([_fmt(row[col]) for col in SWEEP_COLUMNS])


def cmd_bilinear(args) -> int:
    cfg = _load_config(args.config)
    result = run_sweep(cfg)
    csv_out = cfg.get("csv_out")
    if csv_out:
        _write_sweep_csv(result["rows"], csv_out)
        print(f"wrote {csv_out}: {len(result['rows'])} rows")
    json_out = cfg.get("json_out")
    if json_out:
        with open(json_out, "w") as fh:
            json.dump(result["summary"], fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {json_out}")
    if cfg.get("energy") is not None and cfg.get("energy_csv_out"):
        energy_mod.write_csv(result["energy_reports"], cfg["energy_csv_out"])
        print(f"wrote {cfg['energy_csv_out']}")
    if result["summary"]["violations"]:
        for v in result["summary"]["violations"]:
            print(f"VIOLATION {v}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------- energy


def cmd_energy(args) -> int:
    fld = build_field(args.p)
    m_set = _parse_set_arg(fld.p, args.set)
    rep = energy_mod.energy_report(
        fld, args.H, m_set, method=args.method, include_grh=args.grh, budget=args.budget
    )
    if args.out:
        energy_mod.write_csv([rep], args.out)
        print(f"wrote {args.out}")
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(energy_mod.CSV_COLUMNS)
        writer.writerow(
            [
                rep.p,
                rep.H,
                rep.m_card,
                rep.J,
                rep.bound.case,
                _fmt(rep.bound.leading),
                _fmt(rep.bound.case_term),
                _fmt(rep.bound.total),
                rep.diagonal_lb,
                _fmt(rep.cauchy_lb),
            ]
        )
    if rep.grh_bound is not None:
        print(
            f"grh_total={_fmt(rep.grh_bound.total)} ({rep.grh_bound.note})",
            file=sys.stderr,
        )
    if rep.J < rep.diagonal_lb or rep.J < rep.cauchy_lb - 1e-9:
        print("VIOLATION: J below an exact lower bound", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------- diag


def run_diag(cfg: dict) -> dict:
    p = int(_require(cfg, "p"))
    r = int(_require(cfg, "r"))
    ell = int(cfg.get("ell", 2))
    master = int(_require(cfg, "seed"))
    budget = cfg.get("budget")
    fld = build_field(p)
    table = kloosterman.spectral_table(fld, r)
    m_set = _build_set(p, _require(cfg, "set"), mix_seed(master, p, 0, "set"))
    n_iv = _build_interval(p, _require(cfg, "interval"))
    if cfg.get("A") in (None, "auto") or cfg.get("B") in (None, "auto"):
        chosen = parameter_choices(n_iv.length, p, ell)
        a_base = chosen.a_base if cfg.get("A") in (None, "auto") else int(cfg["A"])
        b_base = chosen.b_base if cfg.get("B") in (None, "auto") else int(cfg["B"])
    else:
        a_base, b_base = int(cfg["A"]), int(cfg["B"])
    alpha = make_weights(
        cfg.get("alpha_kind", "bounded"), m_set.cardinality, mix_seed(master, p, 0, "alpha")
    )
    beta = make_weights(
        cfg.get("beta_kind", "bounded"), n_iv.length, mix_seed(master, p, 0, "beta")
    )
    eta = make_weights("unimodular", b_base + 1, mix_seed(master, p, 0, "eta"))

    sd = sigma_decomposition(table, m_set, n_iv, alpha, beta)
    moments = nu_r1_r2(fld, m_set, n_iv, a_base, alpha, budget=budget)
    j_2a = energy_mod.count_J(fld, max(2 * a_base, 2), m_set, budget=budget)
    j_2a2 = energy_mod.count_J(fld, 2 * a_base + 2, m_set, budget=budget)
    block = block_sum_S(fld, table, ell, b_base, eta, budget=budget)
    return {
        "p": p,
        "r": r,
        "ell": ell,
        "A": a_base,
        "B": b_base,
        "R1": moments.r1,
        "R2": moments.r2,
        "J_2A": j_2a,
        "J_2A_plus_2": j_2a2,
        "sigma": sd.sigma,
        "S2": sd.s2,
        "diagonal": sd.diagonal,
        "absS_sq": sd.abs_s_sq,
        "block_S": block.value,
        "shape_p3Bl": block.shape_p3bl,
        "block_S_skipped_terms": block.skipped_terms,
    }


def cmd_diag(args) -> int:
    cfg = _load_config(args.config)
    report = run_diag(cfg)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    out = args.out or cfg.get("json_out")
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        print(f"wrote {out}")
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kloosum",
        description="Kloosterman sums, bilinear sums, bounds, and diagnostics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="build a K table and export CSV")
    p_table.add_argument("--p", type=int, required=True)
    p_table.add_argument("--r", type=int, required=True)
    p_table.add_argument(
        "--method", choices=["spectral", "convolution", "naive"], default="spectral"
    )
    p_table.add_argument("--budget", type=int, default=None)
    p_table.add_argument("--out", required=True)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="Deligne + character-sum sweep")
    p_verify.add_argument("--p-max", type=int, required=True)
    p_verify.add_argument("--r-max", type=int, required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_bil = sub.add_parser("bilinear", help="seeded bilinear sweep from config")
    p_bil.add_argument("--config", required=True)
    p_bil.set_defaults(func=cmd_bilinear)

    p_energy = sub.add_parser("energy", help="one exact J(H, M) count")
    p_energy.add_argument("--p", type=int, required=True)
    p_energy.add_argument("--H", type=int, required=True, dest="H")
    p_energy.add_argument("--set", required=True)
    p_energy.add_argument("--method", choices=["fast", "brute"], default="fast")
    p_energy.add_argument("--grh", action="store_true")
    p_energy.add_argument("--budget", type=int, default=None)
    p_energy.add_argument("--out", default=None)
    p_energy.set_defaults(func=cmd_energy)

    p_diag = sub.add_parser("diag", help="proof diagnostics JSON report")
    p_diag.add_argument("--config", required=True)
    p_diag.add_argument("--out", default=None)
    p_diag.set_defaults(func=cmd_diag)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"error: Infeasible: {exc}", file=sys.stderr)
        return 3
    except INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

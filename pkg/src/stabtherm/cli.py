"""Command-line entry point.

Subcommands: gsd, enumerate, thermo, duality, oracle-compare, logicals.
Options may come from flags or from a JSON config file (--config); flags
override file values.  Exit codes: 0 ok, 2 input error, 3 resource
refusal, 4 check failed.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import duality, enumerators, oracle, thermo
from .errors import CheckFailed, InputError, ResourceLimit
from .models import (
    CssModel,
    build_haah,
    build_toric_2d,
    build_toric_3d,
    build_toric_4d,
    css_validate,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_CHECK = 4

MODEL_BUILDERS = {
    "toric2d": build_toric_2d,
    "toric3d": build_toric_3d,
    "toric4d": build_toric_4d,
    "haah": build_haah,
}

DUALITY_CHECKS = ("4dtc-ising", "homology", "bound", "haah-chains", "bond-vx", "bond-vy")


@dataclass
class RunConfig:
    """Everything one invocation needs; JSON keys mirror the field names."""

    command: str
    model: str = "haah"
    L: int = 3
    coupling_a: float = 1.0
    coupling_b: float = 1.0
    beta_min: float = 0.1
    beta_max: float = 2.0
    beta_count: int = 50
    beta_spacing: str = "linear"
    side: str = "A"
    check: str = "4dtc-ising"
    max_weight: int | None = None
    dim_cap: int = enumerators.DEFAULT_DIM_CAP
    output: str | None = None

    def validate(self):
        if self.L < 2:
            raise InputError("L must be at least 2")
        if self.beta_min <= 0:
            raise InputError("beta grid must start above 0")
        if self.beta_count < 1:
            raise InputError("beta grid needs at least one point")
        if self.beta_spacing not in ("linear", "log"):
            raise InputError("beta spacing must be 'linear' or 'log'")
        if self.side not in ("A", "B"):
            raise InputError("side must be A or B")
        if self.check not in DUALITY_CHECKS:
            raise InputError(f"unknown duality check {self.check!r}; options: {DUALITY_CHECKS}")
        if self.model not in MODEL_BUILDERS and self.model != "ising":
            raise InputError(f"unknown model {self.model!r}")

    def beta_grid(self) -> list[float]:
        if self.beta_count == 1:
            return [self.beta_min]
        if self.beta_spacing == "log":
            lo, hi = math.log(self.beta_min), math.log(self.beta_max)
            return [math.exp(lo + (hi - lo) * i / (self.beta_count - 1))
                    for i in range(self.beta_count)]
        step = (self.beta_max - self.beta_min) / (self.beta_count - 1)
        return [self.beta_min + step * i for i in range(self.beta_count)]

    def build_model(self) -> CssModel:
        if self.model == "ising":
            raise InputError(f"command {self.command!r} needs a stabilizer model, not 'ising'")
        return MODEL_BUILDERS[self.model](self.L, self.coupling_a, self.coupling_b)


def _parse_beta_spec(spec: str) -> tuple[float, float, int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise InputError("beta spec must look like MIN:MAX:COUNT")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise InputError(f"bad beta spec {spec!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabtherm",
        description="Exact thermodynamics and duality checks for CSS code Hamiltonians",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("gsd", "ground state degeneracy from GF(2) ranks"),
        ("enumerate", "constraint weight enumerator to CSV"),
        ("thermo", "partition-function sweep over a beta grid"),
        ("duality", "run one duality/homology/bond-algebra check"),
        ("oracle-compare", "cross-check log Z against the dense oracle"),
        ("logicals", "verify logical operator commutation patterns"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON config file; flags override its values")
        p.add_argument("--model", choices=list(MODEL_BUILDERS) + ["ising"])
        p.add_argument("--L", type=int)
        p.add_argument("--coupling-a", type=float, dest="coupling_a")
        p.add_argument("--coupling-b", type=float, dest="coupling_b")
        p.add_argument("--beta", help="grid as MIN:MAX:COUNT")
        p.add_argument("--log-spacing", action="store_true", help="log-spaced beta grid")
        p.add_argument("--side", choices=["A", "B"])
        p.add_argument("--check", choices=list(DUALITY_CHECKS))
        p.add_argument("--max-weight", type=int, dest="max_weight")
        p.add_argument("--dim-cap", type=int, dest="dim_cap")
        p.add_argument("--output", "-o", help="output path (CSV or report)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read config {args.config!r}: {exc}") from None
        for key, value in data.items():
            if not hasattr(cfg, key):
                raise InputError(f"unknown config key {key!r} in {args.config}")
            setattr(cfg, key, value)
    for key in ("model", "L", "coupling_a", "coupling_b", "side", "check",
                "max_weight", "dim_cap", "output"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    if getattr(args, "beta", None):
        cfg.beta_min, cfg.beta_max, cfg.beta_count = _parse_beta_spec(args.beta)
    if getattr(args, "log_spacing", False):
        cfg.beta_spacing = "log"
    cfg.validate()
    return cfg


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    print(text, end="" if text.endswith("\n") else "\n")


# -- command implementations ----------------------------------------------


def cmd_gsd(cfg: RunConfig) -> int:
    model = cfg.build_model()
    rank_a = model.a_gens.rank()
    rank_b = model.b_gens.rank()
    degeneracy = 1 << (model.n_qubits - rank_a - rank_b)
    lines = [
        f"model: {model.label}",
        f"n_qubits: {model.n_qubits}",
        f"rank_A: {rank_a}",
        f"rank_B: {rank_b}",
        f"GSD: {degeneracy}",
    ]
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    model = cfg.build_model()
    if not css_validate(model):
        raise InputError(f"{model.label} fails CSS validation")
    kernel = enumerators.constraint_kernel(model, cfg.side)
    if cfg.max_weight is not None:
        enum = enumerators.weight_enumerator_mitm(kernel, cfg.max_weight, cfg.dim_cap)
    else:
        enum = enumerators.weight_enumerator_full(kernel, cfg.dim_cap)
    if cfg.output:
        enumerators.write_enumerator_csv(enum, cfg.output)
    header = (
        f"model: {model.label}\nside: {cfg.side}\nkernel_dim: {kernel.dim}\n"
        f"complete: {enum.complete}\n"
    )
    body = "".join(f"c[{n}] = {c}\n" for n, c in sorted(enum.coeffs.items()))
    print(header + body, end="")
    return EXIT_OK


def _enumerators_for(model: CssModel, cfg: RunConfig):
    ka = enumerators.constraint_kernel(model, "A")
    kb = enumerators.constraint_kernel(model, "B")
    wa = enumerators.weight_enumerator_full(ka, cfg.dim_cap)
    wb = enumerators.weight_enumerator_full(kb, cfg.dim_cap)
    return wa, wb


def cmd_thermo(cfg: RunConfig) -> int:
    model = cfg.build_model()
    wa, wb = _enumerators_for(model, cfg)
    points = thermo.sweep(model, wa, wb, cfg.beta_grid())
    if cfg.output:
        thermo.write_sweep_csv(points, cfg.output)
        print(f"wrote {len(points)} rows to {cfg.output}")
    else:
        print("beta,logZ,f,u,c,flags")
        for p in points:
            print(f"{p.beta:.17g},{p.log_z:.17g},{p.f_density:.17g},"
                  f"{p.u_density:.17g},{p.c_density:.17g},{p.flags}")
    return EXIT_OK


def cmd_duality(cfg: RunConfig) -> int:
    lines = [f"check: {cfg.check}", f"L: {cfg.L}"]
    ok = True
    comparison = None
    if cfg.check == "4dtc-ising":
        comparison = duality.check_series_duality_4dtc(cfg.L, cfg.side)
    elif cfg.check == "homology":
        comparison = duality.check_homology_identity(cfg.L)
    elif cfg.check == "bound":
        ok = duality.check_coefficient_bound(cfg.L)
        lines.append(f"bound_holds: {ok}")
    elif cfg.check == "haah-chains":
        ok = _check_haah_chains(cfg, lines)
    else:
        bath = "Vx" if cfg.check == "bond-vx" else "Vy"
        bond_map = duality.build_2dtc_bath_mapping(cfg.L, bath)
        ok = duality.bond_algebra_isomorphic(bond_map)
        lines.append(f"n_bonds: {len(bond_map.source_ops)}")
        lines.append(f"isomorphic: {ok}")
    if comparison is not None:
        ok = comparison.matched
        lines.append(f"claim: {comparison.label}")
        lines.append(f"cutoff: {comparison.cutoff}")
        lines.append(f"matched: {comparison.matched}")
        if comparison.first_mismatch:
            n, lc, rc = comparison.first_mismatch
            lines.append(f"first_mismatch: weight={n} lhs={lc} rhs={rc}")
        if cfg.output:
            comparison.write_csv(cfg.output)
            lines.append(f"coefficients: {cfg.output}")
    _emit("\n".join(lines) + "\n", None if comparison is not None else cfg.output)
    return EXIT_OK if ok else EXIT_CHECK


def _check_haah_chains(cfg: RunConfig, lines: list) -> bool:
    model = build_haah(cfg.L, cfg.coupling_a, cfg.coupling_b)
    wa, wb = _enumerators_for(model, cfg)
    worst = 0.0
    for beta in cfg.beta_grid():
        lhs = thermo.log_partition(model, wa, wb, beta)
        # two decoupled periodic chains of length L^3 reproduce log Z exactly
        rhs = (
            oracle.ising_chain_closed(cfg.L**3, model.coupling_a, beta)
            + oracle.ising_chain_closed(cfg.L**3, model.coupling_b, beta)
        )
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    lines.append(f"max_relative_error: {worst:.3e}")
    lines.append(f"matched: {worst <= 1e-12}")
    return worst <= 1e-12


def cmd_oracle_compare(cfg: RunConfig) -> int:
    model = cfg.build_model()
    wa, wb = _enumerators_for(model, cfg)
    lines = [f"model: {model.label}"]
    worst = 0.0
    for beta in cfg.beta_grid():
        exact = thermo.log_partition(model, wa, wb, beta)
        reference = oracle.dense_log_trace(model, beta)
        rel = abs(exact - reference) / abs(reference)
        worst = max(worst, rel)
        lines.append(f"beta={beta:.6g} logZ={exact:.12g} oracle={reference:.12g} rel={rel:.3e}")
    ok = worst <= 1e-9
    lines.append(f"max_relative_error: {worst:.3e}")
    lines.append(f"matched: {ok}")
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK if ok else EXIT_CHECK


def cmd_logicals(cfg: RunConfig) -> int:
    if cfg.model == "toric4d":
        report = duality.logical_operators_4dtc(cfg.L)
    elif cfg.model == "haah":
        report = duality.logical_operators_haah(cfg.L)
    else:
        raise InputError("logical operator checks exist for toric4d and haah only")
    lines = [
        f"claim: {report.label}",
        f"n_operators: {report.n_operators}",
        f"commute_with_stabilizers: {report.commute_with_stabilizers}",
        f"pattern_holds: {report.pattern_holds}",
        f"outside_stabilizer_group: {report.outside_stabilizer_group}",
        f"all_hold: {report.all_hold}",
    ]
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK if report.all_hold else EXIT_CHECK


COMMANDS = {
    "gsd": cmd_gsd,
    "enumerate": cmd_enumerate,
    "thermo": cmd_thermo,
    "duality": cmd_duality,
    "oracle-compare": cmd_oracle_compare,
    "logicals": cmd_logicals,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimit as exc:
        print(f"resource refusal: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())

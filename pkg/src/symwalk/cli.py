"""Command-line surface: every engine behind one ``symwalk`` command.

Subcommands: characters, spectrum, amplitude, distribution, limit,
table, verify, oracle.  Output is JSON or CSV on stdout (or a file via
``-o``); errors go to stderr as one-line JSON.  Exit codes: 0 success,
1 usage error, 2 verification failure, 3 resource-limit refusal.

Partitions are written as comma-separated descending parts (``2,1,1``);
angles are radians.  ``SYMWALK_MAX_N`` overrides the resource caps.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import oracle as oracle_mod
from .characters import character_table
from .errors import SymwalkError
from .limiting import (
    eigenvalue_groups,
    limiting_class_distribution,
    table_ncycle_case,
    time_averaged_distribution,
    tv_distance,
)
from .partitions import Partition, class_size, identity_partition, is_even_class
from .verify import run_suite
from .walk_spectrum import (
    ClassFunction,
    class_amplitude,
    class_distribution,
    classical_class_distribution,
    spectrum,
)


class UsageError(SymwalkError):
    exit_code = 1


@dataclass
class RunConfig:
    """One fully parsed invocation; identical configs give identical bytes."""

    subcommand: str
    n: int = 0
    generators: tuple[tuple[Partition, Fraction], ...] = ()
    start: Partition | None = None
    target: Partition | None = None
    t: float | None = None
    t_grid: tuple[float, float, int] | None = None
    fmt: str = "json"
    output: str | None = None
    classical: bool = False
    oracle_cap: int | None = None
    t_samples: int = 16
    detailed: bool = False
    dump_adjacency: bool = False
    horizon: float | None = None
    samples: int | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_partition(text: str, n: int, what: str) -> Partition:
    lam = Partition.parse(text)
    if lam.n != n:
        raise UsageError(f"{what} {text!r} is not a partition of n={n}")
    return lam


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rational weight {text!r}") from None


def exact_str(value: Fraction) -> str:
    return str(Fraction(value))


def decimal_str(value: Fraction, digits: int = 20) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def build_parser() -> _Parser:
    parser = _Parser(prog="symwalk", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, *, generator=False, start=False, fmt=True):
        p.add_argument("--n", type=int, required=True, help="size of the symmetric group")
        if generator:
            p.add_argument("--generator", action="append", default=[],
                           help="generator class as comma-separated parts; repeatable")
            p.add_argument("--weight", action="append", default=[],
                           help="rational weight p/q paired with each --generator")
        if start:
            p.add_argument("--start", default=None,
                           help="starting class (default: identity)")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("-o", "--output", default=None, help="write here instead of stdout")

    p = sub.add_parser("characters", help="character table of S_n")
    add_common(p)

    p = sub.add_parser("spectrum", help="exact walk eigenvalues per irrep")
    add_common(p, generator=True)

    p = sub.add_parser("amplitude", help="class-to-class amplitude at time t")
    add_common(p, generator=True, start=True, fmt=False)
    p.add_argument("--target", required=True, help="target class")
    p.add_argument("--t", type=float, required=True, help="time in radians")
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("distribution", help="class distribution at time t or over a grid")
    add_common(p, generator=True, start=True)
    p.add_argument("--t", type=float, default=None, help="single time in radians")
    p.add_argument("--t-grid", default=None, metavar="MIN,MAX,STEPS",
                   help="sweep; emits CSV rows t,class,probability; a bare "
                        "STEPS count sweeps the full period [0, 2*pi]")
    p.add_argument("--classical", action="store_true", help="e^{-tL} instead of e^{itA}")

    p = sub.add_parser("limit", help="exact limiting distribution and TV distances")
    add_common(p, generator=True, start=True, fmt=False)
    p.add_argument("--average", default=None, metavar="T,SAMPLES",
                   help="also report a numeric time average for cross-checking")

    p = sub.add_parser("table", help="closed-form n-cycle limiting probabilities, all p")
    add_common(p, fmt=False)

    p = sub.add_parser("verify", help="oracle-vs-spectral and closed-form-vs-recursion suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-samples", type=int, default=16)
    p.add_argument("--oracle-cap", type=int, default=None,
                   help="explicit cap override (needed for n=7)")
    p.add_argument("--detailed", action="store_true",
                   help="include per (t, class) error rows")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("oracle", help="dense Cayley-graph oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generator", action="append", default=[], help="generator class")
    p.add_argument("--dump-adjacency", action="store_true",
                   help="emit the edge list as CSV perm_g,perm_h")
    p.add_argument("--t", type=float, default=None, help="evolve and report per-class sums")
    p.add_argument("--classical", action="store_true")
    p.add_argument("--start", default=None)
    p.add_argument("--oracle-cap", type=int, default=None)
    p.add_argument("-o", "--output", default=None)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(subcommand=args.subcommand, n=args.n)
    cfg.output = getattr(args, "output", None)
    cfg.fmt = getattr(args, "format", "json")
    cfg.classical = getattr(args, "classical", False)
    cfg.oracle_cap = getattr(args, "oracle_cap", None)
    cfg.t_samples = getattr(args, "t_samples", 16)
    cfg.detailed = getattr(args, "detailed", False)
    cfg.dump_adjacency = getattr(args, "dump_adjacency", False)
    cfg.t = getattr(args, "t", None)

    if cfg.n < 0:
        raise UsageError("--n must be nonnegative")

    raw_gens = getattr(args, "generator", [])
    raw_weights = getattr(args, "weight", [])
    if raw_weights and len(raw_weights) != len(raw_gens):
        raise UsageError("--weight must be given once per --generator")
    gens = []
    for i, text in enumerate(raw_gens):
        lam = _parse_partition(text, cfg.n, "generator")
        w = _parse_fraction(raw_weights[i]) if raw_weights else Fraction(1)
        if w < 0:
            raise UsageError("generator weights must be nonnegative")
        gens.append((lam, w))
    cfg.generators = tuple(gens)

    start = getattr(args, "start", None)
    if start is not None:
        cfg.start = _parse_partition(start, cfg.n, "start class")
    elif hasattr(args, "start"):
        cfg.start = identity_partition(cfg.n)

    if getattr(args, "target", None) is not None:
        cfg.target = _parse_partition(args.target, cfg.n, "target class")

    grid = getattr(args, "t_grid", None)
    if grid is not None:
        try:
            tokens = grid.split(",")
            if len(tokens) == 1:
                # One period covers the whole walk: e^{itH} is 2*pi-periodic
                # for integer spectra, so [0, 2*pi] is the default sweep.
                cfg.t_grid = (0.0, 2 * math.pi, int(tokens[0]))
            else:
                lo, hi, steps = tokens
                cfg.t_grid = (float(lo), float(hi), int(steps))
        except ValueError:
            raise UsageError("--t-grid must be MIN,MAX,STEPS or STEPS") from None
        if cfg.t_grid[2] < 1:
            raise UsageError("--t-grid needs at least one step")

    avg = getattr(args, "average", None)
    if avg is not None:
        try:
            horizon, samples = avg.split(",")
            cfg.horizon, cfg.samples = float(horizon), int(samples)
        except ValueError:
            raise UsageError("--average must be T,SAMPLES") from None

    return cfg


def _class_function(cfg: RunConfig) -> ClassFunction:
    if not cfg.generators:
        raise UsageError("at least one --generator is required")
    if len(cfg.generators) == 1 and cfg.generators[0][1] == 1:
        return ClassFunction.indicator(cfg.generators[0][0])
    weights: dict[Partition, Fraction] = {}
    for lam, w in cfg.generators:
        weights[lam] = weights.get(lam, Fraction(0)) + w
    return ClassFunction(cfg.n, weights)


def _generator_json(cfg: RunConfig):
    if len(cfg.generators) == 1 and cfg.generators[0][1] == 1:
        return list(cfg.generators[0][0].parts)
    return [
        {"partition": list(lam.parts), "weight": exact_str(w)}
        for lam, w in cfg.generators
    ]


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cmd_characters(cfg: RunConfig) -> int:
    table = character_table(cfg.n)
    _emit(cfg, table.to_csv() if cfg.fmt == "csv" else _json(table.to_json_dict()))
    return 0


def _cmd_spectrum(cfg: RunConfig) -> int:
    spec = spectrum(cfg.n, _class_function(cfg))
    if cfg.fmt == "csv":
        lines = ["rep,dim,eigenvalue"]
        for rec in spec.records:
            lines.append(f"\"{rec.rep}\",{rec.dim},{exact_str(rec.eigenvalue)}")
        _emit(cfg, "\n".join(lines) + "\n")
        return 0
    payload = {
        "n": cfg.n,
        "generator": _generator_json(cfg),
        "eigenvalues": [
            {
                "rep": list(rec.rep.parts),
                "dim": str(rec.dim),
                "exact": exact_str(rec.eigenvalue),
                "value": float(rec.eigenvalue),
            }
            for rec in spec.records
        ],
    }
    _emit(cfg, _json(payload))
    return 0


def _cmd_amplitude(cfg: RunConfig) -> int:
    spec = spectrum(cfg.n, _class_function(cfg))
    amp = class_amplitude(spec, cfg.target, cfg.start, cfg.t)
    payload = {
        "n": cfg.n,
        "generator": _generator_json(cfg),
        "start": list(cfg.start.parts),
        "target": list(cfg.target.parts),
        "t": cfg.t,
        "amplitude": {"re": amp.real, "im": amp.imag},
        "probability": abs(amp) ** 2,
    }
    _emit(cfg, _json(payload))
    return 0


def _distribution_json(cfg: RunConfig, dist) -> dict:
    return {
        "n": cfg.n,
        "generator": _generator_json(cfg),
        "t": dist.t,
        "start": list(cfg.start.parts),
        "classes": [
            {
                "partition": list(lam.parts),
                "class_size": str(class_size(lam)),
                "probability": dist.probs[lam],
                "per_element": dist.per_element[lam],
            }
            for lam in dist.probs
        ],
    }


def _cmd_distribution(cfg: RunConfig) -> int:
    spec = spectrum(cfg.n, _class_function(cfg))
    engine = classical_class_distribution if cfg.classical else class_distribution
    if cfg.t_grid is not None:
        lo, hi, steps = cfg.t_grid
        lines = ["t,class,probability"]
        for j in range(steps):
            t = lo + (hi - lo) * j / max(steps - 1, 1)
            dist = engine(spec, cfg.start, t)
            for lam, p in dist.probs.items():
                lines.append(f"{t!r},\"{lam}\",{p!r}")
        _emit(cfg, "\n".join(lines) + "\n")
        return 0
    if cfg.t is None:
        raise UsageError("distribution needs --t or --t-grid")
    dist = engine(spec, cfg.start, cfg.t)
    _emit(cfg, _json(_distribution_json(cfg, dist)))
    return 0


def _cmd_limit(cfg: RunConfig) -> int:
    spec = spectrum(cfg.n, _class_function(cfg))
    exact = limiting_class_distribution(spec, cfg.start)
    groups = eigenvalue_groups(spec)
    classes = []
    for lam, p in exact.probs.items():
        classes.append({
            "partition": list(lam.parts),
            "class_size": str(class_size(lam)),
            "probability": float(p),
            "exact": exact_str(p),
            "per_element": float(exact.per_element[lam]),
            "per_element_exact": exact_str(exact.per_element[lam]),
        })
    tv_sn = tv_distance(exact, "symmetric_group")
    payload = {
        "n": cfg.n,
        "generator": _generator_json(cfg),
        "start": list(cfg.start.parts),
        "classes": classes,
        "eigenvalue_groups": [
            [list(nu.parts) for nu in group] for group in groups.groups
        ],
        "tv": [
            {"support": "symmetric_group", "distance": float(tv_sn), "exact": exact_str(tv_sn)},
        ],
    }
    odd_mass = sum(
        (p for lam, p in exact.probs.items() if not is_even_class(lam)), Fraction(0)
    )
    if odd_mass == 0:
        tv_an = tv_distance(exact, "alternating_group")
        payload["tv"].append(
            {"support": "alternating_group", "distance": float(tv_an), "exact": exact_str(tv_an)}
        )
    if cfg.horizon is not None:
        avg = time_averaged_distribution(spec, cfg.start, cfg.horizon, cfg.samples)
        payload["time_average"] = {
            "horizon": cfg.horizon,
            "samples": cfg.samples,
            "max_abs_gap": max(
                abs(avg.probs[lam] - float(exact.probs[lam])) for lam in exact.probs
            ),
        }
    _emit(cfg, _json(payload))
    return 0


def _cmd_table(cfg: RunConfig) -> int:
    if cfg.n < 2:
        raise UsageError("table needs n >= 2")
    lines = []
    for p in range(2, cfg.n + 1):
        row, value = table_ncycle_case(cfg.n, p)
        lines.append(json.dumps({
            "n": cfg.n,
            "p": p,
            "row": row,
            "exact": exact_str(value),
            "decimal": decimal_str(value),
        }))
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    results = run_suite(cfg.n, t_samples=cfg.t_samples, oracle_cap=cfg.oracle_cap,
                        detailed=cfg.detailed)
    checks = []
    for res in results:
        entry = {"name": res.name, "passed": res.passed}
        if res.max_abs_error is not None:
            entry["max_abs_error"] = res.max_abs_error
        if res.message:
            entry["message"] = res.message
        if res.detail:
            entry["detail"] = res.detail
        checks.append(entry)
    failed = sum(1 for r in results if not r.passed)
    payload = {
        "n": cfg.n,
        "checks": checks,
        "passed": len(results) - failed,
        "failed": failed,
    }
    _emit(cfg, _json(payload))
    return 0 if failed == 0 else 2


def _cmd_oracle(cfg: RunConfig) -> int:
    if len(cfg.generators) != 1:
        raise UsageError("oracle needs exactly one --generator")
    gamma = cfg.generators[0][0]
    walk = oracle_mod.build_cayley(cfg.n, gamma, cap=cfg.oracle_cap)
    if cfg.dump_adjacency:
        lines = ["perm_g,perm_h"]
        for g, h in walk.edges():
            lines.append(f"\"{' '.join(map(str, g))}\",\"{' '.join(map(str, h))}\"")
        _emit(cfg, "\n".join(lines) + "\n")
        return 0
    if cfg.t is None:
        raise UsageError("oracle needs --dump-adjacency or --t")
    start = cfg.start if cfg.start is not None else identity_partition(cfg.n)
    if cfg.classical:
        sums = oracle_mod.class_sums(walk, oracle_mod.evolve_classical(walk, start, cfg.t))
        deviation = None
    else:
        agg = oracle_mod.class_aggregate(walk, oracle_mod.evolve_quantum(walk, start, cfg.t))
        sums, deviation = agg.sums, agg.max_class_deviation
    payload = {
        "n": cfg.n,
        "generator": list(gamma.parts),
        "t": cfg.t,
        "start": list(start.parts),
        "classical": cfg.classical,
        "classes": [
            {
                "partition": list(lam.parts),
                "class_size": str(class_size(lam)),
                "probability": sums.get(lam, 0.0),
            }
            for lam in character_table(cfg.n).classes
        ],
    }
    if deviation is not None:
        payload["max_class_deviation"] = deviation
    _emit(cfg, _json(payload))
    return 0


_COMMANDS = {
    "characters": _cmd_characters,
    "spectrum": _cmd_spectrum,
    "amplitude": _cmd_amplitude,
    "distribution": _cmd_distribution,
    "limit": _cmd_limit,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    return _COMMANDS[cfg.subcommand](cfg)


def main(argv=None) -> int:
    try:
        return run(argv)
    except SymwalkError as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "code": exc.exit_code}) + "\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

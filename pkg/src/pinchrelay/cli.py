"""Command-line interface: single-point solve, sweeps, oracle verification.

Exit codes: 0 success, 1 verification/runtime failure, 2 usage error.
Scenario flags accept human-friendly units (``--freq 28GHz``, ``--gamma0
20dB``); everything is converted to SI at this boundary and stays linear
inside the package.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import asdict, fields, replace
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .model import SystemConfig, UePosition, db_to_linear
from .optimize import solve
from .oracle import verify_scenario
from .sweep import SCHEMES, SweepSpec, export_csv, run_sweep, write_gnuplot_script


class UsageError(ValueError):
    """Bad flag combination or unparsable input; maps to exit code 2."""


_QUANTITY_RE = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([a-zA-Z]*)\s*$")
_FREQ_UNITS = {"hz": 1.0, "khz": 1e3, "mhz": 1e6, "ghz": 1e9}
_LENGTH_UNITS = {"m": 1.0, "cm": 1e-2, "mm": 1e-3, "km": 1e3}
_POWER_UNITS = {"w": 1.0, "mw": 1e-3, "kw": 1e3}


def _split_quantity(text: str) -> tuple[float, str]:
    match = _QUANTITY_RE.match(text)
    if match is None:
        raise ValueError(f"cannot parse quantity {text!r}")
    return float(match.group(1)), match.group(2).lower()


def parse_frequency_hz(text: str) -> float:
    value, unit = _split_quantity(text)
    if unit and unit not in _FREQ_UNITS:
        raise ValueError(f"{text!r}: expected a frequency in Hz/kHz/MHz/GHz")
    return value * _FREQ_UNITS.get(unit, 1.0)


def parse_length_m(text: str) -> float:
    value, unit = _split_quantity(text)
    if unit and unit not in _LENGTH_UNITS:
        raise ValueError(f"{text!r}: expected a length in m/cm/mm/km")
    return value * _LENGTH_UNITS.get(unit, 1.0)


def parse_power_w(text: str) -> float:
    value, unit = _split_quantity(text)
    if unit and unit not in _POWER_UNITS:
        raise ValueError(f"{text!r}: expected a power in W/mW/kW")
    return value * _POWER_UNITS.get(unit, 1.0)


def parse_db_value(text: str) -> float:
    value, unit = _split_quantity(text)
    if unit not in ("", "db", "dbi"):
        raise ValueError(f"{text!r}: expected a plain dB value")
    return value


def parse_ratio_or_db(text: str) -> float:
    """Linear ratio, or an explicit dB value converted at the boundary."""
    value, unit = _split_quantity(text)
    if unit == "db":
        return db_to_linear(value)
    if unit:
        raise ValueError(f"{text!r}: expected a linear ratio or a value with a dB suffix")
    return value


def parse_plain(text: str) -> float:
    value, unit = _split_quantity(text)
    if unit:
        raise ValueError(f"{text!r}: expected a unitless number")
    return value


_FIELD_PARSERS: dict[str, Callable[[str], float]] = {
    "carrier_frequency_hz": parse_frequency_hz,
    "bandwidth_hz": parse_frequency_hz,
    "noise_figure_db": parse_db_value,
    "ue_noise_figure_db": parse_db_value,
    "waveguide_attenuation_per_m": parse_plain,
    "horn_gain_tx_dbi": parse_db_value,
    "horn_gain_rx_dbi": parse_db_value,
    "pa_efficiency": parse_plain,
    "relay_circuit_power_w": parse_power_w,
    "bs_rf_chain_power_w": parse_power_w,
    "waveguide_length_m": parse_length_m,
    "waveguide_height_m": parse_length_m,
    "bs_relay_distance_m": parse_length_m,
    "snr_target_linear": parse_ratio_or_db,
    "coverage_x_m": parse_length_m,
    "coverage_y_m": parse_length_m,
}


def load_config_file(path: str | Path) -> dict[str, float | None]:
    """Parse a flat ``key = value`` scenario file (``#`` starts a comment)."""
    values: dict[str, float | None] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        if key not in _FIELD_PARSERS:
            raise UsageError(f"{path}:{lineno}: unknown configuration key {key!r}")
        value = value.strip()
        if key == "ue_noise_figure_db" and value.lower() == "none":
            values[key] = None
            continue
        try:
            values[key] = _FIELD_PARSERS[key](value)
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from exc
    return values


def _build_config(args: argparse.Namespace) -> SystemConfig:
    values: dict[str, float | None] = {}
    if args.config:
        values.update(load_config_file(args.config))
    for name in _FIELD_PARSERS:
        flag_value = getattr(args, name, None)
        if flag_value is not None:
            values[name] = flag_value
    try:
        return SystemConfig(**values)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid scenario configuration: {exc}") from exc


def _argtype(parser_fn: Callable[[str], object]) -> Callable[[str], object]:
    def typed(text: str) -> object:
        try:
            return parser_fn(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    typed.__name__ = parser_fn.__name__
    return typed


def _parse_ue(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"{text!r}: expected UE coordinates as 'x,y'")
    return float(parts[0]), float(parts[1])


def _parse_schemes(text: str) -> tuple[str, ...]:
    schemes = tuple(s.strip() for s in text.split(",") if s.strip())
    unknown = [s for s in schemes if s not in SCHEMES]
    if unknown or not schemes:
        raise ValueError(f"schemes must come from {SCHEMES}, got {text!r}")
    return schemes


def parse_values_spec(text: str) -> tuple[tuple[float, ...], str]:
    """Sweep values: ``start:step:stop[unit]`` or ``v1,v2,...[unit]``."""
    match = re.match(r"^\s*(.*?)\s*([a-zA-Z]*)\s*$", text)
    body, unit = match.group(1), match.group(2).lower()
    try:
        if ":" in body:
            parts = body.split(":")
            if len(parts) != 3:
                raise ValueError("range spec must be start:step:stop")
            start, step, stop = (float(p) for p in parts)
            if step <= 0.0 or stop < start:
                raise ValueError("range spec needs step > 0 and stop >= start")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            values = tuple(start + i * step for i in range(count))
        else:
            values = tuple(float(p) for p in body.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse sweep values {text!r}: {exc}") from None
    return values, unit


_SWEEP_VARIABLES = {
    "gamma0": "snr_target_db",
    "snr_target_db": "snr_target_db",
    "d1": "bs_relay_distance_m",
    "bs_relay_distance_m": "bs_relay_distance_m",
}
_VALUE_UNITS = {"snr_target_db": ("", "db"), "bs_relay_distance_m": ("", "m")}
_XLABELS = {"snr_target_db": "SNR target [dB]", "bs_relay_distance_m": "BS-relay distance [m]"}


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("scenario")
    group.add_argument("--config", metavar="FILE", help="flat 'key = value' scenario file; flags override it")
    arg = group.add_argument
    arg("--freq", dest="carrier_frequency_hz", type=_argtype(parse_frequency_hz), metavar="F", help="carrier frequency (e.g. 28GHz)")
    arg("--bandwidth", dest="bandwidth_hz", type=_argtype(parse_frequency_hz), metavar="B", help="bandwidth (e.g. 400MHz)")
    arg("--noise-figure", dest="noise_figure_db", type=_argtype(parse_db_value), metavar="NF", help="receiver noise figure [dB]")
    arg("--ue-noise-figure", dest="ue_noise_figure_db", type=_argtype(parse_db_value), metavar="NF", help="terminal noise figure override [dB]")
    arg("--alpha-d", dest="waveguide_attenuation_per_m", type=_argtype(parse_plain), metavar="A", help="waveguide attenuation [1/m]")
    arg("--horn-tx-gain", dest="horn_gain_tx_dbi", type=_argtype(parse_db_value), metavar="G", help="BS horn gain [dBi]")
    arg("--horn-rx-gain", dest="horn_gain_rx_dbi", type=_argtype(parse_db_value), metavar="G", help="relay horn gain [dBi]")
    arg("--eta-pa", dest="pa_efficiency", type=_argtype(parse_plain), metavar="E", help="power-amplifier efficiency in (0, 1]")
    arg("--amp-circ-power", dest="relay_circuit_power_w", type=_argtype(parse_power_w), metavar="P", help="relay circuit power (e.g. 0.2 or 200mW)")
    arg("--bs-rf-power", dest="bs_rf_chain_power_w", type=_argtype(parse_power_w), metavar="P", help="BS RF-chain power")
    arg("--length", dest="waveguide_length_m", type=_argtype(parse_length_m), metavar="L", help="waveguide length [m]")
    arg("--height", dest="waveguide_height_m", type=_argtype(parse_length_m), metavar="D", help="waveguide height [m]")
    arg("--d1", dest="bs_relay_distance_m", type=_argtype(parse_length_m), metavar="D1", help="BS-relay distance [m]")
    arg("--gamma0", dest="snr_target_linear", type=_argtype(parse_ratio_or_db), metavar="G0", help="SNR target, linear or '20dB'")
    arg("--coverage-x", dest="coverage_x_m", type=_argtype(parse_length_m), metavar="X", help="coverage rectangle x extent [m]")
    arg("--coverage-y", dest="coverage_y_m", type=_argtype(parse_length_m), metavar="Y", help="coverage rectangle y extent [m]")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinchrelay",
        description="Power-minimizing design of a relay-fed pinching-antenna downlink.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one scenario for a single user position")
    _add_scenario_flags(p_solve)
    p_solve.add_argument("--ue", type=_argtype(_parse_ue), metavar="X,Y", help="user position [m]; default: coverage center")
    p_solve.add_argument("--json", action="store_true", help="emit the solution as JSON instead of a table")
    p_solve.set_defaults(func=_cmd_solve)

    p_sweep = sub.add_parser("sweep", help="sweep gamma0 or d1, averaging over random user positions")
    _add_scenario_flags(p_sweep)
    p_sweep.add_argument("--var", required=True, choices=sorted(_SWEEP_VARIABLES), help="sweep variable")
    p_sweep.add_argument("--values", required=True, metavar="SPEC", help="'start:step:stop[unit]' or 'v1,v2,...'")
    p_sweep.add_argument("--samples", type=int, default=1000, metavar="N", help="user positions per sweep value")
    p_sweep.add_argument("--seed", type=int, default=0, help="random seed for user placement and shadowing")
    p_sweep.add_argument("--schemes", type=_argtype(_parse_schemes), default=SCHEMES, metavar="LIST", help=f"comma list from {SCHEMES}")
    p_sweep.add_argument("--out", default="sweep.csv", metavar="FILE", help="output CSV path")
    p_sweep.add_argument("--gnuplot", action="store_true", help="also write a companion gnuplot script next to the CSV")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_verify = sub.add_parser("verify", help="check the closed forms against brute-force oracles")
    _add_scenario_flags(p_verify)
    p_verify.add_argument("--trials", type=int, default=20, metavar="N", help="number of randomized scenarios")
    p_verify.add_argument("--seed", type=int, default=0, help="random seed for scenario draws")
    p_verify.add_argument("--grid-step", type=_argtype(parse_length_m), default=1e-3, metavar="S", help="placement grid step [m]")
    p_verify.set_defaults(func=_cmd_verify)

    p_dump = sub.add_parser("config-dump", help="print the effective scenario parameters")
    _add_scenario_flags(p_dump)
    p_dump.set_defaults(func=_cmd_config_dump)

    return parser


def _cmd_solve(args: argparse.Namespace) -> int:
    config = _build_config(args)
    if args.ue is None:
        ue = UePosition(config.coverage_x_m / 2.0, config.coverage_y_m / 2.0)
    else:
        try:
            ue = UePosition.in_coverage(config, *args.ue)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    solution = solve(config, ue)
    if args.json:
        print(json.dumps(asdict(solution), indent=2))
        return 0
    rows = [(f.name, getattr(solution, f.name)) for f in fields(solution)]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        rendered = str(value).lower() if isinstance(value, bool) else f"{value:.10g}"
        print(f"{name:<{width}}  {rendered}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = _build_config(args)
    variable = _SWEEP_VARIABLES[args.var]
    try:
        values, unit = parse_values_spec(args.values)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if unit not in _VALUE_UNITS[variable]:
        raise UsageError(f"unit {unit!r} does not fit sweep variable {variable} (use {_VALUE_UNITS[variable][1] or 'no unit'})")
    try:
        spec = SweepSpec(
            variable=variable,
            values=values,
            ue_samples=args.samples,
            seed=args.seed,
            schemes=tuple(args.schemes),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    records = run_sweep(config, spec)
    export_csv(records, args.out)
    if args.gnuplot:
        write_gnuplot_script(args.out, Path(args.out).with_suffix(".gp"), _XLABELS[variable], spec.schemes)
    print(f"wrote {len(records)} sweep values x {len(spec.schemes)} schemes to {args.out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = _build_config(args)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    rng = np.random.default_rng(args.seed)
    failures = 0
    for k in range(args.trials):
        cfg = replace(
            config,
            waveguide_attenuation_per_m=float(10.0 ** rng.uniform(-4.0, -1.3)),
            bs_relay_distance_m=float(rng.uniform(30.0, 100.0)),
            snr_target_linear=float(10.0 ** rng.uniform(0.5, 3.0)),
            pa_efficiency=float(rng.uniform(0.7, 1.0)),
        )
        ue = UePosition(
            float(rng.uniform(0.0, cfg.coverage_x_m)),
            float(rng.uniform(0.0, cfg.coverage_y_m)),
        )
        position, power = verify_scenario(cfg, ue, grid_step_m=args.grid_step)
        ok = position.passed and power.passed
        failures += 0 if ok else 1
        print(
            f"trial {k:3d}: position rel gap {position.rel_gap:.3e} | "
            f"power rel gap {power.rel_gap:.3e} | {'ok' if ok else 'FAIL'}"
        )
    print(f"verify: {args.trials - failures}/{args.trials} scenarios passed")
    return 1 if failures else 0


def _cmd_config_dump(args: argparse.Namespace) -> int:
    config = _build_config(args)
    for field in fields(SystemConfig):
        value = getattr(config, field.name)
        print(f"{field.name} = {'none' if value is None else repr(value)}")
    return 0


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage / help
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, RuntimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()

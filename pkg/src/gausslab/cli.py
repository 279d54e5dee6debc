"""``gauss-lab`` command line: run experiments from flat key=value configs."""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path

from . import __version__
from .errors import GaussLabError
from .experiments import EXPERIMENTS, ConfigError, Result, describe, run_experiment

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_CHECK = 4


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    """Parse ``key = value`` lines; '#' starts a comment, blank lines are skipped."""
    out: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key")
        if key in out:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def format_value(x) -> str:
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return format(x, ".12g")
    if isinstance(x, tuple):
        return ",".join(format_value(v) for v in x)
    if x is None:
        return "auto"
    try:
        return format(float(x), ".12g")
    except (TypeError, ValueError):
        return str(x)


def render_csv(name: str, params: dict, result: Result) -> str:
    buf = io.StringIO()
    settings = " ".join(f"{k}={format_value(params[k])}" for k in sorted(params) if k != "output")
    buf.write(f"# gauss-lab {__version__} experiment={name} {settings}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def _cmd_run(args) -> int:
    try:
        raw = parse_config_text(Path(args.config).read_text(), args.config)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    for item in args.set or []:
        if "=" not in item:
            print(f"error: --set expects key=value, got {item!r}", file=sys.stderr)
            return EXIT_CONFIG
        key, value = (s.strip() for s in item.split("=", 1))
        raw[key] = value
    name = raw.pop("experiment", None)
    if name is None:
        print("error: config has no 'experiment' key", file=sys.stderr)
        return EXIT_CONFIG
    try:
        params, result = run_experiment(name, raw)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GaussLabError as exc:
        hint = getattr(exc, "suggested", None)
        print(f"numerical domain error: {exc}" + (f" (suggested cutoff {hint})" if hint else ""), file=sys.stderr)
        return EXIT_DOMAIN
    out = Path(params.get("output") or f"{name}.csv")
    out.write_text(render_csv(name, params, result), encoding="utf-8")
    print(f"{name}: wrote {len(result.rows)} rows to {out}")
    for note in result.notes:
        print(f"note: {note}")
    for label, (ok, detail) in result.checks.items():
        print(f"check {'PASS' if ok else 'FAIL'}: {label}" + (f" ({detail})" if detail else ""))
    return EXIT_OK if result.passed else EXIT_CHECK


def _cmd_describe(args) -> int:
    try:
        print(describe(args.experiment))
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gauss-lab", description="Gaussian channel simulation experiments")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run an experiment from a key=value config file")
    run.add_argument("config")
    run.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a config entry")
    run.set_defaults(func=_cmd_run)
    desc = sub.add_parser("describe", help="show an experiment's parameters")
    desc.add_argument("experiment", help="one of: " + ", ".join(EXPERIMENTS))
    desc.set_defaults(func=_cmd_describe)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

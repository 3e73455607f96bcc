"""
virasoro_paths.harness
~~~~~~~~~~~~~~~~~~~~~~
This module implements the command-line front-end of virasoro_paths:
configuration-driven verification sweeps with JSON reports, character
table emission, path dumps and the transform demo.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

import argparse
import csv
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .base import ExcludedCaseError, InvalidParametersError, TransformError, VirasoroPathsError
from .bosonic import CharacterParams, rocha_caridi
from .fermionic import ROWS, FermionicCase, evaluate_character
from .paths import dump_paths, enumerate_abf, enumerate_abf_restricted, enumerate_half, vertex_word
from .suites import SUITES, run_task, suite_classes
from .transforms import Partition, c1_transform, c2_insert, c3_wave

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


@dataclass
class SweepConfig:
    """
    Parameters of one verification sweep.

    Range fields left as None use each suite's defaults; an empty tuple
    selects nothing, so the sweep passes vacuously with an empty report.

    Args:
        suite: A key of SUITES.
        p: (optional) ABF band heights.
        t: (optional) Half-lattice band tops, multiples of 1/2.
        a, b: (optional) Start and end heights to keep.
        e, f: (optional) Segment flags to keep.
        lmax: (optional) Largest path length, overriding the suite defaults.
        order: (optional) Truncation order; defaults to DEFAULT_ORDER.
        out: (optional) Report path.
        jobs: (optional) Worker processes; defaults to DEFAULT_JOBS.
    """

    suite: str = "all"
    p: tuple | None = None
    t: tuple | None = None
    a: tuple | None = None
    b: tuple | None = None
    e: tuple | None = None
    f: tuple | None = None
    lmax: int | None = None
    order: int | None = None
    out: Path | None = None
    jobs: int | None = None

    RANGES = ("p", "t", "a", "b", "e", "f")

    def __post_init__(self):
        from . import DEFAULT_JOBS, DEFAULT_ORDER

        if self.order is None:
            self.order = DEFAULT_ORDER
        if self.jobs is None:
            self.jobs = DEFAULT_JOBS
        for name in self.RANGES:
            value = getattr(self, name)
            if value is not None:
                setattr(self, name, tuple(value))

    def validate(self):
        """
        Raises:
            InvalidParametersError: An unknown suite or an out-of-range field.
        """
        from . import MAX_ORDER

        if self.suite not in SUITES:
            raise InvalidParametersError(f"unknown suite {self.suite!r}; choose from {sorted(SUITES)}")
        if not 0 <= self.order <= MAX_ORDER:
            raise InvalidParametersError(f"order {self.order} outside [0, {MAX_ORDER}]")
        if self.lmax is not None and self.lmax < 0:
            raise InvalidParametersError(f"lmax {self.lmax} is negative")
        if self.jobs < 1:
            raise InvalidParametersError(f"jobs must be at least 1, got {self.jobs}")
        if any(p < 1 for p in self.p or ()):
            raise InvalidParametersError(f"band heights must be positive, got {self.p}")
        if any(Fraction(t) < 2 or (2 * Fraction(t)).denominator != 1 for t in self.t or ()):
            raise InvalidParametersError(f"band tops must be multiples of 1/2 and at least 2, got {self.t}")
        for name in ("a", "b"):
            if any(value < 1 for value in getattr(self, name) or ()):
                raise InvalidParametersError(f"heights {name} must be positive")
        for name in ("e", "f"):
            if any(value not in (0, 1) for value in getattr(self, name) or ()):
                raise InvalidParametersError(f"flags {name} must be 0 or 1")
        return self

    @property
    def empty(self) -> bool:
        return any(getattr(self, name) == () for name in self.RANGES)

    def length(self, default: int) -> int:
        return default if self.lmax is None else self.lmax

    def p_range(self, default) -> tuple:
        return tuple(default) if self.p is None else self.p

    def t_range(self, default) -> tuple:
        return tuple(default) if self.t is None else self.t

    def accepts(self, **values) -> bool:
        """Whether every given endpoint or flag lies in its configured range."""
        for name, value in values.items():
            allowed = getattr(self, name)
            if allowed is not None and value not in allowed:
                return False
        return True


@dataclass
class SweepReport:
    records: list

    @property
    def failures(self) -> list:
        return [record for record in self.records if not record.passed]

    @property
    def status(self) -> int:
        return EXIT_FAILURE if self.failures else EXIT_PASS

    def to_json(self) -> str:
        return json.dumps([record.to_json() for record in self.records], sort_keys=True, indent=2) + "\n"

    def write(self, path):
        Path(path).write_text(self.to_json())
        logger.info("report with %d records written to %s", len(self.records), path)


def _timed(task):
    start = time.perf_counter()
    records = run_task(task)
    logger.debug("%s.%s took %.3fs", task.suite, task.method, time.perf_counter() - start)
    return records


def collect_tasks(config: SweepConfig) -> list:
    if config.empty:
        return []
    tasks = []
    for cls in suite_classes(config.suite):
        tasks.extend(cls().tasks(config))
    return tasks


def run_sweep(config: SweepConfig, tasks: list | None = None) -> SweepReport:
    """
    Run every task of the configured suite (or the given tasks) and write
    the report.

    Tasks run in worker processes when jobs > 1; records keep the task
    order either way, so the report is identical for any job count.

    Returns:
        SweepReport; its `status` is 0 iff no record failed.
    """
    config.validate()
    if tasks is None:
        tasks = collect_tasks(config)
    logger.info("sweep %s: %d tasks on %d worker(s)", config.suite, len(tasks), config.jobs)
    records = []
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            for batch in executor.map(_timed, tasks):
                records.extend(batch)
    else:
        for task in tasks:
            records.extend(_timed(task))
    report = SweepReport(records)
    logger.info("sweep %s: %d records, %d failing", config.suite, len(records), len(report.failures))
    if config.out is not None:
        report.write(config.out)
    return report


def _label(model) -> str:
    if isinstance(model, FermionicCase):
        return f"row_{model.case_id}"
    return "rocha_caridi"


def _series(model, order):
    if isinstance(model, CharacterParams):
        return rocha_caridi(model, order)
    if isinstance(model, FermionicCase):
        return evaluate_character(model, order).value
    raise InvalidParametersError(f"cannot emit a character for {model!r}")


def emit_character(models, order: int, fmt: str = "csv") -> str:
    """
    Render truncated characters as a table, one column per model.

    Args:
        models: A CharacterParams or character FermionicCase, or a list of them.
        order: Truncation order; the table has rows q^0 .. q^order.
        fmt: "csv" or "json".

    Returns:
        The rendered table.
    """
    if not isinstance(models, (list, tuple)):
        models = [models]
    if fmt not in ("csv", "json"):
        raise InvalidParametersError(f"format must be 'csv' or 'json', got {fmt!r}")
    if order < 0:
        raise InvalidParametersError("truncation order must be nonnegative")
    columns = {_label(model): _series(model, order).coefficients() for model in models}
    if fmt == "json":
        return json.dumps({"order": order, "columns": columns}, sort_keys=True, indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["power"] + list(columns))
    for power in range(order + 1):
        writer.writerow([power] + [column[power] for column in columns.values()])
    return buffer.getvalue()


def character_models(args) -> list:
    """The Rocha-Caridi model and, with --fermionic, every valid table row."""
    if args.t is not None:
        models = [CharacterParams.half_lattice(args.t, args.r, args.a)]
    else:
        p_prime = args.p_prime if args.p_prime is not None else _integer(args.p + 1, "p + 1")
        models = [CharacterParams(args.p, p_prime, args.r, args.s)]
        if args.fermionic and p_prime != args.p + 1:
            raise InvalidParametersError("fermionic rows exist only for p' = p + 1")
    if args.fermionic:
        for row in ROWS:
            try:
                if args.t is not None:
                    models.append(FermionicCase.hl_character(args.t, _integer(args.r, "r"), args.a, row))
                else:
                    p, r = _integer(args.p, "p"), _integer(args.r, "r")
                    models.append(FermionicCase.abf_character(p, r, args.s, row))
            except ExcludedCaseError:
                logger.debug("row %s is excluded", row)
    return models


def demo_lines(p, a, b, e, f, L, n, lambda_) -> list:
    """One line per path: the vertex words of h, C1(h), C2(n) and C3(lambda)."""
    lines = []
    for h in enumerate_abf(p, a, b, e, f, L):
        words = [vertex_word(h).symbols or "-"]
        try:
            dilated = c1_transform(h)
            inserted = c2_insert(dilated, n)
            words.extend([vertex_word(dilated).symbols, vertex_word(inserted).symbols])
            words.append(vertex_word(c3_wave(inserted, lambda_)).symbols)
        except TransformError as error:
            words.append(f"undefined ({error})")
        lines.append(" -> ".join(words))
    return lines


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parser():
    parser = argparse.ArgumentParser(
        prog="virasoro-paths", description="Exact path generating functions and character identities."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    sweep = commands.add_parser("sweep", help="run an identity suite and write a JSON report")
    sweep.add_argument("--suite", default="all", choices=sorted(SUITES))
    sweep.add_argument("--p", nargs="*", type=int)
    sweep.add_argument("--t", nargs="*", type=Fraction)
    for name in ("a", "b"):
        sweep.add_argument(f"--{name}", nargs="*", type=Fraction)
    for name in ("e", "f"):
        sweep.add_argument(f"--{name}", nargs="*", type=int, choices=(0, 1))
    sweep.add_argument("--lmax", type=int)
    sweep.add_argument("--order", type=int)
    sweep.add_argument("--out", type=Path)
    sweep.add_argument("--jobs", type=int)

    character = commands.add_parser("character", help="emit truncated character coefficients")
    model = character.add_mutually_exclusive_group(required=True)
    model.add_argument("--p", type=Fraction)
    model.add_argument("--t", type=Fraction)
    character.add_argument("--p-prime", type=int)
    character.add_argument("--r", type=Fraction, required=True)
    character.add_argument("--s", type=int)
    character.add_argument("--a", type=int)
    character.add_argument("--fermionic", action="store_true", help="add one column per valid table row")
    character.add_argument("--order", type=int)
    character.add_argument("--format", default="csv", choices=("csv", "json"))
    character.add_argument("--out", type=Path)

    for name, text in (("path-dump", "list the paths of one set"), ("transform-demo", "show h -> C1 -> C2 -> C3")):
        sub = commands.add_parser(name, help=text)
        sub.add_argument("--family", default="abf", choices=("abf", "restricted", "half"))
        sub.add_argument("--p", type=int)
        sub.add_argument("--t", type=Fraction)
        sub.add_argument("--a", type=Fraction, required=True)
        sub.add_argument("--b", type=Fraction, required=True)
        sub.add_argument("--e", type=int, choices=(0, 1), default=0)
        sub.add_argument("--f", type=int, choices=(0, 1), default=0)
        sub.add_argument("--length", type=Fraction, required=True)
        sub.add_argument("--out", type=Path)
        if name == "transform-demo":
            sub.add_argument("--n", type=int, default=0)
            sub.add_argument("--partition", nargs="*", type=int, default=[])
    return parser


def _integer(value, name):
    if Fraction(value).denominator != 1:
        raise InvalidParametersError(f"{name}={value} must be an integer")
    return int(value)


def _sweep(args):
    config = SweepConfig(
        suite=args.suite,
        p=args.p,
        t=args.t,
        a=args.a,
        b=args.b,
        e=args.e,
        f=args.f,
        lmax=args.lmax,
        order=args.order,
        out=args.out,
        jobs=args.jobs,
    ).validate()
    tasks = collect_tasks(config)
    try:
        report = run_sweep(config, tasks)
    except VirasoroPathsError as error:
        # raised by a running check, not by the command line
        logger.error("sweep %s stopped: %s", config.suite, error)
        sys.stderr.write(f"virasoro-paths: sweep stopped: {error}\n")
        return EXIT_FAILURE
    if config.out is None:
        sys.stdout.write(report.to_json())
    return report.status


def _character(args):
    from . import DEFAULT_ORDER

    if args.t is None and args.s is None:
        raise InvalidParametersError("--s is required with --p")
    if args.t is not None and args.a is None:
        raise InvalidParametersError("--a is required with --t")
    order = DEFAULT_ORDER if args.order is None else args.order
    _write(emit_character(character_models(args), order, args.format), args.out)
    return EXIT_PASS


def _path_dump(args):
    if args.family == "half":
        if args.t is None:
            raise InvalidParametersError("--t is required for half-lattice paths")
        paths = enumerate_half(args.t, args.a, args.b, args.e, args.f, args.length)
    else:
        if args.p is None:
            raise InvalidParametersError("--p is required for ABF paths")
        enumerate_ = enumerate_abf_restricted if args.family == "restricted" else enumerate_abf
        a, b, L = _integer(args.a, "a"), _integer(args.b, "b"), _integer(args.length, "length")
        paths = enumerate_(args.p, a, b, args.e, args.f, L)
    _write(dump_paths(paths), args.out)
    return EXIT_PASS


def _transform_demo(args):
    if args.p is None:
        raise InvalidParametersError("--p is required for the transform demo")
    a, b, L = _integer(args.a, "a"), _integer(args.b, "b"), _integer(args.length, "length")
    lines = demo_lines(args.p, a, b, args.e, args.f, L, args.n, Partition.of(args.partition))
    _write("".join(line + "\n" for line in lines), args.out)
    return EXIT_PASS


COMMANDS = {
    "sweep": _sweep,
    "character": _character,
    "path-dump": _path_dump,
    "transform-demo": _transform_demo,
}


def main(argv=None) -> int:
    """
    Entry point of the virasoro-paths command.

    Returns:
        0 when every record passes, 1 on a failing record or a library
        error while a check runs, 2 on a usage error, an invalid
        configuration or a library error while building the work.
    """
    from . import LOG_LEVEL

    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_PASS if exit_.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else LOG_LEVEL)
    try:
        return COMMANDS[args.command](args)
    except VirasoroPathsError as error:
        logger.error("%s", error)
        sys.stderr.write(f"virasoro-paths: error: {error}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

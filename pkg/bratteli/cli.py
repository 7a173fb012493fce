# cli.py
#
# Copyright 2025 thecodenomad
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Command-line entry point.

Every subcommand builds what it needs from the family registry, runs one
backend operation and renders the result as TSV, JSON or DOT. Identical
arguments and seed give byte-identical output. Errors print a one-line
diagnostic to stderr and exit with the code of their exception class;
failed checks exit 1.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from bratteli import __version__
from bratteli.backend.central_measures import (
    check_harmonicity,
    concentration_check,
    cylinder_decay_report,
    ergodic_estimate,
    growth_sample_path,
    plancherel_assignment,
    random_walk_path,
    sample_seeds,
)
from bratteli.backend.dimensions import (
    BranchingRatios,
    DimTable,
    algebra_dimensions,
    branching_ratios,
    dims_up_to,
    m_table,
    vanishing_criterion,
    verify_multiplicativity,
)
from bratteli.backend.errors import BratteliError, DomainError, HorizonError, InvalidVertexError
from bratteli.backend.families import get_family_class
from bratteli.backend.graded_graph import GradedGraph, Vertex, build_family, validate
from bratteli.backend.graph_io import dump_graph, encode_label, parse_vertex
from bratteli.backend.k0 import embedding_matrix, infinitesimal_vertices, k0_quotient_check
from bratteli.backend.oracles import expected_algebra_dimension
from bratteli.backend.pascalize import PascalizedGraph, pascalize
from bratteli.constants import (
    A_FORMULA,
    ALGEBRA,
    DESCRIPTION,
    FAMILY_DATA,
    QUOTIENT,
    FamilyType,
    OutputFormat,
)
from bratteli.settings import BratteliSettings
from bratteli.view.dot import to_dot
from bratteli.view.tables import (
    format_decimal,
    format_fraction,
    format_label,
    fraction_cells,
    rational_json,
    render_json,
    render_matrix,
    render_tsv,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1

# Subcommands whose horizon must not exceed the built levels.
HORIZON_COMMANDS = ("estimate", "decay")
# The criterion horizon used when only the verdict is needed.
VERDICT_HORIZON = 4


@dataclass(frozen=True)
class RunConfig:
    """Everything a run depends on; equal configs produce equal output."""

    subcommand: str
    family: str
    max_level: int
    output_format: OutputFormat = OutputFormat.TSV
    seed: int = BratteliSettings.DEFAULT_SEED
    horizon: int = BratteliSettings.DEFAULT_HORIZON
    vertex: Optional[str] = None
    level: Optional[int] = None
    path: Optional[str] = None
    samples: int = BratteliSettings.DEFAULT_SAMPLES
    pascalized: bool = False
    sequence: Optional[Tuple[int, ...]] = None
    matrices: bool = False
    from_level: int = 0
    to_level: Optional[int] = None
    output: Optional[str] = None

    def validate(self) -> None:
        """Check cross-field constraints.

        Raises:
            HorizonError: If the horizon exceeds max_level for an estimate subcommand.
            DomainError: If a level or the output format does not fit the subcommand.
        """
        if self.max_level < 0:
            raise DomainError(f"--max-level must be nonnegative, got {self.max_level}")
        if self.subcommand in HORIZON_COMMANDS and self.horizon > self.max_level:
            raise HorizonError(f"--horizon {self.horizon} exceeds --max-level {self.max_level}")
        if self.output_format is OutputFormat.DOT and self.subcommand not in ("graph", "pascalize"):
            raise DomainError("--format dot is available for graph and pascalize only")


def configure_logging(level: str) -> None:
    """Send toolkit log records to stderr at `level`."""
    root = logging.getLogger("bratteli")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)


def _parse_sequence(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subparser per subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", default=FamilyType.YOUNG.value, help="graph family (default: young)")
    common.add_argument("--max-level", type=int, default=None, help="highest level built")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=BratteliSettings.DEFAULT_FORMAT,
    )
    common.add_argument("--seed", type=int, default=None, help="sampler seed")
    common.add_argument("--horizon", type=int, default=None, help="last level of estimates and ratios")
    common.add_argument("--vertex", default=None, help="target vertex as a JSON label")
    common.add_argument("--level", type=int, default=None, help="level of --vertex when labels repeat")
    common.add_argument("--path", default=None, help="path as a JSON list of labels")
    common.add_argument("--samples", type=int, default=None, help="number of sampled paths")
    common.add_argument("--pascalized", action="store_true", help="work on the pascalized graph")
    common.add_argument("--output", default=None, help="write to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")

    parser = argparse.ArgumentParser(prog="bratteli", description="Exact computations on graded graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, text in (
        ("graph", "build, validate and export a family graph"),
        ("pascalize", "build and export the pascalized graph"),
        ("dims", "path counts dim(v)"),
        ("mtable", "the triangle M(n, l)"),
        ("multiplicativity", "check dim(n, l) = M(n, |l|) dim(l)"),
        ("algebra-dims", "sums of squared dimensions against closed forms"),
        ("estimate", "ergodic-method values along sampled or given paths"),
        ("decay", "bounds on an off-diagonal cylinder"),
        ("harmonic", "check the Plancherel assignment is central"),
    ):
        command = sub.add_parser(name, parents=[common], help=text)
        if name in ("graph", "pascalize"):
            command.add_argument("--from-level", type=int, default=0, help="first level in DOT output")
            command.add_argument("--to-level", type=int, default=None, help="last level in DOT output")
    ratios = sub.add_parser("ratios", parents=[common], help="the vanishing criterion")
    ratios.add_argument("--sequence", type=_parse_sequence, default=None, help="custom a_1, a_2, ...")
    k0 = sub.add_parser("k0", parents=[common], help="infinitesimal vertices and the K0 quotient")
    k0.add_argument("--matrices", action="store_true", help="also print the incidence matrices")
    return parser


def config_from_args(args: argparse.Namespace, settings: BratteliSettings) -> RunConfig:
    """Combine parsed arguments with the settings defaults.

    Out-of-range levels are rejected here, before the settings clamp them.

    Raises:
        DomainError: If --max-level or --horizon lies outside the allowed level range.
    """
    lo, hi = BratteliSettings.MAX_LEVEL_RANGE
    for flag, value in (("--max-level", args.max_level), ("--horizon", args.horizon)):
        if value is not None and not lo <= value <= hi:
            raise DomainError(f"{flag} must lie in {lo}..{hi}, got {value}")
    horizon = args.horizon
    if horizon is None:
        in_range = args.max_level is not None and args.subcommand in HORIZON_COMMANDS
        horizon = args.max_level if in_range else BratteliSettings.DEFAULT_HORIZON
    if args.max_level is not None:
        settings.max_level = args.max_level
    elif args.subcommand in HORIZON_COMMANDS:
        settings.max_level = horizon
    if args.samples is not None:
        settings.samples = args.samples
    return RunConfig(
        subcommand=args.subcommand,
        family=args.family,
        max_level=settings.max_level,
        output_format=OutputFormat(args.output_format),
        seed=args.seed if args.seed is not None else settings.seed,
        horizon=horizon,
        vertex=args.vertex,
        level=args.level,
        path=args.path,
        samples=settings.samples,
        pascalized=args.pascalized,
        sequence=getattr(args, "sequence", None),
        matrices=getattr(args, "matrices", False),
        from_level=getattr(args, "from_level", 0),
        to_level=getattr(args, "to_level", None),
        output=args.output,
    )


class Runner:
    """Executes one RunConfig and renders its result."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.family = get_family_class(config.family)().name
        self._base: Optional[GradedGraph] = None
        self._pascalized: Optional[PascalizedGraph] = None

    @property
    def base(self) -> GradedGraph:
        """The family graph through max_level."""
        if self._base is None:
            self._base = build_family(self.family, self.config.max_level)
        return self._base

    @property
    def pascalized(self) -> PascalizedGraph:
        """The pascalized family graph through max_level."""
        if self._pascalized is None:
            self._pascalized = pascalize(self.base, self.config.max_level)
        return self._pascalized

    def graph(self) -> GradedGraph:
        """The graph selected by --pascalized."""
        return self.pascalized if self.config.pascalized else self.base

    @property
    def fmt(self) -> OutputFormat:
        """The requested output format."""
        return self.config.output_format

    def target(self, graph: GradedGraph) -> Vertex:
        """The vertex named by --vertex."""
        if self.config.vertex is None:
            raise InvalidVertexError(f"{self.config.subcommand} needs --vertex")
        return parse_vertex(graph, self.config.vertex, self.config.level)

    def given_path(self, graph: GradedGraph) -> Optional[List[Vertex]]:
        """The path named by --path, if any."""
        if self.config.path is None:
            return None
        try:
            labels = json.loads(self.config.path)
        except json.JSONDecodeError as exc:
            raise InvalidVertexError(f"--path is not valid JSON: {exc}") from exc
        if not isinstance(labels, list):
            raise InvalidVertexError("--path must be a JSON list of labels")
        if isinstance(graph, PascalizedGraph):
            return [parse_vertex(graph, raw) for raw in labels]
        return [parse_vertex(graph, raw, i) for i, raw in enumerate(labels)]

    def dispatch(self) -> Tuple[str, int]:
        """Run the subcommand; returns the rendered text and the exit status."""
        handlers: Dict[str, Callable[[], Tuple[str, int]]] = {
            "graph": lambda: self.export(self.base),
            "pascalize": lambda: self.export(self.pascalized),
            "dims": self.dims,
            "mtable": self.mtable,
            "ratios": self.ratios,
            "multiplicativity": self.multiplicativity,
            "algebra-dims": self.algebra_dims,
            "estimate": self.estimate,
            "decay": self.decay,
            "harmonic": self.harmonic,
            "k0": self.k0,
        }
        return handlers[self.config.subcommand]()

    def export(self, graph: GradedGraph) -> Tuple[str, int]:
        """Validate and export a graph."""
        report = validate(graph)
        for violation in report.violations:
            logger.error("Runner: %s", violation)
        status = EXIT_OK if report.ok else EXIT_CHECK_FAILED
        if self.fmt is OutputFormat.DOT:
            return to_dot(graph, self.config.from_level, self.config.to_level), status
        if self.fmt is OutputFormat.JSON:
            return render_json(dump_graph(graph)), status
        rows = []
        for v in graph.vertices():
            up = graph.up(v) if v.level < graph.built_up_to else ()
            rows.append([v.level, format_label(graph, v), " ".join(format_label(graph, w) for w in up)])
        meta = [f"family {graph.family}", f"valid {str(report.ok).lower()}"]
        return render_tsv(["level", "label", "up"], rows, meta), status

    def dims(self) -> Tuple[str, int]:
        """Path counts of every vertex."""
        graph = self.graph()
        table = dims_up_to(graph, self.config.max_level)
        entries = [(v.level, v, table[v]) for v in graph.vertices()]
        if self.fmt is OutputFormat.JSON:
            document = [{"level": k, "label": encode_label(graph, v), "value": d} for k, v, d in entries]
            return render_json(document), EXIT_OK
        rows = [[k, format_label(graph, v), d] for k, v, d in entries]
        return render_tsv(["level", "label", "value"], rows, [f"family {graph.family}"]), EXIT_OK

    def branching(self) -> BranchingRatios:
        """Branching ratios measured on the base graph."""
        n = self.config.max_level
        return branching_ratios(self.base, dims_up_to(self.base, n), n)

    def mtable(self) -> Tuple[str, int]:
        """The triangle M(n, l)."""
        a = self.branching()
        mt = m_table(a, self.config.max_level)
        entries = [(n, l, value) for n in range(mt.top + 1) for l, value in mt.row(n)]
        if self.fmt is OutputFormat.JSON:
            document = {
                "family": self.family,
                "a": list(a.values),
                "homogeneous": a.is_homogeneous,
                "m": [{"n": n, "l": l, "value": value} for n, l, value in entries],
            }
            return render_json(document), EXIT_OK
        meta = [f"family {self.family}", f"homogeneous {str(a.is_homogeneous).lower()}"]
        return render_tsv(["n", "l", "M"], entries, meta), EXIT_OK

    def ratios(self) -> Tuple[str, int]:
        """The vanishing criterion and the ratio sequence m_n."""
        horizon = self.config.horizon
        if self.config.sequence is not None:
            a = BranchingRatios.from_sequence(self.config.sequence)
        else:
            a = BranchingRatios.for_family(self.family, 2 * horizon + 2)
        result = vanishing_criterion(a, horizon)
        pairs = list(enumerate(result.ratio_sequence))
        if self.fmt is OutputFormat.JSON:
            document = {
                "family": a.family,
                "verdict": result.verdict.value,
                "heuristic": result.heuristic,
                "ratios": [dict(n=n, **rational_json(m)) for n, m in pairs],
            }
            return render_json(document), EXIT_OK
        meta = [
            f"family {a.family}",
            f"verdict {result.verdict.value}",
            f"heuristic {str(result.heuristic).lower()}",
        ]
        rows = [[n] + fraction_cells(m) for n, m in pairs]
        return render_tsv(["n", "ratio", "decimal"], rows, meta), EXIT_OK

    def multiplicativity(self) -> Tuple[str, int]:
        """dim(n, l) against M(n, |l|) dim(l) on the pascalized graph."""
        n = self.config.max_level
        base_dims = dims_up_to(self.base, n)
        a = branching_ratios(self.base, base_dims, n)
        mt = m_table(a, n)
        pg = self.pascalized
        dims = dims_up_to(pg, n)
        report = verify_multiplicativity(pg, dims, base_dims, mt, n)
        status = EXIT_OK if report.ok else EXIT_CHECK_FAILED
        if self.fmt is OutputFormat.JSON:
            document = {"family": pg.family, "ok": report.ok, "violations": report.violations}
            return render_json(document), status
        rows = [
            [v.level, format_label(pg, v), dims[v], mt[v.level, v.base.level], base_dims[v.base]]
            for v in pg.vertices(n)
        ]
        meta = [f"family {pg.family}", f"homogeneous {str(a.is_homogeneous).lower()}"]
        meta += [f"ok {str(report.ok).lower()}"] + report.violations
        return render_tsv(["level", "label", "dim", "M", "base_dim"], rows, meta), status

    def algebra_dims(self) -> Tuple[str, int]:
        """Sums of squared dimensions per level against the closed forms.

        Columns are level, the total over the level, the total over its diagonal
        (the quotient algebra) and the closed form for the total.
        """
        n = self.config.max_level
        pg = self.pascalized
        rows = algebra_dimensions(pg, dims_up_to(pg, n), n)
        expected = [expected_algebra_dimension(self.family, k) for k, _, _ in rows]
        ok = all(total == want for (_, total, _), want in zip(rows, expected))
        status = EXIT_OK if ok else EXIT_CHECK_FAILED
        if self.fmt is OutputFormat.JSON:
            document = [
                {"level": k, "dimension": total, "quotient": quotient, "expected": want}
                for (k, total, quotient), want in zip(rows, expected)
            ]
            return render_json(document), status
        table = [[k, total, quotient, want] for (k, total, quotient), want in zip(rows, expected)]
        data = {t.value: entry for t, entry in FAMILY_DATA.items()}.get(self.family, {})
        meta = [f"family {self.family}"] + [
            f"{key} {data[key]}" for key in (ALGEBRA, QUOTIENT, A_FORMULA, DESCRIPTION) if key in data
        ]
        return render_tsv(["level", "dimension", "quotient", "expected"], table, meta), status

    def sampled_paths(self, graph: GradedGraph, dims: DimTable) -> List[Tuple[int, Sequence[Vertex]]]:
        """`samples` seeded paths: growth process on the base, random walks on the pascalization."""
        horizon = self.config.horizon
        seeds = sample_seeds(self.config.seed, self.config.samples)
        if isinstance(graph, PascalizedGraph):
            return [(seed, random_walk_path(graph, dims, horizon, seed)) for seed in seeds]
        phi = plancherel_assignment(graph, dims, horizon)
        return [(seed, growth_sample_path(graph, phi, horizon, seed)) for seed in seeds]

    def estimate(self) -> Tuple[str, int]:
        """Ergodic-method values dim(d) dim(d; s_n) / dim(s_n)."""
        graph = self.graph()
        horizon = self.config.horizon
        dims = dims_up_to(graph, horizon)
        d = self.target(graph)
        path = self.given_path(graph)
        if path is not None:
            result = ergodic_estimate(graph, dims, d, path, horizon)
            if self.fmt is OutputFormat.JSON:
                document = {
                    "target": encode_label(graph, d),
                    "values": [dict(n=n, **rational_json(value)) for n, value in result.rows()],
                }
                return render_json(document), EXIT_OK
            rows = [[n] + fraction_cells(value) for n, value in result.rows()]
            meta = [f"target {format_label(graph, d)}"]
            return render_tsv(["n", "value", "decimal"], rows, meta), EXIT_OK
        finals = [
            (seed, ergodic_estimate(graph, dims, d, s, horizon).final)
            for seed, s in self.sampled_paths(graph, dims)
        ]
        mean = sum((value for _, value in finals), Fraction(0)) / len(finals)
        if self.fmt is OutputFormat.JSON:
            document = {
                "target": encode_label(graph, d),
                "horizon": horizon,
                "mean": rational_json(mean),
                "samples": [dict(seed=seed, **rational_json(value)) for seed, value in finals],
            }
            return render_json(document), EXIT_OK
        meta = [
            f"target {format_label(graph, d)}",
            f"horizon {horizon}",
            f"mean {format_fraction(mean)} {format_decimal(mean)}",
        ]
        rows = [[seed] + fraction_cells(value) for seed, value in finals]
        return render_tsv(["seed", "value", "decimal"], rows, meta), EXIT_OK

    def decay(self) -> Tuple[str, int]:
        """Bounds on the cylinder of an off-diagonal vertex."""
        horizon = self.config.horizon
        pg = self.pascalized
        dims = dims_up_to(pg, horizon)
        mt = m_table(BranchingRatios.for_family(self.family, horizon + 1), horizon + 1)
        d = self.target(pg)
        report = cylinder_decay_report(
            pg, dims, mt, d, horizon, path=self.given_path(pg), seed=self.config.seed
        )
        status = EXIT_OK if report.sound else EXIT_CHECK_FAILED
        if self.fmt is OutputFormat.JSON:
            document = {
                "target": encode_label(pg, d),
                "strictly_decreasing": report.strictly_decreasing,
                "sound": report.sound,
                "bounds": [rational_json(b) for b in report.bounds],
                "rows": [
                    {"n": n, "bound": rational_json(bound), "value": rational_json(value)}
                    for n, bound, value in report.rows
                ],
            }
            return render_json(document), status
        meta = [
            f"target {format_label(pg, d)}",
            f"strictly_decreasing {str(report.strictly_decreasing).lower()}",
            f"sound {str(report.sound).lower()}",
        ]
        rows = [[n] + fraction_cells(bound) + fraction_cells(value) for n, bound, value in report.rows]
        return render_tsv(["n", "bound", "bound_decimal", "value", "value_decimal"], rows, meta), status

    def harmonic(self) -> Tuple[str, int]:
        """Check the Plancherel assignment, or its lift to the pascalization."""
        n = self.config.max_level
        base_dims = dims_up_to(self.base, n)
        phi = plancherel_assignment(self.base, base_dims, n)
        if self.config.pascalized:
            report = concentration_check(self.pascalized, phi, n)
            graph: GradedGraph = self.pascalized
            phi = report.lifted
            dims = dims_up_to(graph, n)
        else:
            report = check_harmonicity(self.base, phi, n, base_dims)
            graph, dims = self.base, base_dims
        status = EXIT_OK if report.ok else EXIT_CHECK_FAILED
        if self.fmt is OutputFormat.JSON:
            document = {"family": graph.family, "ok": report.ok, "violations": report.violations}
            return render_json(document), status
        rows = []
        for v in graph.vertices(n):
            measure = format_fraction(phi.cylinder(v, dims))
            rows.append([v.level, format_label(graph, v), *fraction_cells(phi[v]), measure])
        meta = [f"family {graph.family}", f"harmonic {str(report.ok).lower()}"] + report.violations
        return render_tsv(["level", "label", "phi", "phi_decimal", "measure"], rows, meta), status

    def k0(self) -> Tuple[str, int]:
        """Infinitesimal vertices and the finite-level K0 quotient."""
        n = self.config.max_level
        pg = self.pascalized
        a = BranchingRatios.for_family(self.family, 2 * VERDICT_HORIZON + 2)
        criterion = vanishing_criterion(a, VERDICT_HORIZON)
        inf = infinitesimal_vertices(pg, criterion, n)
        report = k0_quotient_check(pg, self.base, inf, n) if inf.determined else None
        ok = report is None or report.ok
        status = EXIT_OK if ok else EXIT_CHECK_FAILED
        violations = report.violations if report is not None else []
        if self.fmt is OutputFormat.JSON:
            document = {
                "family": pg.family,
                "verdict": criterion.verdict.value,
                "determined": inf.determined,
                "infinitesimal": [encode_label(pg, v) for v in inf.vertices],
                "quotient_ok": None if report is None else report.ok,
                "violations": violations,
            }
            return render_json(document), status
        meta = [
            f"family {pg.family}",
            f"verdict {criterion.verdict.value}",
            f"determined {str(inf.determined).lower()}",
            "quotient_ok " + ("undetermined" if report is None else str(report.ok).lower()),
        ] + violations
        flagged = [[v.level, format_label(pg, v)] for v in inf.vertices]
        text = render_tsv(["level", "label"], flagged, meta)
        if self.config.matrices:
            for k in range(n):
                for graph, title in ((pg, "pascalized"), (self.base, "base")):
                    labels = [format_label(graph, v) for v in graph.level(k)]
                    cols = [format_label(graph, w) for w in graph.level(k + 1)]
                    heading = f"{title}:{k}->{k + 1}"
                    text += render_matrix(embedding_matrix(graph, k), labels, cols, heading)
        return text, status


def run(
    config: RunConfig, stream: Optional[TextIO] = None, settings: Optional[BratteliSettings] = None
) -> int:
    """Execute one run and write its output.

    Args:
        config (RunConfig): The validated configuration.
        stream (TextIO, optional): Destination when no --output is given; stdout by default.
        settings (BratteliSettings, optional): Resolves --output paths.

    Returns:
        int: 0 on success, 1 when a check reports violations.

    Raises:
        BratteliError: For invalid input; the caller maps it to an exit code.
    """
    config.validate()
    text, status = Runner(config).dispatch()
    if config.output is not None:
        target = (settings or BratteliSettings()).resolve_output(config.output)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        logger.info("Runner: wrote %s", target)
    else:
        (stream or sys.stdout).write(text)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run, and map errors to exit codes."""
    settings = BratteliSettings()
    args = build_parser().parse_args(argv)
    configure_logging("DEBUG" if args.verbose else settings.log_level)
    try:
        return run(config_from_args(args, settings), settings=settings)
    except BratteliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

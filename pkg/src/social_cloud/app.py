#!/usr/bin/env python3
"""
Command-line front end for the social cloud externality toolkit

    social-cloud metrics --input graph.txt [--format csv|json] [--out DIR]
    social-cloud externality --input graph.txt --link 0,2 [--out DIR]
    social-cloud sweep --min 4 --max 30 [--out DIR]
    social-cloud conjecture-scan --min 4 --max 30 [--random 200 --edge-prob 0.3 --seed 7]
    social-cloud classify -- -0.011 0.003
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import click

from . import __version__
from .config import LOG_LEVEL, SCAN_CONFIG, SWEEP_CONFIG, get_output_dir, log_config_summary
from .exceptions import SocialCloudInputError
from .models.externalities import classify_delta, conjecture_scan, count_beneficiaries, externality_report
from .models.metrics import compute_metrics
from .services.corpus import MAX_SEED, random_corpus, ring_corpus
from .services.experiments import findings_check, ring_sweep, symmetry_reduced_sweep
from .utils.edge_list import read_edge_list
from .utils.exporters import write_externality, write_metrics, write_sweep, write_violations

logger = logging.getLogger(__name__)

COMMANDS = ("metrics", "externality", "sweep", "conjecture-scan", "classify")
FORMATS = ("csv", "json")


def parse_link(text: str) -> Tuple[int, int]:
    """Parse 'j,k' into a node pair"""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise SocialCloudInputError(f"link must be written 'j,k', got {text!r}")
    try:
        return int(parts[0], 10), int(parts[1], 10)
    except ValueError:
        raise SocialCloudInputError(f"link endpoints must be integers, got {text!r}")


@dataclass
class RunConfig:
    """Everything one CLI invocation needs"""

    command: str
    input_path: Optional[str] = None
    link: Optional[Tuple[int, int]] = None
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    seed: Optional[int] = None
    output_dir: str = field(default_factory=get_output_dir)
    format: str = "csv"
    random_count: int = 0
    edge_prob: float = SCAN_CONFIG['EDGE_PROB']
    nodes_min: int = SCAN_CONFIG['NODES_MIN']
    nodes_max: int = SCAN_CONFIG['NODES_MAX']
    reduced: bool = False
    workers: int = 1
    deltas: Sequence[float] = ()

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise SocialCloudInputError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise SocialCloudInputError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.workers < 1:
            raise SocialCloudInputError(f"workers must be >= 1, got {self.workers}")
        if self.command in ("metrics", "externality") and not self.input_path:
            raise SocialCloudInputError(f"{self.command} requires --input")
        if self.command == "externality" and self.link is None:
            raise SocialCloudInputError("externality requires --link j,k")
        if self.command in ("sweep", "conjecture-scan"):
            if self.n_min is None or self.n_max is None:
                raise SocialCloudInputError(f"{self.command} requires --min and --max")
            if self.n_min > self.n_max:
                raise SocialCloudInputError(f"--min ({self.n_min}) exceeds --max ({self.n_max})")
        if self.command == "conjecture-scan" and self.random_count > 0:
            if self.seed is None:
                raise SocialCloudInputError("--random requires --seed for a replayable corpus")
            if not (0 <= self.seed <= MAX_SEED):
                raise SocialCloudInputError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.command == "classify" and not self.deltas:
            raise SocialCloudInputError("classify needs at least one delta value")


def _run_metrics(config: RunConfig) -> List[str]:
    graph = read_edge_list(config.input_path)
    bundle = compute_metrics(graph)
    return write_metrics(bundle, config.output_dir, config.format)


def _run_externality(config: RunConfig) -> List[str]:
    graph = read_edge_list(config.input_path)
    j, k = config.link
    report = externality_report(graph, j, k)
    nob, beneficiaries, pct = count_beneficiaries(report)
    click.echo(
        f"🔗 Link ({j}, {k}) at distance {report.base_distance}: "
        f"{nob} beneficiaries {list(beneficiaries)} ({pct:.2f}% of agents)"
    )
    return write_externality(report, config.output_dir)


def _run_sweep(config: RunConfig) -> List[str]:
    sweep = symmetry_reduced_sweep if config.reduced else ring_sweep
    summary = sweep(config.n_min, config.n_max, workers=config.workers)
    verdict = findings_check(summary)
    click.echo(
        f"📊 {len(summary.records)} links over sizes {config.n_min}-{config.n_max}; "
        f"max beneficiaries {verdict.max_beneficiary_pct:.2f}%"
    )
    return write_sweep(summary, verdict, config.output_dir)


def _run_conjecture_scan(config: RunConfig) -> List[str]:
    corpus = ring_corpus(config.n_min, config.n_max)
    random_manifest = None
    if config.random_count > 0:
        entries, random_manifest = random_corpus(
            config.random_count, config.nodes_min, config.nodes_max, config.edge_prob, config.seed
        )
        corpus.extend(entries)

    violations = conjecture_scan(corpus, workers=config.workers)
    ring_violations = [v for v in violations if v.graph_id.startswith("ring-")]
    if ring_violations:
        click.echo(f"⚠️  {len(ring_violations)} counterexamples on rings", err=True)
    click.echo(f"🔎 Scanned {len(corpus)} graphs: {len(violations)} violations")

    manifest = {
        "rings": {"n_min": config.n_min, "n_max": config.n_max},
        "random": random_manifest,
        "graphs": len(corpus),
        "candidate_links": sum(len(entry.candidates) for entry in corpus),
        "violations": len(violations),
    }
    return write_violations(violations, manifest, config.output_dir)


def _run_classify(config: RunConfig) -> List[str]:
    for delta in config.deltas:
        click.echo(f"{delta:+.6f} {classify_delta(delta).value}")
    return []


RUNNERS = {
    "metrics": _run_metrics,
    "externality": _run_externality,
    "sweep": _run_sweep,
    "conjecture-scan": _run_conjecture_scan,
    "classify": _run_classify,
}


def run(config: RunConfig) -> int:
    """
    Execute one command

    Returns:
        int: 0 on success, 2 on an input error (message on stderr)
    """
    try:
        config.validate()
        paths = RUNNERS[config.command](config)
    except (SocialCloudInputError, OSError) as e:
        logger.debug(f"{config.command} failed", exc_info=True)
        click.echo(f"❌ {e}", err=True)
        return 2

    for path in paths:
        click.echo(f"💾 {path}")
    return 0


def _link_option(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_link(value)
    except SocialCloudInputError as e:
        raise click.BadParameter(str(e))


output_option = click.option(
    "--out", "output_dir", default=get_output_dir, show_default="results",
    type=click.Path(file_okay=False), help="Directory for result files",
)
workers_option = click.option(
    "--workers", default=SWEEP_CONFIG['WORKERS'], show_default=True, type=int,
    help="Worker processes for independent evaluations",
)


@click.group()
@click.version_option(__version__)
@click.option("--log-level", default=LOG_LEVEL, show_default=True,
              type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False))
def main(log_level):
    """Social cloud externalities: metrics, link reports, ring sweeps and conjecture scans."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    log_config_summary()


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--format", "fmt", default="csv", show_default=True, type=click.Choice(FORMATS))
@output_option
@click.pass_context
def metrics(ctx, input_path, fmt, output_dir):
    """Per-agent closeness and availability plus the alpha matrix."""
    ctx.exit(run(RunConfig(command="metrics", input_path=input_path, format=fmt, output_dir=output_dir)))


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--link", required=True, callback=_link_option, help="Agents forming the link, as j,k")
@output_option
@click.pass_context
def externality(ctx, input_path, link, output_dir):
    """Externality report for one candidate link."""
    ctx.exit(run(RunConfig(command="externality", input_path=input_path, link=link, output_dir=output_dir)))


@main.command()
@click.option("--min", "n_min", default=SWEEP_CONFIG['N_MIN'], show_default=True, type=int,
              help="Smallest ring size")
@click.option("--max", "n_max", default=SWEEP_CONFIG['N_MAX'], show_default=True, type=int,
              help="Largest ring size")
@click.option("--reduced", is_flag=True, help="Evaluate one link per ring distance")
@workers_option
@output_option
@click.pass_context
def sweep(ctx, n_min, n_max, reduced, workers, output_dir):
    """Ring sweep: beneficiaries per network size and link distance."""
    config = RunConfig(command="sweep", n_min=n_min, n_max=n_max, reduced=reduced,
                       workers=workers, output_dir=output_dir)
    ctx.exit(run(config))


@main.command("conjecture-scan")
@click.option("--min", "n_min", default=SWEEP_CONFIG['N_MIN'], show_default=True, type=int,
              help="Smallest ring size")
@click.option("--max", "n_max", default=SWEEP_CONFIG['N_MAX'], show_default=True, type=int,
              help="Largest ring size")
@click.option("--random", "random_count", default=SCAN_CONFIG['RANDOM_COUNT'], show_default=True, type=int,
              help="Number of seeded random graphs to add")
@click.option("--edge-prob", default=SCAN_CONFIG['EDGE_PROB'], show_default=True, type=float)
@click.option("--seed", default=SCAN_CONFIG['SEED'], show_default=True, type=int,
              help="Unsigned 64-bit seed of the random corpus")
@click.option("--nodes-min", default=SCAN_CONFIG['NODES_MIN'], show_default=True, type=int)
@click.option("--nodes-max", default=SCAN_CONFIG['NODES_MAX'], show_default=True, type=int)
@workers_option
@output_option
@click.pass_context
def conjecture_scan_command(ctx, n_min, n_max, random_count, edge_prob, seed,
                            nodes_min, nodes_max, workers, output_dir):
    """Search for beneficiaries whose closeness did not increase."""
    config = RunConfig(command="conjecture-scan", n_min=n_min, n_max=n_max,
                       random_count=random_count, edge_prob=edge_prob, seed=seed,
                       nodes_min=nodes_min, nodes_max=nodes_max, workers=workers,
                       output_dir=output_dir)
    ctx.exit(run(config))


@main.command()
@click.argument("deltas", nargs=-1, required=True, type=float)
@click.pass_context
def classify(ctx, deltas):
    """Label raw availability changes as POSITIVE, NEGATIVE or NONE."""
    ctx.exit(run(RunConfig(command="classify", deltas=deltas)))


if __name__ == "__main__":
    main()

"""Simulate CLI command."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import typer
from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from src.config import get_settings
from src.core.experiments import ExperimentConfig, ExperimentRunner, write_records
from src.core.walks import TimeMode, WalkModel

# stdout carries the CSV; everything human-facing goes to stderr
err_console = Console(stderr=True)


def parse_float_list(value: Optional[str], option: str) -> Optional[List[float]]:
    """Parse ``"0.1,0.2"`` into floats; None passes through."""
    if value is None:
        return None
    try:
        return [float(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated numbers, got '{value}'", param_hint=option)


def parse_int_list(value: Optional[str], option: str) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated integers, got '{value}'", param_hint=option)


def build_config(
    config_file: Optional[Path],
    overrides: Dict[str, Any],
) -> ExperimentConfig:
    """Flags override the file; unset flags (None) leave file values alone."""
    if config_file is not None:
        return ExperimentConfig.from_file(config_file, **overrides)
    return ExperimentConfig(**{key: value for key, value in overrides.items() if value is not None})


def simulate(
    config_file: Optional[Path] = typer.Option(
        None, "--config", "-c", help="JSON experiment config (flags override it)"
    ),
    model: Optional[WalkModel] = typer.Option(None, "--model", "-m", help="unrestricted or restricted"),
    n: Optional[int] = typer.Option(None, "--n", help="Gene count (single chromosome unless --sizes)"),
    sizes: Optional[str] = typer.Option(None, "--sizes", help="Chromosome sizes, e.g. 100,200,300,400"),
    p: Optional[str] = typer.Option(None, "--p", help="delta1 probabilities, e.g. 0,0.5,1"),
    p_schedule: Optional[str] = typer.Option(
        None, "--p-schedule", help="Piecewise schedule c1:p1,c2:p2,... (c in units of n)"
    ),
    reps: Optional[int] = typer.Option(None, "--reps", "-r", help="Replicates per p value"),
    checkpoints: Optional[str] = typer.Option(
        None, "--checkpoints", help="Checkpoints c (time cn), e.g. 0.1,0.5,1"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help="Base seed"),
    time_mode: Optional[TimeMode] = typer.Option(None, "--time-mode", help="discrete or poisson"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
    validate: bool = typer.Option(False, "--validate", help="Check invariants at every checkpoint"),
    genome: Optional[Path] = typer.Option(None, "--genome", help="Initial genome file (L:/C: lines)"),
    track_components: bool = typer.Option(
        False, "--track-components", help="Track alpha and fragmentation per jump"
    ),
):
    """Run replicate DCJ walks and write one CSV row per (replicate, checkpoint)."""
    try:
        overrides: Dict[str, Any] = {
            "model": model,
            "n": n,
            "sizes": parse_int_list(sizes, "--sizes"),
            "p_values": parse_float_list(p, "--p"),
            "p_schedule": p_schedule,
            "reps": reps,
            "checkpoints": parse_float_list(checkpoints, "--checkpoints"),
            "seed": seed,
            "time_mode": time_mode,
            "check_invariants": True if validate else None,
            "track_components": True if track_components else None,
            "genome": genome.read_text() if genome is not None else None,
        }
        config = build_config(config_file, overrides)
    except OSError as e:
        err_console.print(f"[red]Error:[/red] Could not read input: {e}")
        raise typer.Exit(1)
    except ValueError as e:
        err_console.print(f"[red]Error:[/red] Invalid configuration: {e}")
        raise typer.Exit(1)

    workers = get_settings().workers
    total = len(config.schedules()) * config.reps
    with Progress(
        TextColumn("[bold]Simulating[/bold]"),
        BarColumn(),
        MofNCompleteColumn(),
        console=err_console,
        transient=True,
    ) as progress:
        task = progress.add_task("replicates", total=total)
        runner = ExperimentRunner(workers=workers, on_replicate=lambda _: progress.advance(task))
        try:
            records = runner.run(config)
        except ValueError as e:
            err_console.print(f"[red]Error:[/red] {e}")
            raise typer.Exit(1)

    if out is None:
        write_records(records, sys.stdout)
        return

    try:
        with open(out, "w", newline="", encoding="utf-8") as stream:
            count = write_records(records, stream)
    except OSError as e:
        err_console.print(f"[red]Error:[/red] Cannot write {out}: {e}")
        raise typer.Exit(1)
    err_console.print(f"[green]Wrote {count} record(s) to {out}[/green]")

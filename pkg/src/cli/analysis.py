"""Summary, gamma table and Erdős–Rényi comparison CLI commands."""

from __future__ import annotations

import csv
import math
import sys
from pathlib import Path
from typing import Optional

import numpy as np
import typer
from rich.console import Console
from rich.table import Table

from src.cli.simulate import parse_float_list
from src.config import CONSOLE_COLORS
from src.core.experiments import SummaryError, er_compare, split_sizes, summarize, summary_frame
from src.core.theory import TheoryError, gamma_table

console = Console()
err_console = Console(stderr=True)

DEFAULT_GAMMA_GRID = ",".join(f"{c:g}" for c in np.round(np.arange(0.05, 2.0001, 0.05), 2))


def summarize_command(
    source: str = typer.Argument(..., help="Sample CSV written by simulate ('-' for stdin)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Also write the summary as CSV"),
    epsilon: Optional[float] = typer.Option(
        None, "--epsilon", "-e", help="Escape tolerance (default from settings, 0.05)"
    ),
):
    """Means per checkpoint and the escape point of each (model, p) series."""
    try:
        summary = summarize(sys.stdin if source == "-" else source, epsilon=epsilon)
    except FileNotFoundError:
        err_console.print(f"[red]Error:[/red] File not found: {source}")
        raise typer.Exit(1)
    except SummaryError as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(1)

    if not summary.rows:
        console.print("[yellow]No sample rows found.[/yellow]")
    else:
        escaped, held = CONSOLE_COLORS["escape"], CONSOLE_COLORS["ok"]
        table = Table(title="DCJ distance by checkpoint", title_style=CONSOLE_COLORS["header"])
        table.add_column("Model")
        table.add_column("p")
        table.add_column("c", justify="right")
        table.add_column("Reps", justify="right")
        table.add_column("Mean d", justify="right")
        table.add_column("Std d", justify="right")
        table.add_column("cn", justify="right")
        table.add_column("Mean n-T", justify="right")
        table.add_column("Escaped", justify="center")

        for row in summary.rows:
            table.add_row(
                row.model,
                row.p,
                f"{row.c:g}",
                str(row.replicates),
                f"{row.mean_distance:.2f}",
                f"{row.std_distance:.2f}",
                f"{row.parsimony:g}",
                f"{row.mean_estimate:.2f}",
                f"[{escaped}]yes[/]" if row.escaped else f"[{held}]no[/]",
            )
        console.print(table)

        console.print(f"\n[bold]Escape points[/bold] (epsilon = {summary.epsilon:g})")
        for (model, p), point in summary.escape_points.items():
            shown = f"[{escaped}]c = {point:g}[/]" if point is not None else "[dim]none detected[/dim]"
            console.print(f"  {model}, p={p}: {shown}")

    if out is not None:
        try:
            summary_frame(summary).to_csv(out, index=False)
        except OSError as e:
            err_console.print(f"[red]Error:[/red] Cannot write {out}: {e}")
            raise typer.Exit(1)
        console.print(f"[green]Summary written to {out}[/green]")


def gamma_table_command(
    values: str = typer.Option(
        DEFAULT_GAMMA_GRID, "--values", "-v", help="Comma-separated c values"
    ),
):
    """Print c, gamma(c) and the series remainder bound as CSV."""
    grid = parse_float_list(values, "--values") or []
    try:
        results = gamma_table(grid)
    except TheoryError as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(1)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["c", "gamma", "bound"])
    for result in results:
        writer.writerow([f"{result.c:g}", f"{result.value:.10g}", f"{result.bound:.3g}"])


def er_compare_command(
    n: int = typer.Option(1000, "--n", help="Gene count"),
    k: int = typer.Option(4, "--k", help="Linear chromosome count"),
    c: float = typer.Option(0.3, "--c", help="Time in units of n"),
    reps: int = typer.Option(100, "--reps", "-r", help="Samples of each kind"),
    seed: int = typer.Option(0, "--seed", "-s", help="Base seed"),
    p: float = typer.Option(0.5, "--p", help="delta1 probability of the walk"),
    per_run: bool = typer.Option(False, "--per-run", help="List walk - ER gaps per replicate"),
):
    """Compare tree counts of the walk's label graph, an ER graph and (1 - gamma(c)) n."""
    if reps < 1:
        err_console.print("[red]Error:[/red] --reps must be at least 1")
        raise typer.Exit(1)
    try:
        split_sizes(n, k)
        report = er_compare(n, k, c, reps, seed=seed, p=p)
    except (ValueError, TheoryError) as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(1)

    console.print(
        f"[bold]n={n}, k={k}, c={c:g}[/bold]  (p_edge = {report.edge_probability:.4g}, "
        f"{reps} sample(s) each)\n"
    )
    means = Table(title="Mean tree components")
    means.add_column("Source")
    means.add_column("Trees", justify="right")
    means.add_row("Label graph Z", f"{report.mean_walk:.2f}")
    means.add_row("Erdős–Rényi", f"{report.mean_er:.2f}")
    means.add_row("(1 - gamma(c)) n", f"{report.theory:.2f}")
    console.print(means)

    gaps = Table(title="Gaps")
    gaps.add_column("Pair")
    gaps.add_column("Difference", justify="right")
    gaps.add_column("/ sqrt(n)", justify="right")
    for name, (raw, scaled) in report.gaps.items():
        gaps.add_row(name, f"{raw:+.2f}", f"{scaled:+.3f}")
    console.print(gaps)

    if per_run:
        console.print("\n[bold]walk - ER per replicate[/bold]")
        for replicate, gap in enumerate(report.per_run_gaps()):
            console.print(f"  {replicate}: {gap:+g}")

    band = 3 * math.sqrt(n)
    worst = max(abs(raw) for raw, _ in report.gaps.values())
    if worst > band:
        console.print(f"\n[yellow]Largest gap {worst:.1f} exceeds 3 sqrt(n) = {band:.1f}[/yellow]")

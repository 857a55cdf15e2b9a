"""Oracle CLI command."""

from __future__ import annotations

import typer
from rich.console import Console
from rich.table import Table

from src.cli.simulate import parse_int_list
from src.config import CONSOLE_COLORS
from src.core.oracle import (
    OracleError,
    TWO_CIRCLE_PAIR,
    certify_distance_formula,
    certify_restricted_equals_unrestricted,
)

console = Console()


def oracle_check_command(
    max_n: int = typer.Option(3, "--max-n", "-n", help="Largest gene count to enumerate"),
    ks: str = typer.Option("1,2", "--k", help="Chromosome counts for the formula check"),
    restricted: bool = typer.Option(
        True, "--restricted/--no-restricted", help="Also compare restricted and unrestricted BFS"
    ),
    show: int = typer.Option(5, "--show", help="Counterexamples to print per failing check"),
):
    """Certify the distance formula against BFS on every small genome space."""
    chromosome_counts = parse_int_list(ks, "--k") or []
    if max_n < 1 or not chromosome_counts or min(chromosome_counts) < 1:
        console.print("[red]Error:[/red] --max-n and every --k must be at least 1")
        raise typer.Exit(1)

    reports = []
    try:
        for n in range(1, max_n + 1):
            for k in chromosome_counts:
                reports.append(certify_distance_formula(n, k))
            if restricted:
                reports.append(certify_restricted_equals_unrestricted(n))
    except OracleError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(1)

    ok, fail = CONSOLE_COLORS["ok"], CONSOLE_COLORS["escape"]
    table = Table(title="Distance certification")
    table.add_column("Space")
    table.add_column("n", justify="right")
    table.add_column("k", justify="right")
    table.add_column("Classes", justify="right")
    table.add_column("Pairs", justify="right")
    table.add_column("Diameter", justify="right")
    table.add_column("Detours", justify="right")
    table.add_column("Result", justify="center")
    for report in reports:
        table.add_row(
            "restricted" if report.restricted else "G(n, k)",
            str(report.n),
            str(report.k),
            str(report.class_count),
            str(report.pair_count),
            str(report.diameter),
            str(len(report.detours)) if report.restricted else "-",
            f"[{ok}]pass[/]" if report.passed else f"[{fail}]{len(report.failures)} fail[/]",
        )
    console.print(table)

    restricted_reports = [report for report in reports if report.restricted]
    if restricted_reports:
        states_table = Table(title="Restricted pairs by state")
        states_table.add_column("n", justify="right")
        states_table.add_column("States")
        states_table.add_column("Pairs", justify="right")
        states_table.add_column("Disagreements", justify="right")
        for report in restricted_reports:
            disagreements = report.counterexamples_by_state()
            for states, count in sorted(report.pairs_by_state.items()):
                states_table.add_row(str(report.n), states, str(count), str(disagreements[states]))
        console.print(states_table)

    failed = [report for report in reports if not report.passed]
    for report in failed:
        console.print(f"\n[{fail}]Counterexamples for n={report.n}, k={report.k}:[/]")
        for example in report.failures[:show]:
            console.print(
                f"  {example.states or 'G(n, k)'}: formula {example.formula}, BFS {example.bfs}, "
                f"restricted BFS {example.restricted_bfs}"
            )
            console.print(f"    {example.first.replace(chr(10), ' | ')}")
            console.print(f"    {example.second.replace(chr(10), ' | ')}")

    detours = sum(len(report.detours) for report in reports)
    if detours:
        console.print(
            f"\n{detours} {TWO_CIRCLE_PAIR} pair(s) need a two-circle genome to reach "
            "formula distance; restricted BFS is longer there."
        )

    if failed:
        raise typer.Exit(1)
    console.print(f"\n[bold {ok}]All {len(reports)} checks passed[/]")

"""Main CLI entry point using Typer."""

import logging

import typer
from rich.console import Console

from src.config import (
    CONSOLE_COLORS,
    PRODUCT_DESCRIPTION,
    PRODUCT_NAME,
    PRODUCT_TAGLINE,
    PRODUCT_VERSION,
    get_settings,
)

logger = logging.getLogger(__name__)
console = Console()
app = typer.Typer(
    name="dcj",
    help=f"{PRODUCT_NAME}: {PRODUCT_TAGLINE}",
    add_completion=False,
)


@app.callback()
def main_callback():
    """Configure logging from settings."""
    settings = get_settings()
    log_level = getattr(logging, settings.log_level.upper(), logging.INFO)
    # basicConfig logs to stderr, so CSV on stdout stays clean
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


from src.cli.simulate import simulate
from src.cli.analysis import er_compare_command, gamma_table_command, summarize_command
from src.cli.oracle import oracle_check_command

app.command("simulate")(simulate)
app.command("summarize")(summarize_command)
app.command("gamma-table")(gamma_table_command)
app.command("er-compare")(er_compare_command)
app.command("oracle-check")(oracle_check_command)


@app.command()
def version():
    """Show version information."""
    console.print(f"[bold {CONSOLE_COLORS['header']}]{PRODUCT_NAME}[/] {PRODUCT_VERSION}")
    console.print(f"[{CONSOLE_COLORS['accent']}]{PRODUCT_TAGLINE}[/]")
    console.print(f"[dim]{PRODUCT_DESCRIPTION}[/dim]")


if __name__ == "__main__":
    app()

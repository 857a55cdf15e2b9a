"""Main entry point: ``python -m src.main`` runs the dcj command line."""

from src.cli.main import app


if __name__ == "__main__":
    app()

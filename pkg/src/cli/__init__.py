"""CLI module for dcj-escape."""

"""Command-line surfaces, one Typer router per area."""

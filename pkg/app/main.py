import logging

import typer

from app.commands import characterize, graphicality, oracle, patterns, sigma
from app.repositories.patterns_repository import verify_patterns
from app.utils.exception_handlers import EXIT_USAGE, AppError
from app.utils.logging_setup import configure_logging
from app.utils.output import emit_error, emit_lines
from app.utils.settings import get_settings

logger = logging.getLogger(__name__)


def startup() -> None:
    # Invoked before every subcommand; bad settings exit with the usage status.
    try:
        get_settings()
        configure_logging()
        verify_patterns()
    except RuntimeError as exc:
        emit_lines([f"error: {exc}"], stderr=True)
        raise typer.Exit(code=EXIT_USAGE) from exc
    except AppError as exc:
        emit_error(exc, None)
        raise typer.Exit(code=exc.exit_code) from exc


def create_app() -> typer.Typer:
    app = typer.Typer(
        name="potgraph",
        help="Potentially K5-P4 and K5-Y4 graphic degree sequences.",
        no_args_is_help=True,
        add_completion=False,
    )
    app.callback()(startup)
    app.add_typer(characterize.router)
    app.add_typer(graphicality.router)
    app.add_typer(sigma.router)
    app.add_typer(oracle.router)
    app.add_typer(patterns.router)
    logger.debug("CLI assembled")
    return app


app = create_app()


def run() -> None:
    app(prog_name="potgraph")

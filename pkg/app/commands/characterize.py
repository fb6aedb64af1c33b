import logging
from pathlib import Path

import typer

from app.repositories.graph_files_repository import format_graph, write_graph_file
from app.repositories.patterns_repository import fetch_pattern
from app.schemas.verdicts import OutputMode, PatternName
from app.services.characterize_service import check_pattern, realize_with_pattern
from app.services.graph_service import find_embedding
from app.services.sequence_service import format_sequence, parse_sequence
from app.utils.exception_handlers import EXIT_NO, ConstructionDefect
from app.utils.output import emit_lines, emit_verdict, handle_app_errors, is_machine

router = typer.Typer()
logger = logging.getLogger(__name__)


@router.command("check", help="Decide whether a sequence is potentially graphic for a pattern.")
@handle_app_errors
def check(
    pattern: PatternName = typer.Option(..., "--pattern", help="Target pattern."),
    sequence: str = typer.Option(..., "--sequence", help="Degrees in r^t notation."),
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
) -> None:
    degrees = parse_sequence(sequence)
    verdict = check_pattern(pattern.value, degrees)
    emit_verdict(verdict, format_sequence(degrees), mode)
    if not verdict.is_yes:
        raise typer.Exit(code=EXIT_NO)


@router.command("realize", help="Build a realization that contains the pattern.")
@handle_app_errors
def realize(
    pattern: PatternName = typer.Option(..., "--pattern", help="Target pattern."),
    sequence: str = typer.Option(..., "--sequence", help="Degrees in r^t notation."),
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
    output: Path | None = typer.Option(None, "--output", help="Also write the graph here."),
) -> None:
    degrees = parse_sequence(sequence)
    target = fetch_pattern(pattern.value)
    graph = realize_with_pattern(degrees, target)
    embedding = find_embedding(graph, target, prefer=range(5))
    if embedding is None:
        raise ConstructionDefect(
            "Realization lost the pattern", details={"terms": list(degrees.terms)}
        )

    lines = []
    if not is_machine(mode):
        lines.append(
            f"{target.name} {format_sequence(degrees)}: "
            f"{graph.vertex_count} vertices, {graph.edge_count} edges"
        )
    lines.append(format_graph(graph))
    lines.append("embed: " + " ".join(str(v) for v in embedding.mapping))
    emit_lines(lines)

    if output is not None:
        write_graph_file(output, graph)
        logger.info("Wrote realization to %s", output)

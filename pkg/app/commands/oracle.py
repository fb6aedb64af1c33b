import itertools

import typer

from app.repositories.graph_files_repository import format_graph
from app.schemas.verdicts import OutputMode, PatternName
from app.services.oracle_service import (
    crosscheck as run_crosscheck,
    enumerate_graphic_sequences,
    enumerate_realizations,
)
from app.services.sequence_service import format_sequence, parse_sequence
from app.utils.exception_handlers import EXIT_NO
from app.utils.output import emit_lines, emit_record, handle_app_errors, is_machine

router = typer.Typer()


@router.command("crosscheck", help="Compare the degree conditions with the brute-force oracle.")
@handle_app_errors
def crosscheck(
    pattern: PatternName = typer.Option(..., "--pattern", help="Target pattern."),
    n: int = typer.Option(..., "--n", help="Sequence length (at least 5)."),
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
) -> None:
    report = run_crosscheck(pattern.value, n)

    if is_machine(mode):
        emit_record(
            {
                "pattern": report.pattern,
                "n": report.n,
                "tested": report.tested,
                "yes": report.yes,
                "no": report.no,
                "unknown": report.unknown,
                "mismatches": len(report.mismatches),
            }
        )
        for mismatch in report.mismatches:
            emit_record(
                {
                    "mismatch": format_sequence(mismatch.sequence),
                    "predicate": mismatch.predicate,
                    "oracle": mismatch.oracle,
                }
            )
    else:
        lines = [
            f"{len(report.mismatches)} mismatches / {report.tested} sequences",
            f"  YES {report.yes}, NO {report.no}, unknown {report.unknown}",
        ]
        lines.extend(
            f"  mismatch {format_sequence(m.sequence)}: "
            f"predicate {m.predicate.value}, oracle {m.oracle.value}"
            for m in report.mismatches
        )
        emit_lines(lines)

    if not report.ok:
        raise typer.Exit(code=EXIT_NO)


@router.command("enumerate", help="List every labeled realization of a sequence.")
@handle_app_errors
def enumerate_graphs(
    sequence: str = typer.Option(..., "--sequence", help="Degrees in r^t notation."),
    limit: int | None = typer.Option(None, "--limit", min=1, help="Stop after this many."),
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
) -> None:
    degrees = parse_sequence(sequence)
    graphs = enumerate_realizations(degrees)
    if limit is not None:
        graphs = itertools.islice(graphs, limit)

    count = 0
    for graph in graphs:
        if count:
            emit_lines([""])
        emit_lines([format_graph(graph)])
        count += 1

    if is_machine(mode):
        emit_record({"count": count, "sequence": format_sequence(degrees)})
    else:
        emit_lines([f"count={count}"])


@router.command("sequences", help="List the zero-free graphic sequences of length n.")
@handle_app_errors
def sequences(
    n: int = typer.Option(..., "--n", min=1, help="Sequence length."),
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
) -> None:
    count = 0
    for degrees in enumerate_graphic_sequences(n):
        text = format_sequence(degrees)
        if is_machine(mode):
            emit_record({"sequence": text, "sum": degrees.sigma})
        else:
            emit_lines([text])
        count += 1
    emit_lines([f"count={count}"])

import typer

from app.schemas.verdicts import OutputMode
from app.services.graphicality_service import graphicality_report, lay_off
from app.services.sequence_service import format_sequence, parse_sequence
from app.utils.exception_handlers import EXIT_NO
from app.utils.output import emit_lines, emit_record, handle_app_errors, is_machine

router = typer.Typer()


def _yes_no(value: bool | None) -> str:
    if value is None:
        return "n/a"
    return "yes" if value else "no"


@router.command("graphic", help="Run every graphicality decider on a sequence.")
@handle_app_errors
def graphic(
    sequence: str = typer.Option(..., "--sequence", help="Degrees in r^t notation."),
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
) -> None:
    degrees = parse_sequence(sequence)
    report = graphicality_report(degrees)

    if is_machine(mode):
        emit_record(
            {
                "graphic": report.is_graphic,
                "erdos_gallai": report.erdos_gallai,
                "lay_off": report.lay_off,
                "small_degree": _yes_no(report.small_degree),
                "sequence": format_sequence(degrees),
            }
        )
    else:
        reason = "" if report.is_graphic or degrees.sigma % 2 == 0 else " (odd sum)"
        emit_lines(
            [
                f"{format_sequence(degrees)}: {_yes_no(report.is_graphic)}{reason}",
                f"  erdos-gallai: {_yes_no(report.erdos_gallai)}",
                f"  lay-off recursion: {_yes_no(report.lay_off)}",
                f"  small-degree fast path: {_yes_no(report.small_degree)}",
            ]
        )

    if not report.is_graphic:
        raise typer.Exit(code=EXIT_NO)


@router.command("layoff", help="Lay off the smallest term and print the residual.")
@handle_app_errors
def layoff(
    sequence: str = typer.Option(..., "--sequence", help="Degrees in r^t notation."),
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
) -> None:
    degrees = parse_sequence(sequence)
    result = lay_off(degrees)
    residual = format_sequence(result.residual) or "()"

    if is_machine(mode):
        emit_record(
            {
                "residual": residual,
                "laid_off": result.laid_off,
                "reduced": sorted(result.reduced_positions),
            }
        )
    else:
        emit_lines([residual])

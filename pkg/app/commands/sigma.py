import typer

from app.schemas.verdicts import DeciderMethod, OutputMode, PatternName
from app.services.sequence_service import format_sequence
from app.services.sigma_service import compute_sigma
from app.utils.output import emit_lines, emit_record, handle_app_errors, is_machine

router = typer.Typer()


@router.command("sigma", help="Compute sigma(H, n) and an extremal witness.")
@handle_app_errors
def sigma(
    pattern: PatternName = typer.Option(..., "--pattern", help="Target pattern."),
    n: int = typer.Option(..., "--n", help="Sequence length (at least 5)."),
    method: DeciderMethod = typer.Option(
        DeciderMethod.PREDICATE, "--method", help="predicate or oracle."
    ),
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
) -> None:
    result = compute_sigma(pattern.value, n, method)
    witness = format_sequence(result.extremal_witness)

    if is_machine(mode):
        emit_record(
            {
                "pattern": result.pattern,
                "n": result.n,
                "method": result.method,
                "sigma": result.sigma_value,
                "witness": witness,
                "witness_sum": result.extremal_witness.sigma,
                "scanned": result.sequences_scanned,
            }
        )
        return

    emit_lines(
        [
            f"sigma({result.pattern}, {result.n}) = {result.sigma_value}",
            f"witness {witness} (sum {result.extremal_witness.sigma}), "
            f"{result.sequences_scanned} sequences scanned by {result.method.value}",
        ]
    )

import typer

from app.repositories.patterns_repository import list_patterns
from app.schemas.verdicts import OutputMode
from app.utils.output import emit_lines, emit_record, handle_app_errors, is_machine

router = typer.Typer()


def _edge_text(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges)


@router.command("patterns", help="List the shipped target patterns.")
@handle_app_errors
def patterns(
    mode: OutputMode = typer.Option(OutputMode.HUMAN, "--mode", help="human or machine."),
) -> None:
    for pattern in list_patterns():
        if is_machine(mode):
            emit_record(
                {
                    "pattern": pattern.name,
                    "edges": len(pattern.edges),
                    "profile": list(pattern.degree_profile),
                }
            )
            continue
        emit_lines(
            [
                f"{pattern.name}: {len(pattern.edges)} edges, "
                f"profile {','.join(map(str, pattern.degree_profile))}",
                f"  edges   {_edge_text(pattern.edges)}",
                f"  removed {_edge_text(pattern.removed)}",
            ]
        )

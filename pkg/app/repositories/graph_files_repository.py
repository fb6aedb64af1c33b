import logging
from pathlib import Path

from app.schemas.graphs import SimpleGraph
from app.utils.exception_handlers import AppError, InvalidDataException

logger = logging.getLogger(__name__)


def format_graph(graph: SimpleGraph) -> str:
    """`n <count>` then one `u v` line per edge, u < v, lexicographic."""
    lines = [f"n {graph.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines)


def parse_graph(text: str) -> SimpleGraph:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidDataException(message="Graph text is empty", details={"field": "graph"})

    header = lines[0].split()
    if len(header) != 2 or header[0] != "n" or not header[1].isdigit():
        raise InvalidDataException(
            message="Graph text must start with `n <vertex_count>`",
            details={"line": lines[0]},
        )

    edges: list[tuple[int, int]] = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(part.isdigit() for part in parts):
            raise InvalidDataException(
                message="Edge lines hold two vertex indices", details={"line": line}
            )
        edges.append((int(parts[0]), int(parts[1])))
    return SimpleGraph(vertex_count=int(header[1]), edges=edges)


def read_graph_file(path: str | Path) -> SimpleGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        logger.error("Failed to read graph file %s: %s", path, exc)
        raise AppError(
            message="Failed to read graph file",
            details={"path": str(path), "error": str(exc)},
        ) from exc
    return parse_graph(text)


def write_graph_file(path: str | Path, graph: SimpleGraph) -> Path:
    target = Path(path)
    try:
        target.write_text(format_graph(graph) + "\n", encoding="utf-8")
    except OSError as exc:
        logger.error("Failed to write graph file %s: %s", path, exc)
        raise AppError(
            message="Failed to write graph file",
            details={"path": str(path), "error": str(exc)},
        ) from exc
    return target

from typing import Any

EXIT_NO = 1
EXIT_USAGE = 2
EXIT_DEFECT = 3


class AppError(Exception):
    """Base application error to return predictable reports and exit statuses."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_USAGE,
        code: str | None = None,
        details: dict | None = None,
    ):
        self.message = message
        self.exit_code = exit_code
        self.code = code
        self.details = details or {}
        super().__init__(message)


class InvalidDataException(AppError):
    """Raised when user input is invalid for domain-specific reasons."""

    def __init__(self, message: str = "Invalid data", details: dict | None = None):
        super().__init__(
            message=message,
            exit_code=EXIT_USAGE,
            code="invalid_data",
            details=details,
        )


class SequenceParseError(InvalidDataException):
    """A degree-sequence text could not be parsed; ``code`` names the failure kind."""

    def __init__(self, message: str, code: str, token: str | None = None):
        super().__init__(message=message, details={"token": token} if token is not None else {})
        self.code = code
        self.token = token


class NotGraphicError(AppError):
    def __init__(self, terms: tuple[int, ...], message: str | None = None):
        super().__init__(
            message=message or "Sequence is not graphic",
            exit_code=EXIT_USAGE,
            code="not_graphic",
            details={"terms": list(terms)},
        )


class OutOfScopeError(AppError):
    """The degree conditions only hold for sequences with n >= 5."""

    def __init__(self, n: int, minimum: int = 5):
        super().__init__(
            message=f"Sequence has {n} terms; at least {minimum} are required",
            exit_code=EXIT_USAGE,
            code="out_of_scope",
            details={"n": n, "minimum": minimum},
        )


class LayOffError(AppError):
    def __init__(self, smallest: int, n: int):
        super().__init__(
            message=f"Cannot lay off {smallest} from a sequence with {n} terms",
            exit_code=EXIT_NO,
            code="lay_off_impossible",
            details={"smallest": smallest, "n": n},
        )


class IsolatedVertexError(AppError):
    def __init__(self, vertices: list[int]):
        super().__init__(
            message="Graph has isolated vertices",
            exit_code=EXIT_USAGE,
            code="isolated_vertices",
            details={"vertices": vertices},
        )


class EmbeddingError(AppError):
    def __init__(self, message: str, details: dict | None = None):
        super().__init__(
            message=message, exit_code=EXIT_USAGE, code="invalid_embedding", details=details
        )


class PatternNotFoundError(AppError):
    def __init__(self, name: str, known: list[str]):
        super().__init__(
            message=f"Unknown pattern {name!r}",
            exit_code=EXIT_USAGE,
            code="pattern_not_found",
            details={"pattern": name, "known": known},
        )


class OracleCeilingError(AppError):
    def __init__(self, n: int, ceiling: int):
        super().__init__(
            message=f"n={n} exceeds the oracle ceiling of {ceiling}",
            exit_code=EXIT_USAGE,
            code="oracle_ceiling",
            details={"n": n, "ceiling": ceiling},
        )


class BudgetExhaustedError(AppError):
    """Backtracking stopped at the node cap; the answer is unknown, never negative."""

    def __init__(self, nodes: int, max_nodes: int):
        super().__init__(
            message=f"Enumeration budget exhausted after {nodes} nodes",
            exit_code=EXIT_USAGE,
            code="budget_exhausted",
            details={"nodes": nodes, "max_nodes": max_nodes},
        )
        self.nodes = nodes


class VerdictContractError(AppError):
    """An operation that requires a YES verdict was handed a NO sequence."""

    def __init__(self, verdict: Any):
        super().__init__(
            message="Sequence is not potentially graphic for the pattern",
            exit_code=EXIT_NO,
            code="verdict_no",
            details={"condition": str(verdict.violated_condition)},
        )
        self.verdict = verdict


class ConstructionDefect(AppError):
    def __init__(self, message: str, details: dict | None = None):
        super().__init__(
            message=message, exit_code=EXIT_DEFECT, code="construction_defect", details=details
        )

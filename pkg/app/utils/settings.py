import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

# Load environment variables from a local .env file if present.
load_dotenv()


def _int_from_env(name: str, default: int | None) -> int | None:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}") from exc


@dataclass
class Settings:
    log_level: str = "WARNING"
    oracle_ceiling: int = 10
    max_workers: int = 1
    max_nodes: int | None = None
    max_terms: int = 10_000

    @classmethod
    def from_env(cls) -> "Settings":
        log_level = os.getenv("POTGRAPH_LOG_LEVEL", "WARNING").strip().upper()
        oracle_ceiling = _int_from_env("POTGRAPH_ORACLE_CEILING", 10)
        max_workers = _int_from_env("POTGRAPH_MAX_WORKERS", 1)
        max_nodes = _int_from_env("POTGRAPH_MAX_NODES", None)
        max_terms = _int_from_env("POTGRAPH_MAX_TERMS", 10_000)

        if oracle_ceiling < 1:
            raise RuntimeError("POTGRAPH_ORACLE_CEILING must be at least 1")

        if max_workers < 1:
            raise RuntimeError("POTGRAPH_MAX_WORKERS must be at least 1")

        if max_nodes is not None and max_nodes < 1:
            raise RuntimeError("POTGRAPH_MAX_NODES must be at least 1 when set")

        if max_terms < 1:
            raise RuntimeError("POTGRAPH_MAX_TERMS must be at least 1")

        return cls(
            log_level=log_level or "WARNING",
            oracle_ceiling=oracle_ceiling,
            max_workers=max_workers,
            max_nodes=max_nodes,
            max_terms=max_terms,
        )


@lru_cache
def get_settings() -> Settings:
    """Return cached settings so we only parse env once."""
    return Settings.from_env()

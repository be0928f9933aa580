"""Runtime settings.

Values come from the environment (optionally a `.env` file) with the defaults
below. Library calls accept explicit overrides; `None` means "use settings".

Environment variables:
- LOG_LEVEL
- QMARGINAL_ENUMERATION_CAP
- QMARGINAL_MAX_QUBITS
- QMARGINAL_TOLERANCE
- QMARGINAL_AMPLITUDE_TOLERANCE
- QMARGINAL_CORPUS_MAX_WIDTH
"""

from __future__ import annotations

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    log_level: str = "INFO"
    enumeration_cap: int = Field(20, ge=1, le=40)
    max_qubits: int = Field(26, ge=1, le=32)
    tolerance: float = Field(1e-9, gt=0)
    amplitude_tolerance: float = Field(1e-12, ge=0)
    corpus_max_width: int = Field(18, ge=3)


def load_settings() -> Settings:
    """Read settings from the environment, loading `.env` first if present."""
    load_dotenv()
    return Settings(
        log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
        enumeration_cap=os.getenv("QMARGINAL_ENUMERATION_CAP", "20"),
        max_qubits=os.getenv("QMARGINAL_MAX_QUBITS", "26"),
        tolerance=os.getenv("QMARGINAL_TOLERANCE", "1e-9"),
        amplitude_tolerance=os.getenv("QMARGINAL_AMPLITUDE_TOLERANCE", "1e-12"),
        corpus_max_width=os.getenv("QMARGINAL_CORPUS_MAX_WIDTH", "18"),
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()

"""Tunable limits for exhaustive searches, certificates and range scans."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from antimagic.core.errors import InvalidLimitError


class Limits(BaseModel):
    """Work limits shared by the library and the CLI."""

    model_config = ConfigDict(frozen=True)

    search_cap: int = Field(default=10, ge=0)  # edges, l! labelings
    orientation_cap: int = Field(default=8, ge=0)  # edges, 2^l * l! pairs
    scan_span: int = Field(default=10_000, ge=1)
    max_order: int = Field(default=2_000, ge=2)  # certify/sums cost grows as n^2
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=20_000, ge=1)


DEFAULT_LIMITS = Limits()


def resolve_limits(**overrides: object) -> Limits:
    """DEFAULT_LIMITS with every non-None override applied and validated.

    Raises:
        InvalidLimitError: if an override is outside its field's range.
    """
    values = DEFAULT_LIMITS.model_dump()
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return Limits(**values)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise InvalidLimitError(f"{field}={values.get(field)!r}: {first['msg']}") from None

from __future__ import annotations

from typing import Any

from pydantic import BaseModel


class BaseResponse(BaseModel):
    ok: bool = True
    data: Any | None = None
    error: Any | None = None

    @classmethod
    def failure(cls, message: Any, kind: str | None = None) -> BaseResponse:
        """Error envelope; ``kind`` names the library exception class when known."""
        error: dict[str, Any] = {"message": message}
        if kind is not None:
            error["type"] = kind
        return cls(ok=False, error=error)

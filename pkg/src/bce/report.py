"""Deterministic JSON reports: every number is an exact scalar in canonical text."""

from __future__ import annotations

import json
from typing import Any

from gmpy2 import mpq

from .exactlin import ExactMatrix, GaussianRational, format_scalar

__all__ = ["jsonable", "dumps"]


def jsonable(x: Any) -> Any:
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, (type(mpq(0)), GaussianRational)):
        return format_scalar(x)
    if isinstance(x, ExactMatrix):
        return [[format_scalar(v) for v in row] for row in x.to_rows()]
    if hasattr(x, "to_dict"):
        return x.to_dict()
    if hasattr(x, "components") and hasattr(x, "algebra"):
        return {str(n): jsonable(c) for n, c in sorted(x.components.items())}
    if isinstance(x, dict):
        keys = list(x)
        if all(isinstance(k, int) for k in keys):
            keys = sorted(keys)
        return {str(k): jsonable(x[k]) for k in keys}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(doc: Any) -> str:
    return json.dumps(jsonable(doc), indent=2, ensure_ascii=False) + "\n"

"""Serialization: stable-key JSON, rationals as "num/den", floats to 12 digits."""

from __future__ import annotations

import dataclasses
import json
import math
from fractions import Fraction
from typing import Any

import numpy as np

from .gaussian import GaussianInt


def to_plain(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if not math.isfinite(v):
            return str(v)
        return float(f"{v:.12g}")
    if isinstance(obj, GaussianInt):
        return {"re": obj.re, "im": obj.im}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_plain(getattr(obj, f.name)) for f in dataclasses.fields(obj) if f.repr}
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_plain(v) for v in obj.tolist()]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_plain(obj), sort_keys=True, indent=2)


def table(rows: list[tuple[str, Any]]) -> str:
    """Two-column aligned text table."""
    plain = [(k, v if isinstance(v, str) else json.dumps(to_plain(v), sort_keys=True)) for k, v in rows]
    width = max((len(k) for k, _ in plain), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in plain)

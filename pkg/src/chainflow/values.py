"""Typed workflow variable values.

Workflow variables are integer, decimal, string, or boolean. Decimals are
carried as canonical strings in every document (no exponent form, no
trailing fractional zeros) so that serialization is byte-stable across
nodes; in memory they are `decimal.Decimal`.
"""

from __future__ import annotations

from decimal import Decimal, InvalidOperation
from typing import Any

from .canonical import CanonicalizationError

VAR_TYPES = ("integer", "decimal", "string", "boolean")

_DEFAULTS = {
    "integer": 0,
    "decimal": Decimal(0),
    "string": "",
    "boolean": False,
}


class ValueError_(ValueError):
    """A value does not fit its declared variable type."""


def default_value(var_type: str) -> Any:
    return _DEFAULTS[var_type]


def decimal_to_str(value: Decimal) -> str:
    """Canonical fixed-point rendering: no exponent, no trailing zeros."""
    if not value.is_finite():
        raise CanonicalizationError(f"non-finite decimal {value}")
    text = format(value, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text


def value_to_json(var_type: str, value: Any) -> Any:
    """Render a typed value for a canonical document."""
    check_value(var_type, value)
    if var_type == "decimal":
        return decimal_to_str(value)
    return value


def value_from_json(var_type: str, raw: Any) -> Any:
    """Parse a document field back into a typed value."""
    if var_type == "integer":
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise ValueError_(f"expected integer, got {raw!r}")
        return raw
    if var_type == "boolean":
        if not isinstance(raw, bool):
            raise ValueError_(f"expected boolean, got {raw!r}")
        return raw
    if var_type == "string":
        if not isinstance(raw, str):
            raise ValueError_(f"expected string, got {raw!r}")
        return raw
    if var_type == "decimal":
        if not isinstance(raw, str):
            raise ValueError_(f"expected decimal string, got {raw!r}")
        try:
            value = Decimal(raw)
        except InvalidOperation as exc:
            raise ValueError_(f"bad decimal literal {raw!r}") from exc
        if not value.is_finite():
            raise ValueError_(f"non-finite decimal {raw!r}")
        return value
    raise ValueError_(f"unknown variable type {var_type!r}")


def check_value(var_type: str, value: Any) -> None:
    if var_type == "integer":
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError_(f"expected integer, got {value!r}")
    elif var_type == "boolean":
        if not isinstance(value, bool):
            raise ValueError_(f"expected boolean, got {value!r}")
    elif var_type == "string":
        if not isinstance(value, str):
            raise ValueError_(f"expected string, got {value!r}")
    elif var_type == "decimal":
        if not isinstance(value, Decimal) or not value.is_finite():
            raise ValueError_(f"expected finite decimal, got {value!r}")
    else:
        raise ValueError_(f"unknown variable type {var_type!r}")


def values_to_json(var_types: dict[str, str], values: dict[str, Any]) -> dict[str, Any]:
    return {name: value_to_json(var_types[name], values[name]) for name in values}


def values_from_json(var_types: dict[str, str], raw: dict[str, Any]) -> dict[str, Any]:
    out = {}
    for name, item in raw.items():
        if name not in var_types:
            raise ValueError_(f"undeclared variable {name!r}")
        out[name] = value_from_json(var_types[name], item)
    return out

"""Exact partition functions of bent six-vertex models."""

import json

from ._bentice import (
    CapExceeded,
    InputError,
    character_theorem,
    count_states,
    families,
    half_turn_asm_count,
    okada_product,
    partition_function,
    partition_function_latex,
)
from ._bentice import run as _run

__all__ = [
    "CapExceeded",
    "InputError",
    "character_theorem",
    "cli",
    "count_states",
    "families",
    "half_turn_asm_count",
    "okada_product",
    "partition_function",
    "partition_function_latex",
]


def cli(*args):
    """Run a command-line verb. Returns (exit code, parsed JSON report or raw text)."""
    code, out, _ = _run([str(a) for a in args])
    try:
        return code, json.loads(out)
    except json.JSONDecodeError:
        return code, out.strip()

"""Python access to the curvlab engine.

Reports come back as the same JSON documents the command-line tool writes
(schema "curvlab-report/1"), decoded into dictionaries.
"""

import json

from ._core import ParseError, check_groups, default_tolerances, describe, evaluate, geometry_names
from . import _core

__all__ = [
    "ParseError",
    "check_groups",
    "check_file",
    "default_tolerances",
    "describe",
    "evaluate",
    "geometry_names",
    "verify",
]


def verify(name, checks=("all",), samples=1000, seed=42, params=None, tolerances=None, region=None, workers=0):
    """Run check groups on a built-in geometry. Returns (report, exit_code)."""
    text, code = _core.verify(
        name,
        list(checks),
        samples,
        seed,
        dict(params or {}),
        dict(tolerances or {}),
        {k: tuple(v) for k, v in (region or {}).items()},
        workers,
        "json",
    )
    return json.loads(text), code


def check_file(path, checks=("all",), samples=1000, seed=42, params=None, tolerances=None, workers=0):
    """Run check groups on a geometry file. Returns (report, exit_code)."""
    text, code = _core.check_file(
        str(path), list(checks), samples, seed, dict(params or {}), dict(tolerances or {}), workers, "json"
    )
    return json.loads(text), code

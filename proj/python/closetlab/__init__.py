"""Finite enriched closure spaces: way-below, continuity and theorem checks."""

import json
import os

from ._closetlab import (
    CapError,
    Error,
    InvalidStructure,
    ParseError,
    Space,
    checker_names,
    fixture_names,
    operator_kinds,
    search_json,
    theorem_checker_names,
)

__all__ = [
    "CapError",
    "Error",
    "InvalidStructure",
    "ParseError",
    "Space",
    "analyze",
    "check",
    "checker_names",
    "fixture_names",
    "load",
    "operator_kinds",
    "search",
    "theorem_checker_names",
]


def load(source):
    """Space from a fixture name, a JSON string, a dict or a file path."""
    if isinstance(source, Space):
        return source
    if isinstance(source, dict):
        return Space.from_json(json.dumps(source))
    # Same precedence as the CLI: an existing path wins over a fixture name.
    if os.path.exists(source):
        return Space.from_file(source)
    if source in fixture_names():
        return Space.fixture(source)
    if source.lstrip().startswith("{"):
        return Space.from_json(source)
    return Space.from_file(source)


def analyze(source, galois_cap=10):
    return json.loads(load(source).analyze_json(galois_cap))


def check(source, name):
    return json.loads(load(source).check_json(name))


def search(size=4, *, min_size=None, max_size=None, samples=100, seed=0, exhaustive=False,
           kinds=(), targets=(), threads=0, minimize=True):
    lo = min_size if min_size is not None else size
    hi = max_size if max_size is not None else size
    return json.loads(search_json(lo, hi, samples, seed, exhaustive, list(kinds), list(targets), threads, minimize))

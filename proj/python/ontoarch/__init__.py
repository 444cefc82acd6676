"""Python bindings for the ontoarch checker."""

from pathlib import Path

from ._core import counts, explain, export_graph, format_source, run, term_specs, tokenize
from ._core import validate as _validate

__all__ = [
    "counts",
    "explain",
    "export_graph",
    "format_source",
    "run",
    "term_specs",
    "tokenize",
    "validate",
    "validate_paths",
]


def validate(sources, strict=False):
    """Validate a mapping of path to source text."""
    return _validate(dict(sources), strict)


def validate_paths(paths, strict=False):
    """Validate `.onto` files, expanding directories recursively."""
    files = {}
    for p in map(Path, paths):
        candidates = sorted(p.rglob("*.onto")) if p.is_dir() else [p]
        for f in candidates:
            files[f.as_posix()] = f.read_text(encoding="utf-8")
    return _validate(files, strict)

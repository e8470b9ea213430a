"""Bundled inputs: the named complexes, ideals, graphs and witnesses."""

from __future__ import annotations

import json
from importlib import resources


def names():
    root = resources.files("srlink") / "data"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def path(name):
    """A traversable for a bundled file; ``.json`` may be omitted."""
    if not name.endswith(".json"):
        name += ".json"
    p = resources.files("srlink") / "data" / name
    if not p.is_file():
        raise FileNotFoundError(f"no bundled data file {name!r}")
    return p


def load(name):
    return json.loads(path(name).read_text())

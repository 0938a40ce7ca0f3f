"""Shipped catalog of named diagrams.

The file format is one ``name code status`` entry per line with ``#``
comments.  ``VKNOT_CATALOG`` points the loader at another file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .gauss import GaussDiagram, parse

__all__ = ["CatalogEntry", "Catalog", "load_catalog", "catalog_path", "STATUSES"]

STATUSES = ("verified", "constructed", "candidate")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: str
    status: str

    @property
    def diagram(self) -> GaussDiagram:
        return parse(self.code)


class Catalog:
    """Ordered name -> entry mapping; every code is parsed and validated on load."""

    def __init__(self, entries):
        self._entries = {}
        for e in entries:
            if e.name in self._entries:
                raise ValueError(f"duplicate catalog entry {e.name!r}")
            parse(e.code)
            self._entries[e.name] = e

    def __getitem__(self, name) -> CatalogEntry:
        return self._entries[name]

    def __contains__(self, name):
        return name in self._entries

    def __iter__(self):
        return iter(self._entries.values())

    def __len__(self):
        return len(self._entries)

    def names(self) -> list:
        return list(self._entries)

    def code(self, name) -> str:
        return self._entries[name].code

    def resolve(self, text: str) -> str:
        """A catalog name maps to its code; anything else is returned unchanged."""
        e = self._entries.get(text.strip())
        return e.code if e else text

    @classmethod
    def from_text(cls, text: str) -> "Catalog":
        entries = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) == 2:
                fields.append("verified")
            if len(fields) != 3 or fields[2] not in STATUSES:
                raise ValueError(f"catalog line {lineno}: expected 'name code [status]', got {raw!r}")
            entries.append(CatalogEntry(*fields))
        return cls(entries)


def catalog_path() -> Path | None:
    override = os.environ.get("VKNOT_CATALOG")
    return Path(override) if override else None


def load_catalog(path: str | os.PathLike | None = None) -> Catalog:
    path = path or catalog_path()
    if path is not None:
        return Catalog.from_text(Path(path).read_text(encoding="utf-8"))
    return Catalog.from_text(resources.files("vknot").joinpath("data/catalog.txt").read_text(encoding="utf-8"))

"""The shipped example documents."""

from __future__ import annotations

from importlib import resources

from .document import Document, parse_document
from .scalars import QQ, Field

SUFFIX = ".pc"


def names() -> list[str]:
    root = resources.files(__package__) / "corpus"
    return sorted(p.name[:-len(SUFFIX)] for p in root.iterdir() if p.name.endswith(SUFFIX))


def text(name: str) -> str:
    return (resources.files(__package__) / "corpus" / (name + SUFFIX)).read_text(encoding="utf-8")


def load(name: str, field: Field = QQ) -> Document:
    return parse_document(text(name), field)

"""Builds the raw text corpora: one document per class, one query per requirement.

A class document concatenates, in a fixed order, the package name, class
name, superclass name, member names, relation names (accesses and
invocations), and every comment text.  A requirement document is one
UTF-8 ``.txt`` file; its name comes from the file name (underscores read
as spaces) and is prepended to the text so name tokens carry weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigurationError
from .facts import ClassFact, CodeFacts

__all__ = [
    "RawDocument",
    "DocumentCorpus",
    "QueryCorpus",
    "build_class_documents",
    "class_document_text",
    "load_requirement_documents",
]


@dataclass(frozen=True)
class RawDocument:
    name: str
    text: str
    kind: str  # "class" | "requirement"


@dataclass(frozen=True)
class DocumentCorpus:
    documents: tuple[RawDocument, ...]

    def names(self) -> list[str]:
        return [doc.name for doc in self.documents]


@dataclass(frozen=True)
class QueryCorpus:
    queries: tuple[RawDocument, ...]

    def names(self) -> list[str]:
        return [query.name for query in self.queries]


def class_document_text(package_name: str, cls: ClassFact) -> str:
    """Concatenate every fact token of one class, one item per line."""
    items: list[str] = [package_name, cls.name]
    if cls.superclass is not None:
        items.append(cls.superclass)
    items.extend(attribute.name for attribute in cls.attributes)
    items.extend(method.name for method in cls.methods)
    for method in cls.methods:
        items.extend(name for name, _ in method.parameters)
    for method in cls.methods:
        items.extend(name for name, _ in method.local_variables)
    for method in cls.methods:
        items.extend(method.attribute_accesses)
    for method in cls.methods:
        items.extend(method.method_invocations)
    items.extend(comment.text for comment in cls.comments)
    for method in cls.methods:
        items.extend(comment.text for comment in method.comments)
    return "\n".join(item for item in items if item)


def build_class_documents(facts: CodeFacts) -> DocumentCorpus:
    """One document per class, named after the class, in source order."""
    documents = []
    seen: set[str] = set()
    for package in facts.packages:
        for cls in package.classes:
            if cls.name in seen:
                raise ConfigurationError(
                    f"class name {cls.name!r} appears in more than one package;"
                    " document names would collide"
                )
            seen.add(cls.name)
            documents.append(
                RawDocument(
                    name=cls.name,
                    text=class_document_text(package.name, cls),
                    kind="class",
                )
            )
    return DocumentCorpus(documents=tuple(documents))


def load_requirement_documents(directory: str | Path) -> QueryCorpus:
    """Read every ``.txt`` file under `directory` as one requirement query."""
    directory = Path(directory)
    files = sorted(directory.glob("*.txt"))
    if not files:
        raise ConfigurationError(f"no .txt requirement files in {directory}")
    queries = []
    seen: set[str] = set()
    for path in files:
        name = path.stem.replace("_", " ")
        if name in seen:
            raise ConfigurationError(f"duplicate requirement name {name!r}")
        seen.add(name)
        try:
            body = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot read requirement file {path}: {exc}") from exc
        text = name if not body.strip() else f"{name}\n{body}"
        queries.append(RawDocument(name=name, text=text, kind="requirement"))
    return QueryCorpus(queries=tuple(queries))

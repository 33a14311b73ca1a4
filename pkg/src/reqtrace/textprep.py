"""Document normalization: noise removal, camel-case splitting, stemming.

A raw document becomes a bag of lowercase stems via a fixed pipeline:
strip noise, split on whitespace, split camel case, lowercase, drop stop
words, stem, count.  Any stem that lands on a stop word is dropped as well,
so no stop word can ever appear in a term bag.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import RawDocument
from .porter import stem

__all__ = [
    "TermBag",
    "StopWordList",
    "DEFAULT_STOP_WORDS",
    "load_stop_words",
    "strip_noise",
    "split_camel_case",
    "preprocess",
]

# ~120 common English function words plus possessives and modals.  Kept
# deliberately free of domain vocabulary (draw, line, user, software, ...).
DEFAULT_STOP_WORDS = frozenset("""
a about above after again all also am an and any are as at be because been
before being below between both but by can could did do does doing down
during each etc few for from further had has have having he her here hers
him his how i if in into is it its itself just like may me might more most
must my myself no nor not of off on once only or other our ours out over
own same shall she should so some such than that the their theirs them then
there these they this those through to too under until up upon very was we
were what when where which while who whom why will with would you your
yours
""".split())

_NOISE = re.compile(r"[^A-Za-z]")
_UPPER_RUN = re.compile(r"([A-Z]+)")
_UPPER_LOWER = re.compile(r"([A-Z][a-z])")


@dataclass(frozen=True)
class StopWordList:
    """Lowercase words excluded from term bags."""

    words: frozenset[str] = field(default=DEFAULT_STOP_WORDS)

    def __contains__(self, word: str) -> bool:
        return word in self.words


@dataclass(frozen=True)
class TermBag:
    """Occurrence counts of stemmed terms for one named document."""

    name: str
    counts: dict[str, int]

    def total(self) -> int:
        return sum(self.counts.values())


def load_stop_words(path: str | Path) -> StopWordList:
    """Read a stop-word file: one lowercase word per line, # comments."""
    words = set()
    for raw_line in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if line:
            words.add(line.lower())
    return StopWordList(frozenset(words))


def strip_noise(text: str) -> str:
    """Replace every character outside [A-Za-z] (digits included) by a space."""
    return _NOISE.sub(" ", text)


def split_camel_case(token: str) -> list[str]:
    """Split an alphabetic token at case boundaries.

    A lower-to-upper boundary always splits; an uppercase run followed by
    lowercase splits before its final letter (XMLFile -> XML, File).
    Single-case tokens pass through untouched.
    """
    spaced = _UPPER_LOWER.sub(r" \1", _UPPER_RUN.sub(r" \1", token))
    return spaced.split()


def preprocess(doc: RawDocument, stops: StopWordList | None = None) -> TermBag:
    """Normalize one document into a term bag."""
    if stops is None:
        stops = StopWordList()
    counts: dict[str, int] = {}
    for token in strip_noise(doc.text).split():
        for part in split_camel_case(token):
            word = part.lower()
            if word in stops:
                continue
            root = stem(word)
            if root in stops:
                continue
            counts[root] = counts.get(root, 0) + 1
    return TermBag(name=doc.name, counts=counts)

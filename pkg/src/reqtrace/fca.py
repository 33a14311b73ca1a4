"""Formal concept analysis: contexts, closed concepts, and the AOC-poset.

A formal context relates objects to attributes through a boolean incidence
table.  Concepts are the closed (extent, intent) pairs; the AOC-poset keeps
only object-introducing and attribute-introducing concepts, labels each
object and attribute at exactly one concept, and orders the kept concepts
by extent inclusion with transitively reduced edges.

Enumeration closes every object subset when that is affordable and
otherwise switches to lectic (NextClosure-style) iteration over attribute
sets; both produce the identical concept set, returned in a fixed order:
decreasing extent size, ties broken by the extent's object names.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import ParameterError
from .lsi import SimilarityMatrix

__all__ = [
    "FormalContext",
    "FormalConcept",
    "AOCConcept",
    "AOCPoset",
    "binarize",
    "derive_intent",
    "derive_extent",
    "enumerate_concepts",
    "build_aoc_poset",
    "export_context_csv",
    "load_context_csv",
]

# Work budget below which closing all 2^|O| object subsets stays fast.
_BRUTE_FORCE_OPS = 2_000_000


@dataclass(frozen=True)
class FormalContext:
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: tuple[tuple[bool, ...], ...]  # objects x attributes

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise ParameterError("duplicate object names in context")
        if len(set(self.attributes)) != len(self.attributes):
            raise ParameterError("duplicate attribute names in context")
        for row in self.incidence:
            if len(row) != len(self.attributes):
                raise ParameterError("incidence row width mismatch")
        if len(self.incidence) != len(self.objects):
            raise ParameterError("incidence row count mismatch")


@dataclass(frozen=True)
class FormalConcept:
    """A closed pair: extent'' = extent, with names kept in context order."""

    extent: tuple[str, ...]
    intent: tuple[str, ...]


@dataclass(frozen=True)
class AOCConcept:
    extent: tuple[str, ...]
    intent: tuple[str, ...]
    introduced_objects: tuple[str, ...]
    introduced_attributes: tuple[str, ...]


@dataclass(frozen=True)
class AOCPoset:
    """Kept concepts in deterministic order plus covering edges.

    Each edge (sub, super) pairs positions in `concepts` where the
    sub-concept's extent is strictly contained in the super-concept's and
    no kept concept lies strictly between.
    """

    concepts: tuple[AOCConcept, ...]
    edges: tuple[tuple[int, int], ...]


class _Masks:
    """Bitmask view of a context: rows over attributes, columns over objects."""

    def __init__(self, ctx: FormalContext):
        self.n_objects = len(ctx.objects)
        self.n_attributes = len(ctx.attributes)
        self.full_objects = (1 << self.n_objects) - 1
        self.full_attributes = (1 << self.n_attributes) - 1
        self.rows = [0] * self.n_objects
        self.cols = [0] * self.n_attributes
        for o, row in enumerate(ctx.incidence):
            for a, marked in enumerate(row):
                if marked:
                    self.rows[o] |= 1 << a
                    self.cols[a] |= 1 << o

    def intent_of(self, object_mask: int) -> int:
        result = self.full_attributes
        remaining = object_mask
        while remaining:
            low = remaining & -remaining
            result &= self.rows[low.bit_length() - 1]
            remaining ^= low
        return result

    def extent_of(self, attribute_mask: int) -> int:
        result = self.full_objects
        remaining = attribute_mask
        while remaining:
            low = remaining & -remaining
            result &= self.cols[low.bit_length() - 1]
            remaining ^= low
        return result


def _mask_names(mask: int, names: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(name for i, name in enumerate(names) if mask >> i & 1)


def binarize(csm: SimilarityMatrix, threshold: float) -> FormalContext:
    """Threshold a similarity matrix into an incidence relation (>= keeps)."""
    if not -1.0 <= threshold <= 1.0:
        raise ParameterError(f"threshold {threshold} outside [-1, 1]")
    incidence = tuple(
        tuple(bool(value >= threshold) for value in row) for row in csm.values
    )
    return FormalContext(
        objects=csm.query_names, attributes=csm.doc_names, incidence=incidence
    )


def derive_intent(objects_subset, ctx: FormalContext) -> set[str]:
    """Attributes shared by every given object; all attributes for the empty set."""
    masks = _Masks(ctx)
    object_mask = 0
    for name in objects_subset:
        try:
            object_mask |= 1 << ctx.objects.index(name)
        except ValueError:
            raise ParameterError(f"unknown object {name!r}") from None
    return set(_mask_names(masks.intent_of(object_mask), ctx.attributes))


def derive_extent(attributes_subset, ctx: FormalContext) -> set[str]:
    """Objects having every given attribute; all objects for the empty set."""
    masks = _Masks(ctx)
    attribute_mask = 0
    for name in attributes_subset:
        try:
            attribute_mask |= 1 << ctx.attributes.index(name)
        except ValueError:
            raise ParameterError(f"unknown attribute {name!r}") from None
    return set(_mask_names(masks.extent_of(attribute_mask), ctx.objects))


def _closures_by_object_subsets(masks: _Masks) -> set[tuple[int, int]]:
    pairs = set()
    for subset in range(1 << masks.n_objects):
        intent = masks.intent_of(subset)
        extent = masks.extent_of(intent)
        pairs.add((extent, intent))
    return pairs


def _closures_by_next_closure(masks: _Masks) -> set[tuple[int, int]]:
    """Lectic iteration over closed attribute sets."""
    m = masks.n_attributes

    def close(attribute_mask: int) -> int:
        return masks.intent_of(masks.extent_of(attribute_mask))

    pairs = set()
    current = close(0)
    while True:
        pairs.add((masks.extent_of(current), current))
        nxt = None
        for i in range(m - 1, -1, -1):
            bit = 1 << i
            if current & bit:
                current &= ~bit
            else:
                candidate = close(current | bit)
                if candidate & ~current & (bit - 1) == 0:
                    nxt = candidate
                    break
        if nxt is None:
            return pairs
        current = nxt


def enumerate_concepts(ctx: FormalContext) -> list[FormalConcept]:
    """All closed (extent, intent) pairs in deterministic order."""
    masks = _Masks(ctx)
    work = (1 << masks.n_objects) * (masks.n_objects + masks.n_attributes + 1)
    if work <= _BRUTE_FORCE_OPS:
        pairs = _closures_by_object_subsets(masks)
    else:
        pairs = _closures_by_next_closure(masks)
    concepts = [
        FormalConcept(
            extent=_mask_names(extent, ctx.objects),
            intent=_mask_names(intent, ctx.attributes),
        )
        for extent, intent in pairs
    ]
    concepts.sort(key=lambda c: (-len(c.extent), c.extent))
    return concepts


def build_aoc_poset(concepts: list[FormalConcept], ctx: FormalContext) -> AOCPoset:
    """Reduce a complete concept set to its AOC-poset with reduced labels.

    Object o is introduced at the concept its row generates; attribute a at
    the concept its column generates.  An object with an empty row lands on
    the top concept, an attribute with an empty column on the bottom one.
    """
    masks = _Masks(ctx)
    by_extent: dict[int, int] = {}
    for position, concept in enumerate(concepts):
        extent_mask = 0
        for name in concept.extent:
            extent_mask |= 1 << ctx.objects.index(name)
        by_extent[extent_mask] = position

    def locate(extent_mask: int) -> int:
        try:
            return by_extent[extent_mask]
        except KeyError:
            raise ParameterError(
                "concept list is not the complete concept set of the context"
            ) from None

    gamma = [
        locate(masks.extent_of(masks.intent_of(1 << o)))
        for o in range(masks.n_objects)
    ]
    mu = [locate(masks.extent_of(1 << a)) for a in range(masks.n_attributes)]

    kept_positions = sorted(set(gamma) | set(mu))
    position_to_kept = {p: i for i, p in enumerate(kept_positions)}
    aoc_concepts = []
    for position in kept_positions:
        concept = concepts[position]
        aoc_concepts.append(
            AOCConcept(
                extent=concept.extent,
                intent=concept.intent,
                introduced_objects=tuple(
                    name
                    for o, name in enumerate(ctx.objects)
                    if gamma[o] == position
                ),
                introduced_attributes=tuple(
                    name
                    for a, name in enumerate(ctx.attributes)
                    if mu[a] == position
                ),
            )
        )

    extent_masks = []
    for concept in aoc_concepts:
        mask = 0
        for name in concept.extent:
            mask |= 1 << ctx.objects.index(name)
        extent_masks.append(mask)

    def strictly_below(i: int, j: int) -> bool:
        return extent_masks[i] != extent_masks[j] and (
            extent_masks[i] & extent_masks[j] == extent_masks[i]
        )

    edges = []
    n = len(aoc_concepts)
    for i in range(n):
        for j in range(n):
            if not strictly_below(i, j):
                continue
            if any(
                strictly_below(i, via) and strictly_below(via, j)
                for via in range(n)
            ):
                continue
            edges.append((i, j))
    return AOCPoset(concepts=tuple(aoc_concepts), edges=tuple(edges))


def export_context_csv(ctx: FormalContext) -> str:
    """CSV with attribute names across the top and object names down the side."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["", *ctx.attributes])
    for name, row in zip(ctx.objects, ctx.incidence):
        writer.writerow([name, *(int(v) for v in row)])
    return buffer.getvalue()


def load_context_csv(text: str) -> FormalContext:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise ParameterError("context CSV is empty")
    attributes = tuple(rows[0][1:])
    objects = []
    incidence = []
    for row in rows[1:]:
        if not row:
            continue
        if len(row) != len(attributes) + 1:
            raise ParameterError(f"context CSV row {row[0]!r} has wrong width")
        objects.append(row[0])
        incidence.append(tuple(cell.strip() == "1" for cell in row[1:]))
    return FormalContext(
        objects=tuple(objects), attributes=attributes, incidence=tuple(incidence)
    )

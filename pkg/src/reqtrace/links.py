"""Derives requirement-to-class trace links and renders DOT graphs.

Links come straight from the binarized context: the classes linked to a
requirement are exactly its incidence row.  The AOC-poset contributes the
clustering view (each kept concept pairs a requirement set with a class
set) and the lattice drawing; it never adds or removes links.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .fca import AOCPoset, FormalContext

__all__ = [
    "TraceLinkSet",
    "assemble_links",
    "emit_dot_poset",
    "emit_dot_tracelinks",
    "links_to_json",
    "links_from_json",
]

_UNSAFE = re.compile(r"[^0-9A-Za-z_]")


@dataclass(frozen=True)
class TraceLinkSet:
    links: dict[str, tuple[str, ...]]  # requirement -> linked classes
    clusters: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]
    unlinked_classes: tuple[str, ...]
    unlinked_requirements: tuple[str, ...]

    def class_names(self) -> list[str]:
        """Every known class, linked first (in requirement order), then unlinked."""
        ordered: list[str] = []
        seen = set()
        for classes in self.links.values():
            for name in classes:
                if name not in seen:
                    seen.add(name)
                    ordered.append(name)
        for name in self.unlinked_classes:
            if name not in seen:
                seen.add(name)
                ordered.append(name)
        return ordered


def assemble_links(poset: AOCPoset, ctx: FormalContext) -> TraceLinkSet:
    """Read links off the context rows; take clusters from the AOC concepts."""
    links = {
        obj: tuple(
            attr for attr, marked in zip(ctx.attributes, row) if marked
        )
        for obj, row in zip(ctx.objects, ctx.incidence)
    }
    linked_classes = set()
    for classes in links.values():
        linked_classes.update(classes)
    return TraceLinkSet(
        links=links,
        clusters=tuple(
            (concept.extent, concept.intent) for concept in poset.concepts
        ),
        unlinked_classes=tuple(
            attr for attr in ctx.attributes if attr not in linked_classes
        ),
        unlinked_requirements=tuple(
            obj for obj, classes in links.items() if not classes
        ),
    )


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _identifier_map(names: list[str], prefix: str) -> dict[str, str]:
    """Sanitized, collision-free DOT identifiers, stable in input order."""
    mapping: dict[str, str] = {}
    used = set()
    for name in names:
        base = prefix + (_UNSAFE.sub("_", name) or "x")
        candidate = base
        serial = 2
        while candidate in used:
            candidate = f"{base}_{serial}"
            serial += 1
        used.add(candidate)
        mapping[name] = candidate
    return mapping


def emit_dot_poset(poset: AOCPoset) -> str:
    """Render the AOC-poset as a DOT digraph, one node per concept.

    Node labels carry the concept number and its introduced objects and
    attributes; edges point from sub-concept to super-concept.
    """
    lines = ["digraph aoc_poset {", "  rankdir=BT;", '  node [shape=box, fontname="Helvetica"];']
    for number, concept in enumerate(poset.concepts):
        label = "\\n".join(
            [
                f"Concept_{number}",
                "objects: " + (", ".join(concept.introduced_objects) or "-"),
                "attributes: " + (", ".join(concept.introduced_attributes) or "-"),
            ]
        )
        lines.append(f"  c{number} [label={_quote(label)}];")
    for sub, super_ in poset.edges:
        lines.append(f"  c{sub} -> c{super_};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot_tracelinks(tls: TraceLinkSet) -> str:
    """Render links as a bipartite digraph: requirement boxes, class ellipses."""
    requirements = list(tls.links.keys())
    classes = tls.class_names()
    req_ids = _identifier_map(requirements, "r_")
    class_ids = _identifier_map(classes, "c_")
    lines = ["digraph trace_links {", "  rankdir=LR;"]
    for name in requirements:
        lines.append(f"  {req_ids[name]} [label={_quote(name)}, shape=box];")
    for name in classes:
        lines.append(f"  {class_ids[name]} [label={_quote(name)}, shape=ellipse];")
    for name in requirements:
        for target in tls.links[name]:
            lines.append(f"  {req_ids[name]} -> {class_ids[target]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def links_to_json(tls: TraceLinkSet) -> str:
    payload = {
        "links": {req: list(classes) for req, classes in tls.links.items()},
        "unlinked_classes": list(tls.unlinked_classes),
        "unlinked_requirements": list(tls.unlinked_requirements),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def links_from_json(text: str) -> TraceLinkSet:
    payload = json.loads(text)
    links = {req: tuple(classes) for req, classes in payload["links"].items()}
    return TraceLinkSet(
        links=links,
        clusters=(),
        unlinked_classes=tuple(payload.get("unlinked_classes", ())),
        unlinked_requirements=tuple(payload.get("unlinked_requirements", ())),
    )

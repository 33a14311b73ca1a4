"""Command-line front end: extract, trace, and evaluate subcommands.

Exit codes: 0 success (warnings allowed), 2 configuration or parse
failure, 3 empty corpus after preprocessing.  All artifacts are written
atomically (temp file + rename) and two runs over identical inputs
produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import corpus as corpus_mod
from . import evaluation, fca, links, lsi, textprep
from .errors import (
    ConfigurationError,
    EmptyCorpusError,
    GoldCoverageError,
    ParameterError,
    ReqTraceError,
)
from .facts import CodeFacts, compute_metrics, load_facts_xml, save_facts_xml
from .javaparser import parse_source_tree

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_EMPTY_CORPUS = 3


@dataclass
class PipelineConfig:
    requirements_dir: Path
    output_dir: Path
    source_root: Path | None = None
    facts_file: Path | None = None
    threshold: float = 0.70
    topics: int | None = None  # None = full rank
    stopwords_file: Path | None = None
    gold_file: Path | None = None
    dump_intermediates: bool = False

    def validate(self) -> None:
        if (self.source_root is None) == (self.facts_file is None):
            raise ConfigurationError("exactly one of --src and --facts is required")
        if not -1.0 < self.threshold <= 1.0:
            raise ConfigurationError(
                f"threshold {self.threshold} outside (-1.0, 1.0]"
            )
        if self.topics is not None and self.topics < 1:
            raise ConfigurationError("topics must be >= 1")


def _write_atomic(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def _print_diagnostics(diagnostics) -> None:
    for diagnostic in diagnostics:
        print(
            f"{diagnostic.severity}: {diagnostic.file}:{diagnostic.line}:"
            f" {diagnostic.message}",
            file=sys.stderr,
        )


def _metrics_summary(facts: CodeFacts) -> str:
    metrics = compute_metrics(facts)
    rows = [
        ("packages (NOP)", metrics.nop),
        ("classes (NOC)", metrics.noc),
        ("attributes (NOA)", metrics.noa),
        ("methods (NOM)", metrics.nom),
        ("identifiers", metrics.identifiers),
        ("comments", metrics.comments),
        ("local variables", metrics.locals),
        ("method invocations", metrics.invocations),
        ("attribute accesses", metrics.accesses),
    ]
    width = max(len(label) for label, _ in rows)
    return "\n".join(f"{label.ljust(width)}  {value}" for label, value in rows)


def cmd_extract(source_root: Path, out: Path) -> int:
    facts, diagnostics = parse_source_tree(source_root)
    _print_diagnostics(diagnostics)
    if any(d.severity == "error" for d in diagnostics):
        return EXIT_CONFIG
    _write_atomic(out, save_facts_xml(facts))
    print(_metrics_summary(facts))
    return EXIT_OK


def _load_facts(config: PipelineConfig) -> CodeFacts:
    if config.facts_file is not None:
        return load_facts_xml(config.facts_file.read_bytes())
    facts, diagnostics = parse_source_tree(config.source_root)
    _print_diagnostics(diagnostics)
    return facts


def cmd_trace(config: PipelineConfig) -> int:
    config.validate()
    facts = _load_facts(config)
    documents = corpus_mod.build_class_documents(facts)
    if not documents.documents:
        raise EmptyCorpusError("no classes found; document corpus is empty")
    queries = corpus_mod.load_requirement_documents(config.requirements_dir)

    stops = (
        textprep.load_stop_words(config.stopwords_file)
        if config.stopwords_file is not None
        else textprep.StopWordList()
    )
    doc_bags = [textprep.preprocess(d, stops) for d in documents.documents]
    query_bags = [textprep.preprocess(q, stops) for q in queries.queries]

    vocab = lsi.build_vocabulary(doc_bags)
    tdm = lsi.build_tdm(doc_bags, vocab)
    tqm = lsi.build_tqm(query_bags, vocab)

    full_rank = min(len(vocab), len(tdm.doc_names))
    k = config.topics if config.topics is not None else full_rank
    if k > full_rank:
        raise ConfigurationError(
            f"topics {k} exceeds min(terms, documents) = {full_rank}"
        )
    space = lsi.truncated_svd(tdm, k)
    csm = lsi.cosine_similarity_matrix(space, tqm)

    ctx = fca.binarize(csm, config.threshold)
    concepts = fca.enumerate_concepts(ctx)
    poset = fca.build_aoc_poset(concepts, ctx)
    tls = links.assemble_links(poset, ctx)

    out = config.output_dir
    _write_atomic(out / "links.json", links.links_to_json(tls).encode("utf-8"))
    _write_atomic(out / "poset.dot", links.emit_dot_poset(poset).encode("utf-8"))
    _write_atomic(
        out / "tracelinks.dot", links.emit_dot_tracelinks(tls).encode("utf-8")
    )
    if config.dump_intermediates:
        _write_atomic(
            out / "tdm.csv", lsi.write_count_matrix_csv(tdm, "term").encode("utf-8")
        )
        _write_atomic(
            out / "tqm.csv", lsi.write_count_matrix_csv(tqm, "term").encode("utf-8")
        )
        _write_atomic(out / "csm.csv", lsi.write_similarity_csv(csm).encode("utf-8"))
        _write_atomic(
            out / "context.csv", fca.export_context_csv(ctx).encode("utf-8")
        )
    if config.gold_file is not None:
        gold = evaluation.load_gold_links(config.gold_file)
        report = evaluation.evaluate(tls, gold)
        _write_atomic(
            out / "report.json", evaluation.report_to_json(report).encode("utf-8")
        )
        _write_atomic(
            out / "report.csv", evaluation.report_to_csv(report).encode("utf-8")
        )
    linked = sum(1 for classes in tls.links.values() if classes)
    print(
        f"traced {len(tls.links)} requirements against {len(ctx.attributes)}"
        f" classes: {linked} linked, {len(tls.unlinked_requirements)} unlinked"
    )
    return EXIT_OK


def cmd_evaluate(links_file: Path, gold_file: Path, out: Path) -> int:
    try:
        tls = links.links_from_json(links_file.read_text(encoding="utf-8"))
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigurationError(f"links file {links_file}: {exc}") from exc
    gold = evaluation.load_gold_links(gold_file)
    report = evaluation.evaluate(tls, gold)
    _write_atomic(out / "report.json", evaluation.report_to_json(report).encode("utf-8"))
    _write_atomic(out / "report.csv", evaluation.report_to_csv(report).encode("utf-8"))
    print(evaluation.report_to_csv(report), end="")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reqtrace",
        description="Recover requirement-to-code trace links from Java sources",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    extract = commands.add_parser(
        "extract", help="parse Java sources into a code-facts XML file"
    )
    extract.add_argument("--src", type=Path, required=True, help="source root")
    extract.add_argument(
        "--out", type=Path, required=True, help="output facts XML path"
    )

    trace = commands.add_parser(
        "trace", help="run the full trace-link recovery pipeline"
    )
    source = trace.add_mutually_exclusive_group(required=True)
    source.add_argument("--src", type=Path, help="Java source root")
    source.add_argument("--facts", type=Path, help="code-facts XML file")
    trace.add_argument(
        "--reqs", type=Path, required=True, help="directory of requirement .txt files"
    )
    trace.add_argument("--threshold", type=float, default=0.70)
    trace.add_argument("--topics", type=int, default=None)
    trace.add_argument("--stopwords", type=Path, default=None)
    trace.add_argument("--out", type=Path, required=True, help="output directory")
    trace.add_argument("--gold", type=Path, default=None)
    trace.add_argument("--dump-intermediates", action="store_true")

    evaluate = commands.add_parser(
        "evaluate", help="score a links.json against a gold-links file"
    )
    evaluate.add_argument("--links", type=Path, required=True)
    evaluate.add_argument("--gold", type=Path, required=True)
    evaluate.add_argument("--out", type=Path, required=True, help="output directory")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "extract":
            return cmd_extract(args.src, args.out)
        if args.command == "trace":
            config = PipelineConfig(
                source_root=args.src,
                facts_file=args.facts,
                requirements_dir=args.reqs,
                threshold=args.threshold,
                topics=args.topics,
                stopwords_file=args.stopwords,
                output_dir=args.out,
                gold_file=args.gold,
                dump_intermediates=args.dump_intermediates,
            )
            return cmd_trace(config)
        if args.command == "evaluate":
            return cmd_evaluate(args.links, args.gold, args.out)
        raise ConfigurationError(f"unknown command {args.command!r}")
    except EmptyCorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY_CORPUS
    except (ReqTraceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

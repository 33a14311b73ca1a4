"""Latent semantic indexing over raw term-count matrices.

Builds the shared vocabulary, the term-document and term-query count
matrices, a truncated SVD of the TDM, and the query-by-document cosine
similarity matrix.  Weights are raw occurrence counts: no tf-idf and no
length normalization.

Similarity compares each query, in term space, against the rank-k
reconstruction of each document column.  At k = rank(TDM) this is exactly
the plain vector-space cosine of the raw count vectors; truncating k below
the rank smooths the documents onto the dominant term associations.
Cosines are invariant to the per-topic sign ambiguity of the SVD.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMatrixError, EmptyCorpusError, ParameterError
from .textprep import TermBag

__all__ = [
    "Vocabulary",
    "TermDocumentMatrix",
    "TermQueryMatrix",
    "LsiSpace",
    "SimilarityMatrix",
    "build_vocabulary",
    "build_tdm",
    "build_tqm",
    "truncated_svd",
    "fold_in_query",
    "cosine_similarity_matrix",
    "write_count_matrix_csv",
    "write_similarity_csv",
]


@dataclass(frozen=True)
class Vocabulary:
    """Unique corpus terms in lexicographic order; index maps term -> row."""

    terms: tuple[str, ...]
    index: dict[str, int]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True, eq=False)
class TermDocumentMatrix:
    vocab: Vocabulary
    doc_names: tuple[str, ...]
    cells: np.ndarray  # t x d, nonnegative integers


@dataclass(frozen=True, eq=False)
class TermQueryMatrix:
    vocab: Vocabulary
    query_names: tuple[str, ...]
    cells: np.ndarray  # t x q; terms outside the vocabulary are dropped


@dataclass(frozen=True, eq=False)
class LsiSpace:
    """Rank-k topic space of a TDM.

    `left_vectors` holds orthonormal term-topic columns (t x k),
    `singular_values` the k strictly positive weights in nonincreasing
    order, and `doc_coords` one row per document (d x k): the right
    singular vectors, i.e. exactly what folding the document's own count
    column back in would produce.
    """

    k: int
    left_vectors: np.ndarray
    singular_values: np.ndarray
    doc_coords: np.ndarray
    doc_names: tuple[str, ...] = ()


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    query_names: tuple[str, ...]
    doc_names: tuple[str, ...]
    values: np.ndarray  # q x d, all within [-1, 1]


def build_vocabulary(corpus: list[TermBag]) -> Vocabulary:
    """Sorted union of all bag terms."""
    if not corpus:
        raise EmptyCorpusError("no term bags supplied")
    terms = sorted(set().union(*(bag.counts.keys() for bag in corpus)))
    if not terms:
        raise EmptyCorpusError("all term bags are empty after preprocessing")
    return Vocabulary(terms=tuple(terms), index={t: i for i, t in enumerate(terms)})


def _count_matrix(bags: list[TermBag], vocab: Vocabulary) -> np.ndarray:
    cells = np.zeros((len(vocab), len(bags)), dtype=np.int64)
    for j, bag in enumerate(bags):
        for term, count in bag.counts.items():
            row = vocab.index.get(term)
            if row is not None:
                cells[row, j] = count
    return cells


def build_tdm(bags: list[TermBag], vocab: Vocabulary) -> TermDocumentMatrix:
    return TermDocumentMatrix(
        vocab=vocab,
        doc_names=tuple(bag.name for bag in bags),
        cells=_count_matrix(bags, vocab),
    )


def build_tqm(queries: list[TermBag], vocab: Vocabulary) -> TermQueryMatrix:
    return TermQueryMatrix(
        vocab=vocab,
        query_names=tuple(bag.name for bag in queries),
        cells=_count_matrix(queries, vocab),
    )


def truncated_svd(tdm: TermDocumentMatrix, k: int) -> LsiSpace:
    """Best rank-k factorization of the TDM.

    Topic directions with numerically zero weight are discarded, so the
    effective k never exceeds the matrix rank and every retained singular
    value is strictly positive.
    """
    t, d = tdm.cells.shape
    if not 1 <= k <= min(t, d):
        raise ParameterError(f"k={k} outside valid range 1..{min(t, d)}")
    if not tdm.cells.any():
        raise DegenerateMatrixError("term-document matrix is all zeros")
    matrix = tdm.cells.astype(np.float64)
    u, s, vt = np.linalg.svd(matrix, full_matrices=False)
    tolerance = max(t, d) * np.finfo(np.float64).eps * s[0]
    effective = min(k, int(np.sum(s > tolerance)))
    return LsiSpace(
        k=effective,
        left_vectors=u[:, :effective],
        singular_values=s[:effective],
        doc_coords=vt[:effective, :].T,
        doc_names=tdm.doc_names,
    )


def fold_in_query(q: np.ndarray, space: LsiSpace) -> np.ndarray:
    """Project a term-space count vector into topic space: q U_k S_k^-1."""
    q = np.asarray(q, dtype=np.float64)
    return (q @ space.left_vectors) / space.singular_values


def cosine_similarity_matrix(space: LsiSpace, tqm: TermQueryMatrix) -> SimilarityMatrix:
    """Cosine of every query against every rank-k reconstructed document.

    Rows are queries, columns are documents.  A zero query vector or a
    document whose reconstruction is zero yields similarity 0.
    """
    queries = tqm.cells.astype(np.float64)  # t x q
    doc_scaled = space.doc_coords * space.singular_values  # d x k rows
    projected = space.left_vectors.T @ queries  # k x q
    numerators = projected.T @ doc_scaled.T  # q x d
    query_norms = np.linalg.norm(queries, axis=0)  # true term-space norms
    doc_norms = np.linalg.norm(doc_scaled, axis=1)
    denominators = np.outer(query_norms, doc_norms)
    values = np.divide(
        numerators,
        denominators,
        out=np.zeros_like(numerators),
        where=denominators > 0,
    )
    np.clip(values, -1.0, 1.0, out=values)
    return SimilarityMatrix(
        query_names=tqm.query_names,
        doc_names=space.doc_names,
        values=values,
    )


def write_count_matrix_csv(
    matrix: TermDocumentMatrix | TermQueryMatrix, label: str
) -> str:
    """Render a count matrix as CSV: header of names, first column of terms."""
    names = (
        matrix.doc_names
        if isinstance(matrix, TermDocumentMatrix)
        else matrix.query_names
    )
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([label, *names])
    for i, term in enumerate(matrix.vocab.terms):
        writer.writerow([term, *(int(v) for v in matrix.cells[i])])
    return buffer.getvalue()


def write_similarity_csv(csm: SimilarityMatrix) -> str:
    """Render the similarity matrix as CSV with 9-decimal values."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["query", *csm.doc_names])
    for i, name in enumerate(csm.query_names):
        writer.writerow([name, *(f"{v:.9f}" for v in csm.values[i])])
    return buffer.getvalue()

"""Term-document count vectors as a vector lattice.

Rows are terms, columns are contexts (for instance document ids), and
entries are nonnegative occurrence counts kept as exact rationals.
The componentwise order makes the rows a lattice: meet and join are the
componentwise minimum and maximum, and ``x <= y`` reads as a
distributional entailment (y occurs at least as often as x in every
context).

CSV input: the header row names the contexts (an optional leading label
cell is ignored); each following row is a term followed by its counts;
``--`` or an empty cell means zero.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

Vector = tuple[Fraction, ...]


class MatrixFormatError(Exception):
    """Malformed count matrix."""


class UnknownTermError(KeyError):
    """Term not present in the matrix."""

    def __str__(self) -> str:
        return f"unknown term {self.args[0]!r}"


@dataclass(frozen=True)
class TermDocumentMatrix:
    terms: tuple[str, ...]
    contexts: tuple[str, ...]
    counts: tuple[Vector, ...]  # one row per term

    def row(self, term: str) -> Vector:
        try:
            return self.counts[self.terms.index(term)]
        except ValueError:
            raise UnknownTermError(term) from None

    def count(self, term: str, context: str) -> Fraction:
        try:
            return self.row(term)[self.contexts.index(context)]
        except ValueError:
            raise MatrixFormatError(f"unknown context {context!r}") from None


def load_matrix(text: str) -> TermDocumentMatrix:
    rows = [row for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]
    if len(rows) < 2:
        raise MatrixFormatError("matrix needs a header row and at least one term row")
    header, data = rows[0], rows[1:]
    width = len(data[0])
    if len(header) == width:
        contexts = tuple(cell.strip() for cell in header[1:])
    elif len(header) == width - 1:
        contexts = tuple(cell.strip() for cell in header)
    else:
        raise MatrixFormatError("header length does not fit the data rows")
    terms: list[str] = []
    counts: list[Vector] = []
    for lineno, row in enumerate(data, start=2):
        if len(row) != width:
            raise MatrixFormatError(f"row {lineno} has {len(row)} cells, expected {width}")
        term = row[0].strip()
        if not term:
            raise MatrixFormatError(f"row {lineno} has an empty term name")
        if term in terms:
            raise MatrixFormatError(f"duplicate term {term!r}")
        vec = []
        for cell in row[1:]:
            cell = cell.strip()
            if cell in ("", "--"):
                vec.append(Fraction(0))
                continue
            try:
                value = Fraction(cell)
            except (ValueError, ZeroDivisionError):
                raise MatrixFormatError(f"row {lineno}: bad count {cell!r}") from None
            if value < 0:
                raise MatrixFormatError(f"row {lineno}: negative count {cell!r}")
            vec.append(value)
        terms.append(term)
        counts.append(tuple(vec))
    return TermDocumentMatrix(tuple(terms), tuple(contexts), tuple(counts))


def load_word_counts() -> TermDocumentMatrix:
    """The fruit/computer occurrence fixture shipped with the package."""
    text = (resources.files(__package__) / "data" / "word_document_counts.csv").read_text("utf-8")
    return load_matrix(text)


def meet(m: TermDocumentMatrix, t1: str, t2: str) -> Vector:
    """Componentwise minimum of the two term rows."""
    return tuple(min(a, b) for a, b in zip(m.row(t1), m.row(t2)))


def join(m: TermDocumentMatrix, t1: str, t2: str) -> Vector:
    """Componentwise maximum of the two term rows."""
    return tuple(max(a, b) for a, b in zip(m.row(t1), m.row(t2)))


def entails(m: TermDocumentMatrix, t1: str, t2: str) -> bool:
    """True iff t2 occurs at least as often as t1 in every context."""
    return all(a <= b for a, b in zip(m.row(t1), m.row(t2)))


def entails_witness(m: TermDocumentMatrix, t1: str, t2: str) -> Optional[tuple[str, Fraction, Fraction]]:
    """Most violated context refuting entailment, or None.

    Returns (context, count1, count2) for the context with the largest
    excess count1 - count2 (earliest context on ties).
    """
    worst: Optional[tuple[str, Fraction, Fraction]] = None
    for context, a, b in zip(m.contexts, m.row(t1), m.row(t2)):
        if a > b and (worst is None or a - b > worst[1] - worst[2]):
            worst = (context, a, b)
    return worst


def cosine(m: TermDocumentMatrix, t1: str, t2: str) -> float:
    """Cosine of the angle between two nonzero term vectors."""
    u, v = m.row(t1), m.row(t2)
    if not any(u):
        raise ValueError(f"term {t1!r} has the zero vector")
    if not any(v):
        raise ValueError(f"term {t2!r} has the zero vector")
    dot = sum(a * b for a, b in zip(u, v))
    norm_u = math.sqrt(sum(a * a for a in u))
    norm_v = math.sqrt(sum(b * b for b in v))
    return float(dot) / (norm_u * norm_v)

"""Exception types shared across the package.

Kept in one flat module so the CLI can map them onto exit codes without
importing every subsystem.
"""

from __future__ import annotations


class ChartabError(Exception):
    """Base class for all errors raised by this package."""


# --- cyclotomic arithmetic ---

class NotCoprime(ChartabError):
    """Galois automorphism index is not coprime to the conductor."""


class LiteralError(ChartabError):
    """A cyclotomic literal string does not match the grammar."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at offset {position})")
        self.position = position


# --- table model ---

class InvalidTable(ChartabError):
    """A structural quantity (group order, centralizer order, ...) is not as required."""


class NoIdentityColumn(ChartabError):
    """No column qualifies as the identity class."""


class NotDuplicate(ChartabError):
    """The requested column is not an exact duplicate of the identity column."""


class InsufficientData(ChartabError):
    """Element orders are needed but neither orders nor complete power maps are available."""


class InconsistentData(ChartabError):
    """Supplied class metadata contradicts the table entries."""


class MalformedInput(ChartabError):
    """Input cannot be one row short of a genuine table (e.g. two conjugate gaps)."""


# --- solvers ---

class RankDeficient(ChartabError):
    """Given columns are linearly dependent; input is not a partial character table."""


class NotCompletable(ChartabError):
    """The forced completion fails integrality or validation."""


class MoreThanTwoOnesRows(ChartabError):
    """A column puzzle with three or more all-ones rows is malformed."""


class InvalidPartial(ChartabError):
    """The row puzzle is not one row short of a genuine table."""


class NeedsHint(ChartabError):
    """The deciding Sylow datum is undeterminable; both candidate rows are attached.

    ``candidates`` is a list of (vector, trace) pairs, one per surviving
    interpretation of the Sylow-2 abelianization index.
    """

    def __init__(self, message, candidates):
        super().__init__(message)
        self.candidates = candidates


# --- degree arithmetic ---

class EOutOfRange(ChartabError):
    """The cyclic bound only applies for e >= 2."""


class BadDivisibility(ChartabError):
    """The normal subgroup order does not divide the group order."""


# --- file format / CLI ---

class ParseError(ChartabError):
    """A table file does not parse; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class DimensionMismatch(ChartabError):
    """Matrix shape contradicts the declared or inferred missing row/column."""

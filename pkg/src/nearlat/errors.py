"""Exception hierarchy.

Every semantic failure carries a ``witness`` tuple of element ids (or masks)
so callers can re-check the violation against the structure.
"""

from __future__ import annotations


class NearlatError(ValueError):
    """Base class for semantic violations."""

    def __init__(self, *witness, detail: str | None = None):
        self.witness = tuple(witness)
        self.detail = detail
        super().__init__(self.describe())

    def describe(self, labels=None) -> str:
        """Render as ``Name key=value ...`` using display ``labels`` when given."""
        name = type(self).__name__
        names = getattr(self, "witness_names", ())
        if not self.witness:
            return name if self.detail is None else f"{name}: {self.detail}"
        parts = []
        for i, w in enumerate(self.witness):
            key = names[i] if i < len(names) else f"w{i}"
            parts.append(f"{key}={self._show(w, labels)}")
        text = f"{name} " + " ".join(parts)
        return text if self.detail is None else f"{text} ({self.detail})"

    def _show(self, w, labels) -> str:
        if not isinstance(w, int) or labels is None:
            return str(w)
        if getattr(self, "witness_sets", False):
            return "{" + ",".join(labels[i] for i in range(len(labels)) if w >> i & 1) + "}"
        return labels[w] if 0 <= w < len(labels) else str(w)


class MalformedTable(NearlatError):
    """Input tables of the wrong shape or with out-of-range ids."""


# order relations
class NotReflexive(NearlatError):
    witness_names = ("x",)


class NotAntisymmetric(NearlatError):
    witness_names = ("x", "y")


class NotTransitive(NearlatError):
    witness_names = ("x", "y", "z")


# join tables
class NotIdempotent(NearlatError):
    witness_names = ("x",)


class NotCommutative(NearlatError):
    witness_names = ("x", "y")


class NotAssociative(NearlatError):
    witness_names = ("x", "y", "z")


class TopNotAbsorbing(NearlatError):
    witness_names = ("x",)


class UpsetNotDistributive(NearlatError):
    witness_names = ("a", "x", "y", "z")


class NoLeastUpperBound(NearlatError):
    witness_names = ("x", "y")


# element theory
class NotBooleanBase(NearlatError):
    witness_names = ("a",)


class NotInUpset(NearlatError):
    witness_names = ("a", "x")


class InvariantViolation(NearlatError):
    """A structural fact guaranteed by the theory failed to hold."""


class NotALattice(NearlatError):
    witness_names = ("x", "y")


class NotAFilter(NearlatError):
    pass


class NotAnIdeal(NearlatError):
    pass


# DN-structures
class NotADownset(NearlatError):
    witness_names = ("U",)
    witness_sets = True


class S1Violation(NearlatError):
    pass


class S2Violation(NearlatError):
    witness_names = ("x",)


class S3Violation(NearlatError):
    witness_names = ("U", "V")
    witness_sets = True


class BoundExceeded(NearlatError):
    witness_names = ("requested", "bound")


class ParseError(NearlatError):
    """Malformed input file, with line and column when the JSON itself is broken."""

    witness_names = ("line", "column")

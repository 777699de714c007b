"""JSON file formats for nearlattices and DN-structures.

Nearlattice files hold ``elements``, ``top`` and either a ``join`` table or
``leq`` pairs. DN files hold a ``poset`` (``elements`` plus ``leq`` pairs)
and ``one_family``, the minimal value-1 downsets as index lists. Unknown
keys are ignored. Shape problems raise ``ParseError``; the algebra is left
to the validators so that a bad law is reported as a semantic violation.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import NearlatError, ParseError
from .nearlattice import Nearlattice, from_join_table, from_order
from .order import bits, covers, is_downset, mask_of, poset_from_pairs
from .representation import DNStructure, close_family, validate_dn


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, detail=exc.msg) from None
    if not isinstance(doc, dict):
        raise ParseError(detail="top level must be a JSON object")
    return doc


def load(path: str | Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(detail=f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def is_dn_doc(doc: dict) -> bool:
    return "poset" in doc


def _field(doc: dict, key: str, kind: type, where: str = ""):
    if key not in doc:
        raise ParseError(detail=f"missing key {where}{key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise ParseError(detail=f"{where}{key!r} must be {kind.__name__}")
    return value


def _elements(doc: dict, where: str = "") -> list[str]:
    elems = _field(doc, "elements", list, where)
    if not all(isinstance(e, str) for e in elems):
        raise ParseError(detail=f"{where}'elements' must be strings")
    if len(set(elems)) != len(elems):
        raise ParseError(detail=f"{where}'elements' has duplicate labels")
    return elems


def _index_list(value, n: int, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ParseError(detail=f"{what} must be a list of integers")
    if any(not 0 <= v < n for v in value):
        raise ParseError(detail=f"{what} has an index out of range")
    return value


def _pairs(doc: dict, n: int, where: str = "") -> list[tuple[int, int]]:
    out = []
    for p in _field(doc, "leq", list, where):
        pair = _index_list(p, n, f"{where}'leq' entry")
        if len(pair) != 2:
            raise ParseError(detail=f"{where}'leq' entries must be pairs")
        out.append((pair[0], pair[1]))
    return out


def nearlattice_from_doc(doc: dict) -> Nearlattice:
    elems = _elements(doc)
    n = len(elems)
    top = _field(doc, "top", int)
    if "join" in doc:
        rows = _field(doc, "join", list)
        table = [_index_list(r, n, "'join' row") for r in rows]
        return from_join_table(n, table, top, elems)
    if "leq" in doc:
        return from_order(n, _pairs(doc, n), top, elems)
    raise ParseError(detail="nearlattice needs 'join' or 'leq'")


def nearlattice_to_doc(A: Nearlattice) -> dict:
    return {
        "elements": [A.label(x) for x in range(A.size)],
        "top": A.top,
        "join": [list(row) for row in A.join],
    }


def dn_from_doc(doc: dict) -> DNStructure:
    pdoc = _field(doc, "poset", dict)
    elems = _elements(pdoc, "poset.")
    n = len(elems)
    P = poset_from_pairs(n, _pairs(pdoc, n, "poset."), elems)
    minimal = [mask_of(_index_list(U, n, "'one_family' entry")) for U in _field(doc, "one_family", list)]
    bad = [U for U in minimal if not is_downset(P, U)]
    if bad:
        # report non-downsets before closing, which would hide them
        validate_dn(P, bad)
    return validate_dn(P, close_family(P, minimal))


def dn_to_doc(D: DNStructure) -> dict:
    P = D.poset
    leq = [list(c) for c in covers(P)]
    return {
        "poset": {"elements": [P.label(x) for x in range(P.size)], "leq": leq},
        "one_family": [bits(U) for U in D.minimal_members()],
    }


def _labels_of(doc: dict) -> list[str] | None:
    inner = doc.get("poset") if is_dn_doc(doc) else doc
    elems = inner.get("elements") if isinstance(inner, dict) else None
    return elems if isinstance(elems, list) and all(isinstance(e, str) for e in elems) else None


def read_structure(path: str | Path) -> Nearlattice | DNStructure:
    """Load either file kind; semantic errors carry the file's labels as ``labels``."""
    doc = load(path)
    try:
        return dn_from_doc(doc) if is_dn_doc(doc) else nearlattice_from_doc(doc)
    except NearlatError as exc:
        if not isinstance(exc, ParseError):
            exc.labels = _labels_of(doc)
        raise

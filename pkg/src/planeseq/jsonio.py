"""JSON wire formats.  Every scalar is a string ``"p/q"`` or ``"p"``; ints are accepted on input."""
from __future__ import annotations

from typing import Any

from .core import PlaneSeqError, VectorSequence, as_rational, format_rational, sequence_from_pairs
from .gram import SymMatrix
from .tridiag import ComponentLabel, TriDiagSym


def _scalar(x: Any):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise PlaneSeqError(f"scalar must be an integer or a 'p/q' string, got {x!r}")
    try:
        return as_rational(x)
    except (ValueError, ZeroDivisionError) as e:
        raise PlaneSeqError(f"bad rational {x!r}: {e}") from e


def _require(doc: Any, *keys: str) -> None:
    if not isinstance(doc, dict):
        raise PlaneSeqError("expected a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise PlaneSeqError(f"missing key(s): {', '.join(missing)}")


def _list(x: Any, what: str) -> list:
    if not isinstance(x, list):
        raise PlaneSeqError(f"{what} must be a list")
    return x


def sequence_to_json(v: VectorSequence) -> dict:
    return {"n": v.n, "vectors": [[format_rational(w.a), format_rational(w.b)] for w in v.inner]}


def sequence_from_json(doc: Any) -> VectorSequence:
    _require(doc, "vectors")
    vectors = _list(doc["vectors"], "vectors")
    pairs = []
    for p in vectors:
        p = _list(p, "each vector")
        if len(p) != 2:
            raise PlaneSeqError(f"each vector needs two scalars, got {p!r}")
        pairs.append([_scalar(x) for x in p])
    v = sequence_from_pairs(pairs)
    if "n" in doc and doc["n"] != v.n:
        raise PlaneSeqError(f"n = {doc['n']!r} does not match {v.n} vectors")
    return v


def matrix_to_json(m: SymMatrix) -> dict:
    return {"order": m.order, "entries": [[format_rational(x) for x in row] for row in m.entries]}


def matrix_from_json(doc: Any) -> SymMatrix:
    _require(doc, "entries")
    rows = [[_scalar(x) for x in _list(r, "each row")] for r in _list(doc["entries"], "entries")]
    m = SymMatrix.from_rows(rows)
    if "order" in doc and doc["order"] != m.order:
        raise PlaneSeqError(f"order = {doc['order']!r} does not match {m.order} rows")
    return m


def tridiag_to_json(b: TriDiagSym) -> dict:
    return {"diag": [format_rational(x) for x in b.diag],
            "super": [format_rational(x) for x in b.superdiag]}


def tridiag_from_json(doc: Any) -> TriDiagSym:
    _require(doc, "diag")
    diag = [_scalar(x) for x in _list(doc["diag"], "diag")]
    sup = [_scalar(x) for x in _list(doc.get("super", []), "super")]
    return TriDiagSym(tuple(diag), tuple(sup))


def label_to_json(label: ComponentLabel) -> dict:
    return {"n": label.n, "interior_signs": list(label.interior_signs), "signature": label.signature}


def label_from_json(doc: Any) -> ComponentLabel:
    _require(doc, "interior_signs", "signature")
    signs = _list(doc["interior_signs"], "interior_signs")
    sig = doc["signature"]
    if not all(isinstance(s, int) and not isinstance(s, bool) for s in signs + [sig]):
        raise PlaneSeqError("label entries must be integers")
    label = ComponentLabel(tuple(signs), sig)
    if "n" in doc and doc["n"] != label.n:
        raise PlaneSeqError(f"n = {doc['n']!r} does not match {len(signs)} interior signs")
    return label

"""JSON documents: parsing with positions, canonical serialization, loading into values."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..colimits import Presentation
from ..core import (DoubleCategory, DoubleFunctor, SquareBoundary, TwoCategory,
                    functor_to_document, to_document, validate_double_category,
                    validate_double_functor, validate_two_category)
from ..errors import DocumentSyntaxError, MalformedDocument, UnknownKind

KINDS = ("double_category", "two_category", "double_functor", "presentation",
         "generating_set_ref", "report")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: dict = field(default_factory=dict)

    def as_json(self) -> dict:
        return {**self.payload, "kind": self.kind}


def parse_document(text: str) -> Document:
    """Parse JSON text; identifiers are resolved later by the validators."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise DocumentSyntaxError("top level must be a JSON object", 1, 1)
    kind = data.get("kind", "double_category")
    if kind not in KINDS:
        raise UnknownKind(f"unknown document kind {kind!r}")
    payload = {k: v for k, v in data.items() if k != "kind"}
    return Document(kind, payload)


def _canonical(value):
    if isinstance(value, Document):
        return value.as_json()
    if isinstance(value, TwoCategory):
        return to_document(value, "two_category")
    if isinstance(value, DoubleCategory):
        return to_document(value)
    if isinstance(value, DoubleFunctor):
        return functor_to_document(value)
    if isinstance(value, Presentation):
        return presentation_to_document(value)
    if isinstance(value, dict):
        return value
    raise TypeError(f"cannot serialize {type(value).__name__}")


def serialize_document(value) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(_canonical(value), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def presentation_to_document(P: Presentation) -> dict:
    return {
        "kind": "presentation",
        "base": to_document(P.base),
        "objects": list(P.objects),
        "hmor": [{"name": n, "src": s, "tgt": t} for n, s, t in P.hmor],
        "vmor": [{"name": n, "src": s, "tgt": t} for n, s, t in P.vmor],
        "squares": [dict(name=n, **SquareBoundary(*b)._asdict()) for n, b in P.squares],
        "identify": [list(p) for p in P.identify],
    }


def _endpoint(ref, base: Path | None) -> DoubleCategory:
    if isinstance(ref, str):
        path = Path(ref) if base is None else base / ref
        return load_value(parse_document(path.read_text(encoding="utf-8")), path.parent)
    if isinstance(ref, dict):
        return load_value(Document(ref.get("kind", "double_category"),
                                   {k: v for k, v in ref.items() if k != "kind"}), base)
    raise MalformedDocument(f"functor endpoint must be a path or a document, got {ref!r}")


def load_value(doc: Document, base: Path | None = None) -> Any:
    """Turn a document into a validated value.

    Functor endpoints given as paths are resolved against ``base``.
    """
    body = doc.payload
    if doc.kind == "double_category":
        return validate_double_category(body)
    if doc.kind == "two_category":
        return validate_two_category(body)
    if doc.kind == "double_functor":
        for key in ("source", "target"):
            if key not in body:
                raise MalformedDocument(f"functor document lacks {key!r}")
        return validate_double_functor(body, _endpoint(body["source"], base),
                                       _endpoint(body["target"], base))
    if doc.kind == "presentation":
        host = _endpoint(body.get("base", {}), base)
        triples = lambda key: tuple((r["name"], r["src"], r["tgt"]) for r in body.get(key, []))
        return Presentation(
            host, tuple(body.get("objects", [])), triples("hmor"), triples("vmor"),
            tuple((r["name"], SquareBoundary(r["top"], r["bottom"], r["left"], r["right"]))
                  for r in body.get("squares", [])),
            tuple(tuple(p) for p in body.get("identify", [])))
    if doc.kind == "generating_set_ref":
        from ..lifting import generating_set
        return generating_set(body["name"])
    return body


def read_document(path) -> Document:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def load_file(path) -> Any:
    path = Path(path)
    return load_value(read_document(path), path.parent)


def write_document(path, value) -> None:
    Path(path).write_text(serialize_document(value), encoding="utf-8")

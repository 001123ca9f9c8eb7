"""JSON ring and module files."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .errors import ShapeError
from .module import FiniteModule, validate_module
from .ring import FiniteRing, validate_ring


def load_document(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ShapeError(f"{path}: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("kind") not in ("ring", "module"):
        raise ShapeError(f"{path}: expected an object with kind 'ring' or 'module'")
    return doc


def ring_from_doc(doc: dict) -> FiniteRing:
    if doc.get("kind") != "ring":
        raise ShapeError("not a ring document")
    return validate_ring(doc)


def module_from_doc(R: FiniteRing, doc: dict) -> FiniteModule:
    if doc.get("kind") != "module":
        raise ShapeError("not a module document")
    if doc.get("ring") not in (None, R.name):
        raise ShapeError(f"module is over {doc.get('ring')!r}, not {R.name!r}")
    return validate_module(R, doc)


def resolve_ring(name: str, near: Optional[Path] = None) -> FiniteRing:
    """A builtin ring by name, else ``<name>.json`` next to ``near``."""
    from .harness.catalog import BUILTIN_RINGS, builtin_ring

    if name in BUILTIN_RINGS:
        return builtin_ring(name)
    if near is not None:
        candidate = Path(near).parent / f"{name}.json"
        if candidate.exists():
            return ring_from_doc(load_document(candidate))
    raise ShapeError(f"cannot resolve ring {name!r}")


def load_module(path, ring: Optional[FiniteRing] = None) -> FiniteModule:
    doc = load_document(path)
    if ring is None:
        ring = resolve_ring(str(doc.get("ring")), Path(path))
    return module_from_doc(ring, doc)


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))

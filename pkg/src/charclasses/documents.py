"""JSON descriptions of rings, spaces, and bundles.

A space document looks like::

    {
      "characteristic": 0,
      "ring": {
        "generators": [{"name": "y", "degree": 4}],
        "relations": [{"lhs": "y^3", "rhs": "0"}]
      },
      "dimension": 8,
      "fundamental": "y^2",
      "total_p": "1+2*y+7*y^2",
      "euler": "3*y^2"
    }

with an optional "total_w" polynomial in characteristic 2.  Bundle
documents carry a "kind" discriminator::

    {"kind": "product", "base": <space>, "fibre": <space>}
    {"kind": "projectivization", "base": <space or bare ring document>,
     "chern": ["c1", "c2"], "twist": "t"}

where a bare ring document is {"characteristic": ..., "ring": {...}} and
"twist" (optional) names the appended degree-2 generator.  All polynomial
payloads use the text syntax of :mod:`charclasses.rings`.

Validation failures raise :class:`DocumentError` whose message starts with
the JSON-pointer-style path of the offending field.
"""

from __future__ import annotations

from typing import Any, Mapping

from .bundles import BundleModel, product_bundle, projectivize
from .rings import GradedPoly, Ring
from .spaces import SpaceModel

__all__ = [
    "DocumentError",
    "bundle_from_document",
    "ring_from_document",
    "ring_to_document",
    "space_from_document",
    "space_to_document",
]


class DocumentError(ValueError):
    """A document failed validation; the message names the bad field."""

    def __init__(self, path: str, message: str) -> None:
        self.path = path or "/"
        super().__init__(f"{self.path}: {message}")


def _field(doc: Mapping[str, Any], key: str, path: str) -> Any:
    if not isinstance(doc, Mapping):
        raise DocumentError(path, "expected a JSON object")
    if key not in doc:
        raise DocumentError(f"{path}/{key}", "missing required field")
    return doc[key]


def _int_field(doc: Mapping[str, Any], key: str, path: str, minimum: int) -> int:
    value = _field(doc, key, path)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise DocumentError(f"{path}/{key}", f"expected an integer >= {minimum}")
    return value


def _str_field(doc: Mapping[str, Any], key: str, path: str) -> str:
    value = _field(doc, key, path)
    if not isinstance(value, str) or not value.strip():
        raise DocumentError(f"{path}/{key}", "expected a nonempty string")
    return value


def _poly_field(
    doc: Mapping[str, Any], key: str, path: str, ring: Ring
) -> GradedPoly:
    text = _str_field(doc, key, path)
    try:
        return ring.poly(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{path}/{key}", str(exc)) from exc


def ring_from_document(
    doc: Mapping[str, Any], characteristic: int, path: str = ""
) -> Ring:
    """Build a ring from {"generators": [...], "relations": [...]}."""
    gen_docs = _field(doc, "generators", path)
    if not isinstance(gen_docs, list):
        raise DocumentError(f"{path}/generators", "expected a list")
    generators = []
    for i, gen_doc in enumerate(gen_docs):
        gen_path = f"{path}/generators/{i}"
        name = _str_field(gen_doc, "name", gen_path)
        degree = _int_field(gen_doc, "degree", gen_path, minimum=1)
        generators.append((name, degree))
    relation_docs = doc.get("relations", [])
    if not isinstance(relation_docs, list):
        raise DocumentError(f"{path}/relations", "expected a list")
    rules = []
    for i, rel_doc in enumerate(relation_docs):
        rel_path = f"{path}/relations/{i}"
        rules.append((_str_field(rel_doc, "lhs", rel_path),
                      _str_field(rel_doc, "rhs", rel_path)))
    try:
        return Ring(characteristic, generators, rules)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(path or "/", str(exc)) from exc


def ring_to_document(ring: Ring) -> dict:
    """The {"generators", "relations"} document of a ring."""
    relations = []
    for idx in sorted(ring.rules):
        power, rhs = ring.rules[idx]
        rhs_poly = GradedPoly(ring, rhs, _normalized=True)
        relations.append(
            {"lhs": f"{ring.names[idx]}^{power}", "rhs": str(rhs_poly)}
        )
    return {
        "generators": [
            {"name": g.name, "degree": g.degree} for g in ring.generators
        ],
        "relations": relations,
    }


def _characteristic_field(doc: Mapping[str, Any], path: str) -> int:
    value = _field(doc, "characteristic", path)
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise DocumentError(f"{path}/characteristic", "expected 0 or a prime")
    return value


def space_from_document(doc: Mapping[str, Any], path: str = "") -> SpaceModel:
    """Build a SpaceModel from its JSON document."""
    characteristic = _characteristic_field(doc, path)
    ring = ring_from_document(_field(doc, "ring", path), characteristic,
                              f"{path}/ring")
    dimension = _int_field(doc, "dimension", path, minimum=0)
    fundamental_text = _str_field(doc, "fundamental", path)
    try:
        fundamental = ring.monomial(fundamental_text)
    except ValueError as exc:
        raise DocumentError(f"{path}/fundamental", str(exc)) from exc
    total_p = _poly_field(doc, "total_p", path, ring)
    euler = _poly_field(doc, "euler", path, ring)
    total_w = None
    if "total_w" in doc:
        total_w = _poly_field(doc, "total_w", path, ring)
    try:
        return SpaceModel(
            ring=ring,
            dimension=dimension,
            fundamental=fundamental,
            total_p=total_p,
            euler=euler,
            total_w=total_w,
        )
    except ValueError as exc:
        raise DocumentError(path or "/", str(exc)) from exc


def space_to_document(space: SpaceModel) -> dict:
    """The JSON document of a SpaceModel (inverse of space_from_document)."""
    doc = {
        "characteristic": space.ring.characteristic,
        "ring": ring_to_document(space.ring),
        "dimension": space.dimension,
        "fundamental": space.ring.monomial_str(space.fundamental) or "1",
        "total_p": str(space.total_p),
        "euler": str(space.euler),
    }
    if space.total_w is not None:
        doc["total_w"] = str(space.total_w)
    return doc


def bundle_from_document(doc: Mapping[str, Any], path: str = "") -> BundleModel:
    """Build a BundleModel from its JSON document."""
    kind = _str_field(doc, "kind", path)
    if kind == "product":
        base = space_from_document(_field(doc, "base", path), f"{path}/base")
        fibre = space_from_document(_field(doc, "fibre", path), f"{path}/fibre")
        try:
            return product_bundle(base, fibre)
        except ValueError as exc:
            raise DocumentError(path or "/", str(exc)) from exc
    if kind == "projectivization":
        base_doc = _field(doc, "base", path)
        base_path = f"{path}/base"
        if isinstance(base_doc, Mapping) and "dimension" in base_doc:
            base: Ring | SpaceModel = space_from_document(base_doc, base_path)
            base_ring = base.ring
        else:
            characteristic = _characteristic_field(base_doc, base_path)
            base = ring_from_document(
                _field(base_doc, "ring", base_path), characteristic,
                f"{base_path}/ring"
            )
            base_ring = base
        chern_docs = _field(doc, "chern", path)
        if not isinstance(chern_docs, list) or not chern_docs:
            raise DocumentError(f"{path}/chern", "expected a nonempty list")
        classes = []
        for i, text in enumerate(chern_docs):
            item_path = f"{path}/chern/{i}"
            if not isinstance(text, str):
                raise DocumentError(item_path, "expected a polynomial string")
            try:
                classes.append(base_ring.poly(text))
            except (ValueError, ZeroDivisionError) as exc:
                raise DocumentError(item_path, str(exc)) from exc
        twist = doc.get("twist", "t")
        if not isinstance(twist, str) or not twist:
            raise DocumentError(f"{path}/twist", "expected a generator name")
        try:
            return projectivize(base, classes, twist=twist)
        except ValueError as exc:
            raise DocumentError(path or "/", str(exc)) from exc
    raise DocumentError(
        f"{path}/kind", f"unknown bundle kind {kind!r}; "
        "expected 'product' or 'projectivization'"
    )

"""JSON interchange format.

A group is ``{"cyclic_orders": [n_1, ...]}``; an element is an array of
residues, or a bare integer in a cyclic group; a collection is
``{"group": ..., "sets": [[...], ...]}``; subgroups inside spec files are
given by generator arrays. Emitted documents use sorted keys, canonical
element order and a trailing newline, so equal objects give equal bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from . import construct
from .bimodal_check import DifferenceProfile, Verdict
from .classify import ClassificationReport
from .collection import SetCollection
from .construct import StarSpec
from .enumerate_oracle import DEFAULT_BUDGET, EnumerationResult, EnumerationScope
from .errors import InvalidElementError, SchemaError
from .group_core import GroupElement, GroupSpec, Subgroup, subgroup_generate

_ELEMENT = {
    "oneOf": [
        {"type": "integer"},
        {"type": "array", "items": {"type": "integer"}},
    ]
}
_ELEMENTS = {"type": "array", "items": _ELEMENT}
_GROUP = {
    "type": "object",
    "required": ["cyclic_orders"],
    "properties": {"cyclic_orders": {"type": "array", "items": {"type": "integer", "minimum": 1}}},
}
_SUBGROUP = _ELEMENTS  # generators

COLLECTION_SCHEMA = {
    "type": "object",
    "required": ["group", "sets"],
    "properties": {"group": _GROUP, "sets": {"type": "array", "minItems": 1, "items": _ELEMENTS}},
}

SCOPE_SCHEMA = {
    "type": "object",
    "required": ["group"],
    "properties": {
        "group": _GROUP,
        "support": _ELEMENTS,
        "max_support": {"type": "integer", "minimum": 0},
        "min_support": {"type": "integer", "minimum": 0},
        "max_parts": {"type": ["integer", "null"], "minimum": 1},
        "dedupe": {"enum": ["none", "shift"]},
        "budget": {"type": "integer", "minimum": 0},
    },
}

CONSTRUCT_SCHEMAS = {
    "cosets": {
        "type": "object",
        "required": ["group", "subgroup", "reps"],
        "properties": {"group": _GROUP, "subgroup": _SUBGROUP, "reps": _ELEMENTS},
    },
    "group-partition": {
        "type": "object",
        "required": ["group", "subgroups"],
        "properties": {"group": _GROUP, "subgroups": {"type": "array", "items": _SUBGROUP}},
    },
    "mixed-partition": {
        "type": "object",
        "required": ["group", "subgroups"],
        "properties": {"group": _GROUP, "subgroups": {"type": "array", "items": _SUBGROUP}},
    },
    "shift": {
        "type": "object",
        "required": ["group", "sets", "by"],
        "properties": {"group": _GROUP, "sets": COLLECTION_SCHEMA["properties"]["sets"], "by": _ELEMENT},
    },
    "subdivide": {
        "type": "object",
        "required": ["group", "sets", "index", "parts"],
        "properties": {
            "group": _GROUP,
            "sets": COLLECTION_SCHEMA["properties"]["sets"],
            "index": {"type": "integer", "minimum": 0},
            "parts": {"type": "array", "items": _ELEMENTS},
        },
    },
    "star": {
        "type": "object",
        "required": ["group", "subgroups", "kernel"],
        "properties": {
            "group": _GROUP,
            "subgroups": {"type": "array", "items": _SUBGROUP},
            "kernel": _SUBGROUP,
            "interior": _ELEMENTS,
            "outer": _ELEMENTS,
        },
    },
    "r1": {
        "type": "object",
        "required": ["group", "h1", "a1"],
        "properties": {
            "group": _GROUP,
            "h1": _SUBGROUP,
            "a1": _ELEMENTS,
            "tiling": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["subgroup", "rep"],
                    "properties": {"subgroup": _SUBGROUP, "rep": _ELEMENT},
                },
            },
        },
    },
}


def validate(doc, schema) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        raise SchemaError(f"{e.json_path}: {e.message}") from None


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None


def load(path) -> object:
    return loads(Path(path).read_text())


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


# --- decoding -----------------------------------------------------------


def parse_group(doc) -> GroupSpec:
    validate(doc, _GROUP)
    return GroupSpec(tuple(doc["cyclic_orders"]))


def _elements(G: GroupSpec, items, where: str) -> list[GroupElement]:
    out = []
    for n, x in enumerate(items):
        try:
            out.append(G.element(x))
        except InvalidElementError as e:
            raise InvalidElementError(f"{where}[{n}]: {e}") from None
    return out


def parse_subgroup(G: GroupSpec, gens, where: str = "subgroup") -> Subgroup:
    return subgroup_generate(G, _elements(G, gens, where))


def parse_collection(doc) -> SetCollection:
    validate(doc, COLLECTION_SCHEMA)
    G = parse_group(doc["group"])
    sets = [tuple(_elements(G, s, f"$.sets[{i}]")) for i, s in enumerate(doc["sets"])]
    return SetCollection(G, tuple(sets))


def parse_scope(doc, **overrides) -> EnumerationScope:
    validate(doc, SCOPE_SCHEMA)
    G = parse_group(doc["group"])
    kw = {k: doc[k] for k in ("max_support", "min_support", "max_parts", "dedupe", "budget") if k in doc}
    if "support" in doc:
        kw["support"] = tuple(_elements(G, doc["support"], "$.support"))
    kw.update({k: v for k, v in overrides.items() if v is not None})
    kw.setdefault("budget", DEFAULT_BUDGET)
    return EnumerationScope(G, **kw)


def parse_star_spec(doc) -> StarSpec:
    validate(doc, CONSTRUCT_SCHEMAS["star"])
    G = parse_group(doc["group"])
    return StarSpec(
        ambient=G,
        subgroups=tuple(parse_subgroup(G, g, f"$.subgroups[{i}]") for i, g in enumerate(doc["subgroups"])),
        kernel=parse_subgroup(G, doc["kernel"], "$.kernel"),
        interior_coset_reps=tuple(_elements(G, doc.get("interior", []), "$.interior")),
        outer_h_coset_reps=tuple(_elements(G, doc.get("outer", []), "$.outer")),
    )


def build(kind: str, doc) -> SetCollection:
    """Run the constructor named ``kind`` on a spec document."""
    if kind not in CONSTRUCT_SCHEMAS:
        raise SchemaError(f"unknown construction {kind!r}; choose from {', '.join(CONSTRUCT_SCHEMAS)}")
    validate(doc, CONSTRUCT_SCHEMAS[kind])
    if kind == "star":
        return construct.construct_star(parse_star_spec(doc))
    G = parse_group(doc["group"])
    if kind == "cosets":
        H = parse_subgroup(G, doc["subgroup"], "$.subgroup")
        return construct.construct_cosets(H, _elements(G, doc["reps"], "$.reps"))
    if kind in ("group-partition", "mixed-partition"):
        subs = [parse_subgroup(G, g, f"$.subgroups[{i}]") for i, g in enumerate(doc["subgroups"])]
        fn = construct.construct_group_partition if kind == "group-partition" else construct.construct_mixed_partition
        return fn(G, subs)
    if kind == "shift":
        C = parse_collection({"group": doc["group"], "sets": doc["sets"]})
        return construct.shift(C, G.element(doc["by"]))
    if kind == "subdivide":
        C = parse_collection({"group": doc["group"], "sets": doc["sets"]})
        parts = [_elements(G, p, f"$.parts[{i}]") for i, p in enumerate(doc["parts"])]
        return construct.subdivide(C, doc["index"], parts)
    # r1
    H1 = parse_subgroup(G, doc["h1"], "$.h1")
    tiling = [
        (parse_subgroup(G, t["subgroup"], f"$.tiling[{i}].subgroup"), G.element(t["rep"]))
        for i, t in enumerate(doc.get("tiling", []))
    ]
    return construct.construct_r1(G, H1, _elements(G, doc["a1"], "$.a1"), tiling)


# --- encoding -----------------------------------------------------------


def group_doc(G: GroupSpec) -> dict:
    return {"cyclic_orders": list(G.cyclic_orders)}


def element_doc(G: GroupSpec, x: GroupElement):
    return x[0] if G.rank == 1 else list(x)


def elements_doc(G: GroupSpec, xs) -> list:
    return [element_doc(G, x) for x in sorted(xs)]


def collection_doc(C: SetCollection) -> dict:
    return {"group": group_doc(C.ambient), "sets": [elements_doc(C.ambient, s) for s in C.sets]}


def emit_collection(C: SetCollection) -> str:
    return dumps(collection_doc(C))


def verdict_doc(G: GroupSpec, v: Verdict) -> dict:
    doc = {"bimodal": v.bimodal, "method": v.method}
    if not v.bimodal:
        doc["set_index"] = v.set_index
        if v.delta is not None:
            doc["delta"] = element_doc(G, v.delta)
            doc["count"] = v.count
            doc["set_size"] = v.set_size
        if v.element is not None:
            doc["element"] = element_doc(G, v.element)
    return doc


def profile_doc(P: DifferenceProfile) -> dict:
    G = P.collection.ambient
    return {
        "group": group_doc(G),
        "set_sizes": list(P.set_sizes),
        "table": [
            {"set": i, "counts": [[element_doc(G, d), n] for d, n in sorted(row.items())]}
            for i, row in enumerate(P.table)
        ],
    }


def subgroup_doc(H: Subgroup | None):
    return None if H is None else elements_doc(H.ambient, H.elements)


def report_doc(R: ClassificationReport) -> dict:
    G = R.collection.ambient
    return {
        "collection": collection_doc(R.collection),
        "case": R.case,
        "r": R.r,
        "reorder": list(R.reorder),
        "per_set": [
            {"size": p.size, "internal_group": subgroup_doc(p.group), "full": p.full} for p in R.per_set
        ],
        "kernel": None if R.kernel is None else elements_doc(G, R.kernel),
        "kernel_group": subgroup_doc(R.kernel_group),
        "sum_group": subgroup_doc(R.sum_group),
        "canonical_shift": element_doc(G, R.canonical_shift),
        "valid_shifts": R.valid_shifts,
        "interior_sets": list(R.interior_sets),
        "coset_tiling": [{"rep": element_doc(G, rep), "sets": list(idx)} for rep, idx in R.coset_tiling],
    }


def scope_doc(S: EnumerationScope) -> dict:
    doc = {
        "group": group_doc(S.group),
        "min_support": S.min_support,
        "max_parts": S.max_parts,
        "dedupe": S.dedupe,
        "budget": S.budget,
    }
    if S.support is not None:
        doc["support"] = elements_doc(S.group, S.support)
    else:
        doc["max_support"] = S.max_support
    return doc


def census_doc(res: EnumerationResult) -> dict:
    doc = {
        "scope": scope_doc(res.scope),
        "candidates": res.candidates,
        "count": res.count,
        "by_case": dict(res.by_case),
        "by_shape": [{"m": m, "r": r, "count": n} for m, r, n in res.census_rows()],
    }
    if res.collections is not None:
        doc["collections"] = [collection_doc(C)["sets"] for C in res.collections]
    return doc


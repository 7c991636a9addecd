"""JSON documents: lattices (optionally with an orthocomplement), state
models, maps, environments, completions and sequents.

Canonical lattice documents list elements in lattice index order and cover
pairs sorted by index.  Loading keeps the listed order, so element indices
(and with them every witness) survive a save/load cycle, and
:func:`dumps` is deterministic so load/emit round-trips byte for byte.
"""
from __future__ import annotations

import json
import os
from typing import Union

from .adjunction import make_map
from .completion import CompletionLattice, StateModel, enumerate_completion, load_state_model
from .dynamics import Environment, freeze, make_environment, sasaki_environment
from .errors import DocumentError, NotAMember
from .ortho import OrthoLattice, attach_ortho, lattice_of
from .poset import DEFAULT_MAX_LATTICE_SIZE, Ideal, Lattice, build_lattice, down


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def lattice_doc(L: Union[Lattice, OrthoLattice]) -> dict:
    base = lattice_of(L)
    doc = {
        "elements": list(base.names),
        "covers": [[base.names[i], base.names[j]] for i, j in sorted(base.covers)],
    }
    if isinstance(L, OrthoLattice):
        doc["ortho"] = dict(sorted(L.comp_named().items()))
    return doc


def load_lattice(doc: dict, cap: int = DEFAULT_MAX_LATTICE_SIZE) -> Union[Lattice, OrthoLattice]:
    try:
        elements, covers = doc["elements"], doc["covers"]
    except (KeyError, TypeError):
        raise DocumentError("lattice document needs 'elements' and 'covers'") from None
    L = build_lattice(elements, [tuple(p) for p in covers], cap=cap)
    if "ortho" in doc:
        return attach_ortho(L, doc["ortho"])
    return L


def _resolve_lattice(ref, root, cap):
    if isinstance(ref, str):
        return load_lattice(read_json(os.path.join(root, ref)), cap)
    return load_lattice(ref, cap)


def state_model_doc(M: StateModel) -> dict:
    return {"states": list(M.states), "sat": {k: sorted(v) for k, v in M.to_sat_dict().items()}}


def load_state_model_doc(L: Lattice, doc: dict) -> StateModel:
    try:
        return load_state_model(lattice_of(L), doc["states"], doc["sat"])
    except KeyError:
        raise DocumentError("state model document needs 'states' and 'sat'") from None


def map_doc(f) -> dict:
    return {"dom": lattice_doc(f.dom), "cod": lattice_doc(f.cod),
            "table": dict(sorted(f.named().items()))}


def load_map(doc: dict, root=".", cap: int = DEFAULT_MAX_LATTICE_SIZE):
    dom = lattice_of(_resolve_lattice(doc["dom"], root, cap))
    cod = lattice_of(_resolve_lattice(doc["cod"], root, cap))
    return make_map(dom, cod, doc["table"])


def load_environment(doc: dict, root=".", cap: int = DEFAULT_MAX_LATTICE_SIZE) -> Environment:
    kind = doc.get("kind", "table")
    L = _resolve_lattice(doc["lattice"], root, cap) if "lattice" in doc else None
    if kind == "sasaki":
        if not isinstance(L, OrthoLattice):
            raise DocumentError("a sasaki environment needs an ortholattice")
        return sasaki_environment(L, doc["on"])
    if kind == "freeze":
        return freeze(lattice_of(L))
    if kind == "table":
        base = lattice_of(L)
        prop = make_map(base, base, doc["prop"])
        return make_environment(doc.get("label", "e"), prop)
    raise DocumentError(f"unknown environment kind {kind!r}")


def environment_doc(E: Environment) -> dict:
    doc = {"label": E.label, "kind": E.kind,
           "lattice": lattice_doc(E.ortho if E.ortho is not None else E.dom)}
    if E.kind == "sasaki":
        doc["on"] = E.dom.names[E.on]
    elif E.kind == "table":
        doc["prop"] = dict(sorted(E.prop.named().items()))
    return doc


def completion_doc(C: CompletionLattice) -> dict:
    base = C.ortho if C.ortho is not None else C.base
    return {"base": lattice_doc(base), "mode": C.mode, "ideals": C.names()}


def load_completion(doc: dict, cap: int = DEFAULT_MAX_LATTICE_SIZE,
                    completion_cap: int = 65536) -> CompletionLattice:
    base = load_lattice(doc["base"], cap)
    C = enumerate_completion(base, doc.get("mode", "distributive"), cap=completion_cap,
                             lattice_cap=cap)
    listed = doc.get("ideals")
    if listed is not None and sorted(map(sorted, listed)) != sorted(C.names()):
        raise DocumentError("listed ideals do not match the recomputed completion")
    return C


def is_completion_doc(doc) -> bool:
    return isinstance(doc, dict) and "base" in doc and "mode" in doc


def ideal_from_spec(C: CompletionLattice, spec) -> Ideal:
    """``{"down": [names]}`` or ``{"ideal": [names]}``; must be a member of ``C``."""
    if "down" in spec:
        A = down(C.base, spec["down"])
    elif "ideal" in spec:
        A = Ideal(C.base, C.base.mask_of(spec["ideal"]))
    else:
        raise DocumentError(f"ideal spec needs 'down' or 'ideal': {spec!r}")
    if A not in C:
        raise NotAMember(f"{A!r} is not a member of the {C.mode} completion")
    return A


def load_sequent(C: CompletionLattice, doc: dict):
    try:
        return ([ideal_from_spec(C, s) for s in doc["antecedents"]],
                [ideal_from_spec(C, s) for s in doc["consequents"]])
    except KeyError:
        raise DocumentError("sequent needs 'antecedents' and 'consequents'") from None

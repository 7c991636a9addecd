"""Tabulated monotone maps between finite lattices and their Galois adjoints."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from . import _kernels
from .errors import (CapExceeded, DomainMismatch, NotJoinPreserving, NotMeetPreserving,
                     NotMonotone)
from .poset import Lattice, Verdict, bits, join_of, meet_of

DEFAULT_MAX_SUBSET_SIZE = 20


@dataclass(frozen=True)
class MonotoneMap:
    dom: Lattice
    cod: Lattice
    table: tuple

    def __call__(self, x) -> int:
        return self.table[self.dom.idx(x)]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def named(self) -> dict:
        return {self.dom.names[i]: self.cod.names[v] for i, v in enumerate(self.table)}

    def __repr__(self):
        return f"MonotoneMap({self.named()})"


def make_map(dom: Lattice, cod: Lattice, table: Union[Mapping, Sequence]) -> MonotoneMap:
    """Build a map from a name/index mapping or a sequence indexed by ``dom``."""
    if isinstance(table, Mapping):
        resolved = {dom.idx(k): cod.idx(v) for k, v in table.items()}
        missing = [dom.names[i] for i in range(dom.n) if i not in resolved]
        if missing:
            raise ValueError(f"map is not total; missing {missing}")
        values = tuple(resolved[i] for i in range(dom.n))
    else:
        if len(table) != dom.n:
            raise ValueError(f"map table has {len(table)} entries for {dom.n} elements")
        values = tuple(cod.idx(v) for v in table)
    for x in range(dom.n):
        for y in bits(int(dom.up_masks[x])):
            if not cod.leq[values[x], values[y]]:
                raise NotMonotone(
                    f"{dom.names[x]} <= {dom.names[y]} but images are not ordered",
                    (dom.names[x], dom.names[y]))
    return MonotoneMap(dom, cod, values)


def identity_map(L: Lattice) -> MonotoneMap:
    return MonotoneMap(L, L, tuple(range(L.n)))


def constant_map(dom: Lattice, cod: Lattice, value) -> MonotoneMap:
    return MonotoneMap(dom, cod, (cod.idx(value),) * dom.n)


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """``g . f`` (apply ``f`` first)."""
    if f.cod != g.dom:
        raise DomainMismatch("codomain of the inner map is not the domain of the outer map")
    return MonotoneMap(f.dom, g.cod, tuple(g.table[v] for v in f.table))


def pointwise_le(f: MonotoneMap, g: MonotoneMap) -> bool:
    return all(f.cod.leq[a, b] for a, b in zip(f.table, g.table))


def _subset_witness(f: MonotoneMap, subset_ops, cap):
    dom = f.dom
    if dom.n > cap:
        raise CapExceeded(f"subset enumeration over {dom.n} elements exceeds cap {cap}")
    fold_name, cod_table, cod_identity = subset_ops
    dom_fold = getattr(dom, fold_name)  # built only once the cap check has passed
    fv = f.as_array()
    image_fold = _kernels.subset_fold(cod_table, fv, cod_identity)
    bad = np.nonzero(fv[dom_fold] != image_fold)[0]
    if bad.size == 0:
        return Verdict(True)
    mask = int(bad[0])
    return Verdict(False, tuple(dom.names_of(mask)),
                   f"image of the bound of {dom.names_of(mask)} differs from the bound of images")


def _pairwise_witness(f: MonotoneMap, dom_table, cod_table, dom_identity, cod_identity):
    """Empty bound plus every binary bound; on a finite lattice this decides
    preservation of all bounds without enumerating subsets."""
    dom, fv = f.dom, f.as_array()
    if fv[dom_identity] != cod_identity:
        return Verdict(False, (), "image of the empty bound is not the empty bound")
    bad = np.argwhere(fv[dom_table] != cod_table[fv[:, None], fv[None, :]])
    if bad.size == 0:
        return Verdict(True)
    a, b = (int(v) for v in bad[0])
    return Verdict(False, (dom.names[a], dom.names[b]),
                   f"image of the bound of {[dom.names[a], dom.names[b]]} differs")


@dataclass(frozen=True)
class PreservationProfile:
    meet_preserving: Verdict
    join_preserving: Verdict

    def to_dict(self):
        return {"meet_preserving": self.meet_preserving.to_dict(),
                "join_preserving": self.join_preserving.to_dict()}


def join_preservation(f: MonotoneMap, cap: int = DEFAULT_MAX_SUBSET_SIZE) -> Verdict:
    return _subset_witness(f, ("subset_joins", f.cod.join, f.cod.bottom), cap)


def meet_preservation(f: MonotoneMap, cap: int = DEFAULT_MAX_SUBSET_SIZE) -> Verdict:
    return _subset_witness(f, ("subset_meets", f.cod.meet, f.cod.top), cap)


def preservation_profile(f: MonotoneMap, cap: int = DEFAULT_MAX_SUBSET_SIZE) -> PreservationProfile:
    """Exhaustive check over every subset of the domain, empty set included."""
    return PreservationProfile(meet_preservation(f, cap), join_preservation(f, cap))


def right_adjoint(f: MonotoneMap, cap: int = DEFAULT_MAX_SUBSET_SIZE) -> MonotoneMap:
    """``b -> V{a | f(a) <= b}``.

    Domains above ``cap`` are checked on binary joins only.
    """
    if f.dom.n > cap:
        v = _pairwise_witness(f, f.dom.join, f.cod.join, f.dom.bottom, f.cod.bottom)
    else:
        v = join_preservation(f, cap)
    if not v:
        raise NotJoinPreserving(f"map does not preserve the join of {list(v.witness)}", v.witness)
    dom, cod = f.dom, f.cod
    table = tuple(
        join_of(dom, [a for a in range(dom.n) if cod.leq[f.table[a], b]]) for b in range(cod.n)
    )
    return MonotoneMap(cod, dom, table)


def left_adjoint(g: MonotoneMap, cap: int = DEFAULT_MAX_SUBSET_SIZE) -> MonotoneMap:
    """``a -> ^{b | a <= g(b)}``; large domains as in :func:`right_adjoint`."""
    if g.dom.n > cap:
        v = _pairwise_witness(g, g.dom.meet, g.cod.meet, g.dom.top, g.cod.top)
    else:
        v = meet_preservation(g, cap)
    if not v:
        raise NotMeetPreserving(f"map does not preserve the meet of {list(v.witness)}", v.witness)
    dom, cod = g.dom, g.cod
    table = tuple(
        meet_of(dom, [b for b in range(dom.n) if cod.leq[a, g.table[b]]]) for a in range(cod.n)
    )
    return MonotoneMap(cod, dom, table)


def verify_adjunction(f: MonotoneMap, g: MonotoneMap) -> Verdict:
    """Check ``f -| g`` both as the biconditional and in unit/counit form.

    On failure the witness is a pair ``(x, y)`` with exactly one of
    ``f(x) <= y`` and ``x <= g(y)`` true.  Counit failures ``f(g(y)) > y`` are
    reported first as ``(g(y), y)``, then unit failures ``x > g(f(x))`` as
    ``(x, f(x))``, each scanning in index order.
    """
    if f.cod != g.dom or g.cod != f.dom:
        raise DomainMismatch("f: L -> M needs g: M -> L")
    L, M = f.dom, f.cod
    fv, gv = f.as_array(), g.as_array()
    forward = M.leq[fv[:, None], np.arange(M.n)[None, :]]
    backward = L.leq[np.arange(L.n)[:, None], gv[None, :]]
    bicond = bool((forward == backward).all())
    unit_ok = L.leq[np.arange(L.n), gv[fv]]
    counit_ok = M.leq[fv[gv], np.arange(M.n)]
    unit_counit = bool(unit_ok.all() and counit_ok.all())
    if bicond != unit_counit:
        # both maps are monotone, so the two encodings are equivalent
        raise AssertionError("biconditional and unit/counit forms disagree")
    if bicond:
        return Verdict(True)
    if not counit_ok.all():
        y = int(np.argmin(counit_ok))
        x = int(gv[y])
        return Verdict(False, (L.names[x], M.names[y]),
                       f"f({L.names[x]}) = {M.names[fv[x]]} is not below {M.names[y]} "
                       f"but {L.names[x]} <= g({M.names[y]})")
    x = int(np.argmin(unit_ok))
    y = int(fv[x])
    return Verdict(False, (L.names[x], M.names[y]),
                   f"f({L.names[x]}) <= {M.names[y]} but {L.names[x]} is not below "
                   f"g({M.names[y]}) = {L.names[gv[y]]}")

"""Downset and distributive-ideal completions, their Heyting hook, state
models and the multi-premise consequence relation."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from . import _kernels
from .errors import CapExceeded, ModelMismatch, NotAMember, OrderIncompatible
from .ortho import OrthoLattice, lattice_of
from .poset import (Ideal, Lattice, Verdict, atoms_of, bits, is_downset, join_of, meet_of,
                    principal)

DEFAULT_MAX_COMPLETION_SIZE = 65536
MODES = ("ideals", "distributive")


@lru_cache(maxsize=64)
def distributive_table(L: Lattice) -> np.ndarray:
    """``table[mask]`` is True iff the subset ``mask`` is a distributive set."""
    return _kernels.distributive_flags(L.meet, L.join, L.subset_joins, L.bottom)


def is_distributive_join(L: Lattice, A) -> Verdict:
    """``b ^ VA == V{b ^ a}`` for every ``b``; the witness is the first failing ``b``."""
    idx = [L.idx(x) for x in A]
    top = join_of(L, idx)
    for b in range(L.n):
        piecewise = join_of(L, [L.meet[b, a] for a in idx])
        if L.meet[b, top] != piecewise:
            return Verdict(False, (L.names[b],),
                           f"{L.names[b]} ^ V = {L.names[L.meet[b, top]]} but the join of "
                           f"the pieces is {L.names[piecewise]}")
    return Verdict(True)


def _as_mask(L: Lattice, seed) -> int:
    if isinstance(seed, Ideal):
        return seed.mask
    if isinstance(seed, int):
        return seed
    return L.mask_of(seed)


def distributive_closure(L: Lattice, seed) -> Ideal:
    """Least distributive ideal containing the downset ``seed``."""
    mask = _as_mask(L, seed)
    if not is_downset(L, mask):
        raise ValueError(f"seed {L.names_of(mask)} is not a nonempty downset")
    dist, joins = distributive_table(L), L.subset_joins
    while True:
        bad = _kernels.closure_violation(mask, dist, joins)
        if bad < 0:
            return Ideal(L, mask)
        mask |= int(L.down_masks[joins[bad]])


def _sort_key(mask):
    return (bin(mask).count("1"), tuple(bits(mask)))


@dataclass(frozen=True, eq=False)
class CompletionLattice:
    """``I(L)`` (mode ``ideals``) or ``DI(L)`` (mode ``distributive``) ordered by inclusion.

    ``lattice`` is the completion itself as a :class:`Lattice` whose element
    ``i`` is the ideal ``masks[i]``.
    """

    base: Lattice
    mode: str
    masks: tuple
    lattice: Lattice
    ortho: Optional[OrthoLattice] = None
    _pos: dict = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def members(self) -> list:
        return [Ideal(self.base, m) for m in self.masks]

    def index(self, A: Ideal) -> int:
        try:
            return self._pos[A.mask]
        except KeyError:
            raise NotAMember(f"{A!r} is not a member of the {self.mode} completion") from None

    def __contains__(self, A: Ideal) -> bool:
        return A.mask in self._pos

    def member(self, i: int) -> Ideal:
        return Ideal(self.base, self.masks[i])

    @property
    def top(self) -> Ideal:
        return Ideal(self.base, self.base.full_mask)

    @property
    def bottom(self) -> Ideal:
        return principal(self.base, self.base.bottom)

    def down(self, x) -> Ideal:
        return principal(self.base, x)

    def join_all(self, ideals: Iterable[Ideal]) -> Ideal:
        """Intersection of all members containing the union."""
        union = 0
        for A in ideals:
            union |= A.mask
        out = self.base.full_mask
        for m in self.masks:
            if union & ~m == 0:
                out &= m
        return Ideal(self.base, out)

    def meet_all(self, ideals: Iterable[Ideal]) -> Ideal:
        out = self.base.full_mask
        for A in ideals:
            out &= A.mask
        return Ideal(self.base, out)

    def join(self, A: Ideal, B: Ideal) -> Ideal:
        return self.member(int(self.lattice.join[self.index(A), self.index(B)]))

    def meet(self, A: Ideal, B: Ideal) -> Ideal:
        return self.member(int(self.lattice.meet[self.index(A), self.index(B)]))

    def names(self) -> list:
        """Members as sorted element-name arrays."""
        return [sorted(self.base.names_of(m)) for m in self.masks]

    def __eq__(self, other):
        if not isinstance(other, CompletionLattice):
            return NotImplemented
        return self.mode == other.mode and self.masks == other.masks and self.base == other.base

    def __hash__(self):
        return hash((self.mode, self.masks))

    def __repr__(self):
        return f"CompletionLattice(mode={self.mode}, size={len(self.masks)})"


def ideal_label(L: Lattice, mask: int) -> str:
    return "{" + ",".join(L.names_of(mask)) + "}"


def _completion_lattice(L: Lattice, masks: Sequence[int]) -> Lattice:
    arr = np.asarray(masks, dtype=np.int64)
    m = len(masks)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    pos = {int(x): i for i, x in enumerate(arr)}
    meet = np.empty((m, m), dtype=np.int64)
    join = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        inter = arr[i] & arr
        meet[i] = [pos[int(x)] for x in inter]
        union = arr[i] | arr
        contains = (union[:, None] & ~arr[None, :]) == 0  # [j, k]: member k contains union
        acc = np.where(contains, arr[None, :], np.int64(L.full_mask))
        join[i] = [pos[int(x)] for x in np.bitwise_and.reduce(acc, axis=1)]
    for A in (meet, join):
        A.setflags(write=False)
    leq.setflags(write=False)
    names = tuple(ideal_label(L, int(x)) for x in arr)
    return Lattice(names, leq, meet, join, 0, m - 1, {x: i for i, x in enumerate(names)})


def enumerate_completion(L: Union[Lattice, OrthoLattice], mode: str = "distributive",
                         cap: int = DEFAULT_MAX_COMPLETION_SIZE,
                         lattice_cap: int = 24) -> CompletionLattice:
    """All nonempty downsets (``ideals``) or the distributive ideals among them."""
    ortho = L if isinstance(L, OrthoLattice) else None
    L = lattice_of(L)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if L.n > lattice_cap:
        raise CapExceeded(f"2^{L.n} subset enumeration exceeds lattice cap {lattice_cap}")
    masks = [int(m) for m in _kernels.downset_masks(L.down_masks)]
    if mode == "distributive":
        dist, joins = distributive_table(L), L.subset_joins
        masks = [m for m in masks if _kernels.closure_violation(m, dist, joins) < 0]
    if len(masks) > cap:
        raise CapExceeded(f"completion has {len(masks)} members, cap is {cap}")
    masks = tuple(sorted(masks, key=_sort_key))
    return CompletionLattice(L, mode, masks, _completion_lattice(L, masks), ortho,
                             {m: i for i, m in enumerate(masks)})


def closure_completion(L: Lattice) -> list:
    """DI(L) generated as the set of closures of all downsets (cross-check route)."""
    found = {distributive_closure(L, int(m)).mask for m in _kernels.downset_masks(L.down_masks)}
    return sorted(found, key=_sort_key)


def _require(C: CompletionLattice, *ideals):
    for A in ideals:
        C.index(A)


def heyting_hook(C: CompletionLattice, B: Ideal, Cc: Ideal) -> Ideal:
    """``{a | a ^ b in Cc for every b in B}``."""
    _require(C, B, Cc)
    L = C.base
    mask = 0
    for a in range(L.n):
        if all((Cc.mask >> int(L.meet[a, b])) & 1 for b in bits(B.mask)):
            mask |= 1 << a
    return Ideal(L, mask)


def external_hook(L: Lattice, b, c) -> Ideal:
    """``{a | a ^ b <= c}``, valued in DI(L)."""
    b, c = L.idx(b), L.idx(c)
    mask = 0
    for a in range(L.n):
        if L.leq[L.meet[a, b], c]:
            mask |= 1 << a
    return Ideal(L, mask)


def operational_resolution(C: CompletionLattice, A: Ideal) -> Ideal:
    """``A -> down(V_L A)``."""
    _require(C, A)
    return principal(C.base, join_of(C.base, bits(A.mask)))


def consequence(C: CompletionLattice, antecedents: Sequence[Ideal],
                consequents: Sequence[Ideal]) -> Verdict:
    """``/\\ antecedents  is contained in  V_C consequents``; witness = least escaping element."""
    _require(C, *antecedents, *consequents)
    left = C.meet_all(antecedents)
    right = C.join_all(consequents) if consequents else C.bottom
    escape = left.mask & ~right.mask
    if escape == 0:
        return Verdict(True)
    x = next(bits(escape))
    return Verdict(False, (C.base.names[x],),
                   f"{C.base.names[x]} lies in every antecedent but not in the consequent join")


# -- state models ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class StateModel:
    base: Lattice
    states: tuple
    sat: np.ndarray  # [state, element]

    def state(self, p) -> int:
        if isinstance(p, (int, np.integer)):
            return int(p)
        return self.states.index(p)

    def satisfies(self, p, A) -> bool:
        """``p |= A``: an element, or an ideal read as the disjunction of its members."""
        p = self.state(p)
        if isinstance(A, Ideal):
            return any(self.sat[p, a] for a in bits(A.mask))
        return bool(self.sat[p, self.base.idx(A)])

    def strongest(self, p) -> int:
        """Meet of everything ``p`` satisfies."""
        p = self.state(p)
        return meet_of(self.base, np.nonzero(self.sat[p])[0])

    def to_sat_dict(self) -> dict:
        return {s: [self.base.names[a] for a in np.nonzero(self.sat[i])[0]]
                for i, s in enumerate(self.states)}


def load_state_model(L: Lattice, states: Sequence, sat_pairs: Mapping) -> StateModel:
    """Validate ``a <= b  <=>  every state satisfying a satisfies b``."""
    states = tuple(str(s) for s in states)
    sat = np.zeros((len(states), L.n), dtype=bool)
    for p, elems in sat_pairs.items():
        if str(p) not in states:
            raise ValueError(f"unknown state {p!r}")
        for a in elems:
            sat[states.index(str(p)), L.idx(a)] = True
    for i, p in enumerate(states):
        if sat[i, L.bottom] and L.bottom != L.top:
            raise OrderIncompatible(f"state {p} satisfies 0", (p, L.names[L.bottom]))
        if not sat[i, L.top]:
            raise OrderIncompatible(f"state {p} does not satisfy 1", (p, L.names[L.top]))
    for a in range(L.n):
        for b in range(L.n):
            semantic = bool(np.all(~sat[:, a] | sat[:, b]))
            if semantic != bool(L.leq[a, b]):
                raise OrderIncompatible(
                    f"order says {L.names[a]} {'<=' if L.leq[a, b] else 'not <='} {L.names[b]} "
                    f"but satisfaction says otherwise", (L.names[a], L.names[b]))
    sat.setflags(write=False)
    return StateModel(L, states, sat)


def default_state_model(L: Union[Lattice, OrthoLattice]) -> StateModel:
    """States are the atoms; ``p |= a`` iff ``p <= a``.  Needs an atomistic lattice."""
    L = lattice_of(L)
    rep = atoms_of(L)
    if not rep.atomistic:
        raise ModelMismatch("the default model needs an atomistic lattice; supply a model")
    atoms = sorted(rep.atoms)
    return load_state_model(L, [L.names[p] for p in atoms],
                            {L.names[p]: [L.names[a] for a in bits(int(L.up_masks[p]))]
                             for p in atoms})


def cartan(M: StateModel, A) -> frozenset:
    """States satisfying the element or ideal ``A``."""
    return frozenset(s for i, s in enumerate(M.states) if M.satisfies(i, A))


def state_image(M: StateModel, C: CompletionLattice) -> set:
    """``{cartan(M, A) | A in C}``."""
    return {cartan(M, A) for A in C.members}


@dataclass(frozen=True)
class DisjunctivityReport:
    join: str
    disjunctive: bool
    distributive: Verdict
    superposition_states: tuple
    superposition_properties: tuple

    @property
    def hypothesis(self) -> bool:
        """Superposition states exist only alongside superposition properties."""
        return not self.superposition_states or bool(self.superposition_properties)

    @property
    def disjunction_matches_distributivity(self) -> bool:
        return not self.hypothesis or self.disjunctive == self.distributive.holds

    def to_dict(self):
        return {"join": self.join, "disjunctive": self.disjunctive,
                "distributive": self.distributive.to_dict(),
                "superposition_states": list(self.superposition_states),
                "superposition_properties": list(self.superposition_properties),
                "hypothesis": self.hypothesis, "disjunction_matches_distributivity": self.disjunction_matches_distributivity}


def disjunctivity_report(M: StateModel, A) -> DisjunctivityReport:
    L = M.base
    idx = sorted({L.idx(x) for x in A})
    if not idx:
        raise ValueError("A must be nonempty")
    j = join_of(L, idx)
    n_states = len(M.states)
    sat_A = [any(M.sat[p, a] for a in idx) for p in range(n_states)]
    sat_j = [bool(M.sat[p, j]) for p in range(n_states)]
    disjunctive = sat_A == sat_j
    sup_states = tuple(M.states[p] for p in range(n_states) if sat_j[p] and not sat_A[p])
    sup_props = tuple(
        L.names[b] for b in range(L.n)
        if L.leq[b, j] and b != j
        and any(M.sat[p, b] and not sat_A[p] for p in range(n_states))
    )
    return DisjunctivityReport(L.names[j], disjunctive, is_distributive_join(L, idx),
                               sup_states, sup_props)


def semantic_consequence(M: StateModel, antecedents, consequents) -> bool:
    """Every state satisfying all antecedents satisfies some consequent."""
    for p in range(len(M.states)):
        if all(M.satisfies(p, A) for A in antecedents) and not any(
                M.satisfies(p, B) for B in consequents):
            return False
    return True


@lru_cache(maxsize=64)
def hook_table(C: CompletionLattice) -> np.ndarray:
    """``table[i, j]`` = index of ``members[i] -> members[j]``, vectorised over pairs."""
    L = C.base
    arr = np.asarray(C.masks, dtype=np.int64)
    img = np.zeros((L.n, len(arr)), dtype=np.int64)
    for i, B in enumerate(C.masks):
        for b in bits(B):
            img[:, i] |= np.int64(1) << L.meet[:, b]
    inside = (img[:, :, None] & ~arr[None, None, :]) == 0  # [a, i, j]
    weights = np.int64(1) << np.arange(L.n, dtype=np.int64)
    hooks = (inside * weights[:, None, None]).sum(axis=0)
    return np.vectorize(lambda m: C._pos[int(m)], otypes=[np.int64])(hooks)

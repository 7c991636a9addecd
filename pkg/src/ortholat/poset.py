"""Finite bounded lattices stored as dense index tables.

Elements are the integers ``0..n-1`` with a parallel tuple of display names.
Subsets of elements are Python ints used as bitsets (bit ``i`` = element
``i``).  Meet and join tables are filled once at build time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .errors import CapExceeded, CyclicOrder, EmptyGenerator, NotALattice, NotBounded

DEFAULT_MAX_LATTICE_SIZE = 24


@dataclass(frozen=True)
class Verdict:
    """Outcome of a mathematical check.  Truthy iff the property holds."""

    holds: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {"holds": self.holds, "witness": list(self.witness) if self.witness else None,
                "detail": self.detail}


def bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _readonly(a):
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Lattice:
    names: tuple
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int
    _index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __getitem__(self, name) -> int:
        return self.idx(name)

    def idx(self, x) -> int:
        """Resolve a name or index to an index."""
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if not 0 <= x < self.n:
                raise KeyError(x)
            return int(x)
        return self._index[x]

    def name(self, i: int) -> str:
        return self.names[i]

    def mask_of(self, elements: Iterable) -> int:
        m = 0
        for x in elements:
            m |= 1 << self.idx(x)
        return m

    def names_of(self, mask: int) -> list:
        return [self.names[i] for i in bits(mask)]

    def le(self, x, y) -> bool:
        return bool(self.leq[self.idx(x), self.idx(y)])

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _weights(self):
        # past 62 elements masks no longer fit int64; fall back to Python ints
        if self.n <= 62:
            return np.int64(1) << np.arange(self.n, dtype=np.int64), np.int64
        return np.array([1 << i for i in range(self.n)], dtype=object), object

    @cached_property
    def down_masks(self) -> np.ndarray:
        w, dt = self._weights()
        return _readonly((self.leq.astype(dt) * w[:, None]).sum(axis=0))

    @cached_property
    def up_masks(self) -> np.ndarray:
        w, dt = self._weights()
        return _readonly((self.leq.astype(dt) * w[None, :]).sum(axis=1))

    @cached_property
    def covers(self) -> list:
        """Cover pairs ``(lower, upper)`` as index tuples, sorted."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        # x < y with no z strictly between
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        cov = lt & ~between
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(cov))]

    @cached_property
    def subset_joins(self) -> np.ndarray:
        """Join of every subset, indexed by bitmask."""
        return _readonly(_kernels.subset_fold(self.join, np.arange(self.n), self.bottom))

    @cached_property
    def subset_meets(self) -> np.ndarray:
        return _readonly(_kernels.subset_fold(self.meet, np.arange(self.n), self.top))

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.names == other.names and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.names, self.leq.tobytes()))

    def __repr__(self):
        return f"Lattice(n={self.n}, names={list(self.names)})"


@dataclass(frozen=True, eq=False)
class Ideal:
    """A nonempty downward-closed subset of ``base``."""

    base: Lattice
    mask: int

    @property
    def members(self) -> frozenset:
        return frozenset(bits(self.mask))

    def names(self) -> list:
        return self.base.names_of(self.mask)

    def __contains__(self, x) -> bool:
        return bool((self.mask >> self.base.idx(x)) & 1)

    def __le__(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.base, self.mask & other.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.mask == other.mask and (self.base is other.base or self.base == other.base)

    def __hash__(self):
        return hash(self.mask)

    def __repr__(self):
        return "Ideal{" + ",".join(self.names()) + "}"


def build_lattice(element_names, cover_pairs, cap: int = DEFAULT_MAX_LATTICE_SIZE) -> Lattice:
    """Build and validate a lattice from a Hasse diagram.

    ``cover_pairs`` may contain any generating pairs ``(lower, upper)``; the
    order is their reflexive-transitive closure.
    """
    names = tuple(str(x) for x in element_names)
    if len(set(names)) != len(names):
        dup = sorted({x for x in names if names.count(x) > 1})
        raise ValueError(f"duplicate element names: {dup}")
    n = len(names)
    if n == 0:
        raise NotBounded("empty element set")
    if n > cap:
        raise CapExceeded(f"lattice has {n} elements, cap is {cap}")
    index = {x: i for i, x in enumerate(names)}
    adj = np.zeros((n, n), dtype=bool)
    for lo, hi in cover_pairs:
        try:
            adj[index[str(lo)], index[str(hi)]] = True
        except KeyError as exc:
            raise ValueError(f"cover pair mentions unknown element {exc.args[0]!r}") from None
    leq = _kernels.transitive_closure(adj)
    sym = leq & leq.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = (int(v) for v in np.argwhere(sym)[0])
        raise CyclicOrder(f"cover relation has a cycle through {names[i]} and {names[j]}",
                          (names[i], names[j]))
    minimal = [i for i in range(n) if leq[:, i].sum() == 1]
    maximal = [i for i in range(n) if leq[i, :].sum() == 1]
    if len(minimal) != 1 or len(maximal) != 1:
        raise NotBounded(
            f"need a unique bottom and top; minimal={[names[i] for i in minimal]}, "
            f"maximal={[names[i] for i in maximal]}",
            (tuple(names[i] for i in minimal), tuple(names[i] for i in maximal)),
        )
    meet, join = _kernels.bound_tables(leq)
    for table, what in ((meet, "meet"), (join, "join")):
        if (table < 0).any():
            i, j = (int(v) for v in np.argwhere(table < 0)[0])
            raise NotALattice(f"{names[i]} and {names[j]} have no unique {what}",
                              (names[i], names[j]))
    return Lattice(names, _readonly(leq), _readonly(meet), _readonly(join),
                   minimal[0], maximal[0], index)


def lattice_from_order(names, leq) -> Lattice:
    """Wrap an already-closed order matrix (used for completions)."""
    leq = np.asarray(leq, dtype=bool)
    lt = leq & ~np.eye(len(names), dtype=bool)
    pairs = [(names[i], names[j]) for i, j in zip(*np.nonzero(lt))]
    return build_lattice(names, pairs, cap=len(names))


def meet_of(L: Lattice, A) -> int:
    m = L.top
    for x in A:
        m = int(L.meet[m, L.idx(x)])
    return m


def join_of(L: Lattice, A) -> int:
    j = L.bottom
    for x in A:
        j = int(L.join[j, L.idx(x)])
    return j


def birkhoff_join(L: Lattice, A) -> int:
    """Join as the meet of all common upper bounds (independent of the join table)."""
    idx = [L.idx(x) for x in A]
    uppers = [b for b in range(L.n) if all(L.leq[a, b] for a in idx)]
    return meet_of(L, uppers)


@dataclass(frozen=True)
class AtomReport:
    atoms: frozenset
    atomistic: Verdict


def atoms_of(L: Lattice) -> AtomReport:
    atoms = frozenset(
        i for i in range(L.n)
        if i != L.bottom and L.down_masks[i] == (1 << i) | (1 << L.bottom)
    )
    for x in range(L.n):
        below = [p for p in sorted(atoms) if L.leq[p, x]]
        if join_of(L, below) != x:
            return AtomReport(atoms, Verdict(False, (L.names[x],),
                                             f"join of atoms below {L.names[x]} is "
                                             f"{L.names[join_of(L, below)]}"))
    return AtomReport(atoms, Verdict(True))


def down(L: Lattice, A) -> Ideal:
    A = list(A)
    if not A:
        raise EmptyGenerator("downset of the empty set is not an ideal")
    m = 0
    for x in A:
        m |= int(L.down_masks[L.idx(x)])
    return Ideal(L, m)


def principal(L: Lattice, x) -> Ideal:
    return Ideal(L, int(L.down_masks[L.idx(x)]))


def is_downset(L: Lattice, mask: int) -> bool:
    if mask == 0:
        return False
    return all(int(L.down_masks[i]) & ~mask == 0 for i in bits(mask))


def ideal(L: Lattice, elements) -> Ideal:
    """Ideal with exactly these members; raises if not a downset."""
    m = L.mask_of(elements)
    if not is_downset(L, m):
        raise ValueError(f"{L.names_of(m)} is not a nonempty downset")
    return Ideal(L, m)

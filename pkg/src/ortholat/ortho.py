"""Ortholattices, standard generators and the Sasaki maps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

import numpy as np

from .adjunction import MonotoneMap, verify_adjunction
from .errors import CapExceeded, NoOrthocomplement, OrthoAxiomViolation
from .poset import DEFAULT_MAX_LATTICE_SIZE, Lattice, Verdict, build_lattice

MAX_BOOLEAN_ATOMS = 5
_BOOLEAN_LETTERS = "xyzuv"


@dataclass(frozen=True)
class OrthoLattice:
    base: Lattice
    comp: tuple

    def c(self, x) -> int:
        """Orthocomplement of ``x`` (name or index)."""
        return self.comp[self.base.idx(x)]

    def __getitem__(self, name) -> int:
        return self.base.idx(name)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def names(self):
        return self.base.names

    def comp_named(self) -> dict:
        return {self.base.names[i]: self.base.names[j] for i, j in enumerate(self.comp)}

    def __repr__(self):
        return f"OrthoLattice(n={self.n}, names={list(self.names)})"


def attach_ortho(L: Lattice, comp_pairs: Mapping) -> OrthoLattice:
    """Validate an orthocomplementation.

    Pairs given in one direction only are completed symmetrically, so
    ``{"a": "a'"}`` also sets ``a' -> a``.
    """
    comp = {}
    for k, v in comp_pairs.items():
        comp[L.idx(k)] = L.idx(v)
    for k, v in list(comp.items()):
        comp.setdefault(v, k)
    missing = [L.names[i] for i in range(L.n) if i not in comp]
    if missing:
        raise OrthoAxiomViolation(f"complement undefined on {missing}", "total", tuple(missing))
    c = tuple(comp[i] for i in range(L.n))
    nm = L.names
    for a in range(L.n):
        if c[c[a]] != a:
            raise OrthoAxiomViolation(f"{nm[a]}'' = {nm[c[c[a]]]} != {nm[a]}", "involutive",
                                      (nm[a],))
    for a in range(L.n):
        for b in range(L.n):
            if L.leq[a, b] and not L.leq[c[b], c[a]]:
                raise OrthoAxiomViolation(f"{nm[a]} <= {nm[b]} but {nm[b]}' is not below {nm[a]}'",
                                          "antitone", (nm[a], nm[b]))
    for a in range(L.n):
        if L.meet[a, c[a]] != L.bottom:
            raise OrthoAxiomViolation(f"{nm[a]} ^ {nm[a]}' = {nm[L.meet[a, c[a]]]} != 0",
                                      "meet_zero", (nm[a],))
        if L.join[a, c[a]] != L.top:
            raise OrthoAxiomViolation(f"{nm[a]} v {nm[a]}' = {nm[L.join[a, c[a]]]} != 1",
                                      "join_one", (nm[a],))
    return OrthoLattice(L, c)


def as_ortho(x: Union[Lattice, OrthoLattice]) -> OrthoLattice:
    if isinstance(x, OrthoLattice):
        return x
    raise NoOrthocomplement(f"{x!r} carries no orthocomplementation")


def lattice_of(x: Union[Lattice, OrthoLattice]) -> Lattice:
    return x.base if isinstance(x, OrthoLattice) else x


def _boolean(n: int) -> OrthoLattice:
    if n > MAX_BOOLEAN_ATOMS:
        raise CapExceeded(f"boolean lattices are capped at {MAX_BOOLEAN_ATOMS} atoms")
    full = (1 << n) - 1

    def label(m):
        if m == 0:
            return "0"
        if m == full:
            return "1"
        return "".join(_BOOLEAN_LETTERS[i] for i in range(n) if m >> i & 1)

    names = [label(m) for m in range(1 << n)]
    covers = [(names[m], names[m | 1 << i]) for m in range(1 << n) for i in range(n)
              if not m >> i & 1]
    L = build_lattice(names, covers, cap=max(DEFAULT_MAX_LATTICE_SIZE, 1 << n))
    return attach_ortho(L, {names[m]: names[full ^ m] for m in range(1 << n)})


def _mo(n: int, cap: int) -> OrthoLattice:
    letters = [chr(ord("a") + i) for i in range(n)]
    atoms = [x for p in letters for x in (p, p + "'")]
    names = ["0"] + atoms + ["1"]
    L = build_lattice(names, [("0", x) for x in atoms] + [(x, "1") for x in atoms], cap=cap)
    comp = {"0": "1"}
    comp.update({p: p + "'" for p in letters})
    return attach_ortho(L, comp)


def _o6() -> OrthoLattice:
    names = ["0", "a", "b", "a'", "b'", "1"]
    covers = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "b'"), ("b'", "a'"), ("a'", "1")]
    L = build_lattice(names, covers)
    return attach_ortho(L, {"0": "1", "a": "a'", "b": "b'"})


def _chain(n: int, cap: int) -> Union[Lattice, OrthoLattice]:
    if n == 1:
        L = build_lattice(["0"], [])
        return attach_ortho(L, {"0": "0"})
    names = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    L = build_lattice(names, list(zip(names, names[1:])), cap=cap)
    if n == 2:
        return attach_ortho(L, {"0": "1"})
    return L


def generate(kind: str, n: Optional[int] = None, cap: int = DEFAULT_MAX_LATTICE_SIZE):
    """Standard lattices: ``boolean n``, ``mo n``, ``o6``, ``chain n``."""
    if kind == "o6":
        return _o6()
    if n is None or n < 1:
        raise ValueError(f"{kind} needs n >= 1")
    if kind == "boolean":
        return _boolean(n)
    if kind == "mo":
        return _mo(n, cap)
    if kind == "chain":
        return _chain(n, cap)
    raise ValueError(f"unknown lattice kind {kind!r}")


def sasaki_project(OL: OrthoLattice, a, b) -> int:
    L = OL.base
    a, b = L.idx(a), L.idx(b)
    return int(L.meet[a, L.join[OL.comp[a], b]])


def sasaki_hook(OL: OrthoLattice, a, b) -> int:
    L = OL.base
    a, b = L.idx(a), L.idx(b)
    return int(L.join[OL.comp[a], L.meet[a, b]])


def sasaki_projection_map(OL: OrthoLattice, a) -> MonotoneMap:
    return MonotoneMap(OL.base, OL.base, tuple(sasaki_project(OL, a, b) for b in range(OL.n)))


def sasaki_hook_map(OL: OrthoLattice, a) -> MonotoneMap:
    return MonotoneMap(OL.base, OL.base, tuple(sasaki_hook(OL, a, b) for b in range(OL.n)))


@dataclass(frozen=True)
class OrthomodularityReport:
    weak_modularity: Verdict
    minimal_implication: Verdict
    sasaki_adjunction: Verdict

    @property
    def verdicts(self):
        return (self.weak_modularity, self.minimal_implication, self.sasaki_adjunction)

    @property
    def agree(self) -> bool:
        return len({v.holds for v in self.verdicts}) == 1

    @property
    def orthomodular(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def to_dict(self):
        return {
            "weak_modularity": self.weak_modularity.to_dict(),
            "minimal_implication": self.minimal_implication.to_dict(),
            "sasaki_adjunction": self.sasaki_adjunction.to_dict(),
            "agree": self.agree,
        }


def _weak_modularity(OL):
    L, c, nm = OL.base, OL.comp, OL.names
    for a in range(L.n):
        for b in range(L.n):
            if L.leq[a, b] and L.join[a, L.meet[c[a], b]] != b:
                got = L.join[a, L.meet[c[a], b]]
                return Verdict(False, (nm[a], nm[b]),
                               f"{nm[a]} <= {nm[b]} but {nm[a]} v ({nm[a]}' ^ {nm[b]}) = {nm[got]}")
    return Verdict(True)


def _minimal_implication(OL):
    L, nm = OL.base, OL.names
    for a in range(L.n):
        for x in range(L.n):
            if sasaki_hook(OL, a, x) == L.top and not L.leq[a, x]:
                return Verdict(False, (nm[a], nm[x]),
                               f"({nm[a]} ->S {nm[x]}) = 1 but {nm[a]} is not below {nm[x]}")
    return Verdict(True)


def _sasaki_adjunction(OL):
    for a in range(OL.n):
        v = verify_adjunction(sasaki_projection_map(OL, a), sasaki_hook_map(OL, a))
        if not v:
            return Verdict(False, (OL.names[a],) + v.witness, f"environment {OL.names[a]}: {v.detail}")
    return Verdict(True)


def orthomodularity_report(OL: OrthoLattice) -> OrthomodularityReport:
    """Evaluate the three characterisations of orthomodularity independently.

    Witnesses: ``(a, b)`` for weak modularity, ``(a, x)`` for the minimal
    implicative condition, ``(a, x, y)`` for the Sasaki adjunction (environment
    ``a`` and the failing pair).
    """
    return OrthomodularityReport(_weak_modularity(OL), _minimal_implication(OL),
                                 _sasaki_adjunction(OL))


def is_boolean(OL: OrthoLattice) -> bool:
    """Distributivity test over all triples."""
    L = OL.base
    m, j = L.meet, L.join
    idx = np.arange(L.n)
    for a in idx:
        lhs = m[a][j]  # a ^ (b v c)
        rhs = j[m[a][:, None], m[a][None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


__all__ = [
    "OrthoLattice", "attach_ortho", "as_ortho", "lattice_of", "generate",
    "sasaki_project", "sasaki_hook", "sasaki_projection_map", "sasaki_hook_map",
    "OrthomodularityReport", "orthomodularity_report", "is_boolean",
]

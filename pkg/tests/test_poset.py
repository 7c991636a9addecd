import numpy as np
import pytest
from hypothesis import given

from ortholat import build_lattice, down, principal
from ortholat.errors import CapExceeded, CyclicOrder, EmptyGenerator, NotALattice, NotBounded
from ortholat.poset import atoms_of, birkhoff_join, ideal, is_downset, join_of, meet_of

import oracles as O
from strategies import lattice_and_elements, lattice_and_subset, lattices

B4_COVERS = [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")]


def test_build_b4():
    L = build_lattice(["0", "x", "y", "1"], B4_COVERS)
    assert L.n == 4
    assert L.names[L.bottom] == "0" and L.names[L.top] == "1"
    assert L.names[L.join[L["x"], L["y"]]] == "1"
    assert L.names[L.meet[L["x"], L["y"]]] == "0"


def test_two_maximal_elements_not_bounded():
    with pytest.raises(NotBounded):
        build_lattice(["a", "b"], [])


def test_o6_hexagon(o6):
    L = o6.base
    assert L.names[L.join[L["a"], L["b'"]]] == "1"


def test_cycle_detected():
    with pytest.raises(CyclicOrder):
        build_lattice(["0", "a", "b", "1"], [("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")])


def test_non_lattice_witness():
    # two incomparable middle elements both below two incomparable upper ones
    names = ["0", "p", "q", "r", "s", "1"]
    covers = [("0", "p"), ("0", "q"), ("p", "r"), ("p", "s"), ("q", "r"), ("q", "s"),
              ("r", "1"), ("s", "1")]
    with pytest.raises(NotALattice) as exc:
        build_lattice(names, covers)
    assert set(exc.value.witness) in ({"p", "q"}, {"r", "s"})


def test_cap_and_duplicates():
    with pytest.raises(CapExceeded):
        build_lattice([str(i) for i in range(30)], [(str(i), str(i + 1)) for i in range(29)])
    with pytest.raises(ValueError):
        build_lattice(["0", "0"], [])


def test_meet_examples(b4, o6, mo2):
    assert b4.names[meet_of(b4.base, ["x", "y"])] == "0"
    for L in (b4.base, o6.base, mo2.base):
        assert meet_of(L, []) == L.top
        assert join_of(L, []) == L.bottom
    assert o6.names[meet_of(o6.base, ["a'", "b"])] == "0"


def test_join_examples(mo2, o6, b4):
    assert mo2.names[join_of(mo2.base, ["a", "b"])] == "1"
    assert o6.names[join_of(o6.base, ["a", "b'"])] == "1"
    assert b4.names[join_of(b4.base, ["x"])] == "x"


def test_atoms(mo2, b4, o6):
    r = atoms_of(mo2.base)
    assert {mo2.names[i] for i in r.atoms} == {"a", "a'", "b", "b'"} and r.atomistic
    r = atoms_of(b4.base)
    assert {b4.names[i] for i in r.atoms} == {"x", "y"} and r.atomistic
    r = atoms_of(o6.base)
    assert {o6.names[i] for i in r.atoms} == {"a", "b'"}
    assert not r.atomistic and r.atomistic.witness == ("b",)


def test_down_examples(mo2, b4):
    assert set(down(mo2.base, ["a", "b"]).names()) == {"0", "a", "b"}
    assert set(down(mo2.base, ["1"]).names()) == set(mo2.names)
    assert set(down(b4.base, ["x"]).names()) == {"0", "x"}
    with pytest.raises(EmptyGenerator):
        down(b4.base, [])
    with pytest.raises(ValueError):
        ideal(b4.base, ["x"])


@given(lattice_and_elements())
def test_tables_match_bruteforce(case):
    L, a, b = case
    assert L.meet[a, b] == O.meet(L, a, b)
    assert L.join[a, b] == O.join(L, a, b)


@given(lattice_and_subset())
def test_folds_match_bruteforce(case):
    L, A = case
    assert join_of(L, A) == O.lub(L, A) == birkhoff_join(L, A)
    assert meet_of(L, A) == O.glb(L, A)
    mask = sum(1 << a for a in A)
    assert L.subset_joins[mask] == O.lub(L, A)
    assert L.subset_meets[mask] == O.glb(L, A)


@given(lattice_and_subset())
def test_down_is_downset(case):
    L, A = case
    if not A:
        return
    D = down(L, A)
    assert D.members == O.downset(L, A)
    assert is_downset(L, D.mask)


@given(lattices)
def test_lattice_laws(L):
    m, j = L.meet, L.join
    idx = np.arange(L.n)
    assert (m == m.T).all() and (j == j.T).all()
    assert (m[idx, idx] == idx).all() and (j[idx, idx] == idx).all()
    # absorption
    assert (m[idx[:, None], j] == idx[:, None]).all()
    # associativity
    assert (m[m[:, :, None], idx[None, None, :]] == m[idx[:, None, None], m[None, :, :]]).all()
    assert (j[j[:, :, None], idx[None, None, :]] == j[idx[:, None, None], j[None, :, :]]).all()
    for x in range(L.n):
        assert principal(L, x).members == O.downset(L, [x])


@given(lattices)
def test_covers_are_hasse_edges(L):
    for a, b in L.covers:
        assert L.leq[a, b] and a != b
        assert not any(L.leq[a, c] and L.leq[c, b] for c in range(L.n) if c not in (a, b))

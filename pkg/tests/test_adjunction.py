from itertools import product

import pytest
from hypothesis import given, strategies as st

from ortholat import (compose, generate, identity_map, join_preservation, left_adjoint, make_map,
                      meet_preservation, preservation_profile, right_adjoint, verify_adjunction)
from ortholat.adjunction import constant_map, pointwise_le
from ortholat.errors import (CapExceeded, DomainMismatch, NotJoinPreserving, NotMeetPreserving,
                             NotMonotone)
from ortholat.ortho import sasaki_hook_map, sasaki_projection_map

import oracles as O
from strategies import lattices


def meet_with(OL, a):
    L = OL.base
    return make_map(L, L, [int(L.meet[L[a], b]) for b in range(L.n)])


def join_preserving_endomaps(OL):
    L = OL.base
    out = []
    for t in product(range(L.n), repeat=L.n):
        if t[L.bottom] != L.bottom:
            continue
        try:
            f = make_map(L, L, list(t))
        except NotMonotone:
            continue
        if join_preservation(f):
            out.append(f)
    return out


def test_identity_adjoints(b4):
    I = identity_map(b4.base)
    assert right_adjoint(I) == I and left_adjoint(I) == I
    assert verify_adjunction(I, I)


def test_meet_x_right_adjoint(b4):
    g = right_adjoint(meet_with(b4, "x"))
    assert g.named() == {"0": "y", "y": "y", "x": "1", "1": "1"}


def test_join_xprime_left_adjoint(b4):
    L = b4.base
    g = make_map(L, L, [int(L.join[L["y"], b]) for b in range(L.n)])  # x' = y
    assert left_adjoint(g) == meet_with(b4, "x")


def test_sasaki_adjoints(mo2):
    P, H = sasaki_projection_map(mo2, "a"), sasaki_hook_map(mo2, "a")
    assert right_adjoint(P) == H
    assert left_adjoint(H) == P
    assert verify_adjunction(P, H)


def test_o6_adjunction_fails(o6):
    v = verify_adjunction(sasaki_projection_map(o6, "b"), sasaki_hook_map(o6, "b"))
    assert not v and v.witness == ("1", "a")


def test_preservation_examples(mo2, b4):
    assert join_preservation(sasaki_projection_map(mo2, "a"))
    assert meet_preservation(sasaki_hook_map(mo2, "a"))
    prof = preservation_profile(meet_with(b4, "x"))
    assert prof.join_preserving
    # every nonempty meet is kept, but the empty meet 1 goes to x
    assert not prof.meet_preserving and prof.meet_preserving.witness == ()


def test_constant_top_not_join_preserving(mo2):
    f = constant_map(mo2.base, mo2.base, "1")
    v = join_preservation(f)
    assert not v and v.witness == ()  # fails on the empty join
    with pytest.raises(NotJoinPreserving):
        right_adjoint(f)
    with pytest.raises(NotMeetPreserving):
        left_adjoint(constant_map(mo2.base, mo2.base, "0"))


def test_make_map_rejects(mo2):
    L = mo2.base
    with pytest.raises(NotMonotone):
        make_map(L, L, {"0": "1", "a": "0", "a'": "0", "b": "0", "b'": "0", "1": "0"})
    with pytest.raises(ValueError):
        make_map(L, L, {"0": "0"})


def test_domain_mismatch(mo2, b4):
    with pytest.raises(DomainMismatch):
        verify_adjunction(identity_map(mo2.base), identity_map(b4.base))
    with pytest.raises(DomainMismatch):
        compose(identity_map(mo2.base), identity_map(b4.base))


def test_cap():
    B5 = generate("boolean", 5).base
    with pytest.raises(CapExceeded):
        preservation_profile(identity_map(B5))
    # above the cap the adjoint is still computed from binary joins
    assert right_adjoint(identity_map(B5)) == identity_map(B5)


@pytest.mark.parametrize("kind,n", [("boolean", 2), ("mo", 2)])
def test_enumerated_endomaps_against_oracle(kind, n):
    OL = generate(kind, n)
    L = OL.base
    maps = join_preserving_endomaps(OL)
    assert maps
    for f in maps:
        g = right_adjoint(f)
        assert list(g.table) == O.right_adjoint_table(L, L, f.table)
        assert verify_adjunction(f, g)
        assert left_adjoint(g) == f


def test_composition_and_order_reversal(mo2):
    maps = join_preserving_endomaps(mo2)[:40]
    adj = {f.table: right_adjoint(f) for f in maps}
    for f1, f2 in product(maps[:15], maps[:15]):
        h = compose(f2, f1)
        assert verify_adjunction(h, compose(adj[f1.table], adj[f2.table]))
        if pointwise_le(f1, f2):
            assert pointwise_le(adj[f2.table], adj[f1.table])


@given(lattices, st.data())
def test_right_adjoint_of_meet_action(L, data):
    a = data.draw(st.integers(0, L.n - 1))
    f = make_map(L, L, [int(L.meet[a, b]) for b in range(L.n)])
    if not join_preservation(f):
        with pytest.raises(NotJoinPreserving):
            right_adjoint(f)
        return
    g = right_adjoint(f)
    assert list(g.table) == O.right_adjoint_table(L, L, f.table)
    assert verify_adjunction(f, g)
    assert left_adjoint(g) == f
    assert list(left_adjoint(g).table) == O.left_adjoint_table(L, L, g.table)


@given(lattices)
def test_join_preservation_matches_pairwise(L):
    # on a finite lattice, preserving all joins == preserving 0 and binary joins
    for a in range(L.n):
        f = make_map(L, L, [int(L.meet[a, b]) for b in range(L.n)])
        pairwise = all(f.table[L.join[x, y]] == L.join[f.table[x], f.table[y]]
                       for x in range(L.n) for y in range(L.n))
        assert bool(join_preservation(f)) == (pairwise and f.table[L.bottom] == L.bottom)

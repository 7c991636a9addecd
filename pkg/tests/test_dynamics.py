import pytest

from ortholat import (causal_relations, default_state_model, dyn_hook_backward, dyn_hook_forward,
                      enumerate_completion, freeze, heyting_hook, identity_map, lift_env,
                      make_environment, mu_dyn_hook, principal, propagate_states,
                      sasaki_environment, tensor_backward, tensor_forward, ternary_hook)
from ortholat.adjunction import constant_map, make_map
from ortholat.completion import cartan
from ortholat.dynamics import BACKWARD, FORWARD, dichotomic_map, lifted_relations
from ortholat.errors import (DomainMismatch, ModelMismatch, NotJoinPreserving,
                             NotOrthomodularBase, UnsupportedEnvironment)
from ortholat.ortho import sasaki_hook_map

import oracles as O


def names(A):
    return set(A.names())


@pytest.fixture(scope="module")
def phi_a(mo2):
    return sasaki_environment(mo2, "a")


@pytest.fixture(scope="module")
def D(mo2):
    return lambda *xs: principal(mo2.base, xs[0])


def test_environment_construction(mo2):
    E = make_environment("id", identity_map(mo2.base))
    assert E.cause == identity_map(mo2.base)
    E = sasaki_environment(mo2, "a")
    assert E.cause == sasaki_hook_map(mo2, "a")
    assert E.label == "phi_a" and E.kind == "sasaki"
    with pytest.raises(NotJoinPreserving):
        make_environment("top", constant_map(mo2.base, mo2.base, "1"))


def test_causal_relation_examples(mo2, phi_a):
    assert causal_relations(phi_a, "1", "a").leadsto
    assert causal_relations(phi_a, "a'", "b").backassign
    fr = freeze(mo2.base)
    for x in range(mo2.n):
        for y in range(mo2.n):
            r = causal_relations(fr, x, y)
            assert r.leadsto == bool(mo2.base.leq[x, y])
            assert r.backassign == bool(mo2.base.leq[y, x])


def test_propagate_states(mo2, b4, phi_a):
    M = default_state_model(mo2)
    assert propagate_states(phi_a, M, "b") == {"a"}
    assert propagate_states(phi_a, M, "a'") == frozenset()
    assert propagate_states(phi_a, M, "a") == {"a"}
    with pytest.raises(ModelMismatch):
        propagate_states(freeze(mo2.base), default_state_model(b4), "x")


def test_lifted_cause(mo2, phi_a, di_mo2, D):
    lifted = lift_env(phi_a, di_mo2, di_mo2)
    assert lifted.causes(D("a'")) == D("a'")
    assert lifted.agrees_on_principals
    # the lifted cause table on principals, against a brute-force right adjoint
    fam = [A.members for A in di_mo2.members]
    for y in range(mo2.n):
        got = lifted.causes(principal(mo2.base, y)).members
        want = O.di_join(mo2.base, [B for B in fam
                                    if lifted.propagate(di_mo2.member(fam.index(B))).members
                                    <= O.downset(mo2.base, [y])], fam)
        assert got == want == O.downset(mo2.base, [O.sasaki_hk(mo2, mo2["a"], y)])


def test_forward_hook_examples(mo2, phi_a, di_mo2, D):
    C, top = di_mo2, di_mo2.top
    assert dyn_hook_forward(phi_a, C, top, D("b")) == D("a'")
    assert dyn_hook_forward(phi_a, C, D("a'"), D("b")) == top
    fr = freeze(mo2.base)
    for A1 in C.members:
        for A2 in C.members:
            assert dyn_hook_forward(fr, C, A1, A2) == heyting_hook(C, A1, A2)
            assert dyn_hook_backward(fr, C, A1, A2) == heyting_hook(C, A2, A1)
            assert tensor_forward(fr, C, A1, A2) == A1 & A2
            assert tensor_backward(fr, C, A1, A2) == A1 & A2


def test_backward_hook_examples(mo2, phi_a, di_mo2, D):
    C = di_mo2
    assert dyn_hook_backward(phi_a, C, D("a'"), D("b")) == C.top
    # (down a' -> down 0) = {c | c ^ a' = 0}; see the decisions ledger on down a
    got = dyn_hook_backward(phi_a, C, D("0"), D("b"))
    assert names(got) == {"0", "a", "b", "b'"}
    assert got.members == O.heyting(mo2.base, O.downset(mo2.base, [mo2["a'"]]), {mo2["0"]})


def test_tensor_examples(phi_a, di_mo2, D):
    C, top = di_mo2, di_mo2.top
    assert tensor_forward(phi_a, C, top, D("b")) == D("a")
    assert tensor_forward(phi_a, C, D("a'"), D("a'")) == D("0")
    assert tensor_backward(phi_a, C, top, D("b")) == D("a'")
    assert tensor_backward(phi_a, C, D("b"), D("b")) == D("0")


def test_mu_examples(mo2, phi_a, D):
    M = default_state_model(mo2)
    C = enumerate_completion(mo2)
    assert mu_dyn_hook(M, phi_a, D("b"), D("b"), FORWARD) == {"a", "a'", "b'"}
    assert mu_dyn_hook(M, phi_a, C.top, D("b"), FORWARD) == {"a'"}
    fr = freeze(mo2.base)
    for A1 in C.members:
        for A2 in C.members:
            want = {p for p in M.states if not M.satisfies(p, A1) or M.satisfies(p, A2)}
            assert mu_dyn_hook(M, fr, A1, A2) == want
            assert mu_dyn_hook(M, phi_a, A1, A2, BACKWARD) == \
                cartan(M, dyn_hook_backward(phi_a, C, A1, A2))


def test_ternary_hook(mo2, di_mo2, D, o6):
    assert ternary_hook(di_mo2, di_mo2.top, "a", D("b")) == D("a'")
    assert ternary_hook(di_mo2, D("b"), "1", D("b")) == di_mo2.top
    C6 = enumerate_completion(o6)
    with pytest.raises(NotOrthomodularBase):
        ternary_hook(C6, C6.top, "b", principal(o6.base, "a"))
    with pytest.raises(NotOrthomodularBase):
        ternary_hook(enumerate_completion(mo2.base), di_mo2.top, "a", D("b"))


def test_unsupported_and_mismatch(mo2, b4, di_mo2, D):
    L = mo2.base
    table_env = make_environment("t", make_map(L, L, list(range(L.n))))
    with pytest.raises(UnsupportedEnvironment):
        dyn_hook_forward(table_env, di_mo2, D("a"), D("b"))
    with pytest.raises(DomainMismatch):
        dyn_hook_forward(sasaki_environment(b4, "x"), di_mo2, D("a"), D("b"))


def test_lifted_relations_semantic(mo2, phi_a, D):
    M = default_state_model(mo2)
    r = lifted_relations(M, phi_a, principal(mo2.base, "1"), D("a"))
    assert r.leadsto
    r = lifted_relations(M, phi_a, D("a'"), D("b"))
    assert r.backassign


def test_dichotomic_map(mo2, di_mo2, D):
    f = dichotomic_map(mo2, "a", di_mo2)
    top = di_mo2.index(di_mo2.top)
    # measuring {a, a'} sends the top proposition to the join of both outcomes
    assert di_mo2.member(f.table[top]).members == O.di_join(
        mo2.base, [D("a").members, D("a'").members], [A.members for A in di_mo2.members])

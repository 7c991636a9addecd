"""Environments: join-preserving propagation maps paired with their derived
causal right adjoints, lifted to distributive-ideal completions, and the
forward/backward dynamic hooks and tensors built from them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .adjunction import (MonotoneMap, identity_map, right_adjoint,
                         verify_adjunction)
from .completion import (CompletionLattice, StateModel, heyting_hook, enumerate_completion)
from .errors import (DomainMismatch, ModelMismatch, NotJoinPreserving, NotOrthomodularBase,
                     UnsupportedEnvironment)
from .ortho import (OrthoLattice, orthomodularity_report, sasaki_projection_map)
from .poset import Ideal, Lattice, Verdict, bits, principal

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class Environment:
    label: str
    dom: Lattice
    cod: Lattice
    prop: MonotoneMap
    cause: MonotoneMap
    kind: str = "table"
    on: Optional[int] = None  # the measured property for kind == "sasaki"
    ortho: Optional[OrthoLattice] = None


def make_environment(label: str, prop: MonotoneMap, kind: str = "table",
                     on: Optional[int] = None, ortho: Optional[OrthoLattice] = None
                     ) -> Environment:
    """Derive the causal assignment as the right adjoint of ``prop``."""
    try:
        cause = right_adjoint(prop)
    except NotJoinPreserving as exc:
        raise NotJoinPreserving(f"propagation of {label} does not preserve the join of "
                                f"{list(exc.witness)}", exc.witness) from None
    adj = verify_adjunction(prop, cause)
    if not adj:  # pragma: no cover - right_adjoint guarantees this
        raise AssertionError(adj.detail)
    return Environment(label, prop.dom, prop.cod, prop, cause, kind, on, ortho)


def freeze(L: Lattice) -> Environment:
    """The static limit: propagation and causal assignment are both the identity."""
    return make_environment("freeze", identity_map(L), kind="freeze")


def sasaki_environment(OL: OrthoLattice, a) -> Environment:
    """Filtered measurement of ``a``: propagation ``b -> a ^ (a' v b)``."""
    a = OL.base.idx(a)
    return make_environment(f"phi_{OL.names[a]}", sasaki_projection_map(OL, a),
                            kind="sasaki", on=a, ortho=OL)


@dataclass(frozen=True)
class CausalRelations:
    leadsto: bool
    backassign: bool


def causal_relations(E: Environment, a1, a2) -> CausalRelations:
    a1, a2 = E.dom.idx(a1), E.cod.idx(a2)
    return CausalRelations(bool(E.cod.leq[E.prop.table[a1], a2]),
                           bool(E.dom.leq[E.cause.table[a2], a1]))


def propagate_states(E: Environment, M: StateModel, p, target: Optional[StateModel] = None
                     ) -> frozenset:
    """States obtainable from ``p``: those whose strongest property lies below
    the propagated strongest property of ``p``; empty when that is 0."""
    target = M if target is None else target
    if M.base != E.dom or target.base != E.cod:
        raise ModelMismatch("state models must live on the environment's lattices")
    image = E.prop.table[M.strongest(p)]
    if image == E.cod.bottom:
        return frozenset()
    return frozenset(s for i, s in enumerate(target.states)
                     if E.cod.leq[target.strongest(i), image])


@dataclass(frozen=True)
class LiftedEnvironment:
    env: Environment
    C1: CompletionLattice
    C2: CompletionLattice
    prop: MonotoneMap  # on C1.lattice -> C2.lattice
    cause: MonotoneMap
    agrees_on_principals: Verdict

    def propagate(self, A: Ideal) -> Ideal:
        return self.C2.member(self.prop.table[self.C1.index(A)])

    def causes(self, A: Ideal) -> Ideal:
        return self.C1.member(self.cause.table[self.C2.index(A)])


def lift_env(E: Environment, C1: CompletionLattice, C2: CompletionLattice) -> LiftedEnvironment:
    """``B -> V_DI {down(prop(b)) | b in B}`` and its right adjoint.

    ``agrees_on_principals`` records whether ``cause_hat(down y) == down(cause(y))`` for
    every ``y``.
    """
    if C1.base != E.dom or C2.base != E.cod:
        raise DomainMismatch("completions must be built over the environment's lattices")
    table = []
    for B in C1.masks:
        union = 0
        for b in bits(B):
            union |= int(E.cod.down_masks[E.prop.table[b]])
        table.append(C2.index(C2.join_all([Ideal(E.cod, union)])))
    prop_hat = MonotoneMap(C1.lattice, C2.lattice, tuple(table))
    cause_hat = right_adjoint(prop_hat)
    bad = None
    for y in range(E.cod.n):
        got = C1.member(cause_hat.table[C2.index(principal(E.cod, y))])
        if got != principal(E.dom, E.cause.table[y]):
            bad = y
            break
    det = Verdict(True) if bad is None else Verdict(False, (E.cod.names[bad],),
                                                     "lifted cause differs on a principal ideal")
    return LiftedEnvironment(E, C1, C2, prop_hat, cause_hat, det)


@lru_cache(maxsize=256)
def _lifted(E: Environment, C: CompletionLattice) -> LiftedEnvironment:
    return lift_env(E, C, C)


def _dynamic(E: Environment, C: CompletionLattice, *ideals) -> LiftedEnvironment:
    if E.kind not in ("sasaki", "freeze"):
        raise UnsupportedEnvironment(f"dynamic hooks are defined for Sasaki and freeze "
                                     f"environments, not {E.kind!r}")
    if E.dom != C.base or E.cod != C.base:
        raise DomainMismatch("environment and completion live on different lattices")
    for A in ideals:
        C.index(A)
    return _lifted(E, C)


def dyn_hook_forward(E: Environment, C: CompletionLattice, A1: Ideal, A2: Ideal) -> Ideal:
    """``A1 -> cause_hat(A2)`` in the completion."""
    lifted = _dynamic(E, C, A1, A2)
    return heyting_hook(C, A1, lifted.causes(A2))


def dyn_hook_backward(E: Environment, C: CompletionLattice, A1: Ideal, A2: Ideal) -> Ideal:
    """``cause_hat(A2) -> A1`` in the completion."""
    lifted = _dynamic(E, C, A1, A2)
    return heyting_hook(C, lifted.causes(A2), A1)


def tensor_forward(E: Environment, C: CompletionLattice, A1: Ideal, A2: Ideal) -> Ideal:
    lifted = _dynamic(E, C, A1, A2)
    return lifted.propagate(A1 & A2)


def tensor_backward(E: Environment, C: CompletionLattice, A1: Ideal, A2: Ideal) -> Ideal:
    lifted = _dynamic(E, C, A1, A2)
    return A1 & lifted.causes(A2)


def mu_dyn_hook(M: StateModel, E: Environment, A1: Ideal, A2: Ideal,
                direction: str = FORWARD) -> frozenset:
    """Semantic dynamic hook: states ``p`` with ``p |= A1  =>  every outcome |= A2``
    (forward) or the converse implication (backward)."""
    if M.base != E.dom or M.base != E.cod or A1.base != M.base or A2.base != M.base:
        raise ModelMismatch("model, environment and ideals must share one lattice")
    out = set()
    for i, p in enumerate(M.states):
        before = M.satisfies(i, A1)
        after = all(M.satisfies(q, A2) for q in propagate_states(E, M, i))
        ok = (not before or after) if direction == FORWARD else (not after or before)
        if ok:
            out.add(p)
    return frozenset(out)


def dichotomic_map(OL: OrthoLattice, a, C: Optional[CompletionLattice] = None) -> MonotoneMap:
    """Full measurement of ``{a, a'}``: the completion-level join of both lifted branches."""
    C = enumerate_completion(OL) if C is None else C
    yes = _lifted(sasaki_environment(OL, a), C)
    no = _lifted(sasaki_environment(OL, OL.c(a)), C)
    table = tuple(int(C.lattice.join[yes.prop.table[i], no.prop.table[i]])
                  for i in range(len(C)))
    return MonotoneMap(C.lattice, C.lattice, table)


def _require_orthomodular(C: CompletionLattice) -> OrthoLattice:
    OL = C.ortho
    if OL is None:
        raise NotOrthomodularBase("completion base carries no orthocomplement")
    if not orthomodularity_report(OL).orthomodular:
        raise NotOrthomodularBase("completion base is not orthomodular")
    return OL


def ternary_hook(C: CompletionLattice, A1: Ideal, a, A2: Ideal) -> Ideal:
    """``(A1 ->^a A2)``: the forward dynamic hook of the measurement of ``a``."""
    OL = _require_orthomodular(C)
    return dyn_hook_forward(sasaki_environment(OL, a), C, A1, A2)


def lifted_relations(M: StateModel, E: Environment, A1: Ideal, A2: Ideal) -> CausalRelations:
    """Causal relations between propositions, read off the state model."""
    outcomes = [propagate_states(E, M, i) for i in range(len(M.states))]
    before = [M.satisfies(i, A1) for i in range(len(M.states))]
    after = [all(M.satisfies(q, A2) for q in out) for out in outcomes]
    return CausalRelations(all(a for b, a in zip(before, after) if b),
                           all(b for b, a in zip(before, after) if a))

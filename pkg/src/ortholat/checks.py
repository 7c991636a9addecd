"""Exhaustive property suites over one lattice.

Each suite returns a list of :class:`CheckResult`.  A result is ``pass``,
``fail`` (with a witness) or ``skip`` when a precondition such as
atomisticity or a size cap rules the property out for this lattice.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional, Union

import numpy as np

from . import _kernels
from .adjunction import make_map, right_adjoint, verify_adjunction
from .completion import (CompletionLattice, cartan, consequence, default_state_model,
                         distributive_table, enumerate_completion, external_hook, heyting_hook,
                         hook_table, operational_resolution)
from .dynamics import (CausalRelations, causal_relations, dyn_hook_backward, dyn_hook_forward, freeze,
                       lift_env, lifted_relations, mu_dyn_hook, sasaki_environment,
                       tensor_backward, tensor_forward, BACKWARD, FORWARD)
from .ortho import (OrthoLattice, is_boolean, lattice_of, orthomodularity_report, sasaki_hook,
                    sasaki_hook_map, sasaki_project)
from .poset import Ideal, Lattice, Verdict, atoms_of, bits, principal

DEFAULT_SUBSET_CAP = 20
DEFAULT_PAIR_CAP = 20

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    verdict: Optional[Verdict] = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self):
        out = {"name": self.name, "status": self.status}
        if self.verdict is not None and self.verdict.witness:
            out["witness"] = list(self.verdict.witness)
        detail = self.note or (self.verdict.detail if self.verdict is not None else "")
        if detail:
            out["detail"] = detail
        return out


def _result(name, verdict: Verdict) -> CheckResult:
    return CheckResult(name, PASS if verdict else FAIL, verdict)


def _skip(name, why) -> CheckResult:
    return CheckResult(name, SKIP, None, why)


def forall(cases: Iterable, predicate: Callable, describe: Callable = None) -> Verdict:
    """First case where ``predicate`` is false becomes the witness."""
    for case in cases:
        if not predicate(*case):
            label = describe(*case) if describe else case
            return Verdict(False, tuple(str(x) for x in label))
    return Verdict(True)


def _n(L, x):
    return L.names[x]


# -- ortho ------------------------------------------------------------------


def ortho_suite(OL: OrthoLattice) -> list:
    L = OL.base
    rep = orthomodularity_report(OL)
    out = [
        _result("ortho.weak_modularity", rep.weak_modularity),
        _result("ortho.minimal_implicative_condition", rep.minimal_implication),
        _result("ortho.sasaki_adjunction", rep.sasaki_adjunction),
        _result("ortho.report_agreement",
                Verdict(rep.agree, None if rep.agree else tuple(str(v.holds) for v in rep.verdicts))),
    ]
    c = OL.comp
    out.append(_result("ortho.complement_bijective_antitone", forall(
        product(range(L.n), repeat=2),
        lambda a, b: len(set(c)) == L.n and (not L.leq[a, b] or L.leq[c[b], c[a]]),
        lambda a, b: (_n(L, a), _n(L, b)))))
    out.append(_result("ortho.projection_above_meet", forall(
        product(range(L.n), repeat=2),
        lambda a, b: L.leq[L.meet[a, b], sasaki_project(OL, a, b)],
        lambda a, b: (_n(L, a), _n(L, b)))))
    if is_boolean(OL):
        out.append(_result("ortho.boolean_collapse", forall(
            product(range(L.n), repeat=2),
            lambda a, b: sasaki_project(OL, a, b) == L.meet[a, b]
            and sasaki_hook(OL, a, b) == L.join[c[a], b],
            lambda a, b: (_n(L, a), _n(L, b)))))
    else:
        out.append(_skip("ortho.boolean_collapse", "lattice is not distributive"))
    return out


# -- heyting / completion ---------------------------------------------------


def _atomistic_model(L):
    return default_state_model(L) if atoms_of(L).atomistic else None


def heyting_suite(X: Union[Lattice, OrthoLattice], subset_cap: int = DEFAULT_SUBSET_CAP,
                  C: Optional[CompletionLattice] = None) -> list:
    L = lattice_of(X)
    C = enumerate_completion(X) if C is None else C
    CL = C.lattice
    m = len(C)
    H = hook_table(C)
    out = []
    idx = np.arange(m)

    direct = forall(product(range(m), repeat=2),
                    lambda i, j: C.index(heyting_hook(C, C.member(i), C.member(j))) == H[i, j],
                    lambda i, j: (CL.names[i], CL.names[j]))
    out.append(_result("heyting.hook_formula_matches_table", direct))

    # D ^ A <= B  vs  D <= (A -> B), over all triples [D, A, B]
    meet_in = CL.leq[CL.meet[:, :, None], idx[None, None, :]]
    below_hook = CL.leq[idx[:, None, None], H[None, :, :]]

    def triple_witness(bad):
        if not bad.any():
            return Verdict(True)
        d, a, b = (int(v) for v in np.argwhere(bad)[0])
        return Verdict(False, (CL.names[d], CL.names[a], CL.names[b]))

    out.append(_result("heyting.deduction", triple_witness(meet_in & ~below_hook)))
    out.append(_result("heyting.modus_ponens", triple_witness(below_hook & ~meet_in)))

    def adjoint_row(i):
        g = right_adjoint(make_map(CL, CL, [int(CL.meet[i, j]) for j in range(m)]),
                          cap=max(m, subset_cap))
        return tuple(g.table) == tuple(int(v) for v in H[i])

    if m <= subset_cap:
        out.append(_result("heyting.hook_is_right_adjoint_of_meet",
                           forall(((i,) for i in range(m)), adjoint_row,
                                  lambda i: (CL.names[i],))))
        joins = CL.subset_joins

        def distributes(i):
            lhs = CL.meet[i, joins]
            rhs = _kernels.subset_fold(CL.join, CL.meet[i, :], CL.bottom)
            return bool(np.array_equal(lhs, rhs))

        out.append(_result("heyting.complete_distributivity",
                           forall(((i,) for i in range(m)), distributes,
                                  lambda i: (CL.names[i],))))
    else:
        out.append(_skip("heyting.hook_is_right_adjoint_of_meet",
                         f"{m} members exceed the subset cap {subset_cap}"))
        out.append(_skip("heyting.complete_distributivity",
                         f"{m} members exceed the subset cap {subset_cap}"))

    def syntactic(i, j):
        A, B = C.masks[i], C.masks[j]
        want = 0
        for c in range(L.n):
            if all(not (A >> d) & 1 or (B >> d) & 1 for d in bits(int(L.down_masks[c]))):
                want |= 1 << c
        return C.masks[H[i, j]] == want

    out.append(_result("heyting.syntactic_form", forall(
        product(range(m), repeat=2), syntactic, lambda i, j: (CL.names[i], CL.names[j]))))
    out.append(_result("heyting.hook_is_top_iff_below", forall(
        product(range(m), repeat=2),
        lambda i, j: (H[i, j] == m - 1) == bool(CL.leq[i, j]),
        lambda i, j: (CL.names[i], CL.names[j]))))

    def ext_hook(b, c):
        E = external_hook(L, b, c)
        if E not in C:
            return False
        pseudo = all(((E.mask >> a) & 1) == bool(L.leq[L.meet[a, b], c]) for a in range(L.n))
        return pseudo and (((E.mask >> L.top) & 1) == bool(L.leq[b, c]))

    out.append(_result("heyting.external_hook_member_and_adjoint", forall(
        product(range(L.n), repeat=2), ext_hook, lambda b, c: (_n(L, b), _n(L, c)))))

    if L.n <= subset_cap:
        down_of = np.zeros(1 << L.n, dtype=np.int64)
        for j in range(L.n):
            lo = 1 << j
            down_of[lo:2 * lo] = down_of[:lo] | L.down_masks[j]
        principal_meet = L.down_masks[L.subset_meets]
        inter = np.full(1 << L.n, L.full_mask, dtype=np.int64)
        for j in range(L.n):
            lo = 1 << j
            inter[lo:2 * lo] = inter[:lo] & L.down_masks[j]
        bad = np.nonzero(principal_meet != inter)[0]
        out.append(_result("heyting.inclusion_preserves_meets",
                           Verdict(True) if bad.size == 0
                           else Verdict(False, tuple(L.names_of(int(bad[0]))))))
        dist = distributive_table(L)
        arr = np.asarray(C.masks, dtype=np.int64)
        di_join = np.full(1 << L.n, L.full_mask, dtype=np.int64)
        for Bm in arr:
            contains = (down_of & ~Bm) == 0
            di_join[contains] &= Bm
        di_join[0] = C.bottom.mask
        lhs = L.down_masks[L.subset_joins]
        bad = np.nonzero(dist & (lhs != di_join))[0]
        out.append(_result("heyting.inclusion_preserves_distributive_joins",
                           Verdict(True) if bad.size == 0
                           else Verdict(False, tuple(L.names_of(int(bad[0]))))))
    else:
        for name in ("heyting.inclusion_preserves_meets",
                     "heyting.inclusion_preserves_distributive_joins"):
            out.append(_skip(name, f"{L.n} elements exceed the subset cap {subset_cap}"))

    def resolution(i):
        R = operational_resolution(C, C.member(i))
        return R in C and operational_resolution(C, R) == R
    out.append(_result("heyting.resolution_idempotent", forall(
        ((i,) for i in range(m)), resolution, lambda i: (CL.names[i],))))
    trivial = all(operational_resolution(C, A) == A for A in C.members)
    distributive = m == L.n
    out.append(_result("heyting.resolution_trivial_iff_distributive",
                       Verdict(trivial == distributive and trivial == _is_distributive(L))))

    if L.n <= 12:
        def single(mask, b):
            if mask == 0:
                return True
            As = [principal(L, a) for a in bits(mask)]
            return bool(consequence(C, As, [principal(L, b)])) == bool(
                L.leq[L.subset_meets[mask], b])
        out.append(_result("heyting.consequence_single_antecedent", forall(
            product(range(1 << L.n), range(L.n)), single,
            lambda mask, b: (str(L.names_of(mask)), _n(L, b)))))
    else:
        out.append(_skip("heyting.consequence_single_antecedent", "lattice too large"))

    M = _atomistic_model(L)
    if M is None:
        for name in ("heyting.order_matches_state_inclusion", "heyting.semantic_hook",
                     "heyting.atomistic_cardinality"):
            out.append(_skip(name, "lattice is not atomistic"))
    else:
        mus = [cartan(M, A) for A in C.members]
        out.append(_result("heyting.order_matches_state_inclusion", forall(
            product(range(m), repeat=2),
            lambda i, j: bool(CL.leq[i, j]) == (mus[i] <= mus[j]),
            lambda i, j: (CL.names[i], CL.names[j]))))
        states = frozenset(M.states)
        out.append(_result("heyting.semantic_hook", forall(
            product(range(m), repeat=2),
            lambda i, j: mus[H[i, j]] == (states - mus[i]) | mus[j],
            lambda i, j: (CL.names[i], CL.names[j]))))
        out.append(_result("heyting.atomistic_cardinality", atom_powerset_iso(C)))

    if isinstance(X, OrthoLattice) and orthomodularity_report(X).orthomodular:
        out.append(_result("heyting.sasaki_restriction", forall(
            product(range(L.n), repeat=2),
            lambda a, b: principal(L, sasaki_hook(X, a, b)) <= external_hook(L, a, b),
            lambda a, b: (_n(L, a), _n(L, b)))))
    else:
        out.append(_skip("heyting.sasaki_restriction", "needs an orthomodular lattice"))
    return out


def _is_distributive(L: Lattice) -> bool:
    m, j = L.meet, L.join
    return all(np.array_equal(m[a][j], j[m[a][:, None], m[a][None, :]]) for a in range(L.n))


def atom_powerset_iso(C: CompletionLattice) -> Verdict:
    """``A -> A n atoms`` is an order isomorphism onto all subsets of atoms."""
    L = C.base
    atoms = sorted(atoms_of(L).atoms)
    amask = sum(1 << p for p in atoms)
    if len(C) != 1 << len(atoms):
        return Verdict(False, (str(len(C)), str(1 << len(atoms))), "cardinality differs")
    images = [m & amask for m in C.masks]
    if len(set(images)) != len(images):
        return Verdict(False, None, "atom map is not injective")
    for i, j in product(range(len(C)), repeat=2):
        if ((C.masks[i] & ~C.masks[j]) == 0) != ((images[i] & ~images[j]) == 0):
            return Verdict(False, (C.lattice.names[i], C.lattice.names[j]), "order not reflected")
    return Verdict(True)


# -- dynamics -----------------------------------------------------------------


def _sasaki_envs(OL):
    return [sasaki_environment(OL, a) for a in range(OL.n)]


def dynamics_suite(OL: OrthoLattice, pair_cap: int = DEFAULT_PAIR_CAP,
                   C: Optional[CompletionLattice] = None) -> list:
    rep = orthomodularity_report(OL)
    if not rep.orthomodular:
        bad = next(v for v in rep.verdicts if not v)
        return [CheckResult("dynamics.orthomodular_base", FAIL, bad,
                            "dynamic hooks need an orthomodular lattice")]
    L = OL.base
    C = enumerate_completion(OL) if C is None else C
    m = len(C)
    envs = _sasaki_envs(OL)
    M = _atomistic_model(L)
    out = [CheckResult("dynamics.orthomodular_base", PASS)]

    out.append(_result("dynamics.causal_duality", forall(
        ((E,) for E in envs + [freeze(L)]),
        lambda E: bool(verify_adjunction(E.prop, E.cause))
        and (E.kind != "sasaki" or E.cause == sasaki_hook_map(OL, E.on)),
        lambda E: (E.label,))))

    triples = list(product(range(L.n), repeat=3))

    def semantic_pair(E, b, c):
        if M is None:
            return None
        return lifted_relations(M, E, principal(L, b), principal(L, c))

    def leadsto_rule(a, b, c):
        E = envs[a]
        lhs = bool(L.leq[b, sasaki_hook(OL, a, c)])
        sem = semantic_pair(E, b, c)
        return lhs == causal_relations(E, b, c).leadsto and (sem is None or sem.leadsto == lhs)

    def backassign_rule(a, b, c):
        E = envs[a]
        lhs = bool(L.leq[sasaki_hook(OL, a, c), b])
        sem = semantic_pair(E, b, c)
        return lhs == causal_relations(E, b, c).backassign and (sem is None or sem.backassign == lhs)

    def weakest_cause(a, b, c):
        r = causal_relations(envs[a], b, c)
        return (b == sasaki_hook(OL, a, c)) == (r.leadsto and r.backassign)

    names3 = lambda a, b, c: (_n(L, a), _n(L, b), _n(L, c))  # noqa: E731
    out.append(_result("dynamics.leadsto_iff_below_hook", forall(triples, leadsto_rule, names3)))
    out.append(_result("dynamics.backassign_iff_hook_below", forall(triples, backassign_rule, names3)))
    out.append(_result("dynamics.hook_is_weakest_cause", forall(triples, weakest_cause, names3)))

    if m > pair_cap:
        for name in ("lifted_relations", "tensor_adjunctions", "modified_deduction", "mu_oracle",
                     "agrees_on_principals", "continuity", "static_limit", "sasaki_recovery",
                     "closing_identities", "overview_table"):
            out.append(_skip(f"dynamics.{name}", f"{m} completion members exceed cap {pair_cap}"))
        return out

    pairs = list(product(range(m), repeat=2))
    mem = C.member
    top = C.top
    CL = C.lattice

    def over_pairs(name, pred):
        def case_iter():
            for E in envs:
                for i, j in pairs:
                    yield E, i, j
        out.append(_result(name, forall(
            case_iter(), pred, lambda E, i, j: (E.label, CL.names[i], CL.names[j]))))

    if M is not None:
        def lifted(E, i, j):
            r = lifted_relations(M, E, mem(i), mem(j))
            return (r.leadsto == (dyn_hook_forward(E, C, mem(i), mem(j)) == top)
                    and r.backassign == (dyn_hook_backward(E, C, mem(i), mem(j)) == top))
        over_pairs("dynamics.lifted_relations", lifted)
    else:
        out.append(_skip("dynamics.lifted_relations", "lattice is not atomistic"))

    def tensor_adj(E):
        for i in range(m):
            A = mem(i)
            f = make_map(CL, CL, [C.index(tensor_forward(E, C, A, mem(j))) for j in range(m)])
            g = make_map(CL, CL, [C.index(dyn_hook_forward(E, C, A, mem(j))) for j in range(m)])
            fb = make_map(CL, CL, [C.index(tensor_backward(E, C, mem(j), A)) for j in range(m)])
            gb = make_map(CL, CL, [C.index(dyn_hook_backward(E, C, mem(j), A)) for j in range(m)])
            if not verify_adjunction(f, g) or not verify_adjunction(fb, gb):
                return False
        return True

    out.append(_result("dynamics.tensor_adjunctions", forall(
        ((E,) for E in envs), tensor_adj, lambda E: (E.label,))))

    def deduction(E, i, j):
        b, c = mem(i), mem(j)
        mp_f = tensor_forward(E, C, b, dyn_hook_forward(E, C, b, c)) <= c
        mp_b = tensor_backward(E, C, dyn_hook_backward(E, C, c, b), b) <= c
        return mp_f and mp_b

    over_pairs("dynamics.modified_deduction_modus_ponens", deduction)

    if M is not None:
        states = frozenset(M.states)

        def mu(E, i, j):
            A1, A2 = mem(i), mem(j)
            fwd = cartan(M, dyn_hook_forward(E, C, A1, A2)) == mu_dyn_hook(M, E, A1, A2, FORWARD)
            bwd = cartan(M, dyn_hook_backward(E, C, A1, A2)) == mu_dyn_hook(M, E, A1, A2, BACKWARD)
            return fwd and bwd

        over_pairs("dynamics.mu_oracle", mu)

        def mu_principal(a, b, c):
            E = envs[a]
            h = sasaki_hook(OL, a, c)
            B, Cc = principal(L, b), principal(L, c)
            fwd = mu_dyn_hook(M, E, B, Cc, FORWARD) == (states - cartan(M, b)) | cartan(M, h)
            bwd = mu_dyn_hook(M, E, B, Cc, BACKWARD) == (states - cartan(M, h)) | cartan(M, b)
            return fwd and bwd

        out.append(_result("dynamics.mu_oracle_principal", forall(triples, mu_principal, names3)))
    else:
        out.append(_skip("dynamics.mu_oracle", "lattice is not atomistic"))

    def agrees_on_principals(E):
        lifted = lift_env(E, C, C)
        premise = all(lifted.propagate(principal(L, x)) == principal(L, E.prop.table[x])
                      for x in range(L.n))
        return premise and bool(lifted.agrees_on_principals)

    out.append(_result("dynamics.agrees_on_principals", forall(((E,) for E in envs), agrees_on_principals,
                                                  lambda E: (E.label,))))

    def continuity(E, i, j):
        A, B = mem(i), mem(j)
        if operational_resolution(C, A) != operational_resolution(C, B):
            return True
        lifted = lift_env(E, C, C)
        return (operational_resolution(C, lifted.propagate(A))
                == operational_resolution(C, lifted.propagate(B)))

    over_pairs("dynamics.continuity", continuity)

    fr = freeze(L)

    def static(i, j):
        A1, A2 = mem(i), mem(j)
        return (dyn_hook_forward(fr, C, A1, A2) == heyting_hook(C, A1, A2)
                and dyn_hook_backward(fr, C, A1, A2) == heyting_hook(C, A2, A1)
                and tensor_forward(fr, C, A1, A2) == A1 & A2
                and tensor_backward(fr, C, A1, A2) == A1 & A2)

    static_ok = forall(pairs, static, lambda i, j: (CL.names[i], CL.names[j]))
    if static_ok:
        static_ok = forall(product(range(L.n), repeat=2),
                           lambda x, y: causal_relations(fr, x, y)
                           == CausalRelations(bool(L.leq[x, y]), bool(L.leq[y, x])),
                           lambda x, y: (_n(L, x), _n(L, y)))
    out.append(_result("dynamics.static_limit", static_ok))

    def recovery(a, x):
        E = envs[a]
        return (dyn_hook_forward(E, C, top, principal(L, x))
                == principal(L, sasaki_hook(OL, a, x))
                and tensor_forward(E, C, top, principal(L, x))
                == principal(L, sasaki_project(OL, a, x)))

    out.append(_result("dynamics.sasaki_recovery", forall(
        product(range(L.n), repeat=2), recovery, lambda a, x: (_n(L, a), _n(L, x)))))

    def closing(a, b):
        E = envs[a]
        h, B = principal(L, sasaki_hook(OL, a, b)), principal(L, b)
        return dyn_hook_forward(E, C, h, B) == top and dyn_hook_backward(E, C, h, B) == top

    out.append(_result("dynamics.closing_identities", forall(
        product(range(L.n), repeat=2), closing, lambda a, b: (_n(L, a), _n(L, b)))))

    out.extend(overview_table(OL, C))
    return out


def overview_table(OL: OrthoLattice, C: Optional[CompletionLattice] = None) -> list:
    """Rows of the static/forward/backward overview, each as a map equality.

    The lifted maps used on the right-hand sides are recomputed here by brute
    force from their defining formulas, not read from the cached lift.
    """
    L = OL.base
    C = enumerate_completion(OL) if C is None else C
    m = len(C)
    mem = C.member
    envs = _sasaki_envs(OL)

    def prop_hat(E, A):  # join in the completion of the principal images
        union = 0
        for b in bits(A.mask):
            union |= int(L.down_masks[E.prop.table[b]])
        return C.join_all([Ideal(L, union)])

    def cause_hat(E, A):  # largest member whose propagation lies in A
        return C.join_all([B for B in C.members if prop_hat(E, B) <= A])

    def row(name, cases, pred, describe):
        return _result(f"dynamics.overview.{name}", forall(cases, pred, describe))

    env_x = [(E, x) for E in envs for x in range(L.n)]
    env_xy = [(E, x, y) for E in envs for x in range(L.n) for y in range(L.n)]
    env_ij = [(E, i, j) for E in envs for i in range(m) for j in range(m)]
    dx = lambda E, x: (E.label, _n(L, x))  # noqa: E731
    dxy = lambda E, x, y: (E.label, _n(L, x), _n(L, y))  # noqa: E731
    dij = lambda E, i, j: (E.label, C.lattice.names[i], C.lattice.names[j])  # noqa: E731

    rows = [
        row("row1_property_maps", env_x,
            lambda E, x: E.prop.table[x] == sasaki_project(OL, E.on, x)
            and E.cause.table[x] == sasaki_hook(OL, E.on, x), dx),
        row("row2_lifted_maps_on_principals", env_x,
            lambda E, x: prop_hat(E, principal(L, x)) == principal(L, sasaki_project(OL, E.on, x))
            and cause_hat(E, principal(L, x)) == principal(L, sasaki_hook(OL, E.on, x)), dx),
        row("row3_property_hooks", env_xy,
            lambda E, x, y: dyn_hook_forward(E, C, principal(L, x), principal(L, y))
            == external_hook(L, x, sasaki_hook(OL, E.on, y))
            and dyn_hook_backward(E, C, principal(L, x), principal(L, y))
            == external_hook(L, sasaki_hook(OL, E.on, y), x), dxy),
        row("row4_proposition_hooks", env_ij,
            lambda E, i, j: dyn_hook_forward(E, C, mem(i), mem(j))
            == heyting_hook(C, mem(i), cause_hat(E, mem(j)))
            and dyn_hook_backward(E, C, mem(i), mem(j))
            == heyting_hook(C, cause_hat(E, mem(j)), mem(i)), dij),
        row("row5_tensors", env_ij,
            lambda E, i, j: tensor_forward(E, C, mem(i), mem(j)) == prop_hat(E, mem(i) & mem(j))
            and tensor_backward(E, C, mem(i), mem(j)) == mem(i) & cause_hat(E, mem(j)), dij),
    ]
    fr = freeze(L)
    rows.append(row("row6_static_column", [(fr, i, j) for i in range(m) for j in range(m)],
                    lambda E, i, j: prop_hat(E, mem(i)) == mem(i)
                    and cause_hat(E, mem(i)) == mem(i)
                    and dyn_hook_forward(E, C, mem(i), mem(j)) == heyting_hook(C, mem(i), mem(j))
                    and tensor_forward(E, C, mem(i), mem(j)) == mem(i) & mem(j), dij))
    rows.append(row("row6_static_column_properties", product(range(L.n), repeat=2),
                    lambda x, y: dyn_hook_forward(fr, C, principal(L, x), principal(L, y))
                    == external_hook(L, x, y),
                    lambda x, y: (_n(L, x), _n(L, y))))
    return rows


def run_suite(name: str, X: Union[Lattice, OrthoLattice], caps: Optional[dict] = None) -> list:
    """``caps`` may set ``subsets``, ``lattice`` and ``completion`` limits."""
    caps = caps or {}
    names = ("ortho", "heyting", "dynamics") if name == "all" else (name,)
    unknown = set(names) - {"ortho", "heyting", "dynamics"}
    if unknown:
        raise ValueError(f"unknown suite {name!r}")
    C = None
    if "heyting" in names or "dynamics" in names:
        C = enumerate_completion(X, cap=caps.get("completion", 65536),
                                 lattice_cap=caps.get("lattice", 24))
    no_ortho = CheckResult("ortho.has_orthocomplement", FAIL, Verdict(False),
                           "document has no 'ortho' map")
    out = []
    for key in names:
        if key == "ortho":
            out.extend(ortho_suite(X) if isinstance(X, OrthoLattice) else [no_ortho])
        elif key == "heyting":
            out.extend(heyting_suite(X, caps.get("subsets", DEFAULT_SUBSET_CAP), C))
        elif isinstance(X, OrthoLattice):
            out.extend(dynamics_suite(X, caps.get("pairs", DEFAULT_PAIR_CAP), C))
        else:
            out.append(no_ortho)
    return out

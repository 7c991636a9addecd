"""Hypothesis strategies: random finite lattices as intersection-closed set
families, plus elements, maps and subsets over them."""
from hypothesis import strategies as st

from ortholat.poset import build_lattice

UNIVERSE = 4


def _close(family):
    full = (1 << UNIVERSE) - 1
    out = set(family) | {full}
    changed = True
    while changed:
        changed = False
        for a in list(out):
            for b in list(out):
                if a & b not in out:
                    out.add(a & b)
                    changed = True
    return sorted(out, key=lambda m: (bin(m).count("1"), m))


def _lattice(family):
    sets = _close(family)
    names = ["s" + format(m, "x") for m in sets]
    pairs = [(names[i], names[j]) for i, a in enumerate(sets) for j, b in enumerate(sets)
             if i != j and a & ~b == 0]
    return build_lattice(names, pairs)


# closure systems on a 4-point set: up to isomorphism, every lattice with at most
# four meet-irreducible elements
lattices = st.lists(st.integers(0, (1 << UNIVERSE) - 1), min_size=0, max_size=6).map(_lattice)


@st.composite
def lattice_and_elements(draw, k=2):
    L = draw(lattices)
    return (L,) + tuple(draw(st.integers(0, L.n - 1)) for _ in range(k))


@st.composite
def lattice_and_subset(draw):
    L = draw(lattices)
    return L, draw(st.sets(st.integers(0, L.n - 1)))

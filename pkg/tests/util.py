"""Shared test helpers: brute-force oracles and random instance generators."""

from itertools import product

from cwtower import Simplex, SimplexRef, SimplicialMap, SimplicialSet, map_errors
from cwtower.homsearch import simplex_candidates

SEED = 20240817


def oracle_enumerate_maps(K, X):
    """Raw exhaustive oracle: try every assignment, filter by face-compatibility.

    Independent of the backtracking search; candidate lists are iterated
    in the same canonical order, so the output order is the canonical one.
    """
    gens = [SimplexRef(d, g) for d in range(len(K.counts)) for g in range(K.counts[d])]
    cand = {d: simplex_candidates(X, d) for d in {g.dim for g in gens}}
    out = []
    for combo in product(*[cand[g.dim] for g in gens]):
        table = {}
        for ref, tgt in zip(gens, combo):
            table[ref] = tgt
        assign = tuple(
            tuple(table[SimplexRef(d, g)] for g in range(K.counts[d]))
            for d in range(len(K.counts)))
        f = SimplicialMap(K, X, assign)
        if not map_errors(f):
            out.append(f)
    return out


def random_one_dim_target(rng, max_gens=4):
    """A random well-formed complex with vertices and edges only."""
    nv = rng.randint(1, max(1, max_gens - 1))
    ne = rng.randint(0, max_gens - nv)
    faces1 = [
        (Simplex((), SimplexRef(0, rng.randrange(nv))),
         Simplex((), SimplexRef(0, rng.randrange(nv))))
        for _ in range(ne)
    ]
    return SimplicialSet.build([nv, ne], [[() for _ in range(nv)], faces1])


def vertex_with_loop():
    v = Simplex((), SimplexRef(0, 0))
    return SimplicialSet.build([1, 1], [[()], [(v, v)]])

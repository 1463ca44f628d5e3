"""Exhaustive enumeration of simplicial maps and attaching squares.

Backtracking over generators in order of increasing dimension, assigning
each generator a target simplex (in normal form) and pruning on the
first violated face equation.  Output order is canonical: lexicographic
on generator assignments by dimension then index, with candidate
simplices ordered by degeneracy word then generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    Simplex,
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    ValidationError,
    boundary_inclusion,
    boundary_simplex,
    compose,
    degenerate,
    face,
    standard_simplex,
)

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    """The search visited more partial assignments than the budget allows."""

    def __init__(self, budget, context=""):
        self.budget = budget
        self.context = context
        msg = f"search budget of {budget} partial assignments exceeded"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


def simplex_candidates(X: SimplicialSet, total_dim):
    """All simplices of X of the given total dimension, in canonical order."""
    out = []
    for m in range(min(total_dim, X.dim) + 1):
        length = total_dim - m
        for combo in combinations(range(total_dim), length):
            word = tuple(reversed(combo))
            for idx in range(X.counts[m]):
                out.append(Simplex(word, SimplexRef(m, idx)))
    out.sort()
    return out


def enumerate_maps(K: SimplicialSet, X: SimplicialSet, budget=DEFAULT_BUDGET):
    """Every simplicial map K -> X, each exactly once, in canonical order."""
    gens = list(K.generators())
    cands = {d: simplex_candidates(X, d) for d in {g.dim for g in gens}}
    assign = {}
    results = []
    visited = 0

    def compatible(ref, target):
        for i in range(ref.dim + 1):
            fs = face(K, Simplex((), ref), i)
            img = degenerate(assign[fs.gen], fs.word)
            if img != face(X, target, i):
                return False
        return True

    def extend(pos):
        nonlocal visited
        if pos == len(gens):
            table = tuple(
                tuple(assign[SimplexRef(d, g)] for g in range(K.counts[d]))
                for d in range(len(K.counts)))
            results.append(SimplicialMap(K, X, table))
            return
        ref = gens[pos]
        for target in cands[ref.dim]:
            visited += 1
            if visited > budget:
                raise BudgetExceeded(budget, f"enumerate_maps at generator {ref.dim}:{ref.index}")
            if ref.dim >= 1 and not compatible(ref, target):
                continue
            assign[ref] = target
            extend(pos + 1)
            del assign[ref]

    extend(0)
    return results


@dataclass(frozen=True)
class AttachmentSquare:
    """One commutative attaching square for an n-cell.

    ``attach`` maps the boundary of Delta^n into the current stage;
    ``disk`` maps Delta^n into the target.  The square commutes exactly
    against the stage projection (checked by ``square_commutes``).
    """

    n: int
    attach: SimplicialMap
    disk: SimplicialMap

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("attaching squares exist in dimension >= 1")


def square_commutes(sq: AttachmentSquare, p: SimplicialMap) -> bool:
    """Exact commutativity p . attach == disk . (boundary inclusion)."""
    if sq.attach.cod != p.dom:
        return False
    incl = boundary_inclusion(sq.n)
    return compose(p, sq.attach) == compose(sq.disk, incl)


def enumerate_squares(n, p_prev: SimplicialMap, budget=DEFAULT_BUDGET):
    """All attaching squares of dimension n over the stage projection p_prev.

    Pairs (attach, disk) with p_prev . attach == disk . inclusion, in the
    order induced by (attach order, disk order).
    """
    if n < 1:
        raise ValidationError("enumerate_squares needs n >= 1")
    A, B = p_prev.dom, p_prev.cod
    bnd = boundary_simplex(n)
    dsk = standard_simplex(n)
    incl = boundary_inclusion(n)
    attaches = enumerate_maps(bnd, A, budget)
    disks = enumerate_maps(dsk, B, budget)
    by_restriction = {}
    for d in disks:
        by_restriction.setdefault(compose(d, incl), []).append(d)
    out = []
    for a in attaches:
        key = compose(p_prev, a)
        for d in by_restriction.get(key, ()):
            out.append(AttachmentSquare(n, a, d))
    return out

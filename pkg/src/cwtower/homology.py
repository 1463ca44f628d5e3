"""Integral simplicial homology via Smith normal form.

Normalized chains: one basis element per nondegenerate generator, with
degenerate faces contributing zero.  All arithmetic is arbitrary
precision (Python integers in object-dtype arrays); the Smith form
pivots on the smallest nonzero absolute value to limit entry growth.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SimplicialMap, SimplicialSet, ValidationError, validate


def int_matrix(rows, ncols=None):
    """An object-dtype integer matrix from nested lists."""
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return np.zeros((0, 0 if ncols is None else ncols), dtype=object)
    a = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, r in enumerate(rows):
        a[i, :] = r
    return a


def zeros(m, n):
    a = np.empty((m, n), dtype=object)
    a[:, :] = 0
    return a


def identity(n):
    a = zeros(n, n)
    for i in range(n):
        a[i, i] = 1
    return a


def hstack(a, b):
    if a.shape[0] != b.shape[0]:
        raise ValueError("row count mismatch")
    out = zeros(a.shape[0], a.shape[1] + b.shape[1])
    out[:, :a.shape[1]] = a
    out[:, a.shape[1]:] = b
    return out


def integer_determinant(M):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(M):
    """(U, D, V) with D = U M V diagonal, successive divisibility, U, V unimodular."""
    M = np.asarray(M, dtype=object)
    m, n = M.shape
    A = M.copy()
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        if not _move_pivot(A, U, V, t):
            break
        _clear_position(A, U, V, t)
        # enforce divisibility of the remaining block by the pivot
        p = A[t, t]
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i, j] % p != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            A[t, :] += A[bad, :]
            U[t, :] += U[bad, :]
            continue
        t += 1
    for i in range(min(m, n)):
        if A[i, i] < 0:
            A[i, :] = -A[i, :]
            U[i, :] = -U[i, :]
    return U, A, V


def _move_pivot(A, U, V, t):
    """Move a minimal-magnitude nonzero entry of A[t:, t:] to (t, t)."""
    m, n = A.shape
    best = None
    for i in range(t, m):
        for j in range(t, n):
            v = A[i, j]
            if v != 0 and (best is None or abs(v) < abs(A[best[0], best[1]])):
                best = (i, j)
    if best is None:
        return False
    i, j = best
    if i != t:
        A[[t, i], :] = A[[i, t], :]
        U[[t, i], :] = U[[i, t], :]
    if j != t:
        A[:, [t, j]] = A[:, [j, t]]
        V[:, [t, j]] = V[:, [j, t]]
    return True


def _clear_position(A, U, V, t):
    """Zero out row t and column t beyond the pivot, reselecting as needed."""
    m, n = A.shape
    while True:
        touched = False
        for i in range(t + 1, m):
            if A[i, t] != 0:
                q = A[i, t] // A[t, t]
                A[i, :] -= q * A[t, :]
                U[i, :] -= q * U[t, :]
                if A[i, t] != 0:
                    # remainder is strictly smaller; promote it to pivot
                    A[[t, i], :] = A[[i, t], :]
                    U[[t, i], :] = U[[i, t], :]
                    touched = True
        for j in range(t + 1, n):
            if A[t, j] != 0:
                q = A[t, j] // A[t, t]
                A[:, j] -= q * A[:, t]
                V[:, j] -= q * V[:, t]
                if A[t, j] != 0:
                    A[:, [t, j]] = A[:, [j, t]]
                    V[:, [t, j]] = V[:, [j, t]]
                    touched = True
        if not touched and all(A[i, t] == 0 for i in range(t + 1, m)) \
                and all(A[t, j] == 0 for j in range(t + 1, n)):
            return


def invariant_factors(M):
    _, D, _ = smith_normal_form(M)
    return tuple(int(D[i, i]) for i in range(min(D.shape)) if D[i, i] != 0)


def matrix_rank(M):
    return len(invariant_factors(M))


def kernel_basis(M):
    """Columns forming a basis of the integer kernel lattice of M."""
    _, D, V = smith_normal_form(M)
    r = len([i for i in range(min(D.shape)) if D[i, i] != 0])
    return V[:, r:]


def solve_int(A, B):
    """An integer X with A X = B, or None if no integral solution exists."""
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    U, D, V = smith_normal_form(A)
    C = U @ B
    m, n = A.shape
    k = B.shape[1]
    Y = zeros(n, k)
    for i in range(m):
        d = D[i, i] if i < min(m, n) else 0
        for j in range(k):
            c = C[i, j]
            if d == 0:
                if c != 0:
                    return None
            else:
                if c % d != 0:
                    return None
                if i < n:
                    Y[i, j] = c // d
    return V @ Y


# ---------------------------------------------------------------------------
# Chain complexes and homology
# ---------------------------------------------------------------------------

@dataclass
class ChainComplex:
    """Normalized integer chains of a simplicial set."""

    ranks: tuple
    mats: tuple  # mats[n-1] is the boundary from degree n to n-1

    def rank(self, n):
        return self.ranks[n] if 0 <= n < len(self.ranks) else 0

    def boundary(self, n):
        """The boundary matrix in degree n (rank_{n-1} x rank_n)."""
        if 1 <= n < len(self.ranks):
            return self.mats[n - 1]
        return zeros(self.rank(n - 1), self.rank(n))


def chain_complex(X: SimplicialSet) -> ChainComplex:
    errs = validate(X)
    if errs:
        raise ValidationError("invalid simplicial set: " + "; ".join(errs[:4]))
    mats = []
    for n in range(1, len(X.counts)):
        M = zeros(X.counts[n - 1], X.counts[n])
        for g in range(X.counts[n]):
            for i, fs in enumerate(X.faces[n][g]):
                if not fs.is_degenerate:
                    M[fs.gen.index, g] += (-1) ** i
        mats.append(M)
    cc = ChainComplex(tuple(X.counts), tuple(mats))
    for n in range(2, len(X.counts)):
        prod = cc.boundary(n - 1) @ cc.boundary(n)
        if prod.size and any(x != 0 for x in prod.flat):
            raise ValidationError(f"boundary squared is nonzero in degree {n}")
    return cc


@dataclass(frozen=True)
class HomologyGroup:
    """H_dim = Z^betti plus torsion by the listed invariant factors (> 1)."""

    dim: int
    betti: int
    torsion: tuple

    def is_trivial(self):
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.betti + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology(X: SimplicialSet, i) -> HomologyGroup:
    cc = chain_complex(X)
    return homology_of_complex(cc, i)


def homology_of_complex(cc: ChainComplex, i) -> HomologyGroup:
    if i < 0 or cc.rank(i) == 0:
        return HomologyGroup(i, 0, ())
    r_in = matrix_rank(cc.boundary(i)) if i >= 1 else 0
    factors = invariant_factors(cc.boundary(i + 1))
    betti = cc.rank(i) - r_in - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    return HomologyGroup(i, betti, torsion)


def _presentation(cc: ChainComplex, i):
    """(K, W): K a basis of the cycle lattice, coker(W) presenting H_i."""
    if i == 0:
        K = identity(cc.rank(0))
    else:
        K = kernel_basis(cc.boundary(i))
    W = solve_int(K, cc.boundary(i + 1))
    if W is None:
        raise ValidationError("boundaries do not lie in the cycle lattice")
    return K, W


def chain_map_matrix(f: SimplicialMap, i):
    """The degree-i matrix of the induced map on normalized chains."""
    M = zeros(f.cod.count(i), f.dom.count(i))
    for g in range(f.dom.count(i)):
        img = f.assign[i][g]
        if not img.is_degenerate:
            M[img.gen.index, g] += 1
    return M


@dataclass
class HomologyMap:
    """Induced map on H_degree in fixed cycle-lattice bases."""

    degree: int
    matrix: object
    source: HomologyGroup
    target: HomologyGroup
    is_epi: bool
    is_iso: bool


def induced_homology_map(f: SimplicialMap, i) -> HomologyMap:
    ccX = chain_complex(f.dom)
    ccY = chain_complex(f.cod)
    KX, WX = _presentation(ccX, i)
    KY, WY = _presentation(ccY, i)
    F = chain_map_matrix(f, i)
    T = solve_int(KY, F @ KX)
    if T is None:
        raise ValidationError("chain map does not preserve cycles")

    kY = KY.shape[1]
    if kY == 0:
        epi = True
    else:
        factors = invariant_factors(hstack(T, WY))
        epi = len(factors) == kY and all(d == 1 for d in factors)

    # kernel of the induced map: x with T x a boundary must itself come
    # from a boundary of the source
    L = kernel_basis(hstack(T, -WY))[:KX.shape[1], :]
    mono = solve_int(WX, L) is not None
    return HomologyMap(degree=i, matrix=T,
                       source=homology_of_complex(ccX, i),
                       target=homology_of_complex(ccY, i),
                       is_epi=epi, is_iso=epi and mono)


# ---------------------------------------------------------------------------
# Path components and connectivity reports
# ---------------------------------------------------------------------------

def path_components(X: SimplicialSet):
    """Vertex -> component id, via union-find over nondegenerate edges."""
    parent = list(range(X.count(0)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in range(X.count(1)):
        a = find(X.faces[1][e][0].gen.index)
        b = find(X.faces[1][e][1].gen.index)
        if a != b:
            parent[a] = b
    roots = {}
    comp = []
    for v in range(X.count(0)):
        r = find(v)
        if r not in roots:
            roots[r] = len(roots)
        comp.append(roots[r])
    return comp


@dataclass
class ConnectivityReport:
    """Computable facets of n-connectedness of a stage projection.

    pi_0 is exact; homotopy groups in higher degrees are proxied by
    integral homology, with the reliance recorded in ``caveats``.
    """

    stage: int
    pi0_surjective: bool
    pi0_bijective: bool = None
    h1_epi: bool = None
    h_iso_below: dict = None
    h_epi_at: bool = None
    caveats: tuple = ()

    def populated(self):
        out = {"pi0_surjective": self.pi0_surjective}
        if self.pi0_bijective is not None:
            out["pi0_bijective"] = self.pi0_bijective
        if self.h1_epi is not None:
            out["h1_epi"] = self.h1_epi
        if self.h_iso_below is not None:
            for k, v in sorted(self.h_iso_below.items()):
                out[f"h{k}_iso"] = v
        if self.h_epi_at is not None:
            out[f"h{self.stage}_epi"] = self.h_epi_at
        return out

    def all_true(self):
        return all(self.populated().values())


def connectivity_report(tower, n, simply_connected_B=False) -> ConnectivityReport:
    """Certify the computable facets of n-connectedness of p_n: A_n -> B."""
    if n < 0 or n > tower.cap:
        raise ValidationError(f"stage {n} out of range (cap {tower.cap})")
    An = tower.stages[n]
    B = tower.B
    p = tower.projections[n]

    compA = path_components(An)
    compB = path_components(B)
    n_compB = (max(compB) + 1) if compB else 0
    image = {compB[p.assign[0][v].gen.index] for v in range(An.count(0))}
    surjective = len(image) == n_compB
    caveats = ["homotopy groups in degree >= 1 are not computed; homology"
               " facets only"]
    report = ConnectivityReport(stage=n, pi0_surjective=surjective)
    if n >= 1:
        comp_map = {}
        bijective = surjective
        for v in range(An.count(0)):
            a, b = compA[v], compB[p.assign[0][v].gen.index]
            if comp_map.setdefault(a, b) != b:
                bijective = False
        if len(set(comp_map.values())) != len(comp_map):
            bijective = False
        report.pi0_bijective = bijective
        report.h1_epi = induced_homology_map(p, 1).is_epi
    if simply_connected_B:
        if not homology(B, 1).is_trivial():
            raise ValidationError(
                "simply-connected flag set but the target has nontrivial H_1")
        if n >= 2:
            report.h_iso_below = {i: induced_homology_map(p, i).is_iso
                                  for i in range(n)}
            report.h_epi_at = induced_homology_map(p, n).is_epi
            caveats.append(
                "H_* checks certify n-connectedness only when the stage is"
                " simply connected")
    report.caveats = tuple(caveats)
    return report

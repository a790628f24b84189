"""Gromov width lower bounds: the coroot minimum formula and simplex fitting.

The coroot formula evaluates min |<lambda, coroot>| over nonzero pairings in
the standard orthogonal realizations of the classical families (plus G2).
The simplex search looks for the largest open simplex of size a whose image
under an integer unimodular map plus translation sits inside a polytope; the
search is exhaustive over bounded matrix entries and certifies its answer
with an explicit (a, Psi, x) triple.

Openness is harmless here: a closed convex set contains Psi(int S(a)) + x
exactly when it contains the closed simplex vertices, so the fit test works
with the closed hull.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from . import linalg
from .errors import LowerDimensionalError, UnboundedError, ZeroOrbitError
from .geometry import HalfSpace, HPolytope, frac_vec

FAMILIES = ("A", "B", "C", "D", "G2")


@dataclass(frozen=True)
class RootSystemSpec:
    """Family label and rank; realization fixes the coroot list."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "G2":
            if self.rank != 2:
                raise ValueError("G2 has rank 2")
        elif self.family == "D":
            if self.rank < 2:
                raise ValueError("family D needs rank >= 2")
        elif self.rank < 1:
            raise ValueError("rank must be positive")

    @property
    def ambient_dim(self):
        if self.family == "A":
            return self.rank + 1
        if self.family == "G2":
            return 3
        return self.rank


def _signed_pairs(n, signs):
    out = []
    for i, j in combinations(range(n), 2):
        for si, sj in signs:
            v = [0] * n
            v[i] = si
            v[j] = sj
            out.append(tuple(v))
    return out


def coroots(spec: RootSystemSpec):
    """Full coroot list as integer vectors in the standard realization.

    A_r lives in R^(r+1) with coroots e_i - e_j.  B_n has coroots
    {+-e_i +- e_j} u {+-2 e_i}, C_n has {+-e_i +- e_j} u {+-e_i}, D_n has
    {+-e_i +- e_j} (D_2 degenerates to A_1 x A_1 and is kept for
    completeness).  G2 weights live in the sum-zero plane of R^3; its six
    long-root coroots are listed as the integer representatives +-e_i of
    their classes modulo (1,1,1), which pair correctly with every sum-zero
    weight.
    """
    n = spec.rank
    fam = spec.family
    if fam == "A":
        vecs = []
        for i, j in permutations(range(n + 1), 2):
            v = [0] * (n + 1)
            v[i] = 1
            v[j] = -1
            vecs.append(tuple(v))
        return sorted(vecs)
    if fam == "G2":
        short = []
        for i, j in permutations(range(3), 2):
            v = [0] * 3
            v[i] = 1
            v[j] = -1
            short.append(tuple(v))
        axes = []
        for i in range(3):
            for s in (1, -1):
                v = [0] * 3
                v[i] = s
                axes.append(tuple(v))
        return sorted(short + axes)
    pairs = _signed_pairs(n, [(1, 1), (1, -1), (-1, 1), (-1, -1)])
    axes = []
    if fam in ("B", "C"):
        unit = 2 if fam == "B" else 1
        for i in range(n):
            for s in (unit, -unit):
                v = [0] * n
                v[i] = s
                axes.append(tuple(v))
    if fam == "D" and n < 2:
        raise ValueError("family D needs rank >= 2")
    return sorted(pairs + axes)


def gw_formula(spec: RootSystemSpec, lam) -> Fraction:
    """min |<lambda, coroot>| over coroots pairing nonzero with lambda."""
    lam = frac_vec(lam)
    if len(lam) != spec.ambient_dim:
        raise ValueError(
            f"weight has dimension {len(lam)}, realization needs {spec.ambient_dim}")
    values = []
    for alpha in coroots(spec):
        pairing = linalg.vec_dot(lam, alpha)
        if pairing != 0:
            values.append(abs(pairing))
    if not values:
        raise ZeroOrbitError("zero orbit")
    return min(values)


def simplex(n: int, a) -> tuple:
    """Closed hull of the size-a corner simplex, plus per-facet openness.

    Returns (polytope, flags) with flags[i] True when the i-th halfspace of
    the canonical form is open in the half-open simplex (only the diagonal
    facet sum x_j <= a is).
    """
    a = Fraction(a)
    if a <= 0:
        raise ValueError("size must be positive")
    items = []
    for i in range(n):
        normal = tuple(-1 if j == i else 0 for j in range(n))
        items.append((HalfSpace(normal, Fraction(0)), False))
    items.append((HalfSpace((1,) * n, a), True))
    items.sort(key=lambda it: (it[0].normal, it[0].rhs))
    poly = HPolytope(n, [h for h, _ in items], _bounded=True)
    flags = tuple(f for _, f in items)
    return poly, flags


def simplex_vertices(n: int, a):
    a = Fraction(a)
    verts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        verts.append(tuple(a if j == i else Fraction(0) for j in range(n)))
    return verts


@dataclass(frozen=True)
class SimplexFit:
    """Certificate: unimodular psi and translation x place the size-a simplex."""

    a: Fraction
    psi: tuple
    x: tuple


def fits(delta: HPolytope, fit: SimplexFit) -> bool:
    """Is the (open) simplex image inside the closed polytope?

    Equivalent to closed containment of the mapped simplex vertices because
    delta is closed and convex.
    """
    if abs(linalg.mat_det(fit.psi)) != 1:
        raise ValueError("psi must be unimodular")
    for v in simplex_vertices(delta.dim, fit.a):
        w = linalg.vec_add(linalg.mat_vec(fit.psi, v), fit.x)
        if not delta.contains(w):
            return False
    return True


def _unimodular_candidates(n, bound):
    """All integer matrices with entries in [-bound, bound] and det +-1."""
    out = []
    for entries in product(range(-bound, bound + 1), repeat=n * n):
        m = tuple(tuple(entries[i * n + j] for j in range(n)) for i in range(n))
        if abs(linalg.mat_det(m)) == 1:
            out.append(m)
    return out


def _best_fit_for_psi(delta: HPolytope, psi):
    """Exact LP in (a, x): maximize a with all mapped vertices inside delta.

    Per facet u, the binding requirement over the simplex vertices collapses
    to u.x + a * max(0, max_i u.psi_col_i) <= rhs, which Fourier-Motzkin
    solves exactly; the witness x is the lex-least optimum.
    """
    n = delta.dim
    cols = list(zip(*psi))
    rows = []
    for h in delta.halfspaces:
        c = max(0, max(linalg.vec_dot(h.normal, col) for col in cols))
        rows.append(((c,) + tuple(h.normal), h.rhs))
    rows.append(((-1,) + (0,) * n, Fraction(0)))
    value, witness = linalg.fm_maximize(rows, n + 1, objective_index=0)
    if value is None:
        return None
    return SimplexFit(Fraction(value), psi, tuple(witness[1:]))


def best_simplex_lb(delta: HPolytope, bound: int = 3, mode: str = "exhaustive",
                    seed: int = 0, steps: int = 400) -> SimplexFit:
    """Largest certified simplex over unimodular maps with bounded entries.

    Exhaustive mode scans every psi with entries in [-bound, bound] (kept to
    n <= 3); the result is a valid lower bound for any bound, and grows
    monotonically with it.  Ties break lexicographically on the flattened
    psi.  Heuristic mode is a seeded random walk over unimodular row
    operations; it certifies whatever it finds but makes no maximality
    claim.
    """
    if not delta.is_bounded():
        raise UnboundedError("unbounded")
    if not delta.is_full_dimensional():
        raise LowerDimensionalError("simplex fitting needs a full-dimensional polytope")
    n = delta.dim
    if mode == "exhaustive":
        if n > 3:
            raise ValueError("exhaustive search supported for n <= 3; use heuristic")
        if bound < 1:
            raise ValueError("bound must be >= 1")
        if (2 * bound + 1) ** (n * n) > 2_000_000:
            raise ValueError(
                "exhaustive candidate space too large at this bound and "
                "dimension; lower the bound or use the heuristic mode")
        best = None
        for psi in _unimodular_candidates(n, bound):
            fit = _best_fit_for_psi(delta, psi)
            if fit is None:
                continue
            key = (-fit.a, tuple(x for row in psi for x in row))
            if best is None or key < best[0]:
                best = (key, fit)
        return best[1]
    if mode == "heuristic":
        rng = random.Random(seed)
        psi = linalg.identity(n)
        best = _best_fit_for_psi(delta, psi)
        current = psi
        for _ in range(steps):
            cand = [list(row) for row in current]
            op = rng.randrange(3)
            i = rng.randrange(n)
            j = rng.randrange(n)
            if op == 0 and i != j:
                s = rng.choice((-1, 1))
                for col in range(n):
                    cand[i][col] += s * cand[j][col]
            elif op == 1:
                cand[i], cand[j] = cand[j], cand[i]
            else:
                cand[i] = [-x for x in cand[i]]
            cand = tuple(tuple(row) for row in cand)
            if abs(linalg.mat_det(cand)) != 1:
                continue
            fit = _best_fit_for_psi(delta, cand)
            if fit is not None and fit.a >= best.a:
                best = fit if fit.a > best.a else best
                current = cand
        return best
    raise ValueError(f"unknown mode {mode!r}")

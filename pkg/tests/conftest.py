"""Shared generators and independent oracles for the test suite.

Random data is always drawn from explicitly seeded Random instances so every
run is reproducible.
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from toricdeg import hull, lattice_points
from toricdeg.bott import BottData, bott_polytope, is_hypercube
from toricdeg.geometry import HPolytope


def unit_box(dims):
    """Box prod [0, dims_i] as an H-polytope."""
    n = len(dims)
    rows = []
    for i, d in enumerate(dims):
        e = [0] * n
        e[i] = -1
        rows.append(e + [0])
        e = [0] * n
        e[i] = 1
        rows.append(e + [d])
    return HPolytope.from_inequalities(n, rows)


def corner_simplex(n, size):
    rows = []
    for i in range(n):
        e = [0] * n
        e[i] = -1
        rows.append(e + [0])
    rows.append([1] * n + [size])
    return HPolytope.from_inequalities(n, rows)


def random_bott_hypercube(rng, n, entry_bound=2, lam_bound=9, tries=60):
    """Random Bott datum whose polytope is a combinatorial hypercube."""
    for _ in range(tries):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.6:
                    rows[i][j] = rng.randint(-entry_bound, entry_bound)
        lam = [rng.randint(1, lam_bound) for _ in range(n)]
        # Generous lengths make the hypercube condition likely; verify anyway.
        for j in range(1, n):
            lam[j] += sum(abs(rows[i][j]) for i in range(j)) * max(lam[:j] + [1])
        b = BottData.make(rows, lam)
        if is_hypercube(b):
            return b
    raise AssertionError("could not sample a hypercube Bott datum")


def random_smooth_polytope(rng, n):
    """Random integral Delzant polytope normalized at the origin (n = 2, 3)."""
    kind = rng.randrange(3)
    if kind == 0:
        return unit_box([rng.randint(1, 4) for _ in range(n)])
    if kind == 1:
        return corner_simplex(n, rng.randint(1, 4))
    b = random_bott_hypercube(rng, n, entry_bound=2, lam_bound=4)
    return bott_polytope(b)


def random_integral_polygon(rng, npoints=4, box=6):
    """Full-dimensional lattice polygon hull (triangles and quadrilaterals)."""
    while True:
        pts = {(rng.randint(0, box), rng.randint(0, box)) for _ in range(npoints)}
        if len(pts) < 3:
            continue
        p = hull(sorted(pts), 2)
        if p.is_full_dimensional():
            return p


def random_standard_bott(rng, n, lam_bound=9):
    """Random canonical block product: partition of n plus positive lengths."""
    sizes = []
    left = n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    rows = [[0] * n for _ in range(n)]
    pos = 0
    for s in sizes:
        terminal = pos + s - 1
        for i in range(pos, terminal):
            rows[i][terminal] = -1
        pos += s
    lam = [rng.randint(1, lam_bound) for _ in range(n)]
    return BottData.make(rows, lam)


def scramble_bott(b, rng, steps=5):
    """Apply random certified-equivalence steps: moves, flips, relabelings."""
    from toricdeg.bott import flip, parametrized_move, permutation_move
    from toricdeg.errors import MoveError

    current = b
    applied = 0
    for _ in range(80):
        if applied >= steps:
            break
        op = rng.randrange(4)
        try:
            if op <= 1 and b.n >= 2:
                k = rng.randint(1, b.n - 1)
                l = rng.randint(k + 1, b.n)
                entry = current.a[k - 1][l - 1]
                t = entry + 2 * rng.randint(-3, 3)
                if t == entry:
                    continue
                mv = parametrized_move(current, k, l, t)
            elif op == 2:
                mv = flip(current, rng.randint(1, b.n))
            else:
                perm = list(range(b.n))
                rng.shuffle(perm)
                mv = permutation_move(current, perm)
        except MoveError:
            continue
        if not is_hypercube(mv.result):
            continue
        current = mv.result
        applied += 1
    return current


def brute_force_decomposition(point, base_points, m):
    """Independent check that point splits into m elements of base_points."""
    if m == 0:
        return all(x == 0 for x in point)
    for q in base_points:
        rest = tuple(a - b for a, b in zip(point, q))
        if brute_force_decomposition(rest, base_points, m - 1):
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(20260810)

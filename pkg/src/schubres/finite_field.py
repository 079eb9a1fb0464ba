"""Brute-force point counts over small finite fields.

Independent check of the algebraic fiber profiles: for a chain of
parabolic subsets (I_0, ..., I_m) and target cell u, count the tuples of
partial flags

    (x_1, ..., x_m)  with  pos(E, x_1) <= w_0,
                           pos(x_i, x_{i+1}) <= w_i,
                           pos(x_m, uE) <= u restricted appropriately,

over F_q by direct enumeration, where E is the standard full flag and
the closed position conditions are rank inequalities.  Everything is
bounded to GL_n(F_q) with n <= 4 and q in {2, 3}; this is an oracle, not
a production path.

Subspaces are represented by row-reduced echelon bases (tuples of
F_q-row-vectors), so each subspace has exactly one representation.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


# -- linear algebra over F_q (vectors = int tuples mod q) -----------------

def rref(rows, q: int) -> tuple:
    """Row-reduce; returns tuple of nonzero rows in echelon form."""
    mat = [list(r) for r in rows]
    n = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] % q), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], q - 2, q) if q > 2 else mat[r][c]
        mat[r] = [(x * inv) % q for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % q:
                f = mat[i][c] % q
                mat[i] = [(x - f * y) % q for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in mat[:r])


@lru_cache(maxsize=None)
def all_subspaces(n: int, d: int, q: int) -> tuple:
    """All d-dimensional subspaces of F_q^n, as RREF row tuples."""
    if d == 0:
        return ((),)
    out = set()
    vectors = [v for v in itertools.product(range(q), repeat=n) if any(v)]
    for combo in itertools.combinations(vectors, d):
        basis = rref(combo, q)
        if len(basis) == d:
            out.add(basis)
    return tuple(sorted(out))


def span_dim(rows_a, rows_b, q: int) -> int:
    return len(rref(tuple(rows_a) + tuple(rows_b), q))


def intersection_dim(rows_a, rows_b, q: int) -> int:
    return len(rows_a) + len(rows_b) - span_dim(rows_a, rows_b, q)


# -- flags and relative position -------------------------------------------

def flag_jumps(n: int, J) -> tuple:
    """Dimension jumps of a partial flag of type J: the complement of J
    inside {1, ..., n-1} (the parabolic stabilizer omits those steps)."""
    return tuple(c for c in range(1, n) if c not in J)


@lru_cache(maxsize=None)
def all_partial_flags(n: int, jumps: tuple, q: int) -> tuple:
    """All partial flags with the given dimension jumps."""
    if not jumps:
        return ((),)
    flags = []

    def extend(prefix, level):
        if level == len(jumps):
            flags.append(tuple(prefix))
            return
        d = jumps[level]
        prev = prefix[-1] if prefix else ()
        for sub in all_subspaces(n, d, q):
            if intersection_dim(prev, sub, q) == len(prev):
                extend(prefix + [sub], level + 1)

    extend([], 0)
    return tuple(flags)


def standard_flag_subspace(n: int, d: int, q: int) -> tuple:
    rows = tuple(
        tuple(1 if j == i else 0 for j in range(n)) for i in range(d)
    )
    return rows


def permuted_flag_subspace(w_key: tuple, d: int, q: int) -> tuple:
    """span(e_{w(1)}, ..., e_{w(d)}) in F_q^n for one-line tuple w."""
    n = len(w_key)
    rows = tuple(
        tuple(1 if j == w_key[i] - 1 else 0 for j in range(n)) for i in range(d)
    )
    return rref(rows, q)


def rank_bound(w_key: tuple, a: int, c: int) -> int:
    """d_w(a, c) = #{ i <= c : w(i) <= a }: the required lower bound on
    dim(A_a  intersect  C_c) for relative position <= w."""
    return sum(1 for i in range(c) if w_key[i] <= a)


def _closed_position_ok(
    flag_a, jumps_a, flag_c, jumps_c, w_key, q: int
) -> bool:
    """pos(A, C) <= w: every visible rank condition of w must hold."""
    for ia, a in enumerate(jumps_a):
        rows_a = flag_a[ia]
        for ic, c in enumerate(jumps_c):
            if intersection_dim(rows_a, flag_c[ic], q) < rank_bound(w_key, a, c):
                return False
    return True


def count_fiber_points(group, data, u, q: int) -> int:
    """Number of F_q-points in the fiber over the cell point of u.

    ``data`` is a chain of parabolic subsets (I_0, ..., I_m).  With the
    links J_i = I_{i-1} cap I_i, a fiber point is a tuple of partial
    flags (z_1, ..., z_m), z_i of type J_i (jumps at the complement of
    J_i), subject to m+1 closed position conditions:

        pos(E, z_1)       <= w_{I_0},
        pos(z_i, z_{i+1}) <= w_{I_i}    for 1 <= i < m,
        pos(z_m, u E)     <= w_{I_m},

    where E is the standard full flag and u E its permuted translate.
    Each closure condition is the rank-inequality system
    dim(A_a intersect C_c) >= #{ i <= c : w(i) <= a } over the visible
    dimension jumps of the two flags.
    """
    n = group.n
    full_jumps = tuple(range(1, n))
    data = [frozenset(J) for J in data]
    m = len(data) - 1
    if m == 0:
        # single parabolic factor: the map is P_{I_0}/B -> X(w_{I_0}),
        # already injective over each cell
        w0 = group.longest(data[0])
        return 1 if u.bruhat_leq(w0) else 0
    links = [data[i - 1] & data[i] for i in range(1, m + 1)]
    jump_list = [flag_jumps(n, J) for J in links]
    flags_list = [all_partial_flags(n, jumps, q) for jumps in jump_list]

    e_flag = tuple(standard_flag_subspace(n, d, q) for d in full_jumps)
    u_flag = tuple(permuted_flag_subspace(u.key, d, q) for d in full_jumps)

    w_keys = [group.longest(J).key for J in data]

    count = 0

    def search(level, prev_flag, prev_jumps):
        nonlocal count
        for flag in flags_list[level]:
            if not _closed_position_ok(
                prev_flag, prev_jumps, flag, jump_list[level], w_keys[level], q
            ):
                continue
            if level == m - 1:
                if _closed_position_ok(
                    flag, jump_list[level], u_flag, full_jumps,
                    w_keys[level + 1], q,
                ):
                    count += 1
            else:
                search(level + 1, flag, jump_list[level])

    search(0, e_flag, full_jumps)
    return count

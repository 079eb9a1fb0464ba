"""Finite Coxeter/Weyl group engine.

Two element representations sit behind one interface:

* ``SymmetricGroup(n)`` -- type A_{n-1}, elements stored as 1-based
  one-line permutation tuples.  Length, descents, Bruhat order and
  pattern containment all have direct formulas.
* ``MatrixCoxeterGroup(matrix)`` -- any finite crystallographic Coxeter
  matrix (used here for C_2), fully enumerated once at construction via
  the reflection representation, with generator multiplication tables.

Simple reflections are indexed 1..rank.  Parabolic subsets are plain
``frozenset`` values over those indices.  Groups are immutable after
construction; all caches are internal memo dictionaries.
"""

from __future__ import annotations

import itertools

Subset = frozenset

EMPTY: Subset = frozenset()


def subset_str(J) -> str:
    """Serialize a parabolic subset as a sorted comma list, e.g. "1,3"."""
    return ",".join(str(s) for s in sorted(J))


def parse_subset(text: str) -> Subset:
    text = text.strip()
    if not text:
        return EMPTY
    return frozenset(int(part) for part in text.split(","))


class WeylElement:
    """A group element carrying a handle to its Coxeter group.

    Equality and hashing go through the canonical key (one-line tuple in
    type A, enumeration index otherwise), so elements are usable as dict
    keys and set members.
    """

    __slots__ = ("group", "key", "_length")

    def __init__(self, group, key, length=None):
        self.group = group
        self.key = key
        self._length = length

    # -- basic structure ------------------------------------------------

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = self.group.length_key(self.key)
        return self._length

    def is_identity(self) -> bool:
        return self.length == 0

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.group is other.group
            and self.key == other.key
        )

    def __hash__(self):
        return hash(self.key)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.group is not other.group:
            raise ValueError("elements of different Coxeter groups")
        return self.group.make(self.group.mul_key(self.key, other.key))

    def inverse(self) -> "WeylElement":
        return self.group.make(self.group.inverse_key(self.key), self.length)

    def star(self, other: "WeylElement") -> "WeylElement":
        """Demazure (monoid) product: fold the letters of ``other``."""
        if self.group is not other.group:
            raise ValueError("elements of different Coxeter groups")
        return self.group.make(self.group.star_key(self.key, other.key))

    # -- descents, support, boundary ------------------------------------

    def right_descents(self) -> Subset:
        return self.group.right_descents_key(self.key)

    def left_descents(self) -> Subset:
        return self.group.right_descents_key(self.group.inverse_key(self.key))

    def support(self) -> Subset:
        return self.group.support_key(self.key)

    def boundary(self) -> Subset:
        """Simple reflections outside the support but adjacent to it."""
        g = self.group
        sigma = self.support()
        return frozenset(
            s
            for s in g.simples
            if s not in sigma and any(g.coxeter_m(s, t) >= 3 for t in sigma)
        )

    def word(self) -> tuple:
        """Canonical reduced word (greedy smallest left descent first)."""
        return self.group.word_key(self.key)

    # -- Bruhat order ----------------------------------------------------

    def bruhat_leq(self, other: "WeylElement") -> bool:
        if self.group is not other.group:
            raise ValueError("elements of different Coxeter groups")
        return self.group.bruhat_leq_key(self.key, other.key)

    # -- formatting -------------------------------------------------------

    def __str__(self):
        return self.group.key_str(self.key)

    def __repr__(self):
        return f"<{self.group.label}: {self}>"


class CoxeterGroup:
    """Base class; subclasses provide the raw key primitives."""

    label: str
    rank: int

    def __init__(self):
        self.simples = tuple(range(1, self.rank + 1))
        self._word_cache: dict = {}
        self._longest_cache: dict = {}
        self._leq_cache: dict = {}

    # -- primitives to be provided by subclasses --------------------------

    def identity_key(self):
        raise NotImplementedError

    def simple_key(self, s: int):
        raise NotImplementedError

    def rmul_key(self, key, s: int):
        """key * s_s"""
        raise NotImplementedError

    def lmul_key(self, key, s: int):
        """s_s * key"""
        raise NotImplementedError

    def rmul_raises(self, key, s: int) -> bool:
        """True iff length(key * s) = length(key) + 1."""
        raise NotImplementedError

    def length_key(self, key) -> int:
        raise NotImplementedError

    def inverse_key(self, key):
        raise NotImplementedError

    def iter_keys(self):
        raise NotImplementedError

    def order(self) -> int:
        raise NotImplementedError

    def coxeter_m(self, s: int, t: int) -> int:
        raise NotImplementedError

    def key_str(self, key) -> str:
        raise NotImplementedError

    def bruhat_leq_key(self, a, b) -> bool:
        raise NotImplementedError

    # -- derived operations ------------------------------------------------

    def make(self, key, length=None) -> WeylElement:
        return WeylElement(self, key, length)

    @property
    def identity(self) -> WeylElement:
        return self.make(self.identity_key(), 0)

    def simple(self, s: int) -> WeylElement:
        return self.make(self.simple_key(s), 1)

    def lmul_raises(self, key, s: int) -> bool:
        return self.rmul_raises(self.inverse_key(key), s)

    def word_key(self, key) -> tuple:
        cached = self._word_cache.get(key)
        if cached is not None:
            return cached
        out = []
        k = key
        while True:
            s = next(
                (s for s in self.simples if not self.lmul_raises(k, s)), None
            )
            if s is None:
                break
            out.append(s)
            k = self.lmul_key(k, s)
        word = tuple(out)
        self._word_cache[key] = word
        return word

    def mul_key(self, a, b):
        k = a
        for s in self.word_key(b):
            k = self.rmul_key(k, s)
        return k

    def star_key(self, a, b):
        k = a
        for s in self.word_key(b):
            if self.rmul_raises(k, s):
                k = self.rmul_key(k, s)
        return k

    def right_descents_key(self, key) -> Subset:
        return frozenset(s for s in self.simples if not self.rmul_raises(key, s))

    def support_key(self, key) -> Subset:
        return frozenset(self.word_key(key))

    def element_from_word(self, word) -> WeylElement:
        k = self.identity_key()
        for s in word:
            k = self.rmul_key(k, s)
        return self.make(k)

    def longest(self, J) -> WeylElement:
        """The maximal element w_J of the standard parabolic subgroup W_J."""
        J = frozenset(J)
        key = self._longest_cache.get(J)
        if key is None:
            if not J.issubset(set(self.simples)):
                raise ValueError(f"not a subset of simple reflections: {set(J)}")
            key = self.identity_key()
            while True:
                s = next((s for s in J if self.rmul_raises(key, s)), None)
                if s is None:
                    break
                key = self.rmul_key(key, s)
            self._longest_cache[J] = key
        return self.make(key)

    def coset_decompose(self, w: WeylElement, J) -> tuple:
        """Parabolic decomposition w = u0 * u1 with u1 in W_J, u0 coset-minimal."""
        J = frozenset(J)
        key = w.key
        letters = []
        while True:
            s = next((s for s in J if not self.rmul_raises(key, s)), None)
            if s is None:
                break
            key = self.rmul_key(key, s)
            letters.append(s)
        u0 = self.make(key)
        u1 = self.element_from_word(reversed(letters))
        return u0, u1

    def elements(self) -> list:
        return [self.make(k) for k in self.iter_keys()]

    def interval(self, v: WeylElement, w: WeylElement) -> list:
        """All u with v <= u <= w in Bruhat order."""
        lo, hi = v.key, w.key
        return [
            self.make(k)
            for k in self.iter_keys()
            if self.bruhat_leq_key(lo, k) and self.bruhat_leq_key(k, hi)
        ]

    def lower_interval(self, w: WeylElement) -> list:
        return self.interval(self.identity, w)

    def parabolic_elements(self, J) -> list:
        """All elements of the standard parabolic subgroup W_J."""
        J = frozenset(J)
        seen = {self.identity_key()}
        frontier = [self.identity_key()]
        while frontier:
            nxt = []
            for key in frontier:
                for s in J:
                    k2 = self.rmul_key(key, s)
                    if k2 not in seen:
                        seen.add(k2)
                        nxt.append(k2)
            frontier = nxt
        return [self.make(k) for k in seen]

    def is_simply_laced(self) -> bool:
        return all(
            self.coxeter_m(s, t) <= 3
            for s in self.simples
            for t in self.simples
            if s < t
        )

    # generic Bruhat comparison through the lifting property; subclasses
    # with a cheaper criterion override bruhat_leq_key.
    def _bruhat_leq_lifting(self, a, b) -> bool:
        if a == b:
            return True
        la, lb = self.length_key(a), self.length_key(b)
        if la >= lb:
            return False
        if la == 0:
            return True
        cached = self._leq_cache.get((a, b))
        if cached is not None:
            return cached
        s = next(s for s in self.simples if not self.lmul_raises(b, s))
        sb = self.lmul_key(b, s)
        if not self.lmul_raises(a, s):
            result = self._bruhat_leq_lifting(self.lmul_key(a, s), sb)
        else:
            result = self._bruhat_leq_lifting(a, sb)
        self._leq_cache[(a, b)] = result
        return result


class SymmetricGroup(CoxeterGroup):
    """Type A_{n-1}: permutations of {1..n} in one-line notation."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.rank = n - 1
        self.label = f"A{n - 1}"
        super().__init__()
        self._rank_vectors: dict = {}

    def identity_key(self):
        return tuple(range(1, self.n + 1))

    def simple_key(self, s):
        return self.rmul_key(self.identity_key(), s)

    def rmul_key(self, key, s):
        return key[: s - 1] + (key[s], key[s - 1]) + key[s + 1 :]

    def lmul_key(self, key, s):
        a, b = s, s + 1
        return tuple(b if v == a else a if v == b else v for v in key)

    def rmul_raises(self, key, s) -> bool:
        return key[s - 1] < key[s]

    def length_key(self, key) -> int:
        n = self.n
        return sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if key[i] > key[j]
        )

    def inverse_key(self, key):
        inv = [0] * self.n
        for i, v in enumerate(key):
            inv[v - 1] = i + 1
        return tuple(inv)

    def mul_key(self, a, b):
        return tuple(a[v - 1] for v in b)

    def iter_keys(self):
        return itertools.permutations(range(1, self.n + 1))

    def order(self) -> int:
        import math

        return math.factorial(self.n)

    def coxeter_m(self, s, t) -> int:
        if s == t:
            return 1
        return 3 if abs(s - t) == 1 else 2

    def right_descents_key(self, key) -> Subset:
        return frozenset(s for s in self.simples if key[s - 1] > key[s])

    def support_key(self, key) -> Subset:
        out = []
        top = 0
        for i in range(1, self.n):
            top = max(top, key[i - 1])
            if top > i:
                out.append(i)
        return frozenset(out)

    def key_str(self, key) -> str:
        return " ".join(str(v) for v in key)

    def element_from_one_line(self, values) -> WeylElement:
        key = tuple(values)
        if sorted(key) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {values}")
        return self.make(key)

    # Bruhat order via the rank-matrix dominance criterion.
    def _rank_vector(self, key):
        vec = self._rank_vectors.get(key)
        if vec is None:
            n = self.n
            out = []
            counts = [0] * (n + 1)
            for i in range(n - 1):
                v = key[i]
                for j in range(2, v + 1):
                    counts[j] += 1
                out.extend(counts[2:])
            vec = tuple(out)
            self._rank_vectors[key] = vec
        return vec

    def bruhat_leq_key(self, a, b) -> bool:
        if a == b:
            return True
        ra, rb = self._rank_vector(a), self._rank_vector(b)
        return all(x <= y for x, y in zip(ra, rb))

    def bruhat_leq_subword(self, v: WeylElement, w: WeylElement) -> bool:
        """Reference implementation through the lifting/subword route."""
        return self._bruhat_leq_lifting(v.key, w.key)


def _cartan_entries(m: int) -> tuple:
    # off-diagonal Cartan integers (a_st, a_ts) for a bond of order m
    table = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3)}
    if m not in table:
        raise ValueError(f"non-crystallographic bond order {m} unsupported")
    return table[m]


class MatrixCoxeterGroup(CoxeterGroup):
    """A finite Coxeter group enumerated via the reflection representation.

    The group is built once from its Coxeter matrix: integer matrices in
    the root basis, multiplication-by-generator tables, and a length
    table.  Element keys are enumeration indices.
    """

    def __init__(self, coxeter_matrix, label: str = "W"):
        matrix = [list(row) for row in coxeter_matrix]
        rank = len(matrix)
        for i in range(rank):
            if matrix[i][i] != 1:
                raise ValueError("diagonal of a Coxeter matrix must be 1")
            for j in range(rank):
                if i != j and (matrix[i][j] != matrix[j][i] or matrix[i][j] < 2):
                    raise ValueError("invalid Coxeter matrix")
        self.rank = rank
        self.label = label
        self.matrix = matrix
        super().__init__()

        cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                a_ij, a_ji = _cartan_entries(matrix[i][j])
                cartan[i][j], cartan[j][i] = a_ij, a_ji

        # generator matrices acting on the root basis: s_i(alpha_j) =
        # alpha_j - cartan[i][j] * alpha_i
        def gen_matrix(i):
            rows = []
            for r in range(rank):
                row = [1 if r == c else 0 for c in range(rank)]
                rows.append(row)
            for j in range(rank):
                rows[i][j] -= cartan[i][j]
            return tuple(tuple(r) for r in rows)

        def mat_mul(a, b):
            return tuple(
                tuple(
                    sum(a[r][k] * b[k][c] for k in range(rank))
                    for c in range(rank)
                )
                for r in range(rank)
            )

        gens = [gen_matrix(i) for i in range(rank)]
        ident = tuple(
            tuple(1 if r == c else 0 for c in range(rank)) for r in range(rank)
        )

        index = {ident: 0}
        mats = [ident]
        lengths = [0]
        words = [()]
        frontier = [0]
        while frontier:
            nxt = []
            for idx in frontier:
                for s in range(rank):
                    m2 = mat_mul(mats[idx], gens[s])
                    if m2 not in index:
                        index[m2] = len(mats)
                        mats.append(m2)
                        lengths.append(lengths[idx] + 1)
                        words.append(words[idx] + (s + 1,))
                        nxt.append(index[m2])
            frontier = nxt

        size = len(mats)
        self._mats = mats
        self._lengths = lengths
        self._rmul = [
            [index[mat_mul(mats[i], gens[s])] for s in range(rank)]
            for i in range(size)
        ]
        self._lmul = [
            [index[mat_mul(gens[s], mats[i])] for s in range(rank)]
            for i in range(size)
        ]
        inv = [0] * size
        for i in range(size):
            k = 0
            for s in reversed(words[i]):
                k = self._rmul[k][s - 1]
            inv[i] = k
        self._inverse = inv
        self._size = size

        # positive roots (coordinates in the root basis); used for the
        # inversion-set characterization of length and descents.
        roots = set()
        for i in range(size):
            for s in range(rank):
                col = tuple(mats[i][r][s] for r in range(rank))
                roots.add(col)
        self.positive_roots = sorted(
            r for r in roots if all(c >= 0 for c in r) and any(c > 0 for c in r)
        )

    def identity_key(self):
        return 0

    def simple_key(self, s):
        return self._rmul[0][s - 1]

    def rmul_key(self, key, s):
        return self._rmul[key][s - 1]

    def lmul_key(self, key, s):
        return self._lmul[key][s - 1]

    def rmul_raises(self, key, s) -> bool:
        return self._lengths[self._rmul[key][s - 1]] > self._lengths[key]

    def length_key(self, key) -> int:
        return self._lengths[key]

    def inverse_key(self, key):
        return self._inverse[key]

    def iter_keys(self):
        return range(self._size)

    def order(self) -> int:
        return self._size

    def coxeter_m(self, s, t) -> int:
        return self.matrix[s - 1][t - 1]

    def key_str(self, key) -> str:
        word = self.word_key(key)
        return "e" if not word else "s" + " s".join(str(s) for s in word)

    def bruhat_leq_key(self, a, b) -> bool:
        return self._bruhat_leq_lifting(a, b)

    def acts_negatively(self, key, root) -> bool:
        """True iff the element sends the given positive root negative."""
        mat = self._mats[key]
        image = tuple(
            sum(mat[r][c] * root[c] for c in range(self.rank))
            for r in range(self.rank)
        )
        return all(c <= 0 for c in image) and any(c < 0 for c in image)

    def inversion_count(self, key) -> int:
        return sum(1 for r in self.positive_roots if self.acts_negatively(key, r))


def weyl_group_c2() -> MatrixCoxeterGroup:
    return MatrixCoxeterGroup([[1, 4], [4, 1]], label="C2")


def contains_pattern(w: WeylElement, p: WeylElement) -> bool:
    """One-line pattern containment: some subsequence of w is
    order-isomorphic to p.  Brute force over index subsets."""
    if not isinstance(w.group, SymmetricGroup) or not isinstance(
        p.group, SymmetricGroup
    ):
        raise ValueError("pattern containment is a symmetric-group operation")
    wline, pline = w.key, p.key
    k = len(pline)
    if k > len(wline):
        return False
    order = _pattern_order(pline)
    for positions in itertools.combinations(range(len(wline)), k):
        values = [wline[i] for i in positions]
        if _pattern_order(tuple(values)) == order:
            return True
    return False


def _pattern_order(values: tuple) -> tuple:
    ranks = sorted(range(len(values)), key=lambda i: values[i])
    out = [0] * len(values)
    for rank, i in enumerate(ranks, start=1):
        out[i] = rank
    return tuple(out)


def avoids_patterns(w: WeylElement, patterns) -> bool:
    g = w.group
    for pat in patterns:
        pg = SymmetricGroup(len(pat)) if len(pat) != g.n else g
        if contains_pattern(w, pg.element_from_one_line(pat)):
            return False
    return True

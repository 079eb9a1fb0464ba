"""Iwahori-Hecke algebra in the standard T-basis, over Z[q].

Two polynomial representations are used:

* small immutable coefficient tuples (index = degree) for presentation,
  tests, and return values -- the ``p_*`` helpers;
* packed big integers for the heavy convolution work: a polynomial with
  nonnegative coefficients below 2**bits is stored as its value at
  q = 2**bits, so addition, shifting, and multiplication are single
  integer operations.  Packing is injective as long as every
  coefficient stays below 2**bits; contexts size ``bits`` from an a
  priori bound on the point counts involved, and unpacking asserts the
  digits stay well inside the margin.

Elements are dicts mapping group keys to packed polynomials.  The
quadratic relation used for multiplication by a generator is

    T_w * T_s = T_{ws}                      if length goes up,
    T_w * T_s = (q-1) T_w + q T_{ws}        if length goes down.

The workhorse is right multiplication by the parabolic sum
x_J = sum_{v in W_J} T_v, computed coset by coset:

    T_u * x_J = q^{len(u1)} * sum_{v in W_J} T_{u0 v}

where u = u0 u1 is the parabolic coset decomposition; distinct cosets
write disjoint keys, so long products of parabolic sums stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass


class DivisionFailure(ArithmeticError):
    pass


# -- tuple polynomials (coefficients, lowest degree first) -----------------

P_ZERO: tuple = ()
P_ONE: tuple = (1,)


def p_trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def p_add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return p_trim(out)


def p_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return P_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return p_trim(out)


def p_eval(a: tuple, q: int) -> int:
    out = 0
    for c in reversed(a):
        out = out * q + c
    return out


def p_deg(a: tuple) -> int:
    if not a:
        raise ValueError("degree of zero polynomial")
    return len(a) - 1


def p_divexact(a: tuple, b: tuple) -> tuple:
    """Exact polynomial division; raises DivisionFailure on remainders."""
    if not b:
        raise DivisionFailure("division by zero polynomial")
    if not a:
        return P_ZERO
    if len(a) < len(b):
        raise DivisionFailure("degree of dividend too small")
    rem = list(a)
    lead = b[-1]
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(rem[i + len(b) - 1], lead)
        if r:
            raise DivisionFailure("inexact coefficient division")
        out[i] = c
        if c:
            for j, y in enumerate(b):
                rem[i + j] -= c * y
    if any(rem):
        raise DivisionFailure("nonzero remainder")
    return p_trim(out)


def p_str(a: tuple) -> str:
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            q = "q" if i == 1 else f"q^{i}"
            if c == 1:
                terms.append(q)
            elif c == -1:
                terms.append(f"-{q}")
            else:
                terms.append(f"{c}{q}")
    return " + ".join(terms).replace("+ -", "- ")


# -- the packed-representation context --------------------------------------

@dataclass(frozen=True)
class FiberProfile:
    """Fiber-count polynomials of the multiplication map of a chain.

    ``cells`` maps group keys u to the tuple polynomial N_u(q); its
    degree is the fiber dimension over any point of the cell of u.
    ``total_dim`` is the dimension of the total space.
    """

    w: object  # WeylElement target (the image is X_w)
    cells: dict
    total_dim: int

    def n_at(self, u) -> tuple:
        key = getattr(u, "key", u)
        return self.cells.get(key, P_ZERO)

    def is_birational(self) -> bool:
        return self.cells.get(self.w.key) == P_ONE

    def is_isomorphism(self) -> bool:
        return all(n == P_ONE for n in self.cells.values())


@dataclass(frozen=True)
class SmallnessCertificate:
    """Cells with positive fiber dimension, and the smallness verdict:
    small iff len(w) - len(u) > 2 * fiber dim for every listed cell."""

    w: object
    positive_cells: tuple  # ((u_key, len(u), deg N_u), ...)
    verdict: str  # "small" | "not_small" | "not_birational"

    def witnesses(self) -> tuple:
        lw = self.w.length
        return tuple(
            (ukey, lu, d)
            for ukey, lu, d in self.positive_cells
            if lw - lu <= 2 * d
        )


def smallness(profile: FiberProfile) -> SmallnessCertificate:
    if not profile.is_birational():
        return SmallnessCertificate(profile.w, (), "not_birational")
    group = profile.w.group
    positive = []
    for ukey, n in profile.cells.items():
        d = p_deg(n)
        if d >= 1:
            positive.append((ukey, group.length_key(ukey), d))
    positive.sort(key=lambda t: (t[1], t[0]))
    lw = profile.w.length
    ok = all(lw - lu > 2 * d for _u, lu, d in positive)
    return SmallnessCertificate(
        profile.w, tuple(positive), "small" if ok else "not_small"
    )


class HeckeContext:
    """Hecke-algebra workspace for one group and one packing width."""

    def __init__(self, group, bits: int = 128):
        self.group = group
        self.bits = bits
        self.mask = (1 << bits) - 1
        self._parabolic_keys: dict = {}
        self._poincare: dict = {}
        self._schubert: dict = {}
        self._interval_tree: dict = {}

    # -- packing -------------------------------------------------------------

    def pack(self, coeffs) -> int:
        out = 0
        for i, c in enumerate(coeffs):
            out += c << (i * self.bits)
        return out

    def unpack(self, value: int) -> tuple:
        """Signed balanced unpacking: each digit lands in
        (-2**(bits-1), 2**(bits-1)); valid whenever every true
        coefficient has magnitude below half the packing width."""
        out = []
        guard = 1 << (self.bits - 4)
        half = 1 << (self.bits - 1)
        negative = value < 0
        if negative:
            value = -value
        while value:
            digit = value & self.mask
            if digit >= half:
                digit -= self.mask + 1
            assert abs(digit) < guard, "coefficient too close to packing width"
            out.append(-digit if negative else digit)
            value = (value - digit) >> self.bits
        return tuple(out)

    @property
    def one(self) -> int:
        return 1

    def q_power(self, k: int) -> int:
        return 1 << (k * self.bits)

    def mul_qminus1(self, p: int) -> int:
        return (p << self.bits) - p

    # -- elements -------------------------------------------------------------

    def unit(self) -> dict:
        return {self.group.identity_key(): 1}

    def t_basis(self, w) -> dict:
        return {w.key: 1}

    def to_tuples(self, elt: dict) -> dict:
        return {k: self.unpack(p) for k, p in elt.items()}

    def mul_Ts(self, elt: dict, s: int) -> dict:
        g = self.group
        out: dict = {}
        for key, poly in elt.items():
            k2 = g.rmul_key(key, s)
            if g.rmul_raises(key, s):
                out[k2] = out.get(k2, 0) + poly
            else:
                out[key] = out.get(key, 0) + self.mul_qminus1(poly)
                out[k2] = out.get(k2, 0) + (poly << self.bits)
        return {k: p for k, p in out.items() if p}

    def lmul_Ts(self, s: int, elt: dict) -> dict:
        g = self.group
        out: dict = {}
        for key, poly in elt.items():
            k2 = g.lmul_key(key, s)
            if g.lmul_raises(key, s):
                out[k2] = out.get(k2, 0) + poly
            else:
                out[key] = out.get(key, 0) + self.mul_qminus1(poly)
                out[k2] = out.get(k2, 0) + (poly << self.bits)
        return {k: p for k, p in out.items() if p}

    def mul_Tw(self, elt: dict, w) -> dict:
        for s in w.word():
            elt = self.mul_Ts(elt, s)
        return elt

    def hecke_mul(self, a: dict, b: dict) -> dict:
        """Generic product: expand b through reduced words."""
        g = self.group
        out: dict = {}
        for key, poly in b.items():
            term = dict(a)
            for s in g.word_key(key):
                term = self.mul_Ts(term, s)
            for k, p in term.items():
                out[k] = out.get(k, 0) + p * poly
        return {k: p for k, p in out.items() if p}

    # -- parabolic sums ---------------------------------------------------------

    def parabolic_keys(self, J) -> tuple:
        J = frozenset(J)
        keys = self._parabolic_keys.get(J)
        if keys is None:
            keys = tuple(v.key for v in self.group.parabolic_elements(J))
            self._parabolic_keys[J] = keys
        return keys

    def x_parabolic(self, J) -> dict:
        return {key: 1 for key in self.parabolic_keys(J)}

    def poincare(self, J) -> tuple:
        """pi_J(q) as a tuple polynomial."""
        J = frozenset(J)
        poly = self._poincare.get(J)
        if poly is None:
            counts: dict = {}
            for key in self.parabolic_keys(J):
                d = self.group.length_key(key)
                counts[d] = counts.get(d, 0) + 1
            poly = p_trim([counts.get(i, 0) for i in range(max(counts) + 1)])
            self._poincare[J] = poly
        return poly

    def mul_xJ(self, elt: dict, J) -> dict:
        """Right multiplication by x_J, coset by coset."""
        g = self.group
        keys = self.parabolic_keys(J)
        J = frozenset(J)
        bits = self.bits
        out: dict = {}
        for key, poly in elt.items():
            u0, u1 = g.coset_decompose(g.make(key), J)
            scaled = poly << (u1.length * bits)
            u0key = u0.key
            for vkey in keys:
                k2 = g.mul_key(u0key, vkey)
                out[k2] = out.get(k2, 0) + scaled
        return out

    def lmul_xJ(self, J, elt: dict) -> dict:
        g = self.group
        inv = {g.inverse_key(k): p for k, p in elt.items()}
        prod = self.mul_xJ(inv, J)
        return {g.inverse_key(k): p for k, p in prod.items()}

    # -- Schubert classes ---------------------------------------------------------

    def schubert_class(self, w) -> dict:
        """sum_{v <= w} T_v (all coefficients 1)."""
        cls = self._schubert.get(w.key)
        if cls is None:
            g = self.group
            cls = {
                k: 1
                for k in g.iter_keys()
                if g.bruhat_leq_key(k, w.key)
            }
            self._schubert[w.key] = cls
        return dict(cls)

    def _interval_children(self, w) -> dict:
        """Tree on [e, w]: parent(u) = u * s_min(tau(u)); children map."""
        tree = self._interval_tree.get(w.key)
        if tree is None:
            g = self.group
            children: dict = {}
            for key in self.schubert_class(w):
                if g.length_key(key) == 0:
                    continue
                s = min(t for t in g.simples if not g.rmul_raises(key, t))
                parent = g.rmul_key(key, s)
                children.setdefault(parent, []).append((s, key))
            tree = children
            self._interval_tree[w.key] = tree
        return tree

    def mul_schubert_class(self, elt: dict, w) -> dict:
        """elt * schubert_class(w), sharing prefixes along the interval
        tree (one generator multiplication per interval element)."""
        g = self.group
        if w.right_descents() == w.support():
            # w is the longest element of its support: the class is a
            # parabolic sum and the coset path is much faster
            return self.mul_xJ(elt, w.support())
        children = self._interval_children(w)
        total: dict = dict(elt)

        def visit(key, acc):
            for s, child in children.get(key, ()):
                nxt = self.mul_Ts(acc, s)
                for k, p in nxt.items():
                    total[k] = total.get(k, 0) + p
                visit(child, nxt)

        visit(g.identity_key(), elt)
        return {k: p for k, p in total.items() if p}

    # -- fiber profiles --------------------------------------------------------

    def chain_profile(self, elements, links) -> FiberProfile:
        """Fiber-count polynomials of the multiplication map of a chain
        (w_0, ..., w_m) with links (J_1, ..., J_m): the product of the
        Schubert classes, with every coefficient exactly divided by
        prod_i pi_{J_i}(q)."""
        assert len(links) == len(elements) - 1
        g = self.group
        h = self.schubert_class(elements[0])
        for v in elements[1:]:
            h = self.mul_schubert_class(h, v)
        divisor = P_ONE
        for J in links:
            divisor = p_mul(divisor, self.poincare(J))
        cells = {}
        for key, packed in h.items():
            coeffs = self.unpack(packed)
            cells[key] = p_divexact(coeffs, divisor)
        target = elements[0]
        for v in elements[1:]:
            target = target.star(v)
        total_dim = sum(v.length for v in elements) - sum(
            p_deg(self.poincare(J)) for J in links
        )
        profile = FiberProfile(target, cells, total_dim)
        self._check_profile(profile, elements, links, divisor)
        return profile

    def parabolic_chain_profile(self, subsets) -> FiberProfile:
        """Profile of the chain of longest elements of (I_0, ..., I_m)
        with the induced links J_i = I_{i-1} intersect I_i."""
        g = self.group
        subsets = [frozenset(J) for J in subsets]
        elements = [g.longest(J) for J in subsets]
        links = [subsets[i - 1] & subsets[i] for i in range(1, len(subsets))]
        h = self.x_parabolic(subsets[0])
        for J in subsets[1:]:
            h = self.mul_xJ(h, J)
        divisor = P_ONE
        for J in links:
            divisor = p_mul(divisor, self.poincare(J))
        cells = {}
        for key, packed in h.items():
            coeffs = self.unpack(packed)
            cells[key] = p_divexact(coeffs, divisor)
        target = elements[0]
        for v in elements[1:]:
            target = target.star(v)
        total_dim = sum(v.length for v in elements) - sum(
            p_deg(self.poincare(J)) for J in links
        )
        profile = FiberProfile(target, cells, total_dim)
        self._check_profile(profile, elements, links, divisor)
        return profile

    def _check_profile(self, profile, elements, links, divisor) -> None:
        # consistency: sum_u N_u q^{len u} = prod_i (interval Poincare
        # series of w_i) / prod_i pi_{J_i}
        g = self.group
        lhs = P_ZERO
        for key, n in profile.cells.items():
            lhs = p_add(lhs, p_mul(n, self._q_len(g.length_key(key))))
        rhs = P_ONE
        for v in elements:
            counts: dict = {}
            for key in self.schubert_class(v):
                d = g.length_key(key)
                counts[d] = counts.get(d, 0) + 1
            rhs = p_mul(
                rhs, p_trim([counts.get(i, 0) for i in range(max(counts) + 1)])
            )
        rhs = p_divexact(rhs, divisor)
        if lhs != rhs:
            raise DivisionFailure("profile consistency identity failed")
        # dimension identity on the total space
        top = max(
            p_deg(n) + g.length_key(key) for key, n in profile.cells.items()
        )
        if top != profile.total_dim:
            raise DivisionFailure("profile dimension identity failed")

    @staticmethod
    def _q_len(k: int) -> tuple:
        return (0,) * k + (1,)


def default_bits(group, chain_length: int = 12) -> int:
    """Packing width safely above every coefficient a chain of at most
    ``chain_length`` Schubert classes can produce (counts are bounded
    by the number of chains, at most |W|^m)."""
    bound = group.order() ** max(chain_length, 2)
    return max(64, 2 * bound.bit_length() + 16)

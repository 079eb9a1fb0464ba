"""Billey-Postnikov (BP) decompositions and the structure theory built
on them: complete BP chains, the two-factor isomorphism test, the
isomorphism surgery on a BP decomposition, smoothness, and the
factorization of smooth simply-laced elements into parabolic data.

Throughout, tau(w) is the right descent set, sigma(w) the support, and
w_J the longest element of the standard parabolic subgroup W_J.  A
parabolic decomposition w = u0 * u1 with respect to I (u1 in W_I, u0
minimal in w W_I, lengths adding) is BP when

    sigma(u0) intersect I   is contained in   tau(u1^{-1}),

and grassmannian when additionally I = sigma(w) minus a single simple
reflection and sigma(u1) = I.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import (
    EMPTY,
    Subset,
    SymmetricGroup,
    WeylElement,
    avoids_patterns,
)

# one-line patterns whose avoidance characterizes the existence of a
# complete BP chain in type A
COMPLETE_BP_PATTERNS = ((3, 4, 1, 2), (5, 2, 3, 4, 1), (6, 3, 5, 2, 4, 1))

# one-line patterns whose containment characterizes singular Schubert
# varieties in type A
SINGULAR_PATTERNS = ((3, 4, 1, 2), (4, 2, 3, 1))


@dataclass(frozen=True)
class BPDecomposition:
    w: WeylElement
    I: Subset
    u0: WeylElement
    u1: WeylElement


def parabolic_decompose(w: WeylElement, I) -> BPDecomposition:
    u0, u1 = w.group.coset_decompose(w, I)
    assert u0.length + u1.length == w.length
    return BPDecomposition(w, frozenset(I), u0, u1)


def is_bp(w: WeylElement, I):
    """The BP decomposition of w with respect to I, or None."""
    dec = parabolic_decompose(w, I)
    if (dec.u0.support() & dec.I) <= dec.u1.inverse().right_descents():
        return dec
    return None


def is_grassmannian_bp(dec: BPDecomposition) -> bool:
    sigma = dec.w.support()
    return (
        len(sigma - dec.I) == 1
        and dec.I < sigma
        and dec.u1.support() == dec.I
        and (dec.u0.support() & dec.I) <= dec.u1.inverse().right_descents()
    )


def grassmannian_bp_stages(w: WeylElement):
    """All grassmannian BP decompositions of w, by ascending dropped
    simple reflection."""
    sigma = w.support()
    for s in sorted(sigma):
        I = sigma - {s}
        dec = parabolic_decompose(w, I)
        if is_grassmannian_bp(dec):
            yield s, dec


@dataclass(frozen=True)
class CompleteBP:
    """An iterated grassmannian BP chain w = u_0 u_1 ... u_n: each tail
    u_k ... u_n has a grassmannian BP decomposition dropping the simple
    reflection s_k, down to a single reflection."""

    w: WeylElement
    factors: tuple  # (u_0, ..., u_n)
    dropped: tuple  # (s_0, ..., s_n); sigma(u_k...u_n) loses s_k at stage k


def complete_bp(w: WeylElement):
    """A complete BP decomposition of w, or None.

    Depth-first over the grassmannian stages, trying dropped simple
    reflections in ascending order, so the result is deterministic.
    """
    if w.is_identity():
        return None
    factors = []
    dropped = []

    def descend(v):
        if len(v.support()) == 1:
            factors.append(v)
            dropped.append(min(v.support()))
            return True
        for s, dec in grassmannian_bp_stages(v):
            factors.append(dec.u0)
            dropped.append(s)
            if descend(dec.u1):
                return True
            factors.pop()
            dropped.pop()
        return False

    if not descend(w):
        return None
    return CompleteBP(w, tuple(factors), tuple(dropped))


def has_complete_bp(w: WeylElement) -> bool:
    # the identity admits the empty chain (complete_bp returns None
    # only because there is no stage to decompose)
    return w.is_identity() or complete_bp(w) is not None


def avoids_complete_bp_patterns(w: WeylElement) -> bool:
    if not isinstance(w.group, SymmetricGroup):
        raise ValueError("pattern criterion is specific to type A")
    return avoids_patterns(w, COMPLETE_BP_PATTERNS)


# -- factor chains -----------------------------------------------------------

@dataclass(frozen=True)
class FactorChain:
    """A sequence of elements (w_0, ..., w_m) with links (J_1, ..., J_m)
    satisfying the stabilization containments J_i <= tau(w_{i-1}) and
    J_i <= tau(w_i^{-1}); the target is the star product of the w_i."""

    elements: tuple
    links: tuple

    def __post_init__(self):
        assert len(self.links) == len(self.elements) - 1
        for i, J in enumerate(self.links, start=1):
            assert J <= self.elements[i - 1].right_descents()
            assert J <= self.elements[i].inverse().right_descents()

    def target(self) -> WeylElement:
        acc = self.elements[0]
        for v in self.elements[1:]:
            acc = acc.star(v)
        return acc


def iso_test(v: WeylElement, w: WeylElement) -> bool:
    """True iff the two-factor chain (v, w) with link
    tau(v) intersect tau(w^{-1}) maps isomorphically onto X_{v star w}:
    sigma(v) intersect sigma(w) <= tau(v) intersect tau(w^{-1})."""
    common = v.support() & w.support()
    return common <= (v.right_descents() & w.inverse().right_descents())


def chain_factors(cbp: CompleteBP) -> FactorChain:
    """The saturated chain w_k = u_k star w_{J_{k+1}} attached to a
    complete BP chain, with J_k = tau((u_k ... u_n)^{-1}).

    Postconditions checked: w = w_0 star ... star w_n; J_k =
    tau(w_k^{-1}) <= tau(w_{k-1}); tau(w^{-1}) = tau(w_0^{-1});
    tau(w_k) is sigma(w_k) or sigma(w_k) minus the dropped letter.
    """
    g = cbp.w.group
    n = len(cbp.factors)
    tails = [None] * n
    tail = g.identity
    for k in range(n - 1, -1, -1):
        tail = cbp.factors[k] * tail
        tails[k] = tail
    J = [t.inverse().right_descents() for t in tails] + [EMPTY]
    out = []
    for k in range(n):
        wk = cbp.factors[k].star(g.longest(J[k + 1]))
        assert wk.inverse().right_descents() == J[k]
        tau_k = wk.right_descents()
        sig_k = wk.support()
        assert tau_k == sig_k or tau_k == sig_k - {cbp.dropped[k]}
        out.append(wk)
    links = tuple(J[1:n])
    for k in range(1, n):
        assert links[k - 1] <= out[k - 1].right_descents()
    chain = FactorChain(tuple(out), links)
    assert chain.target() == cbp.w
    assert out[0].inverse().right_descents() == cbp.w.inverse().right_descents()
    return chain


# -- isomorphism surgery on a BP decomposition -------------------------------

def bp_isom(w: WeylElement, I, variant: str = "ii") -> FactorChain:
    """Turn a BP decomposition w = u0 * u1 w.r.t. I into a two-factor
    chain (w_0, w_1) passing iso_test, per variant:

      "i":   w_0 = u0 star w_J with J = sigma(u0) intersect sigma(u1),
             w_1 = u1, link J.
      "ii":  w_0 = u0 star w_{J'} with J' = tau(u1^{-1}), w_1 = u1,
             link J'; postcondition tau(w^{-1}) = tau(w_0^{-1}).
      "iii": as "ii" but re-derive w_1 as w_{J'} star u1 and fold
             w_{tau(w)} onto it, asserting the length is unchanged;
             postconditions tau(w^{-1}) = tau(w_0^{-1}) and
             tau(w) = tau(w_1); link tau(w_0).
    """
    dec = is_bp(w, I)
    if dec is None:
        raise ValueError(f"no BP decomposition of {w} w.r.t. {sorted(I)}")
    g = w.group
    if variant == "i":
        J = dec.u0.support() & dec.u1.support()
        w0 = dec.u0.star(g.longest(J))
        w1 = dec.u1
        link = J
    elif variant in ("ii", "iii"):
        J_prime = dec.u1.inverse().right_descents()
        w0 = dec.u0.star(g.longest(J_prime))
        w1 = dec.u1
        link = J_prime
        assert w0.inverse().right_descents() == w.inverse().right_descents()
        if variant == "iii":
            w1 = g.longest(J_prime).star(dec.u1)
            assert w1 == dec.u1
            folded = w1.star(g.longest(w.right_descents()))
            assert folded.length == w1.length, (
                "folding w_{tau(w)} must not lengthen the second factor"
            )
            w1 = folded
            assert w1.right_descents() == w.right_descents()
            link = w0.right_descents()
    else:
        raise ValueError(f"unknown variant {variant!r}")
    assert iso_test(w0, w1)
    assert link == (w0.right_descents() & w1.inverse().right_descents())
    chain = FactorChain((w0, w1), (link,))
    assert chain.target() == w
    return chain


# -- smoothness ---------------------------------------------------------------

def smoothness(w: WeylElement) -> str:
    """One of "smooth", "singular", "unsupported".

    Type A: singular iff w contains 3412 or 4231.  Other simply-laced
    groups: recursion through grassmannian BP stages whose top factor
    sweeps out the full parabolic orbit of its support (and whose fiber
    factor is again smooth).  Non-simply-laced groups are rejected:
    this package does not separate rational smoothness from smoothness.
    """
    g = w.group
    if isinstance(g, SymmetricGroup):
        return "smooth" if avoids_patterns(w, SINGULAR_PATTERNS) else "singular"
    if not g.is_simply_laced():
        return "unsupported"
    return "smooth" if _smooth_simply_laced(w) else "singular"


def is_smooth(w: WeylElement) -> bool:
    verdict = smoothness(w)
    if verdict == "unsupported":
        raise ValueError("smoothness test unsupported outside simply-laced types")
    return verdict == "smooth"


def _smooth_simply_laced(w: WeylElement) -> bool:
    g = w.group
    if len(w.support()) <= 1:
        return True
    for _s, dec in grassmannian_bp_stages(w):
        if dec.u0.star(g.longest(dec.I)) == g.longest(dec.u0.support() | dec.I):
            if _smooth_simply_laced(dec.u1):
                return True
    return False


# -- factorization of smooth simply-laced elements ---------------------------

def simply_laced_factorization(w: WeylElement) -> tuple:
    """Factor a smooth simply-laced element into parabolic subsets
    (I_0, ..., I_m) with w = w_{I_0} star ... star w_{I_m}, exact
    dimension count, I_0 = tau(w^{-1}) and I_m = tau(w); the induced
    chain of longest elements maps isomorphically onto X_w.

    Recursion on length: take a complete BP chain with saturated
    factors w_0, ..., w_n and dropped letters s_i; with K = tau(w^{-1})
    let A = { i : w_K star w_i != w_K }.  If A is empty then
    w = w_{sigma(w)}.  Otherwise k = min(A), I = K minus {s_k}
    (s_k is never a right descent of w -- asserted), and
    u = w_I star (u_{k+1} ... u_n) is a shorter smooth element with
    w = w_K star u and tau(u) = tau(w); prepend K to its data.
    """
    g = w.group
    if not g.is_simply_laced():
        raise ValueError("factorization requires a simply-laced group")
    if not is_smooth(w):
        raise ValueError(f"not smooth: {w}")
    if w.is_identity():
        return (frozenset(),)
    return _sl_factorization(w)


def _sl_factorization(w: WeylElement) -> tuple:
    g = w.group
    if w.is_identity():
        return ()
    K = w.inverse().right_descents()
    wK = g.longest(K)
    cbp = complete_bp(w)
    if cbp is None:
        raise ValueError(f"no complete BP chain for {w}")
    chain = chain_factors(cbp)
    A = [i for i, wi in enumerate(chain.elements) if wK.star(wi) != wK]
    if not A:
        assert g.longest(w.support()) == w
        return (frozenset(w.support()),)
    k = min(A)
    s_k = cbp.dropped[k]
    assert s_k not in w.right_descents(), (
        f"dropped letter {s_k} is a right descent of {w}; "
        "factorization invariant violated"
    )
    I = frozenset(K - {s_k})
    tail = g.identity
    for f in cbp.factors[k + 1 :]:
        tail = tail * f
    u = g.longest(I).star(tail)
    assert wK.star(u) == w
    assert u.length < w.length
    assert u.right_descents() == w.right_descents()
    rest = _sl_factorization(u)
    return (frozenset(K),) + rest


def simply_laced_tau_check(w: WeylElement) -> bool:
    """For smooth simply-laced w: the biconditional
    tau(w^{-1}) = tau(w)  <=>  tau(w) = sigma(w)."""
    lhs = w.inverse().right_descents() == w.right_descents()
    rhs = w.right_descents() == w.support()
    return lhs == rhs

"""Construction, certification, and search of small resolutions given
by parabolic resolution data.

Resolution data for a target w is a sequence of parabolic subsets
(I_0, ..., I_m) with derived links J_i = I_{i-1} intersect I_i such
that the longest elements star-multiply to w and the total-space
dimension sum(len w_{I_i}) - sum(len w_{J_i}) equals len(w) (which is
birationality).  The data is certified small through the fiber-count
oracle: every cell u with fiber dimension d >= 1 must satisfy
len(w) - len(u) > 2d.

Search routes, tried in order: smooth factorization, the route for
targets with at most one support letter missing from the descent set,
the complete-BP glue route (on w or on w^{-1}), equivariant recursion
(peel w_{tau(w^{-1})} and w_{tau(w)} off the two ends), and bounded
exhaustive enumeration.  A missing certificate is a value, not an
error: the oracle cannot prove nonexistence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import EMPTY, Subset, WeylElement
from .hecke import (
    DivisionFailure,
    FiberProfile,
    HeckeContext,
    SmallnessCertificate,
    default_bits,
    p_deg,
    smallness,
)
from . import bp


class NotAResolution(ValueError):
    pass


class WrongImage(NotAResolution):
    pass


class DimensionMismatch(NotAResolution):
    pass


class NotSmall(NotAResolution):
    def __init__(self, certificate):
        super().__init__(f"not a small resolution: {certificate.verdict}")
        self.certificate = certificate


class IncompatibleLink(ValueError):
    pass


class NotIso(ValueError):
    pass


@dataclass(frozen=True)
class ResolutionData:
    """Target w plus the subset sequence; links are derived."""

    w: WeylElement
    subsets: tuple

    def links(self) -> tuple:
        return tuple(
            self.subsets[i - 1] & self.subsets[i]
            for i in range(1, len(self.subsets))
        )

    def star_product(self) -> WeylElement:
        g = self.w.group
        acc = g.identity
        for J in self.subsets:
            acc = acc.star(g.longest(J))
        return acc

    def dimension(self) -> int:
        g = self.w.group
        return sum(g.longest(J).length for J in self.subsets) - sum(
            g.longest(J).length for J in self.links()
        )


def make_data(w: WeylElement, subsets) -> ResolutionData:
    subsets = tuple(frozenset(J) for J in subsets)
    return ResolutionData(w, _collapse(w.group, subsets))


def _collapse(group, subsets: tuple) -> tuple:
    """Merge comparable adjacent subsets when that leaves the
    neighboring links unchanged (such pairs are redundant stages)."""
    out = list(subsets)
    changed = True
    while changed and len(out) > 1:
        changed = False
        for i in range(len(out) - 1):
            a, b = out[i], out[i + 1]
            if not (a <= b or b <= a):
                continue
            keep = a | b
            # never widen an end subset; the ends carry meaning
            if (i == 0 and keep != a) or (i + 2 == len(out) and keep != b):
                continue
            left_ok = i == 0 or (out[i - 1] & a) == (out[i - 1] & keep)
            right_ok = i + 2 == len(out) or (out[i + 2] & b) == (
                out[i + 2] & keep
            )
            if left_ok and right_ok:
                out[i : i + 2] = [keep]
                changed = True
                break
    return tuple(out)


@dataclass(frozen=True)
class CertifiedResolution:
    data: ResolutionData
    profile: FiberProfile
    certificate: SmallnessCertificate
    eq_left: bool  # I_0 = tau(w^{-1})
    eq_right: bool  # I_m = tau(w)
    route: str = ""


def validate(ctx: HeckeContext, data: ResolutionData) -> FiberProfile:
    """Check the star product and the exact dimension, then compute the
    fiber profile."""
    image = data.star_product()
    if image != data.w:
        raise WrongImage(f"star product {image} is not the target {data.w}")
    dim = data.dimension()
    if dim != data.w.length:
        raise DimensionMismatch(
            f"total space dimension {dim} != len(w) = {data.w.length}"
        )
    return ctx.parabolic_chain_profile(data.subsets)


def evaluate(ctx: HeckeContext, w: WeylElement, subsets, route: str = ""):
    """Validate and judge; returns a CertifiedResolution whose verdict
    may be anything (callers enforce smallness)."""
    data = make_data(w, subsets)
    profile = validate(ctx, data)
    cert = smallness(profile)
    eq_left = data.subsets[0] == w.inverse().right_descents()
    eq_right = data.subsets[-1] == w.right_descents()
    return CertifiedResolution(data, profile, cert, eq_left, eq_right, route)


def certify(ctx: HeckeContext, w: WeylElement, subsets, route: str = "") -> CertifiedResolution:
    """Like evaluate, but raises NotSmall unless the verdict is small."""
    result = evaluate(ctx, w, subsets, route)
    if result.certificate.verdict != "small":
        raise NotSmall(result.certificate)
    return result


def _try_certify(ctx, w, subsets, route):
    try:
        return certify(ctx, w, subsets, route)
    except (NotAResolution, DivisionFailure):
        return None


# -- route: descent-heavy targets ---------------------------------------------

def _support_components(group, sigma):
    """Connected components of the support in the Coxeter graph."""
    todo = set(sigma)
    comps = []
    while todo:
        frontier = [todo.pop()]
        comp = set(frontier)
        while frontier:
            s = frontier.pop()
            for t in list(todo):
                if group.coxeter_m(s, t) >= 3:
                    todo.remove(t)
                    comp.add(t)
                    frontier.append(t)
        comps.append(frozenset(comp))
    return comps


def _merge_component_data(group, blocks) -> tuple:
    """Combine per-component subset sequences by elementwise union,
    padding shorter blocks with their final subset."""
    m = max(len(b) for b in blocks)
    padded = [b + (b[-1],) * (m - len(b)) for b in blocks]
    return tuple(
        frozenset().union(*(b[i] for b in padded)) for i in range(m)
    )


def _fixed_ends_search(ctx, w, first, last, max_middle=4, budget=None):
    """Enumerate data (first, X_1, ..., X_{m-1}, last) over nonempty
    subsets of the support, shortest sequences first, pruning on the
    exact-dimension requirement; certify candidates with the oracle."""
    g = w.group
    sigma = w.support()
    pool = _subset_pool(sigma)
    target_dim = w.length

    def extend(seq, dim, prod, slots):
        if budget is not None:
            if budget[0] <= 0:
                return None
            budget[0] -= 1
        if slots == 0:
            link = seq[-1] & last
            final_dim = dim + g.longest(last).length - g.longest(link).length
            if final_dim != target_dim:
                return None
            final = prod.star(g.longest(last))
            if final != w:
                return None
            return _try_certify(ctx, w, seq + (last,), "zelevinskii")
        for X in pool:
            link = seq[-1] & X
            ndim = dim + g.longest(X).length - g.longest(link).length
            if ndim >= target_dim:
                continue
            nprod = prod.star(g.longest(X))
            if not nprod.bruhat_leq(w):
                continue
            found = extend(seq + (X,), ndim, nprod, slots - 1)
            if found is not None:
                return found
        return None

    start_dim = g.longest(first).length
    start_prod = g.longest(first)
    if first == last and start_prod == w and start_dim == target_dim:
        return _try_certify(ctx, w, (first,), "zelevinskii")
    for middle in range(1, max_middle + 1):
        found = extend((first,), start_dim, start_prod, middle - 1)
        if found is not None:
            return found
    return None


def _subset_pool(sigma):
    import itertools

    sigma = sorted(sigma)
    pool = []
    for r in range(1, len(sigma) + 1):
        pool.extend(frozenset(c) for c in itertools.combinations(sigma, r))
    # larger subsets first: short data with big stages is the common shape
    pool.sort(key=lambda J: (-len(J), sorted(J)))
    return pool


def zelevinskii_route(ctx: HeckeContext, w: WeylElement):
    """Small resolution with ends (tau(w^{-1}), ..., tau(w)) for
    targets whose descent set misses at most one support letter
    (#tau(w) >= #sigma(w) - 1).  Guaranteed to succeed."""
    g = w.group
    sigma = w.support()
    tau = w.right_descents()
    if len(tau) < len(sigma) - 1:
        raise ValueError(
            f"descent set {sorted(tau)} misses more than one letter of "
            f"{sorted(sigma)}"
        )
    if w.is_identity():
        return certify(ctx, w, (EMPTY,), "zelevinskii")
    if tau == sigma:
        # w is the longest element of its support
        return certify(ctx, w, (sigma,), "zelevinskii")
    comps = _support_components(g, sigma)
    if len(comps) > 1:
        blocks = []
        for comp in comps:
            _u0, part = g.coset_decompose(w, comp)
            blocks.append(zelevinskii_route(ctx, part).data.subsets)
        merged = _merge_component_data(g, blocks)
        return certify(ctx, w, merged, "zelevinskii")
    found = _fixed_ends_search(
        ctx, w, w.inverse().right_descents(), tau, max_middle=6
    )
    if found is None:
        raise RuntimeError(f"no small resolution found for {w}; "
                           "this contradicts the guarantee for its shape")
    return found


# -- glue / reverse -------------------------------------------------------------

def glue(ctx: HeckeContext, left: CertifiedResolution, right: CertifiedResolution) -> CertifiedResolution:
    """Concatenate certificates for v and w into one for v star w.
    Requires the two-factor chain (v, w) to be an isomorphism."""
    v, u = left.data.w, right.data.w
    if not bp.iso_test(v, u):
        raise NotIso(f"two-factor chain ({v}, {u}) is not an isomorphism")
    R = v.right_descents() & u.inverse().right_descents()
    induced = left.data.subsets[-1] & right.data.subsets[0]
    if induced != R and not (left.eq_right and right.eq_left):
        raise IncompatibleLink(
            f"induced link {sorted(induced)} differs from {sorted(R)}"
        )
    target = v.star(u)
    return certify(
        ctx, target, left.data.subsets + right.data.subsets, "glue"
    )


def reverse(ctx: HeckeContext, r: CertifiedResolution) -> CertifiedResolution:
    """Certificate for w^{-1} by reversing the subset sequence."""
    return certify(
        ctx,
        r.data.w.inverse(),
        tuple(reversed(r.data.subsets)),
        r.route + "+reverse" if r.route else "reverse",
    )


# -- complete-BP route ------------------------------------------------------------

def _complete_bp_glue(ctx, w):
    cbp = bp.complete_bp(w)
    if cbp is None:
        return None
    chain = bp.chain_factors(cbp)
    acc = None
    for wi in chain.elements:
        piece = zelevinskii_route(ctx, wi)
        acc = piece if acc is None else glue(ctx, acc, piece)
    assert acc.data.w == w
    return CertifiedResolution(
        acc.data, acc.profile, acc.certificate, acc.eq_left, acc.eq_right,
        "complete-bp",
    )


def small_via_complete_bp(ctx: HeckeContext, w: WeylElement):
    """Small resolution through a complete BP chain of w, or of w^{-1}
    followed by reversal; None when neither side has one."""
    try:
        found = _complete_bp_glue(ctx, w)
    except (NotIso, IncompatibleLink, NotAResolution, DivisionFailure):
        found = None
    if found is not None:
        return found
    try:
        found = _complete_bp_glue(ctx, w.inverse())
    except (NotIso, IncompatibleLink, NotAResolution, DivisionFailure):
        found = None
    if found is not None:
        rev = reverse(ctx, found)
        return CertifiedResolution(
            rev.data, rev.profile, rev.certificate, rev.eq_left,
            rev.eq_right, "complete-bp+reverse",
        )
    return None


# -- the full search ---------------------------------------------------------------

class SearchContext:
    """Shared state for classification: the Hecke workspace, per-element
    memo of search results, and the remaining node budget."""

    def __init__(self, group, budget: int = 200_000):
        self.hecke = HeckeContext(group, default_bits(group))
        self.memo: dict = {}
        self.budget = budget
        self.in_progress: set = set()


DEFAULT_BUDGET = 200_000


def search_small(w: WeylElement, budget: int = DEFAULT_BUDGET, ctx: SearchContext = None):
    """Find a certified small resolution of X_w, or None within budget."""
    if ctx is None:
        ctx = SearchContext(w.group, budget)
    return _search(ctx, w, allow_inverse=True)


def _search(ctx: SearchContext, w: WeylElement, allow_inverse: bool):
    if w.key in ctx.memo:
        return ctx.memo[w.key]
    if w.key in ctx.in_progress:
        return None
    ctx.in_progress.add(w.key)
    try:
        found = _search_routes(ctx, w, allow_inverse)
    finally:
        ctx.in_progress.discard(w.key)
    if found is not None or not allow_inverse:
        # negative results from the restricted (no-inverse) search are
        # not cached: the full pipeline may still succeed later
        if found is not None or allow_inverse:
            ctx.memo[w.key] = found
    return found


def _search_routes(ctx: SearchContext, w: WeylElement, allow_inverse: bool):
    g = w.group
    hk = ctx.hecke

    if w.is_identity():
        return certify(hk, w, (EMPTY,), "smooth")

    # 1. smooth targets factor into an isomorphism chain
    if g.is_simply_laced() and bp.is_smooth(w):
        data = bp.simply_laced_factorization(w)
        return certify(hk, w, data, "smooth")

    # 2. descent-heavy targets
    if len(w.right_descents()) >= len(w.support()) - 1:
        try:
            return zelevinskii_route(hk, w)
        except RuntimeError:
            pass

    # 3. complete BP chain on either side
    found = small_via_complete_bp(hk, w)
    if found is not None:
        return found

    # 4. equivariant recursion: w = w_K * w1 * w_T with exact dimension
    found = _equivariant_route(ctx, w)
    if found is not None:
        return found
    if allow_inverse:
        inv = w.inverse()
        found = _equivariant_route(ctx, inv)
        if found is not None:
            return reverse(hk, found)

    # 5. bounded exhaustive enumeration over subset sequences
    found = _exhaustive_route(ctx, w)
    if found is not None:
        return found
    if allow_inverse:
        found = _exhaustive_route(ctx, w.inverse())
        if found is not None:
            return reverse(hk, found)
    return None


def _equivariant_route(ctx: SearchContext, w: WeylElement):
    g = w.group
    hk = ctx.hecke
    K = w.inverse().right_descents()
    T = w.right_descents()
    if not K or not T:
        return None
    wK, wT = g.longest(K), g.longest(T)
    sigma = w.support()
    candidates = []
    for key in g.iter_keys():
        w1 = g.make(key)
        if w1.length >= w.length or not w1.support() <= sigma:
            continue
        if not w1.bruhat_leq(w):
            continue
        if wK.star(w1).star(wT) != w:
            continue
        # exact dimension of the sandwich (w_K, w1, w_T)
        dim = (
            wK.length
            + w1.length
            + wT.length
            - g.longest(K & w1.inverse().right_descents()).length
            - g.longest(w1.right_descents() & T).length
        )
        if dim != w.length:
            continue
        candidates.append(w1)
    candidates.sort(key=lambda v: (v.length, v.key))
    for w1 in candidates:
        if ctx.budget <= 0:
            return None
        ctx.budget -= 1
        sub = _search(ctx, w1, allow_inverse=False)
        if sub is None:
            continue
        subsets = (K,) + sub.data.subsets + (T,)
        found = _try_certify(hk, w, subsets, "equivariant-recursive")
        if found is not None:
            return found
    return None


def _exhaustive_route(ctx: SearchContext, w: WeylElement):
    g = w.group
    hk = ctx.hecke
    sigma = w.support()
    pool = _subset_pool(sigma)
    target_dim = w.length

    def extend(seq, dim, prod, slots):
        if ctx.budget <= 0:
            return None
        ctx.budget -= 1
        if dim == target_dim and prod == w:
            found = _try_certify(hk, w, seq, "exhaustive")
            if found is not None:
                return found
        if slots == 0:
            return None
        for X in pool:
            if seq and (X <= seq[-1] or seq[-1] <= X):
                continue  # collapsible adjacency
            link = (seq[-1] & X) if seq else EMPTY
            ndim = dim + g.longest(X).length - g.longest(link).length
            if ndim > target_dim:
                continue
            nprod = prod.star(g.longest(X))
            if not nprod.bruhat_leq(w):
                continue
            found = extend(seq + (X,), ndim, nprod, slots - 1)
            if found is not None:
                return found
        return None

    for length in range(1, min(w.length, 7) + 1):
        found = extend((), 0, g.identity, length)
        if found is not None:
            return found
        if ctx.budget <= 0:
            return None
    return None


# -- classification --------------------------------------------------------------

@dataclass
class ElementReport:
    w: WeylElement
    status: str  # "smooth" | "small" | "none"
    route: str
    resolution: object  # CertifiedResolution | None


@dataclass
class ClassificationReport:
    group: object
    elements: list
    counts: dict


def classify(group, budget: int = DEFAULT_BUDGET, workers: int = 1) -> ClassificationReport:
    """Search every element of the group, shortest first (so the
    equivariant recursion hits memoized sub-results), close the result
    under inversion, and aggregate counts."""
    ctx = SearchContext(group, budget)
    order = sorted(group.elements(), key=lambda v: (v.length, v.key))
    results: dict = {}
    for w in order:
        ctx.budget = max(ctx.budget, budget // 10)  # per-element floor
        results[w.key] = _search(ctx, w, allow_inverse=True)
    # inverse closure: a small resolution reverses to one of the inverse
    for w in order:
        if results[w.key] is None:
            inv = w.inverse()
            if results.get(inv.key) is not None:
                results[w.key] = reverse(ctx.hecke, results[inv.key])
    reports = []
    counts = {"total": 0, "smooth": 0, "small": 0, "none": 0}
    for w in order:
        res = results[w.key]
        smooth = group.is_simply_laced() and bp.is_smooth(w)
        counts["total"] += 1
        if res is None:
            status = "none"
            counts["none"] += 1
        else:
            status = "smooth" if smooth else "small"
            counts["small"] += 1
        if smooth:
            counts["smooth"] += 1
        reports.append(
            ElementReport(w, status, res.route if res else "", res)
        )
    return ClassificationReport(group, reports, counts)

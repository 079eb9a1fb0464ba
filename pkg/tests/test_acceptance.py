"""Acceptance suite: the nine headline checks, one test per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary (see
conftest.pytest_terminal_summary).
"""

import itertools
import random
import time

import pytest

from schubres import bp
from schubres import resolution as rsl
from schubres import tables
from schubres.coxeter import SymmetricGroup, weyl_group_c2
from schubres.finite_field import count_fiber_points
from schubres.hecke import HeckeContext, default_bits, p_eval, smallness


def F(*xs):
    return frozenset(xs)


@pytest.fixture(scope="module")
def s5_report():
    return rsl.classify(SymmetricGroup(5))


@pytest.fixture(scope="module")
def s6_report():
    return rsl.classify(SymmetricGroup(6))


def test_criterion_1_s5_classification(s5_report):
    start = time.monotonic()
    report = s5_report
    assert report.counts == {
        "total": 120,
        "small": 119,
        "smooth": 88,
        "none": 1,
    }
    failures = [e.w.key for e in report.elements if e.status == "none"]
    assert failures == [(4, 5, 3, 1, 2)]


def test_criterion_2_s6_classification(s6_report):
    report = s6_report
    assert report.counts == {
        "total": 720,
        "small": 701,
        "smooth": 366,
        "none": 19,
    }
    group = report.group
    failures = {e.w.key for e in report.elements if e.status == "none"}
    assert len(failures) == 19
    assert all(group.inverse_key(k) in failures for k in failures)


def test_criterion_3_expected_tables():
    rows5 = tables.regenerate_s5()
    assert len(rows5) == 9
    for row in rows5:
        assert row.tau_match, row.w
        assert row.resolution.certificate.verdict == "small"
        assert not row.variant
    rows6 = tables.regenerate_s6()
    assert len(rows6) == 53
    for row in rows6:
        assert row.resolution is not None, row.w
        assert row.resolution.certificate.verdict == "small"


def test_criterion_4_zelevinskii_route():
    for n in range(2, 7):
        group = SymmetricGroup(n)
        ctx = HeckeContext(group, default_bits(group))
        for w in group.elements():
            if len(w.right_descents()) < len(w.support()) - 1:
                continue
            found = rsl.zelevinskii_route(ctx, w)
            assert found.certificate.verdict == "small", w
            if not w.is_identity():
                assert found.data.subsets[0] == w.inverse().right_descents()
                assert found.data.subsets[-1] == w.right_descents()


def test_criterion_5_examples_4231_and_bott_samelson(hk4, s4, s3):
    w = s4.element_from_one_line((4, 2, 3, 1))
    for subsets in ((F(1, 3), F(2, 3), F(1, 3)), (F(1, 3), F(1, 2), F(1, 3))):
        result = rsl.certify(hk4, w, subsets)
        assert result.certificate.verdict == "small"
    hk3 = HeckeContext(s3, default_bits(s3))
    profile = hk3.parabolic_chain_profile((F(1), F(2), F(1)))
    assert profile.w == s3.longest(F(1, 2))
    assert profile.is_birational()
    assert smallness(profile).verdict == "not_small"


def test_criterion_6_c2_negative():
    group = weyl_group_c2()
    ctx = HeckeContext(group, default_bits(group))
    target = group.element_from_word((2, 1, 2))
    subsets = [F(1), F(2), F(1, 2)]
    isomorphisms = 0
    for m in range(1, 4):
        for seq in itertools.product(subsets, repeat=m):
            data = rsl.ResolutionData(target, seq)
            try:
                profile = rsl.validate(ctx, data)
            except rsl.NotAResolution:
                continue
            if profile.is_isomorphism():
                isomorphisms += 1
    assert isomorphisms == 0


def test_criterion_7_s7_spot_check():
    start = time.monotonic()
    group = SymmetricGroup(7)
    w = group.element_from_one_line((6, 4, 5, 7, 3, 2, 1))
    ctx = HeckeContext(group, default_bits(group))
    found = rsl.small_via_complete_bp(ctx, w)
    assert found is not None
    assert found.certificate.verdict == "small"
    assert found.route.startswith("complete-bp")
    assert time.monotonic() - start < 60


ORACLE_CHAINS = (
    (2, (F(1),)),
    (3, (F(1), F(2))),
    (3, (F(2), F(1))),
    (3, (F(1), F(2), F(1))),
    (3, (F(1, 2),)),
    (4, (F(1, 3), F(2, 3), F(1, 3))),  # the ( 4 2 3 1 ) chain
    (4, (F(1, 3), F(1, 2), F(1, 3))),
    (4, (F(2), F(1, 3))),
    (4, (F(1, 2), F(2, 3))),
    (4, (F(1, 2, 3), F(1, 3))),
    (4, (F(3), F(2), F(1))),
)


def test_criterion_8_oracle_cross_validation():
    assert len(ORACLE_CHAINS) >= 10
    for n, subsets in ORACLE_CHAINS:
        group = SymmetricGroup(n)
        ctx = HeckeContext(group, default_bits(group))
        profile = ctx.parabolic_chain_profile(subsets)
        for u in group.lower_interval(profile.w):
            for q in (2, 3):
                expected = p_eval(profile.n_at(u.key), q)
                actual = count_fiber_points(group, subsets, u, q)
                assert actual == expected, (subsets, str(u), q)


def _sample(rng, keys, count):
    return [keys[rng.randrange(len(keys))] for _ in range(count)]


def test_criterion_9_property_suites(s4, s6, hk4, hk6):
    rng = random.Random(20260826)
    els4 = s4.elements()
    keys6 = list(s6.iter_keys())

    # Demazure associativity and anti-automorphism: exhaustive on S4
    for u, v, w in itertools.product(els4, repeat=3):
        assert u.star(v).star(w) == u.star(v.star(w))
    for v, w in itertools.product(els4, repeat=2):
        assert v.star(w).inverse() == w.inverse().star(v.inverse())
        vw = v.star(w)
        assert v.bruhat_leq(vw) and w.bruhat_leq(vw)
        assert (v * w).bruhat_leq(vw)

    # sampled >= 10^4 cases on S6
    for _ in range(10_000):
        u, v, w = (s6.make(k) for k in _sample(rng, keys6, 3))
        assert u.star(v).star(w) == u.star(v.star(w))
        assert v.star(w).inverse() == w.inverse().star(v.inverse())

    # support and descent facts; exhaustive S4, sampled S6
    def sigma_tau_facts(group, v, w):
        assert v.inverse().support() == v.support()
        assert v.right_descents() <= v.support()
        vw = v.star(w)
        assert vw.support() == v.support() | w.support()
        assert (v * w).support() <= v.support() | w.support()
        assert w.right_descents() <= vw.right_descents()
        if v.length + w.length == (v * w).length:
            assert (v * w).right_descents() <= (
                v.right_descents() | w.support()
            )

    for v, w in itertools.product(els4, repeat=2):
        sigma_tau_facts(s4, v, w)
    for _ in range(10_000):
        v, w = (s6.make(k) for k in _sample(rng, keys6, 2))
        sigma_tau_facts(s6, v, w)

    # longest-element facts and the sigma-is-tau equivalence on S5
    s5 = SymmetricGroup(5)
    longest = {
        frozenset(J): s5.longest(frozenset(J)).key
        for r in range(5)
        for J in itertools.combinations(range(1, 5), r)
    }
    for w in s5.elements():
        tau, sig = w.right_descents(), w.support()
        assert (tau == sig) == (longest.get(sig) == w.key)
        assert s5.make(longest[tau]).right_descents() == tau

    # parabolic decomposition length additivity, sampled on S6
    subsets6 = [
        frozenset(J)
        for r in range(6)
        for J in itertools.combinations(range(1, 6), r)
    ]
    for _ in range(10_000):
        w = s6.make(_sample(rng, keys6, 1)[0])
        J = subsets6[rng.randrange(len(subsets6))]
        u0, u1 = s6.coset_decompose(w, J)
        assert u0 * u1 == w and u0.length + u1.length == w.length
        assert not (u0.right_descents() & u1.inverse().right_descents())

    # complete BP existence <=> pattern avoidance, exhaustive S4-S6
    for n in (4, 5, 6):
        group = SymmetricGroup(n)
        for w in group.elements():
            assert bp.has_complete_bp(w) == bp.avoids_complete_bp_patterns(w)

    # bp_isom chains certify as isomorphisms (iso_test is validated
    # against Hecke profiles in test_bp); exhaustive S4, sampled S6
    def check_bp_isom(group, w, I):
        dec = bp.is_bp(w, I)
        if dec is None or dec.u0.is_identity() or dec.u1.is_identity():
            return
        for variant in ("i", "ii"):
            chain = bp.bp_isom(w, I, variant)
            assert chain.target() == w
            assert bp.iso_test(chain.elements[0], chain.elements[1])

    subsets4 = [
        frozenset(J)
        for r in range(1, 4)
        for J in itertools.combinations(range(1, 4), r)
    ]
    for w in els4:
        for I in subsets4:
            check_bp_isom(s4, w, I)
    for _ in range(1000):
        w = s6.make(_sample(rng, keys6, 1)[0])
        I = subsets6[rng.randrange(len(subsets6))]
        check_bp_isom(s6, w, I)

    # smooth factorizations certify as isomorphisms via the Hecke
    # oracle: all smooth S5, a sample of smooth S6
    hk5 = HeckeContext(s5, default_bits(s5))
    smooth5 = [w for w in s5.elements() if bp.is_smooth(w)]
    assert len(smooth5) == 88
    for w in smooth5:
        data = bp.simply_laced_factorization(w)
        profile = hk5.parabolic_chain_profile(data)
        assert profile.w == w and profile.is_isomorphism()
    smooth6 = [w for w in s6.elements() if bp.is_smooth(w)]
    assert len(smooth6) == 366
    for w in rng.sample(smooth6, 60):
        data = bp.simply_laced_factorization(w)
        profile = hk6.parabolic_chain_profile(data)
        assert profile.w == w and profile.is_isomorphism()

    # descent biconditional on every smooth element of S5 and S6
    for w in smooth5 + smooth6:
        assert bp.simply_laced_tau_check(w)

    # Hecke quadratic relation and parabolic idempotency
    s1 = s4.simple(1)
    squared = hk4.to_tuples(hk4.mul_Ts(hk4.t_basis(s1), 1))
    assert squared == {s1.key: (-1, 1), s4.identity_key(): (0, 1)}
    for J in (F(1), F(2, 3), F(1, 2, 3)):
        xJ = hk4.x_parabolic(J)
        square = hk4.to_tuples(hk4.mul_xJ(xJ, J))
        pi = hk4.poincare(J)
        assert square == {k: pi for k in hk4.to_tuples(xJ)}

    # profile consistency: sum of N_u q^{len(u)} equals the product of
    # interval point counts divided by the link point counts (checked
    # internally on every profile; verified once more here explicitly)
    profile = hk4.parabolic_chain_profile((F(1, 3), F(2, 3), F(1, 3)))
    for q in (2, 3, 5):
        total = sum(
            p_eval(nu, q) * q ** s4.length_key(u)
            for u, nu in profile.cells.items()
        )
        pi13 = p_eval(hk4.poincare(F(1, 3)), q)
        pi23 = p_eval(hk4.poincare(F(2, 3)), q)
        pi3 = p_eval(hk4.poincare(F(3)), q)
        assert total * pi3 * pi3 == pi13 * pi23 * pi13

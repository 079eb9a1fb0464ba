"""Cross-validation of the Hecke fiber profiles against brute-force
point counts of the resolution fibers over small finite fields."""

import itertools

import pytest

from schubres.coxeter import SymmetricGroup
from schubres.finite_field import (
    all_partial_flags,
    all_subspaces,
    count_fiber_points,
    flag_jumps,
    rref,
)
from schubres.hecke import HeckeContext, default_bits, p_eval


def gaussian_binomial(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("q", [2, 3])
def test_subspace_counts(q):
    for n in range(1, 4):
        for d in range(n + 1):
            assert len(all_subspaces(n, d, q)) == gaussian_binomial(n, d, q)


def test_rref_canonical():
    rows = ((1, 1, 0), (0, 1, 1))
    a = rref(rows, 2)
    b = rref(((0, 1, 1), (1, 0, 1)), 2)
    assert a == b  # same row space, same canonical form


def test_flag_jumps():
    assert flag_jumps(4, frozenset({1, 3})) == (2,)
    assert flag_jumps(4, frozenset()) == (1, 2, 3)


@pytest.mark.parametrize("q", [2, 3])
def test_full_flag_count(q):
    flags = all_partial_flags(3, (1, 2), q)
    expected = (q * q + q + 1) * (q + 1)
    assert len(flags) == expected


def _profile_matches_counts(group, subsets, q):
    hk = HeckeContext(group, default_bits(group))
    profile = hk.parabolic_chain_profile(subsets)
    for u in group.lower_interval(profile.w):
        expected = p_eval(profile.n_at(u.key), q)
        actual = count_fiber_points(group, subsets, u, q)
        assert actual == expected, (subsets, u, q, actual, expected)


CHAINS = [
    (2, ((frozenset({1}),))),
    (3, (frozenset({1}), frozenset({2}))),
    (3, (frozenset({1}), frozenset({2}), frozenset({1}))),
    (3, (frozenset({1, 2}),)),
    (4, (frozenset({1, 3}), frozenset({2, 3}), frozenset({1, 3}))),
    (4, (frozenset({1, 3}), frozenset({1, 2}), frozenset({1, 3}))),
    (4, (frozenset({2}), frozenset({1, 3}))),
    (4, (frozenset({1, 2}), frozenset({2, 3}))),
]


@pytest.mark.parametrize("n,subsets", CHAINS)
def test_profiles_match_point_counts_q2(n, subsets):
    _profile_matches_counts(SymmetricGroup(n), subsets, 2)


@pytest.mark.parametrize("n,subsets", CHAINS[:6])
def test_profiles_match_point_counts_q3(n, subsets):
    _profile_matches_counts(SymmetricGroup(n), subsets, 3)

"""Unit tests for resolution data validation, certification, the
search routes, and classification on small groups."""

import itertools

import pytest

from schubres import bp
from schubres import resolution as rsl
from schubres.coxeter import SymmetricGroup
from schubres.hecke import HeckeContext, default_bits


def F(*xs):
    return frozenset(xs)


def test_validate_wrong_image(hk4, s4):
    w = s4.element_from_one_line((4, 2, 3, 1))
    data = rsl.ResolutionData(w, (F(1), F(2), F(1)))
    with pytest.raises(rsl.WrongImage):
        rsl.validate(hk4, data)


def test_validate_dimension_mismatch(hk4, s4):
    # non-reduced word: the product is right but the dimension overshoots
    w = s4.longest(F(1, 2))
    data = rsl.ResolutionData(w, (F(1), F(2), F(1), F(2)))
    with pytest.raises(rsl.DimensionMismatch):
        rsl.validate(hk4, data)


def test_certify_not_small(s3):
    hk = HeckeContext(s3, default_bits(s3))
    w = s3.element_from_one_line((3, 2, 1))
    with pytest.raises(rsl.NotSmall) as info:
        rsl.certify(hk, w, (F(1), F(2), F(1)))
    cert = info.value.certificate
    assert cert.verdict == "not_small"
    assert cert.witnesses()


def test_certify_both_4231_variants(hk4, s4):
    w = s4.element_from_one_line((4, 2, 3, 1))
    for subsets in ((F(1, 3), F(2, 3), F(1, 3)), (F(1, 3), F(1, 2), F(1, 3))):
        result = rsl.certify(hk4, w, subsets)
        assert result.certificate.verdict == "small"
        assert result.data.subsets == subsets
        assert result.eq_left and result.eq_right


def test_collapse_merges_redundant_interior_stage(s5):
    w = s5.longest(F(1, 2, 3, 4))
    # the {2} stage nests into {2,3} without changing either link
    data = rsl.make_data(w, (F(1), F(2), F(2, 3), F(3)))
    assert data.subsets == (F(1), F(2, 3), F(3))


def test_collapse_never_widens_an_end(s5):
    w = s5.longest(F(1, 2, 3, 4))
    data = rsl.make_data(w, (F(1), F(1, 2, 3, 4)))
    assert data.subsets[0] == F(1)
    # a link-changing merge is refused even away from the ends
    data = rsl.make_data(w, (F(1, 2, 3, 4), F(1, 2), F(1, 2, 3, 4)))
    assert len(data.subsets) == 3


def test_zelevinskii_route_s4(hk4, s4):
    for w in s4.elements():
        if len(w.right_descents()) < len(w.support()) - 1:
            continue
        found = rsl.zelevinskii_route(hk4, w)
        assert found.certificate.verdict == "small"
        assert found.data.subsets[0] == w.inverse().right_descents() or w.is_identity()
        assert found.data.subsets[-1] == w.right_descents() or w.is_identity()


def test_zelevinskii_route_rejects_low_descent(hk6, s6):
    w = s6.element_from_one_line((2, 1, 4, 3, 6, 5))
    # tau = {1,3,5}, sigma = {1,3,5}: fine
    found = rsl.zelevinskii_route(hk6, w)
    assert found.data.subsets == (F(1, 3, 5),)
    deficient = s6.element_from_one_line((2, 3, 4, 5, 6, 1))
    # tau = {5}, sigma = {1,...,5}
    with pytest.raises(ValueError):
        rsl.zelevinskii_route(hk6, deficient)


def test_glue_and_reverse(hk4, s4):
    a = s4.longest(F(1, 3))
    b = s4.longest(F(2, 3))
    left = rsl.certify(hk4, a, (F(1, 3),))
    mid = rsl.certify(hk4, b, (F(2, 3),))
    glued = rsl.glue(hk4, left, mid)
    assert glued.data.w == a.star(b)
    back = rsl.reverse(hk4, glued)
    assert back.data.w == glued.data.w.inverse()
    assert back.data.subsets == tuple(reversed(glued.data.subsets))


def test_glue_rejects_non_isomorphism(hk4, s4):
    a = s4.longest(F(1, 3))
    b = s4.longest(F(2, 3)).star(a)  # ( 4 1 3 2 )
    left = rsl.certify(hk4, a, (F(1, 3),))
    right = rsl.zelevinskii_route(hk4, b)
    with pytest.raises(rsl.NotIso):
        rsl.glue(hk4, left, right)


def test_search_small_smooth(s4):
    w = s4.element_from_one_line((4, 3, 2, 1))
    found = rsl.search_small(w)
    assert found.route == "smooth"
    assert found.profile.is_isomorphism()


def test_search_small_negative():
    g = SymmetricGroup(5)
    w = g.element_from_one_line((4, 5, 3, 1, 2))
    assert rsl.search_small(w, budget=20_000) is None


def test_classify_s3():
    report = rsl.classify(SymmetricGroup(3))
    assert report.counts == {"total": 6, "smooth": 6, "small": 6, "none": 0}


def test_classify_s4():
    report = rsl.classify(SymmetricGroup(4))
    assert report.counts == {"total": 24, "smooth": 22, "small": 24, "none": 0}
    for entry in report.elements:
        assert entry.status in ("smooth", "small")
        # every certificate re-validates from scratch
        ctx = HeckeContext(entry.w.group, default_bits(entry.w.group))
        again = rsl.certify(ctx, entry.w, entry.resolution.data.subsets)
        assert again.certificate.verdict == "small"


def test_paper_example_no_pattern_avoidance(hk6, s6):
    w = s6.element_from_one_line((4, 6, 3, 1, 5, 2))
    result = rsl.certify(hk6, w, (F(2, 3, 5), F(1, 2, 4, 5), F(2, 3, 5)))
    assert result.certificate.verdict == "small"
    assert result.data.links() == (F(2, 5), F(2, 5))

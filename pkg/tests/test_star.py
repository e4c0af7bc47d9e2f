"""Skeletons, symbolic powers, the complex, and the basic-double-link chain."""

import itertools
from math import comb

import pytest

from starconfig import exponents as ex
from starconfig import star
from starconfig.errors import ResourceCapError, UsageError
from starconfig.star import StarConfig


def brute_symbolic_power(cfg, ell):
    """Literal box scan over {0..ell}^s followed by minimalization."""
    members = [
        t
        for t in itertools.product(range(ell + 1), repeat=cfg.s)
        if sum(sorted(t)[: cfg.c]) >= ell
    ]
    return ex.minimalize(cfg.s, members)


def test_star_config_validation():
    StarConfig(4, 2)
    StarConfig(4, 3, ambient=3)
    with pytest.raises(UsageError):
        StarConfig(1, 1)
    with pytest.raises(UsageError):
        StarConfig(4, 4)
    with pytest.raises(UsageError):
        StarConfig(4, 0)
    with pytest.raises(UsageError):
        StarConfig(4, 2, ambient=1)


def test_skeleton_ideal():
    sk = star.skeleton_ideal(StarConfig(4, 2))
    assert len(sk.gens) == 4
    assert all(sum(g) == 3 for g in sk.gens)
    # each generator vanishes on every pair component
    for g in sk.gens:
        for i, j in itertools.combinations(range(4), 2):
            assert g[i] + g[j] >= 1
    assert star.skeleton_ideal(StarConfig(2, 1)).gens == ((1, 1),)
    sk73 = star.skeleton_ideal(StarConfig(7, 3))
    assert len(sk73.gens) == comb(7, 2) == 21
    assert all(sum(g) == 5 for g in sk73.gens)


def test_skeleton_generator_count_formula():
    for s in range(2, 8):
        for c in range(1, s):
            assert len(star.skeleton_ideal(StarConfig(s, c)).gens) == comb(s, c - 1)


def test_symbolic_member():
    cfg = StarConfig(4, 2)
    assert star.symbolic_member((1, 1, 1, 1), cfg, 2)
    assert not star.symbolic_member((5, 5, 0, 1), cfg, 2)
    with pytest.raises(UsageError):
        star.symbolic_member((1, 1, 1, 1), cfg, 0)
    with pytest.raises(UsageError):
        star.symbolic_member((1, 1, 1), cfg, 2)
    # nothing of degree below the initial degree is a member
    for ell in (1, 2, 3):
        a = star.alpha_symbolic_formula(cfg, ell)
        for d in range(a):
            assert not any(
                star.symbolic_member(mu, cfg, ell) for mu in ex.monomials_of_degree(4, d)
            )


def test_symbolic_power_small():
    cfg = StarConfig(4, 2)
    assert ex.equals(star.symbolic_power(cfg, 1), star.skeleton_ideal(cfg))
    sp2 = star.symbolic_power(cfg, 2)
    assert (1, 1, 1, 1) in sp2.gens
    assert (0, 2, 2, 2) in sp2.gens
    assert len(sp2.gens) == 5


def test_symbolic_power_matches_box_oracle():
    for s in range(2, 6):
        for c in range(1, s):
            for ell in range(1, 4):
                cfg = StarConfig(s, c)
                assert ex.equals(star.symbolic_power(cfg, ell), brute_symbolic_power(cfg, ell))


def test_symbolic_power_matches_intersection_oracle():
    for s in range(2, 6):
        for c in range(1, min(4, s)):
            for ell in range(1, 5):
                cfg = StarConfig(s, c)
                assert ex.equals(
                    star.symbolic_power(cfg, ell),
                    star.symbolic_power_by_intersection(cfg, ell),
                )


def test_symbolic_power_enum_cap():
    with pytest.raises(ResourceCapError):
        star.symbolic_power(StarConfig(6, 2), 5, enum_cap=10)


def test_symbolic_contains_ordinary_power():
    for s in range(3, 6):
        for c in range(1, s):
            cfg = StarConfig(s, c)
            sk = star.skeleton_ideal(cfg)
            for ell in range(1, 4):
                assert ex.contains(star.symbolic_power(cfg, ell), ex.power(sk, ell))
                assert ex.alpha(ex.power(sk, ell)) == ell * (s - c + 1)


def test_alpha_omega_formulas():
    cfg = StarConfig(4, 2)
    assert star.alpha_symbolic_formula(cfg, 2) == 4
    assert star.alpha_symbolic_formula(StarConfig(7, 3), 2) == 6
    for s in range(2, 7):
        for c in range(1, s):
            assert star.alpha_symbolic_formula(StarConfig(s, c), 1) == s - c + 1
            assert star.omega_symbolic_formula(StarConfig(s, c), 1) == s - c + 1
    assert star.omega_symbolic_formula(StarConfig(4, 2), 2) == 6
    assert star.omega_symbolic_formula(StarConfig(5, 3), 3) == 9
    assert ex.omega(star.symbolic_power(StarConfig(5, 3), 3)) == 9


def test_lemma_containment():
    for s, c in [(3, 2), (4, 2), (5, 3)]:
        assert star.check_lemma_contain(StarConfig(s, c))
    with pytest.raises(UsageError):
        star.check_lemma_contain(StarConfig(4, 1))


def test_skeleton_complex_and_stanley_reisner():
    cfg = StarConfig(4, 2)
    complex_ = star.skeleton_complex(cfg)
    assert complex_.facets == tuple(itertools.combinations(range(4), 2))
    assert star.is_matroid(complex_)
    assert ex.equals(star.stanley_reisner_ideal(complex_), star.skeleton_ideal(cfg))


def test_non_matroid_complex():
    bad = star.make_complex(3, [(0, 1), (2,)])
    assert not star.is_matroid(bad)


def test_matroid_vertex_cap():
    with pytest.raises(ResourceCapError):
        star.is_matroid(star.make_complex(17, [tuple(range(17))]))


def test_wk_endpoints_and_intersection_oracle():
    for s, ell in [(4, 1), (5, 2)]:
        assert ex.equals(star.wk_ideal(s, ell, 0), star.symbolic_power(StarConfig(s, 2), ell))
        assert ex.equals(star.wk_ideal(s, ell, s), star.symbolic_power(StarConfig(s, 2), ell + 2))
    # lcm-intersection route agrees with the box enumeration
    for s, ell, k in [(4, 1, 2), (4, 2, 1), (5, 1, 3)]:
        terms = [
            ex.power(ex.variable_ideal(s, [i, j]), a)
            for (i, j), a in star._wk_thresholds(s, ell, k).items()
        ]
        assert ex.equals(star.wk_ideal(s, ell, k), ex.intersect_many(terms))


def test_wk_chain_is_increasing():
    s, ell = 4, 1
    for k in range(s):
        # schemes grow along the chain, so the ideals shrink
        assert ex.contains(star.wk_ideal(s, ell, k), star.wk_ideal(s, ell, k + 1))


def test_wk_degree_closed_form():
    for s in (4, 5):
        for ell in (1, 2):
            for k in range(s + 1):
                expected = (
                    comb(k, 2) * comb(ell + 3, 2)
                    + k * (s - k) * comb(ell + 2, 2)
                    + comb(s - k, 2) * comb(ell + 1, 2)
                )
                assert star.wk_degree(s, ell, k) == expected


def test_wk_step_check():
    assert star.wk_step_check(4, 1, 0)
    assert star.wk_step_check(5, 2, 3)
    with pytest.raises(UsageError):
        star.wk_step_check(4, 1, 4)


def test_wk_parameter_validation():
    with pytest.raises(UsageError):
        star.wk_ideal(2, 1, 0)
    with pytest.raises(UsageError):
        star.wk_ideal(4, 0, 0)
    with pytest.raises(UsageError):
        star.wk_ideal(4, 1, 5)

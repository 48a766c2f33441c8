"""Tests for the exhaustive generators and the colored-forest bijection."""

import itertools
import random

import pytest

from lambdafact import enumeration as en
from lambdafact import sequences as seq


def test_permutations_with_fix_small():
    assert list(en.permutations_with_fix(2)) == [((1, 2), 2), ((2, 1), 0)]
    fixes = sorted(fix for _, fix in en.permutations_with_fix(3))
    assert fixes == [0, 0, 1, 1, 1, 3]
    assert list(en.permutations_with_fix(0)) == [((), 0)]
    with pytest.raises(ValueError):
        list(en.permutations_with_fix(9))


def test_oracle_polynomials_counts():
    o4 = en.oracle_polynomials(4)
    assert o4.derangements == 9
    assert o4.involutions == 10
    assert o4.matchings == 3
    assert o4.bell.evaluate({"u": 1}) == 15
    o1 = en.oracle_polynomials(1)
    assert str(o1.lambda_factorial) == "λ"
    assert str(o1.bell) == "u"
    assert str(o1.hermite) == "u"


def test_endofunction_counts():
    assert sum(1 for _ in en.endofunctions(1)) == 1
    assert sum(1 for _ in en.endofunctions(2)) == 4
    assert sum(1 for _ in en.endofunctions(3)) == 27
    with pytest.raises(ValueError):
        list(en.endofunctions(8))


def test_endofunction_validation():
    with pytest.raises(ValueError):
        en.Endofunction((1, 4, 2))


def test_digraph_decompose_examples():
    d = en.digraph_decompose(en.Endofunction((2, 1, 2)))
    assert d.cycle_vertices == frozenset({1, 2})
    assert d.parent == (0, 0, 2)

    ident = en.Endofunction((1, 2, 3, 4))
    d = en.digraph_decompose(ident)
    assert d.cycle_vertices == frozenset({1, 2, 3, 4})
    assert d.parent == (0, 0, 0, 0)

    const = en.Endofunction((1, 1, 1))
    d = en.digraph_decompose(const)
    assert d.cycle_vertices == frozenset({1})
    assert d.parent == (0, 1, 1)


def test_digraph_decompose_properties():
    for sigma in en.endofunctions(4):
        d = en.digraph_decompose(sigma)
        cyc = d.cycle_vertices
        assert {sigma(v) for v in cyc} == cyc  # restriction is a permutation
        for v in range(1, 5):
            steps = 0
            w = v
            while w not in cyc:
                w = d.parent[w - 1]
                steps += 1
                assert steps <= 4


def test_forest_counts():
    assert sum(1 for _ in en.forests(1)) == 1
    # Forests on [3]: (2+2)^2 with the two-component stratum C(2,1)*3.
    all3 = list(en.forests(3))
    assert len(all3) == 16
    assert sum(1 for f in all3 if en.forest_root_count(f) == 2) == 6


def test_is_forest_rejects_cycles():
    assert not en.is_forest((2, 1))
    assert not en.is_forest((1,))
    assert en.is_forest((0, 1, 2))


def test_enumerate_m_star_counts_and_order():
    images = [s.image for s in en.enumerate_m_star(2, 2)]
    assert len(images) == 64  # (2+2)^3
    assert images == sorted(images)  # lexicographic stream
    assert sum(1 for _ in en.enumerate_m_star(0, 1)) == 1
    assert sum(1 for _ in en.enumerate_m_star(1, 1)) == 4
    assert sum(1 for _ in en.enumerate_m_star(0, 0)) == 0


def test_m_star_validation():
    with pytest.raises(ValueError, match="forbidden"):
        en.sigma_to_tau(en.Endofunction((2, 2, 3)), 1, 1)
    with pytest.raises(ValueError, match="fixed"):
        en.sigma_to_tau(en.Endofunction((1, 1, 1)), 1, 1)


def test_rewrite_rules_one_by_one():
    # n = 2, λ = 2 on [5]: vertex 1 fixed, vertex 2 into a plain edge,
    # vertex 3 into color vertex 4 (color 1).
    sigma = en.Endofunction((1, 1, 4, 4, 5))
    tau, colors = en.sigma_to_tau(sigma, 2, 2)
    assert tau == (3, 1, 3)  # 1 -> n+1 = 3; 2 -> 1 copied; 3 -> itself
    assert colors == {3: 1}
    back = en.tau_to_sigma(tau, colors, 2, 2)
    assert back.image == sigma.image


def test_spec_single_object_examples():
    sigma = en.Endofunction((1, 1, 3))
    pair = en.sigma_to_pair(sigma, 1, 1)
    assert pair.parent == (0, 0)
    assert pair.pi == ((1, 2), (2, 1))
    assert pair.colors == ()
    assert en.pair_to_sigma(pair, 1, 1).image == sigma.image

    # n = 0, λ = 1: the unique map becomes a single colored fixed point.
    (only,) = en.enumerate_m_star(0, 1)
    pair = en.sigma_to_pair(only, 0, 1)
    assert pair.parent == (0,)
    assert pair.pi == ((1, 1),)
    assert pair.colors == ((1, 1),)


def test_exhaustive_roundtrip_and_strata():
    strata = en.exhaustive_roundtrip(2, 2)
    assert sum(strata.values()) == 64
    for k in range(3):
        expected = (
            seq.binomial(2, k)
            * 3 ** (2 - k)
            * int(seq.lambda_factorial_at(k + 1, 2))
        )
        assert strata.get(k, 0) == expected, k

    # λ = 1 strata reproduce the plain tree-count convolution at n = 2.
    strata = en.exhaustive_roundtrip(2, 1)
    assert sum(strata.values()) == 27
    for k in range(3):
        expected = (
            seq.binomial(2, k)
            * 3 ** (2 - k)
            * int(seq.lambda_factorial_at(k + 1, 1))
        )
        assert strata.get(k, 0) == expected, k


def test_both_sides_count_two_at_n0_lam2():
    sigmas = list(en.enumerate_m_star(0, 2))
    assert len(sigmas) == 2
    pairs = {en.sigma_to_pair(s, 0, 2) for s in sigmas}
    assert len(pairs) == 2
    for s in sigmas:
        assert en.pair_to_sigma(en.sigma_to_pair(s, 0, 2), 0, 2).image == s.image


def test_pair_validation_errors():
    good = en.sigma_to_pair(en.Endofunction((1, 1, 3)), 1, 1)
    bad_color = en.ColoredForestPermutation(
        parent=good.parent, pi=good.pi, colors=((1, 1),)
    )
    with pytest.raises(ValueError, match="fixed points"):
        en.pair_to_sigma(bad_color, 1, 1)
    bad_pi = en.ColoredForestPermutation(
        parent=(0, 0), pi=((1, 1), (2, 1)), colors=((1, 1),)
    )
    with pytest.raises(ValueError, match="permute"):
        en.pair_to_sigma(bad_pi, 1, 1)
    cyclic = en.ColoredForestPermutation(parent=(2, 1), pi=(), colors=())
    with pytest.raises(ValueError, match="cycle"):
        en.pair_to_sigma(cyclic, 1, 1)
    overflow = en.ColoredForestPermutation(
        parent=(0,), pi=((1, 1),), colors=((1, 5),)
    )
    with pytest.raises(ValueError, match="color"):
        en.pair_to_sigma(overflow, 0, 1)


def brute_permanent(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= rows[i][j]
        total += prod
    return total


def test_ryser_against_brute_force():
    rng = random.Random(7)
    for n in range(0, 6):
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert en.ryser_permanent(rows) == brute_permanent(rows), rows
    with pytest.raises(ValueError):
        en.ryser_permanent([[1, 2]])


def test_permanent_check_counts_derangements():
    assert en.permanent_check(1) == 0
    assert en.permanent_check(3) == 2
    assert en.permanent_check(4) == 9
    for n in range(0, 8):
        assert en.permanent_check(n) == seq.derangement(n), n
    with pytest.raises(ValueError):
        en.permanent_check(11)


def test_dot_output():
    sigma = en.Endofunction((2, 1, 2))
    dot = en.endofunction_to_dot(sigma)
    assert dot.startswith("digraph endofunction {")
    assert "1 -> 2 [style=bold];" in dot
    assert "3 -> 2;" in dot
    assert dot.endswith("}")

    pair = en.sigma_to_pair(en.Endofunction((4, 1, 1, 4, 5, 6)), 2, 3)
    dot = en.pair_to_dot(pair)
    assert "style=bold" in dot
    assert "(c1)" in dot

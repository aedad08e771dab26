import math

import pytest

from cobschur import (RingContext, Series, FormalGroupLaw, Partition,
                      SymmetrizerSpec, coset_reps, symmetrize,
                      factorial_power, double_factorial_power,
                      bracket_monomial, universal_schur_s, universal_schur_p,
                      universal_schur_q, universal_hall_littlewood,
                      new_universal_schur, new_universal_schur_one_row,
                      universal_schur_kl, BudgetError, oracles, series_match)


def setup(mode, n, n_b=0, A=2, D=4, scalars=()):
    margin = n * (n - 1) // 2 + 1
    sc = list(scalars)
    if mode == "multiplicative":
        sc.append("beta")
    ctx = RingContext(n_x=n, n_b=n_b, m_order=A if mode == "universal" else 0,
                      deg_bound=D + margin, scalars=tuple(sc))
    return ctx, FormalGroupLaw(ctx, mode)


class TestPartition:
    def test_interval_decomposition(self):
        lam = Partition([3, 3, 1, 0], n=4)
        assert lam.block_sizes == (2, 1, 1)
        assert lam.block_values == (3, 1, 0)
        assert lam.nu == (0, 2, 3, 4)
        assert lam.block_of == (1, 1, 2, 3)

    def test_pair_positions(self):
        lam = Partition([2, 1, 1], n=3)
        assert lam.pair_positions() == ((1, 2), (1, 3))

    def test_strictness(self):
        assert Partition([3, 1], n=3).is_strict()
        assert not Partition([2, 2], n=3).is_strict()

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition([1, 2])


class TestCosetReps:
    def test_counts(self):
        assert len(coset_reps(3, (2, 1))) == 3
        assert len(coset_reps(4, (1, 1, 2))) == 12
        assert len(coset_reps(4, (4,))) == 1

    def test_minimal_length_property(self):
        for w in coset_reps(4, (2, 2)):
            assert w(1) < w(2) and w(3) < w(4)

    def test_distinct_cosets_cover(self):
        reps = coset_reps(3, (2, 1))
        images = {tuple(sorted((w(1), w(2)))) for w in reps}
        assert len(images) == 3


class TestFactorialPowers:
    def test_zeroth_power_is_one(self):
        ctx, fgl = setup("universal", 2, n_b=3)
        assert factorial_power(fgl, 1, 0) == Series.const(ctx, 1)
        assert double_factorial_power(fgl, 1, 0) == Series.const(ctx, 1)

    def test_additive_shape(self):
        ctx, fgl = setup("additive", 2, n_b=2)
        x1 = Series.gen(ctx, "x1")
        b1, b2 = Series.gen(ctx, "b1"), Series.gen(ctx, "b2")
        assert factorial_power(fgl, 1, 2) == (x1 + b1) * (x1 + b2)

    def test_zero_parameters_give_plain_power(self):
        ctx, fgl = setup("universal", 2)
        assert factorial_power(fgl, 1, 3, b_values=[]) == Series.gen(ctx, "x1") ** 3

    def test_budget_overflow(self):
        ctx, fgl = setup("universal", 2, n_b=1)
        with pytest.raises(BudgetError):
            factorial_power(fgl, 1, 2)

    def test_double_additive(self):
        ctx, fgl = setup("additive", 1)
        assert double_factorial_power(fgl, 1, 1, b_values=[]) == \
            Series.gen(ctx, "x1").scale(2)

    def test_double_multiplicative(self):
        ctx, fgl = setup("multiplicative", 1)
        x1, beta = Series.gen(ctx, "x1"), Series.gen(ctx, "beta")
        assert double_factorial_power(fgl, 1, 1, b_values=[]) == \
            2 * x1 + beta * x1 ** 2


class TestBracketMonomial:
    def test_rectangle_times_tail(self):
        # lam = (a^q, b^{n-q}) with zero parameters gives
        # x_1^{a+n-q} ... x_q^{a+n-q} x_{q+1}^b ... x_n^b
        ctx, fgl = setup("additive", 3, D=8)
        lam = Partition([2, 2, 1], n=3)
        got = bracket_monomial(fgl, lam, [])
        want = Series.monomial(ctx, {"x1": 3, "x2": 3, "x3": 1})
        assert got == want

    def test_distinct_partition_matches_staircase_powers(self):
        ctx, fgl = setup("additive", 3, n_b=4, D=8)
        lam = Partition([2, 1, 0], n=3)
        got = bracket_monomial(fgl, lam)
        want = Series.const(ctx, 1)
        for i in range(1, 4):
            want = want * factorial_power(fgl, i, lam.parts[i - 1] + 3 - i)
        assert got == want

    def test_empty_partition(self):
        ctx, fgl = setup("universal", 3)
        assert bracket_monomial(fgl, Partition([], n=3)) == Series.const(ctx, 1)


class TestSymmetrizeEngine:
    def test_two_variable_telescoping(self):
        ctx, fgl = setup("additive", 2)
        spec = SymmetrizerSpec((1, 2), ((1, 2),), coset_reps(2, (1, 1)))
        assert symmetrize(fgl, Series.gen(ctx, "x1"), spec) == \
            Series.const(ctx, 1, bound=ctx.deg_bound - 2)

    def test_vandermonde_over_vandermonde(self):
        ctx, fgl = setup("additive", 3)
        v = Series.const(ctx, 1)
        for (i, j) in ((1, 2), (1, 3), (2, 3)):
            v = v * (Series.gen(ctx, "x%d" % i) - Series.gen(ctx, "x%d" % j))
        spec = SymmetrizerSpec((1, 2, 3), ((1, 2), (1, 3), (2, 3)), [coset_reps(3, (3,))[0]])
        assert symmetrize(fgl, v, spec) == Series.const(ctx, 1, bound=v.bound - 4)

    def test_empty_partition_series_leading_term(self):
        ctx, fgl = setup("universal", 2, n_b=1, A=3, D=4)
        s = universal_schur_s(fgl, [], 2, use_b=True)
        assert s.constant_term() == 1

    def test_empty_partition_expansion_coefficients(self):
        # frozen against two independent computations: the x1x2 and
        # b1x1x2 coefficients are a_{1,2} and 2 a_{1,1} a_{1,2} + 2 a_{1,3}
        ctx, fgl = setup("universal", 2, n_b=1, A=3, D=4)
        s = universal_schur_s(fgl, [], 2, use_b=True)

        def coeff(exps):
            out = {}
            for key, c in s.terms.items():
                e = ctx.exps_from_key(key)
                xb = {k: v for k, v in e.items() if k[0] in "xb"}
                if xb == exps:
                    rest = {k: v for k, v in e.items() if k[0] not in "xb"}
                    out[ctx.key_from_exps(rest)] = c
            return Series(ctx, out, s.bound)

        a11 = fgl.a_coefficient(1, 1)
        a12 = fgl.a_coefficient(1, 2)
        a13 = fgl.a_coefficient(1, 3)
        assert coeff({"x1": 1, "x2": 1}) == a12
        assert coeff({"b1": 1, "x1": 1, "x2": 1}) == \
            (a11 * a12).scale(2) + a13.scale(2)


class TestSchurFamilies:
    def test_additive_matches_classical(self):
        ctx, fgl = setup("additive", 3, D=4)
        got = universal_schur_s(fgl, [2, 1], 3)
        assert series_match(got, oracles.classical_schur(ctx, [2, 1], 3))[0]

    def test_symmetry_and_homogeneity(self):
        ctx, fgl = setup("universal", 3, D=4)
        s = universal_schur_s(fgl, [2, 1], 3)
        assert s.is_homogeneous(3)
        from cobschur import Permutation
        assert s.act_permutation(Permutation((3, 1, 2))) == s

    def test_sequence_is_raw(self):
        # unstraightened sequences are computed as-is; (0, 1) on two
        # variables collapses additively to either 0 or +-Schur
        ctx, fgl = setup("additive", 2, D=4)
        got = universal_schur_s(fgl, [0, 1], 2)
        assert got.is_zero() or series_match(
            got, oracles.classical_schur(ctx, [1], 2))[0]

    def test_p_single_variable_no_denominator(self):
        ctx, fgl = setup("universal", 1, n_b=3, D=4)
        assert universal_schur_p(fgl, [3], 1, use_b=True) == \
            factorial_power(fgl, 1, 3)

    def test_q_head_factor(self):
        ctx, fgl = setup("universal", 1, D=4)
        x1 = Series.gen(ctx, "x1")
        assert universal_schur_q(fgl, [1], 1) == fgl.formal_sum(x1, x1)

    def test_pq_reject_non_strict(self):
        ctx, fgl = setup("universal", 2, D=3)
        with pytest.raises(ValueError):
            universal_schur_p(fgl, [2, 2], 2)

    def test_prefactor_is_exact(self):
        # the full-sum evaluation carries 1/(n-k)! as an exact rational
        ctx, fgl = setup("additive", 3, D=3)
        got = universal_schur_p(fgl, [1], 3)
        assert got == oracles.monomial_symmetric(ctx, [1], 3).truncate(got.bound)


class TestHallLittlewood:
    def test_t_one_gives_monomial(self):
        ctx, fgl = setup("universal", 3, D=4, scalars=("t",))
        H = universal_hall_littlewood(fgl, [2, 1], 3)
        want = oracles.monomial_symmetric(ctx, [2, 1], 3)
        assert H.substitute_gen("t", 1) == want.truncate(H.bound)

    def test_t_zero_gives_damon_type(self):
        ctx, fgl = setup("universal", 3, D=4, scalars=("t",))
        H = universal_hall_littlewood(fgl, [2, 2], 3)
        assert H.substitute_gen("t", 0) == new_universal_schur(fgl, [2, 2], 3)

    def test_t_minus_one_gives_p(self):
        ctx, fgl = setup("universal", 3, D=4, scalars=("t",))
        H = universal_hall_littlewood(fgl, [2, 1], 3)
        assert H.substitute_gen("t", -1) == universal_schur_p(fgl, [2, 1], 3)


class TestDamonType:
    def test_empty_is_one(self):
        ctx, fgl = setup("universal", 3, D=3)
        assert new_universal_schur(fgl, [], 3) == Series.const(
            ctx, 1, bound=ctx.deg_bound - 1 - 0)

    def test_distinct_partition_agrees_with_plain(self):
        ctx, fgl = setup("universal", 2, n_b=3, D=4)
        lam = [2, 1]
        a = new_universal_schur(fgl, lam, 2, use_b=True)
        b = universal_schur_s(fgl, lam, 2, use_b=True)
        assert series_match(a, b)[0]

    def test_repeated_parts_differ_from_plain(self):
        ctx, fgl = setup("universal", 2, n_b=3, D=4)
        a = new_universal_schur(fgl, [1, 1], 2, use_b=True)
        b = universal_schur_s(fgl, [1, 1], 2, use_b=True)
        assert not series_match(a, b)[0]

    def test_one_row_extended_range(self):
        ctx, fgl = setup("universal", 2, D=4)
        assert series_match(new_universal_schur_one_row(fgl, 1, 2),
                            new_universal_schur(fgl, [1], 2))[0]
        low = new_universal_schur_one_row(fgl, -1, 2)
        assert not low.is_zero()  # nonzero negative-index value


class TestKempfLaksovType:
    def test_full_length_agrees_with_plain(self):
        ctx, fgl = setup("universal", 2, n_b=3, D=4)
        a = universal_schur_kl(fgl, [2, 1], 2, use_b=True)
        b = universal_schur_s(fgl, [2, 1], 2, use_b=True)
        assert series_match(a, b)[0]

    def test_one_row_agrees_with_damon_type(self):
        ctx, fgl = setup("universal", 3, n_b=4, D=4)
        a = universal_schur_kl(fgl, [2], 3, use_b=True)
        b = new_universal_schur(fgl, [2], 3, use_b=True)
        assert series_match(a, b)[0]

    def test_additive_is_factorial_schur(self):
        ctx, fgl = setup("additive", 3, n_b=4, D=3)
        got = universal_schur_kl(fgl, [2, 1], 3, use_b=True)
        assert series_match(got, oracles.factorial_schur(ctx, [2, 1], 3))[0]

"""Series construction and continued-fraction expansion."""

import pytest

from lacunary.bits import EpsilonSpec, LambdaRangeError, LambdaSpec
from lacunary.contfrac import (
    ContinuedFraction,
    build_F,
    cf_expand,
    cf_fold,
    convergents,
    phi_oracle,
)
from lacunary.rings import (
    RING_Q,
    LaurentSeries,
    SeriesPrecisionError,
    SparsePoly,
    reduce_mod2,
    series_from_poly,
    series_mul,
    series_sub,
)

MERS = LambdaSpec.mersenne()
ZERO = EpsilonSpec.zero()


class TestBuildF:
    def test_window_coefficients(self):
        f = build_F(MERS, ZERO, 40)
        assert f.coeff(-1) == 1 and f.coeff(-3) == 1
        assert f.coeff(-7) == 1 and f.coeff(-15) == 1 and f.coeff(-31) == 1
        assert f.coeff(-2) == 0 and f.coeff(-4) == 0

    def test_signs_follow_eps(self):
        f = build_F(MERS, EpsilonSpec((), (1, 0)), 20)
        assert f.coeff(-1) == -1 and f.coeff(-3) == 1
        assert f.coeff(-7) == -1 and f.coeff(-15) == 1

    def test_precision_below_first_exponent(self):
        with pytest.raises(SeriesPrecisionError):
            build_F(MERS, ZERO, 0)

    def test_list_completion_rule(self):
        lam = LambdaSpec.from_list([1, 4, 9, 19, 39])
        # completable while the forced next exponent (> 78) clears the window
        f = build_F(lam, ZERO, 78)
        assert f.coeff(-39) == 1
        with pytest.raises(LambdaRangeError, match="lambda range"):
            build_F(lam, ZERO, 79)

    def test_extension_deepens_window(self):
        f = build_F(MERS, ZERO, 16)
        with pytest.raises(SeriesPrecisionError):
            f.coeff(-17)
        g = f.extend(64)
        assert g.coeff(-31) == 1


def _assert_best_approx(f, conv, i):
    """F * Q_i - P_i must vanish at all exponents >= -deg Q_i."""
    q, p = conv.q[i], conv.p[i]
    resid = series_sub(series_mul(f, series_from_poly(q)), series_from_poly(p))
    lo = -q.degree if resid.exact else max(-q.degree, -resid.cutoff)
    for e in range(resid.top, lo - 1, -1):
        assert resid.coeff(e) == 0, f"residual term at X^{e} for convergent {i}"


class TestExpansion:
    def test_quotients_have_degree_one_each(self):
        cf = cf_expand(build_F(MERS, ZERO, 128), 6)
        assert cf.quotients[0] == SparsePoly.zero(RING_Q)
        for q in cf.quotients[1:]:
            assert q.degree == 1

    def test_best_approximation_property(self):
        f = build_F(MERS, ZERO, 256)
        cf = cf_expand(f, 7)
        conv = convergents(cf)
        for i in range(conv.certified):
            _assert_best_approx(f, conv, i)

    def test_best_approximation_nonzero_eps(self):
        f = build_F(MERS, EpsilonSpec((1,), (0, 1)), 256)
        conv = convergents(cf_expand(f, 7))
        for i in range(conv.certified):
            _assert_best_approx(f, conv, i)

    def test_determinant_alternates(self):
        conv = convergents(cf_expand(build_F(MERS, ZERO, 128), 6))
        one = SparsePoly.one(RING_Q)
        for i in range(len(conv.p) - 1):
            det = conv.p[i + 1] * conv.q[i] - conv.p[i] * conv.q[i + 1]
            assert det == (one if i % 2 == 0 else one.scale(-1))

    def test_uncertifiable_first_quotient(self):
        f = build_F(MERS, ZERO, 1)
        with pytest.raises(SeriesPrecisionError, match="precision"):
            cf_expand(f, 3)

    def test_budget_and_certification_counts(self):
        cf = cf_expand(build_F(MERS, ZERO, 64), 4)
        assert len(cf.quotients) == 5        # A_0 plus the budget
        assert cf.certified == 5
        assert not cf.terminated

    def test_uncertified_tail_is_visible(self):
        cf = cf_expand(build_F(MERS, ZERO, 20))
        assert cf.certified < len(cf.quotients)
        assert cf.quotients[: cf.certified] == cf_expand(
            build_F(MERS, ZERO, 40), cf.certified - 1
        ).quotients[: cf.certified]

    def test_terminating_input(self):
        # 1/X expands exactly as [0; X]
        f = series_from_poly(SparsePoly.x_power(RING_Q, 1))
        from lacunary.rings import series_invert
        cf = cf_expand(series_invert(f))
        assert cf.terminated
        assert cf.precision is None
        assert cf.quotients[1] == SparsePoly.x_power(RING_Q, 1)

    def test_integrality_enforcement(self):
        # 2/X + 1/X^2 has a non-integral quotient; the lacunary flag trips
        s = LaurentSeries(
            coeffs={-1: 2, -2: 1}, top=-1, cutoff=None, expect_integral_cf=True
        )
        with pytest.raises(ArithmeticError):
            cf_expand(s)

    def test_fold_recovers_prefix(self):
        f = build_F(MERS, ZERO, 128)
        cf = cf_expand(f, 5)
        p, q = cf_fold(cf)
        conv = convergents(cf)
        assert (p, q) == (conv.p[cf.certified - 1], conv.q[cf.certified - 1])


class TestPhiOracle:
    def test_mod2_agreement(self):
        conv = convergents(cf_expand(build_F(MERS, ZERO, 512), 8))
        phi = phi_oracle(8)
        for i in range(conv.certified):
            assert reduce_mod2(conv.q[i]) == reduce_mod2(phi.q[i])

    def test_numerator_lag(self):
        phi = phi_oracle(40)
        for n in range(1, 41):
            assert phi.p[n] == phi.q[n - 1]

#include <doctest.h>

#include <cmath>
#include <random>

#include <polyasym/bernoulli_expansions.hpp>
#include <polyasym/closed_forms.hpp>
#include <polyasym/combinatorics.hpp>
#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>
#include <polyasym/euler_expansions.hpp>
#include <polyasym/expansion_params.hpp>
#include <polyasym/power_series.hpp>
#include <polyasym/two_point.hpp>

#include "support.hpp"

using namespace polyasym;
using testing::hp;
using RS = PowerSeries<Rational>;

namespace
{

RS rs(std::vector<Rational> v)
{
    return RS(std::move(v));
}

RS exp_series(long order)
{
    return RS::exponential(Rational(1), static_cast<std::size_t>(order));
}

// w/(e^w - 1) built through its reciprocal (coefficients 1/(k+1)!).
RS bernoulli_kernel(std::size_t order)
{
    std::vector<Rational> v;
    for (std::size_t k = 0; k <= order; ++k) {
        v.push_back(Rational(1) / factorial(static_cast<long>(k) + 1));
    }
    return series_inverse(RS(std::move(v)));
}

} // namespace

TEST_CASE("series_mul")
{
    CHECK(series_mul(rs({1, 1, 0}), rs({1, -1, 0})) == rs({1, 0, -1}));
    const RS one = series_mul(exp_series(8), RS::exponential(Rational(-1), 8));
    CHECK(one == RS::constant(Rational(1), 8));
    CHECK(series_mul(exp_series(4), exp_series(4))[2] == Rational(2));
    // truncation to the shorter operand
    CHECK(series_mul(exp_series(6), exp_series(3)).order() == 3);
}

TEST_CASE("series_log")
{
    CHECK(series_log(rs({1, 1, 0, 0})) == rs({0, 1, Rational(-1, 2), Rational(1, 3)}));
    CHECK(series_log(exp_series(6)) == RS::variable(Rational(0), 6));
    const RS l = series_log(bernoulli_kernel(2));
    CHECK(l[1] == Rational(-1, 2));
    CHECK(l[2] == Rational(-1, 24));
    CHECK_THROWS_AS(series_log(rs({2, 1})), domain_error);
}

TEST_CASE("series_exp")
{
    CHECK(series_exp(RS::constant(Rational(0), 5)) == RS::constant(Rational(1), 5));
    CHECK(series_exp(RS::variable(Rational(0), 4)) ==
          rs({1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
    CHECK(series_exp(series_log(rs({1, 1, 0, 0, 0, 0, 0}))) == rs({1, 1, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(series_exp(rs({1, 1})), domain_error);
}

TEST_CASE("series_pow")
{
    CHECK(series_pow(rs({1, 1, 0}), Rational(2)) == rs({1, 2, 1}));
    CHECK(series_pow(rs({3, 1, 5}), Rational(0)) == RS::constant(Rational(1), 2));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        const Rational mu = testing::random_rational(rng, 4, 7);
        CHECK(series_pow(bernoulli_kernel(5), mu)[1] == -mu / 2);
    }
    // constant term with an irrational rational power
    CHECK_THROWS_AS(series_pow(rs({2, 1}), Rational(1, 2)), domain_error);
    CHECK_THROWS_AS(series_pow(rs({0, 1}), Rational(2)), domain_error);
}

TEST_CASE("series_compose")
{
    const RS q = rs({0, 3, Rational(-1, 2), 7});
    CHECK(series_compose(RS::variable(Rational(0), 3), q) == q);
    CHECK(series_compose(exp_series(3), rs({0, 2, 0, 0})) == rs({1, 2, 2, Rational(4, 3)}));
    CHECK_THROWS_AS(series_compose(exp_series(3), rs({1, 2, 0, 0})), domain_error);

    // (e^u - 1)/u with u = 2 pi i (e^s - 1): constant term 1
    const mpfr_prec_t p = 128;
    const HPComplex like(p);
    std::vector<HPComplex> inner{HPComplex(p)};
    HPComplex f(1L, p);
    for (long k = 1; k <= 6; ++k) {
        f = f / k;
        inner.push_back(two_pi_i(p) * f);
    }
    std::vector<HPComplex> outer;
    for (long k = 0; k <= 6; ++k) {
        outer.push_back(HPComplex(Rational(1) / factorial(k + 1), p));
    }
    const auto c = series_compose(PowerSeries<HPComplex>(outer), PowerSeries<HPComplex>(inner));
    CHECK(testing::rel(c[0], HPComplex(1L, p)) == 0.0);
}

TEST_CASE("round trips are exact over the rationals")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        std::vector<Rational> a{Rational(1)}, b{Rational(0)};
        for (int k = 1; k <= 8; ++k) {
            a.push_back(testing::random_rational(rng, 3, 5));
            b.push_back(testing::random_rational(rng, 3, 5));
        }
        CHECK(series_exp(series_log(RS(a))) == RS(a));
        CHECK(series_log(series_exp(RS(b))) == RS(b));
    }
}

TEST_CASE("series_pow is additive in the exponent")
{
    std::mt19937_64 rng(23);
    const mpfr_prec_t p = 200;
    for (int i = 0; i < 5; ++i) {
        // a_0 in [5, 11] keeps |a_k / a_0| < 1; larger ratios make the product
        // on the right ill-conditioned in the last few bits
        std::vector<HPComplex> a{HPComplex(testing::random_rational(rng, 3, 4) + Rational(8), p)};
        for (int k = 1; k <= 8; ++k) {
            a.push_back(HPComplex(testing::random_rational(rng, 3, 5), testing::random_rational(rng, 3, 5), p));
        }
        const PowerSeries<HPComplex> s(a);
        const HPComplex P(testing::random_rational(rng, 2, 7), p), Q(testing::random_rational(rng, 2, 7), p);
        const auto lhs = series_pow(s, P + Q);
        const auto rhs = series_mul(series_pow(s, P), series_pow(s, Q));
        // norm-wise
        HPReal diff(0L, p), scale(0L, p);
        for (std::size_t k = 0; k <= 8; ++k) {
            diff = max(diff, abs(lhs[k] - rhs[k]));
            scale = max(scale, abs(rhs[k]));
        }
        CHECK(log(diff / scale).to_double() / std::log(2.0) < -static_cast<double>(p) + 8);
    }
}

TEST_CASE("two-point coefficients at the expansion points")
{
    const mpfr_prec_t p = 256;
    const HPComplex mu(Rational(1, 2), p), z(Rational(1, 4), p);
    const ExpansionParams bp(Family::Bernoulli, 0, mu, z);
    const auto b = twopoint_coeffs_B(mu, z, 2, Flavor::Standard, p);
    CHECK(testing::rel_bits(b.a[0], cos(bp.zeta * 2)) < -240);
    CHECK(testing::rel_bits(b.b[0], sin(bp.zeta * 2) / HPComplex(pi(p) * 2)) < -240);
    const auto a1 = twopoint_closed_form_B(mu, z, 1)->first;
    CHECK(testing::rel_bits(b.a[1], a1) < -240);

    const HPComplex mu2(Rational(3, 4), p), z2(Rational(2, 5), p);
    const ExpansionParams ep(Family::Euler, 0, mu2, z2);
    const auto e = twopoint_coeffs_E(mu2, z2, 1, Flavor::Standard, p);
    CHECK(testing::rel_bits(e.a[0], cos(ep.zeta)) < -240);
    CHECK(testing::rel_bits(e.b[0], sin(ep.zeta) / HPComplex(pi(p))) < -240);
}

TEST_CASE("tilde and standard agree at the expansion points for k = 0")
{
    const mpfr_prec_t p = 200;
    const HPComplex mu(Rational(1, 3), p), z(Rational(1, 5), p);
    const auto s = twopoint_coeffs_B(mu, z, 4, Flavor::Standard, p);
    const auto t = twopoint_coeffs_B(mu, z, 4, Flavor::Tilde, p);
    const HPComplex w = two_pi_i(p);
    CHECK(testing::rel_bits(s.evaluate(w, 1), t.evaluate(w, 1)) < -180);
    CHECK(testing::rel_bits(s.evaluate(-w, 1), t.evaluate(-w, 1)) < -180);
    // every higher term vanishes at +-ic
    CHECK(testing::rel_bits(t.evaluate(w), t.evaluate(w, 1)) < -180);
}

TEST_CASE("generic two_point_expand on a polynomial")
{
    // f(w) = w^5 is reproduced exactly by three standard pairs about +-i.
    const mpfr_prec_t p = 128;
    const LocalSeriesFn f = [p](const HPComplex &w0, std::size_t order) {
        std::vector<HPComplex> v;
        for (std::size_t k = 0; k <= order; ++k) {
            v.push_back(k <= 5 ? HPComplex(binomial(5, static_cast<long>(k)), p) * pow(w0, 5 - static_cast<long>(k))
                               : HPComplex(p));
        }
        return PowerSeries<HPComplex>(v);
    };
    const auto s = two_point_expand(f, HPComplex(1L, p), Flavor::Standard, 3, p);
    const HPComplex w = hp("0.7", "-0.2", p);
    CHECK(testing::rel_bits(s.evaluate(w), pow(w, 5)) < -110);
    // w^5 = w (w^2+1)^2 - 2 w (w^2+1) + w
    CHECK(testing::rel_bits(s.b[0], HPComplex(1L, p)) < -110);
    CHECK(testing::rel_bits(s.b[1], HPComplex(-2L, p)) < -110);
    CHECK(testing::rel_bits(s.b[2], HPComplex(1L, p)) < -110);
    CHECK(abs(s.a[2]).to_double() < 1e-30);
}

TEST_CASE("resummation converges inside the disk")
{
    const mpfr_prec_t p = 256;
    const HPComplex mu(Rational(1, 2), p), z(Rational(1, 4), p), w(1L, p);
    const auto s = twopoint_coeffs_B(mu, z, 30, Flavor::Standard, p);
    const HPComplex f = twopoint_function_B(mu, z, w);
    double prev = 1;
    for (std::size_t K : {4, 8, 16, 24, 30}) {
        const double e = testing::rel(s.evaluate(w, K + 1), f);
        CHECK(e < prev);
        prev = e;
    }
    CHECK(prev < 1e-12);
}

TEST_SUITE("stated tolerances")
{
    TEST_CASE("resummation at K = 12 reaches 1e-10 at w = 1")
    {
        const mpfr_prec_t p = 256;
        const HPComplex mu(Rational(1, 2), p), z(Rational(1, 4), p), w(1L, p);
        const auto s = twopoint_coeffs_B(mu, z, 12, Flavor::Standard, p);
        const double e = testing::rel(s.evaluate(w), twopoint_function_B(mu, z, w));
        INFO("relative error at K = 12: " << e);
        CHECK(e < 1e-10);
    }
}

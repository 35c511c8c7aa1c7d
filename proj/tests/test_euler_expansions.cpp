#include <doctest.h>

#include <cmath>
#include <random>

#include <polyasym/closed_forms.hpp>
#include <polyasym/combinatorics.hpp>
#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>
#include <polyasym/euler_expansions.hpp>
#include <polyasym/expansion_params.hpp>
#include <polyasym/gamma.hpp>
#include <polyasym/oracle.hpp>

#include "support.hpp"

using namespace polyasym;
using testing::hp;

namespace
{

constexpr mpfr_prec_t P = 256;

HPComplex R(long a, long b = 1)
{
    return HPComplex(Rational(a, b), P);
}

HPComplex oracle(long n, const HPComplex &mu, const HPComplex &z)
{
    const mpfr_prec_t w = working_precision(P, n);
    return euler_values(n, mu.with_precision(w), z.with_precision(w)).back();
}

} // namespace

TEST_CASE("negative integer order leading terms")
{
    const auto a0 = neg_int_leading_E(9, 0, R(3, 7));
    CHECK(a0.confidence == Confidence::Exact);
    CHECK(testing::rel(a0.value, HPComplex(Rational(3, 7).pow(9), P)) < 1e-70);

    const auto a = neg_int_leading_E(30, 1, R(2));
    CHECK(testing::rel(a.value, HPComplex(Rational(3).pow(30) / Rational(2), P)) < 1e-70);
    CHECK(testing::rel(HPComplex(euler_neg_int(30, 1, Rational(2)), P), a.value) <= std::pow(2.0 / 3.0, 30) * (1 + 1e-12));

    for (long n : {20, 40}) {
        for (long m : {1, 2, 3}) {
            for (const Rational &z : {Rational(2), Rational(1, 3), Rational(-m, 2), Rational(-5), Rational(-7, 3)}) {
                const auto v = neg_int_leading_E(n, m, HPComplex(z, P));
                const HPComplex exact(euler_neg_int(n, m, z), P);
                const double err = v.error_kind == ErrorKind::Relative ? testing::rel(v.value, exact)
                                                                      : abs(v.value - exact).to_double();
                INFO("n=" << n << " m=" << m << " z=" << z);
                CHECK(err <= v.error_estimate.to_double() * (1 + 1e-12));
            }
        }
    }
}

TEST_CASE("Fourier series for mu = 1")
{
    // E_2(z) = z^2 - z
    const auto s = fourier_E1(2, R(0), 1000);
    CHECK(std::abs(s.value.re().to_double()) <= s.error_estimate.to_double());
    CHECK(std::abs(s.value.re().to_double()) < 1e-8);
    const auto h = fourier_E1(2, R(1, 2), 1000);
    CHECK(std::abs(h.value.re().to_double() + 0.25) < 1e-8);
    CHECK(h.confidence == Confidence::Convergent);

    const HPComplex z = R(3, 10);
    const auto k0 = fourier_E1(12, z, 0);
    CHECK(testing::rel(k0.value, fourier_E1_leading(12, z).value) < 1e-70);
    CHECK(testing::rel(k0.value, oracle(12, R(1), z)) < 2 * std::pow(3.0, -12));

    CHECK_THROWS_AS(fourier_E1(0, R(0), 4), domain_error);
    CHECK_NOTHROW(fourier_E1(0, R(1, 2), 4));
    CHECK_THROWS_AS(fourier_E1(-1, R(1, 2), 4), domain_error);
}

TEST_CASE("epsilon coefficients")
{
    const HPComplex z = hp("0.41", "-0.2", P);
    for (long k : {0, -1, 2, -4}) {
        CHECK(testing::rel(epsilon_coeff(1, 9, z, k), R(1)) == 0.0);
        for (long m : {2, 3, 5}) {
            INFO("k=" << k << " m=" << m);
            CHECK(testing::rel_bits(epsilon_residue(m, 9, z, k), epsilon_coeff(m, 9, z, k)) <
                  -static_cast<double>(P) + 16);
        }
    }
    CHECK_THROWS_AS(epsilon_coeff(0, 9, z, 0), domain_error);
}

TEST_CASE("Fourier series for positive integer order")
{
    const HPComplex z = R(3, 10);
    CHECK(testing::rel(fourier_Em(9, 1, z, 5).value, fourier_E1(9, z, 5).value) < 1e-70);

    const auto one = fourier_Em(16, 3, z, 0);
    CHECK(testing::rel(one.value, fourier_Em_leading(16, 3, z).value) < 1e-60);
    CHECK(testing::rel(one.value, oracle(16, R(3), z)) < std::pow(3.0, -16) * 16 * 16 * 16);

    const double e2 = testing::rel(fourier_Em(16, 2, z, 2).value, oracle(16, R(2), z));
    const double e0 = testing::rel(fourier_Em(16, 2, z, 0).value, oracle(16, R(2), z));
    CHECK(e2 < e0 * 1e-6);

    // the partner poles k and -1-k give conjugate terms for real parameters
    for (long k : {0, 1, 3}) {
        auto term = [&](long kk) {
            const HPComplex x = HPComplex::i(P) * pi(P) * (2 * kk + 1);
            return epsilon_coeff(3, 12, z, kk) * exp(x * z) / pow(x, 13);
        };
        CHECK(testing::rel_bits(term(k), conj(term(-1 - k))) < -240);
    }
    CHECK(fourier_Em(12, 2, z, 3).value.is_real());
}

TEST_CASE("loop coefficients h_k")
{
    std::mt19937_64 rng(20241019);
    for (int t = 0; t < 5; ++t) {
        const HPComplex mu(testing::random_rational(rng, 3, 17), P);
        const HPComplex z(testing::random_rational(rng, 2, 13), P);
        const auto h = watson_h_coeffs(mu, z, 3, P);
        for (long k = 0; k <= 3; ++k) {
            INFO("k=" << k << " mu=" << mu << " z=" << z);
            CHECK(testing::rel_bits(h[static_cast<std::size_t>(k)], *watson_h_derived_form(mu, z, k)) < -230);
        }
        // reference forms agree for k <= 1 and in the imaginary parts of k = 2, 3
        CHECK(testing::rel_bits(h[1], *watson_h_closed_form(mu, z, 1)) < -230);
        for (long k : {2, 3}) {
            const HPReal d = h[static_cast<std::size_t>(k)].im() - watson_h_closed_form(mu, z, k)->im();
            CHECK(std::abs(d.to_double()) < 1e-60);
        }
    }
    const auto h1 = watson_h_coeffs(R(1), R(0), 1, P);
    const ExpansionParams par(Family::Euler, 0, R(1), R(0));
    CHECK(testing::rel_bits(h1[1], R(-1, 2) + HPComplex::i(P) * par.zeta) < -240);
}

TEST_CASE("Watson expansion")
{
    const HPComplex z = R(3, 10);
    const auto w1 = detail::watson_expansion_E_unchecked(15, R(1), z, 4, P);
    CHECK(testing::rel(w1.value, fourier_E1_leading(15, z).value) < 1e-70);

    const HPComplex mu = R(1, 2);
    const HPComplex o40 = oracle(40, mu, z), o80 = oracle(80, mu, z);
    for (std::size_t k = 0; k <= 2; ++k) {
        const double r = testing::rel(watson_expansion_E(80, mu, z, k, P).value, o80) /
                         testing::rel(watson_expansion_E(40, mu, z, k, P).value, o40);
        const double target = std::ldexp(1.0, -static_cast<int>(k + 1));
        INFO("k=" << k << " ratio=" << r);
        CHECK(r >= 0.5 * target);
        CHECK(r <= 2 * target);
    }

    // first order: 2^(mu+1) n! n^(mu-1) / (pi^(n+mu) Gamma(mu)) cos pi (z - mu/2 - n/2)
    const long n = 30;
    const HPReal pi_p = pi(P);
    const HPComplex pre = HPComplex(factorial(n), P) * pow(HPComplex(2, P), mu + 1L) *
                          pow(HPComplex(n, P), mu - 1L) / (pow(HPComplex(pi_p), mu + HPComplex(n, P)) * gamma(mu));
    const HPComplex phase = cos(HPComplex(pi_p) * (z - mu / 2L - HPComplex(Rational(n, 2), P)));
    CHECK(testing::rel_bits(watson_expansion_E(n, mu, z, 0, P).value, pre * phase) < -240);

    CHECK_THROWS_AS(watson_expansion_E(20, R(3), z, 2, P), domain_error);
}

TEST_CASE("two-point scale functions")
{
    const HPComplex mu = R(1, 2);
    const long n = 6;
    const HPComplex expect = pow(HPComplex(pi(P)), -2L * n) * pow(HPComplex(pi(P)), -mu * 2L) *
                             pochhammer(mu, n) / HPComplex(factorial(n), P);
    CHECK(testing::rel_bits(psi(0, 2 * n, mu, Flavor::Standard), expect) < -240);
    for (long k = 0; k < 4; ++k) {
        CHECK(psi(k, 2 * n + 1, mu, Flavor::Standard).is_zero());
        CHECK(psi(k, 2 * n - 1, mu, Flavor::Tilde).is_zero());
        const HPComplex ratio = psi(k + 1, 100, mu, Flavor::Standard) / psi(k, 100, mu, Flavor::Standard);
        CHECK(testing::rel_bits(ratio, twopoint_ratio_check_E(50, mu, k)) < -240);
    }
    const HPComplex r = twopoint_ratio_check_E(50, mu, 0);
    CHECK(testing::rel_bits(r, HPComplex(pi(P) * pi(P)) * (mu - 1L) / (mu + 49L)) < -240);
    CHECK(testing::rel_bits(psi(0, 2 * n, R(1), Flavor::Tilde), R(1) / pow(HPComplex(pi(P)), 2 * n + 2)) < -240);
}

TEST_CASE("two-point sums")
{
    const HPComplex z = R(3, 10);
    for (const HPComplex &mu : {R(1, 2), hp("1.5", "0.25", P)}) {
        for (long n : {10, 11}) {
            const HPComplex exact = oracle(n, mu, z);
            double prev = 1;
            for (std::size_t K : {4, 12, 20}) {
                const double e = testing::rel(twopoint_sum_E(n, mu, z, K, Flavor::Standard, P).value, exact);
                CHECK(e < prev);
                prev = e;
            }
            CHECK(prev < 1e-8);
        }
    }
    for (long n : {10, 11}) {
        const auto t = twopoint_sum_E(n, R(1), z, 6, Flavor::Tilde, P);
        CHECK(t.terms_used == 1);
        CHECK(testing::rel_bits(t.value, fourier_E1(n, z, 0).value) < -240);
    }
    // mu = 2, tilde: terminates after two terms and matches the k = 0, -1 poles
    const auto t2 = twopoint_sum_E(14, R(2), z, 6, Flavor::Tilde, P);
    CHECK(t2.terms_used == 2);
    CHECK(testing::rel_bits(t2.value, fourier_Em(14, 2, z, 0).value) < -200);
    CHECK_THROWS_AS(twopoint_sum_E(10, R(2), z, 4, Flavor::Standard, P), domain_error);
}

TEST_CASE("first-order cross agreement")
{
    // degree 2n
    const long n = 50;
    const HPComplex z = R(3, 10);
    for (const HPComplex &mu : {R(1, 2), R(5, 2)}) {
        const HPComplex tp = twopoint_sum_E(2 * n, mu, z, 0, Flavor::Standard, P).value;
        const HPComplex wa = watson_expansion_E(2 * n, mu, z, 0, P).value;
        const HPComplex expect = gamma(mu + HPComplex(n, P)) /
                                 (HPComplex(factorial(n), P) * pow(HPComplex(n, P), mu - 1L));
        CHECK(testing::rel_bits(tp / wa, expect) < -200);
        CHECK(std::abs((tp / wa).re().to_double() - 1) <= 2 * std::abs((mu - 1L).re().to_double()) / n);
    }
}

TEST_SUITE("stated tolerances")
{
    TEST_CASE("reference h_2 agrees with the generated coefficient")
    {
        const HPComplex mu = R(3, 7), z = R(2, 5);
        const auto h = watson_h_coeffs(mu, z, 2, P);
        CHECK(testing::rel_bits(h[2], *watson_h_closed_form(mu, z, 2)) < -230);
    }

    TEST_CASE("two-point sum at n = 10, mu = 3/2 + i/4, K = 12 is within 1e-8")
    {
        const HPComplex mu = hp("1.5", "0.25", P), z = R(3, 10);
        const double e = testing::rel(twopoint_sum_E(10, mu, z, 12, Flavor::Standard, P).value, oracle(10, mu, z));
        INFO("relative error: " << e);
        CHECK(e < 1e-8);
    }
}

#include <polyasym/bernoulli_expansions.hpp>

#include <algorithm>
#include <cmath>

#include <polyasym/combinatorics.hpp>
#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>
#include <polyasym/oracle.hpp>

#include "expansions_common.hpp"

namespace polyasym
{

RegionCase region_classify(long m, const HPComplex &z)
{
    if (m < 0) {
        throw domain_error("region_classify: m must be non-negative");
    }
    const mpfr_prec_t p = z.precision();
    const HPReal d = z.re() + HPReal(Rational(m, 2), p);
    const HPReal tol = ldexp(HPReal(1L, p), -static_cast<long>(p) / 2);
    if (abs(d) <= tol) {
        return RegionCase::Boundary;
    }
    return d.sign() > 0 ? RegionCase::UpperDominant : RegionCase::LowerDominant;
}

ApproxValue neg_int_leading(long n, long m, const HPComplex &z)
{
    return detail::neg_int_leading_generic(Family::Bernoulli, n, m, z);
}

namespace
{

// Coefficient of (-t)^nu in beta_k^m: (-1)^(m-1) C(n-1,m-1) C(m-1,nu)
// (n-nu-1)!/(n-1)!, without the B_nu^m(z) factor.
Rational beta_weight(long m, long n, long nu)
{
    Rational w = binomial(n - 1, m - 1) * binomial(m - 1, nu) * factorial(n - nu - 1) / factorial(n - 1);
    return (m - 1) % 2 == 0 ? w : -w;
}

void check_beta_range(long m, long n)
{
    if (m < 1) {
        throw domain_error("beta coefficient: m must be at least 1");
    }
    if (m > n) {
        throw domain_error("beta coefficient: requires m <= n (the residue form needs n >= m)");
    }
}

// Weights b_nu = beta_weight * B_nu^m(z), so beta_k = sum b_nu (-2 pi i k)^nu.
std::vector<HPComplex> beta_terms(long m, long n, const HPComplex &z)
{
    const mpfr_prec_t p = z.precision();
    const auto B = bernoulli_values(m - 1, HPComplex(m, p), z);
    std::vector<HPComplex> b;
    for (long nu = 0; nu < m; ++nu) {
        b.push_back(B[static_cast<std::size_t>(nu)] * HPComplex(beta_weight(m, n, nu), p));
    }
    return b;
}

HPComplex beta_from_terms(const std::vector<HPComplex> &b, long k)
{
    const mpfr_prec_t p = b.front().precision();
    const HPComplex x = -(two_pi_i(p) * k);
    HPComplex r(p);
    for (std::size_t nu = b.size(); nu-- > 0;) {
        r = r * x + b[nu];
    }
    return r;
}

// -n! beta_k e^{2 pi i k z} / (2 pi i k)^n
HPComplex fourier_term(long n, const std::vector<HPComplex> &b, const HPComplex &z, long k)
{
    const mpfr_prec_t p = z.precision();
    const HPComplex t = two_pi_i(p) * k;
    return -(beta_from_terms(b, k) * exp(t * z) / pow(t, n) * HPComplex(factorial(n), p));
}

ApproxValue fourier_impl(long n, long m, const HPComplex &z, long K)
{
    if (K < 1) {
        throw domain_error("fourier expansion: K must be at least 1");
    }
    const mpfr_prec_t p = z.precision() + detail::guard_bits;
    const HPComplex zp = z.with_precision(p);
    const auto b = beta_terms(m, n, zp);
    HPComplex sum(p);
    for (long k = 1; k <= K; ++k) {
        sum += fourier_term(n, b, zp, k) + fourier_term(n, b, zp, -k);
    }
    const HPReal next = abs(fourier_term(n, b, zp, K + 1)) + abs(fourier_term(n, b, zp, -K - 1));
    if (z.is_real()) {
        sum = HPComplex(sum.re());
    }

    ApproxValue out;
    out.method = Method::Fourier;
    out.terms_used = static_cast<std::size_t>(2 * K);
    out.error_kind = ErrorKind::Absolute;
    const bool convergent = m == 1 ? detail::is_real_in_unit_interval(z, n >= 2)
                                   : (m < n && detail::is_real_in_unit_interval(z, false));
    out.confidence = convergent ? Confidence::Convergent : Confidence::Asymptotic;
    const long decay = n - m + 1;
    if (convergent && decay > 1) {
        out.error_estimate = detail::tail_bound(next, 1.0, 0.0, K, decay);
    } else {
        out.error_estimate = next;
        out.low_confidence = convergent;
    }
    out.error_estimate = out.error_estimate.with_precision(z.precision());
    out.value = sum.with_precision(z.precision());
    return out;
}

} // namespace

ApproxValue fourier_B1(long n, const HPComplex &z, long K)
{
    if (n < 1) {
        throw domain_error("fourier_B1: n must be at least 1");
    }
    if (n == 1 && !detail::is_real_in_unit_interval(HPComplex(z.re()), false)) {
        throw domain_error("fourier_B1: n = 1 requires 0 < Re z < 1");
    }
    return fourier_impl(n, 1, z, K);
}

ApproxValue fourier_B1_leading(long n, const HPComplex &z)
{
    return fourier_Bm_leading(n, 1, z);
}

ApproxValue fourier_Bm(long n, long m, const HPComplex &z, long K)
{
    if (m < 1 || m >= n) {
        throw domain_error("fourier_Bm: requires 1 <= m < n");
    }
    return fourier_impl(n, m, z, K);
}

ApproxValue fourier_Bm_leading(long n, long m, const HPComplex &z)
{
    if (m < 1 || m > n) {
        throw domain_error("fourier_Bm_leading: requires 1 <= m <= n");
    }
    const mpfr_prec_t p = z.precision() + detail::guard_bits;
    const HPComplex zp = z.with_precision(p);
    const HPReal two_pi = pi(p) * 2;
    const auto B = bernoulli_values(m - 1, HPComplex(m, p), zp);
    // 2 (-1)^(m+n) n! / (2 pi)^n C(n-1,m-1) sum_nu B_nu C(m-1,nu)
    //   (n-nu-1)!/(n-1)! (2 pi)^nu cos((2z + n/2 - nu/2) pi)
    HPComplex sum(p);
    for (long nu = 0; nu < m; ++nu) {
        const Rational w = binomial(m - 1, nu) * factorial(n - nu - 1) / factorial(n - 1);
        const HPComplex sigma = (zp * 2 + HPComplex(Rational(n - nu, 2), p)) * pi(p);
        sum += B[static_cast<std::size_t>(nu)] * HPComplex(w, p) * HPComplex(pow(two_pi, HPReal(nu, p))) * cos(sigma);
    }
    Rational c = binomial(n - 1, m - 1) * factorial(n) * 2;
    if ((m + n) % 2 != 0) {
        c = -c;
    }
    HPComplex value = sum * HPComplex(c, p) / pow(two_pi, HPReal(n, p));

    const auto b = beta_terms(m, n, zp);
    ApproxValue out;
    out.method = Method::FourierLeading;
    out.terms_used = 2;
    out.confidence = Confidence::Asymptotic;
    out.error_kind = ErrorKind::Absolute;
    out.error_estimate =
        (abs(fourier_term(n, b, zp, 2)) + abs(fourier_term(n, b, zp, -2))).with_precision(z.precision());
    out.value = value.with_precision(z.precision());
    return out;
}

BivariatePolynomial beta_coeff_polynomial(long m, long n)
{
    check_beta_range(m, n);
    BivariatePolynomial out;
    for (long nu = 0; nu < m; ++nu) {
        const auto poly = bernoulli_polynomial(nu, Rational(m));
        Rational w = beta_weight(m, n, nu);
        if (nu % 2 != 0) {
            w = -w; // (-t)^nu
        }
        for (std::size_t i = 0; i < poly.size(); ++i) {
            out.add_to(i, static_cast<std::size_t>(nu), poly[i] * w);
        }
    }
    return out;
}

BivariatePolynomial beta_coeff_recurrence_polynomial(long m, long n)
{
    check_beta_range(m, n);
    BivariatePolynomial beta = BivariatePolynomial::constant(Rational(1));
    const BivariatePolynomial z = BivariatePolynomial::z_power(1);
    const BivariatePolynomial t = BivariatePolynomial::t_power(1);
    for (long j = 1; j < m; ++j) {
        const BivariatePolynomial z_minus_j = z - BivariatePolynomial::constant(Rational(j));
        const BivariatePolynomial factor = BivariatePolynomial::constant(Rational(j - n)) + t * z_minus_j;
        beta = (factor * beta + z_minus_j * beta.derivative_z()) * Rational(1, j);
    }
    return beta;
}

HPComplex beta_coeff(long m, long n, const HPComplex &z, long k)
{
    check_beta_range(m, n);
    if (k == 0) {
        throw domain_error("beta_coeff: k must be non-zero");
    }
    return beta_from_terms(beta_terms(m, n, z), k);
}

HPComplex beta_coeff_recurrence(long m, long n, const HPComplex &z, long k)
{
    if (k == 0) {
        throw domain_error("beta_coeff_recurrence: k must be non-zero");
    }
    return beta_coeff_recurrence_polynomial(m, n).evaluate(z, two_pi_i(z.precision()) * k);
}

HPComplex beta_residue(long m, long n, const HPComplex &z, long k)
{
    check_beta_range(m, n);
    if (k == 0) {
        throw domain_error("beta_residue: k must be non-zero");
    }
    const mpfr_prec_t p = z.precision() + detail::guard_bits;
    const HPComplex zp = z.with_precision(p);
    const HPComplex w0 = two_pi_i(p) * k;
    // The nearest other singularity is 2 pi away, so the trapezoidal error on
    // the unit circle falls like (2 pi)^-N.
    const long N = static_cast<long>(p) / 2 + 16;
    const HPReal step = pi(p) * 2 / N;
    HPComplex acc(p);
    for (long j = 0; j < N; ++j) {
        const HPReal th = step * j;
        const HPComplex d(cos(th), sin(th));
        const HPComplex w = w0 + d;
        const HPComplex h = exp(zp * w) / (pow(exp(w) - 1L, m) * pow(w, n + 1 - m));
        acc += h * d;
    }
    const HPComplex res = acc / N;
    return (res * pow(w0, n) * exp(-(w0 * zp))).with_precision(z.precision());
}

long default_fourier_terms(long n, long m, mpfr_prec_t target_bits)
{
    const long decay = std::max(1L, n - m + 1);
    for (long K = 1; K < 64; ++K) {
        if (static_cast<double>(decay) * std::log2(static_cast<double>(K + 1)) >= static_cast<double>(target_bits)) {
            return K;
        }
    }
    return 64;
}

std::vector<HPComplex> watson_g_coeffs(const HPComplex &mu, const HPComplex &z, std::size_t K, mpfr_prec_t prec,
                                       int sign)
{
    return detail::watson_coeffs(Family::Bernoulli, mu, z, K, prec, sign);
}

ApproxValue watson_expansion_B(long n, const HPComplex &mu, const HPComplex &z, std::size_t K, mpfr_prec_t prec)
{
    detail::reject_integer_order(mu, "watson_expansion_B");
    return detail::watson_sum(Family::Bernoulli, n, mu, z, K, prec);
}

ApproxValue detail::watson_expansion_B_unchecked(long n, const HPComplex &mu, const HPComplex &z, std::size_t K,
                                                 mpfr_prec_t prec)
{
    return watson_sum(Family::Bernoulli, n, mu, z, K, prec);
}

HPComplex twopoint_function_B(const HPComplex &mu, const HPComplex &z, const HPComplex &w)
{
    return detail::two_point_function(Family::Bernoulli, mu, z, w);
}

TwoPointSeries twopoint_coeffs_B(const HPComplex &mu, const HPComplex &z, std::size_t K, Flavor flavor,
                                 mpfr_prec_t prec)
{
    return detail::two_point_coeffs(Family::Bernoulli, mu, z, K, flavor, prec);
}

HPComplex phi(long k, long N, const HPComplex &mu, Flavor flavor)
{
    return detail::scale_function(Family::Bernoulli, k, N, mu, flavor);
}

ApproxValue twopoint_sum_B(long n, const HPComplex &mu, const HPComplex &z, std::size_t K, Flavor flavor,
                           mpfr_prec_t prec)
{
    return detail::two_point_sum(Family::Bernoulli, n, mu, z, K, flavor, prec);
}

HPComplex twopoint_ratio_check(long n, const HPComplex &mu, long k)
{
    const HPComplex den = mu - (k - n + 1);
    if (den.is_zero()) {
        throw domain_error("twopoint_ratio_check: mu - k + n - 1 = 0 is a pole of the ratio");
    }
    const HPReal pi_p = pi(mu.precision());
    return (mu - (k + 1)) / den * (pi_p * pi_p * 4);
}

} // namespace polyasym

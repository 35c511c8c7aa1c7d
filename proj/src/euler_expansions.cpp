#include <polyasym/euler_expansions.hpp>

#include <polyasym/combinatorics.hpp>
#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>
#include <polyasym/oracle.hpp>

#include "expansions_common.hpp"

namespace polyasym
{

ApproxValue neg_int_leading_E(long n, long m, const HPComplex &z)
{
    return detail::neg_int_leading_generic(Family::Euler, n, m, z);
}

namespace
{

// Weights e_nu = 2^(m-1) C(n+m-1,m-1) B_nu^m(z) C(m-1,nu) (n+m-nu-1)!/(n+m-1)!
std::vector<HPComplex> epsilon_terms(long m, long n, const HPComplex &z)
{
    const mpfr_prec_t p = z.precision();
    const auto B = bernoulli_values(m - 1, HPComplex(m, p), z);
    std::vector<HPComplex> e;
    for (long nu = 0; nu < m; ++nu) {
        const Rational w = Rational(2).pow(m - 1) * binomial(n + m - 1, m - 1) * binomial(m - 1, nu) *
                           factorial(n + m - nu - 1) / factorial(n + m - 1);
        e.push_back(B[static_cast<std::size_t>(nu)] * HPComplex(w, p));
    }
    return e;
}

// q = 2k + 1 (any odd integer): sum e_nu (-q pi i)^nu / (q pi i)^(m-1)
HPComplex epsilon_from_terms(const std::vector<HPComplex> &e, long q)
{
    const mpfr_prec_t p = e.front().precision();
    const HPComplex x = HPComplex::i(p) * pi(p) * q;
    HPComplex r(p);
    for (std::size_t nu = e.size(); nu-- > 0;) {
        r = r * (-x) + e[nu];
    }
    return r / pow(x, static_cast<long>(e.size()) - 1);
}

// 2 n! eps e^{q pi i z} / (q pi i)^(n+1)
HPComplex fourier_term(long n, const std::vector<HPComplex> &e, const HPComplex &z, long q)
{
    const mpfr_prec_t p = z.precision();
    const HPComplex x = HPComplex::i(p) * pi(p) * q;
    return epsilon_from_terms(e, q) * exp(x * z) / pow(x, n + 1) * HPComplex(factorial(n) * 2, p);
}

void check_order(long m, long n)
{
    if (m < 1) {
        throw domain_error("epsilon coefficient: m must be at least 1");
    }
    if (n < 0) {
        throw domain_error("epsilon coefficient: n must be non-negative");
    }
}

} // namespace

ApproxValue fourier_Em(long n, long m, const HPComplex &z, long K)
{
    check_order(m, n);
    if (K < 0) {
        throw domain_error("fourier_Em: K must be non-negative");
    }
    const mpfr_prec_t p = z.precision() + detail::guard_bits;
    const HPComplex zp = z.with_precision(p);
    const auto e = epsilon_terms(m, n, zp);
    HPComplex sum(p);
    for (long k = 0; k <= K; ++k) {
        sum += fourier_term(n, e, zp, 2 * k + 1) + fourier_term(n, e, zp, -2 * k - 1);
    }
    const HPReal next = abs(fourier_term(n, e, zp, 2 * K + 3)) + abs(fourier_term(n, e, zp, -2 * K - 3));
    if (z.is_real()) {
        sum = HPComplex(sum.re());
    }

    ApproxValue out;
    out.method = Method::Fourier;
    out.terms_used = static_cast<std::size_t>(2 * (K + 1));
    out.error_kind = ErrorKind::Absolute;
    const bool convergent = m == 1 && detail::is_real_in_unit_interval(z, n >= 1);
    out.confidence = convergent ? Confidence::Convergent : Confidence::Asymptotic;
    const long decay = n + 1;
    if (decay > 1 && detail::is_real_in_unit_interval(z, true)) {
        out.error_estimate = detail::tail_bound(next, 2.0, 1.0, K, decay);
    } else {
        out.error_estimate = next;
        out.low_confidence = convergent;
    }
    out.error_estimate = out.error_estimate.with_precision(z.precision());
    out.value = sum.with_precision(z.precision());
    return out;
}

ApproxValue fourier_E1(long n, const HPComplex &z, long K)
{
    if (n < 0) {
        throw domain_error("fourier_E1: n must be non-negative");
    }
    if (n == 0 && !detail::is_real_in_unit_interval(HPComplex(z.re()), false)) {
        throw domain_error("fourier_E1: n = 0 requires 0 < Re z < 1");
    }
    return fourier_Em(n, 1, z, K);
}

ApproxValue fourier_Em_leading(long n, long m, const HPComplex &z)
{
    check_order(m, n);
    const mpfr_prec_t p = z.precision() + detail::guard_bits;
    const HPComplex zp = z.with_precision(p);
    const HPReal pi_p = pi(p);
    const auto B = bernoulli_values(m - 1, HPComplex(m, p), zp);
    // 2^(m+1) n! / pi^(n+m) C(n+m-1,m-1) sum_nu B_nu C(m-1,nu)
    //   (n+m-nu-1)!/(n+m-1)! pi^nu sin((z - n/2 - (m-1)/2 - nu/2) pi)
    HPComplex sum(p);
    for (long nu = 0; nu < m; ++nu) {
        const Rational w = binomial(m - 1, nu) * factorial(n + m - nu - 1) / factorial(n + m - 1);
        const HPComplex tau = (zp - HPComplex(Rational(n + m - 1 + nu, 2), p)) * pi_p;
        sum += B[static_cast<std::size_t>(nu)] * HPComplex(w, p) * HPComplex(pow(pi_p, HPReal(nu, p))) * sin(tau);
    }
    const Rational c = Rational(2).pow(m + 1) * factorial(n) * binomial(n + m - 1, m - 1);
    const HPComplex value = sum * HPComplex(c, p) / pow(pi_p, HPReal(n + m, p));

    const auto e = epsilon_terms(m, n, zp);
    ApproxValue out;
    out.method = Method::FourierLeading;
    out.terms_used = 2;
    out.confidence = Confidence::Asymptotic;
    out.error_kind = ErrorKind::Absolute;
    out.error_estimate =
        (abs(fourier_term(n, e, zp, 3)) + abs(fourier_term(n, e, zp, -3))).with_precision(z.precision());
    out.value = value.with_precision(z.precision());
    return out;
}

ApproxValue fourier_E1_leading(long n, const HPComplex &z)
{
    return fourier_Em_leading(n, 1, z);
}

HPComplex epsilon_coeff(long m, long n, const HPComplex &z, long k)
{
    check_order(m, n);
    return epsilon_from_terms(epsilon_terms(m, n, z), 2 * k + 1);
}

HPComplex epsilon_residue(long m, long n, const HPComplex &z, long k)
{
    check_order(m, n);
    const mpfr_prec_t p = z.precision() + detail::guard_bits;
    const HPComplex zp = z.with_precision(p);
    const HPComplex w0 = HPComplex::i(p) * pi(p) * (2 * k + 1);
    // Nearest other singularity is at distance >= pi.
    const long N = static_cast<long>(p) + 16;
    const HPReal step = pi(p) * 2 / N;
    HPComplex acc(p);
    for (long j = 0; j < N; ++j) {
        const HPReal th = step * j;
        const HPComplex d(cos(th), sin(th));
        const HPComplex w = w0 + d;
        const HPComplex h = exp(zp * w) / (pow(exp(w) + 1L, m) * pow(w, n + 1));
        acc += h * d;
    }
    const HPComplex res = acc / N;
    const HPComplex v = res * pow(w0, n + 1) * exp(-(w0 * zp)) * HPComplex(-(Rational(2).pow(m - 1)), p);
    return v.with_precision(z.precision());
}

std::vector<HPComplex> watson_h_coeffs(const HPComplex &mu, const HPComplex &z, std::size_t K, mpfr_prec_t prec,
                                       int sign)
{
    return detail::watson_coeffs(Family::Euler, mu, z, K, prec, sign);
}

ApproxValue watson_expansion_E(long n, const HPComplex &mu, const HPComplex &z, std::size_t K, mpfr_prec_t prec)
{
    detail::reject_integer_order(mu, "watson_expansion_E");
    return detail::watson_sum(Family::Euler, n, mu, z, K, prec);
}

ApproxValue detail::watson_expansion_E_unchecked(long n, const HPComplex &mu, const HPComplex &z, std::size_t K,
                                                 mpfr_prec_t prec)
{
    return watson_sum(Family::Euler, n, mu, z, K, prec);
}

HPComplex twopoint_function_E(const HPComplex &mu, const HPComplex &z, const HPComplex &w)
{
    return detail::two_point_function(Family::Euler, mu, z, w);
}

TwoPointSeries twopoint_coeffs_E(const HPComplex &mu, const HPComplex &z, std::size_t K, Flavor flavor,
                                 mpfr_prec_t prec)
{
    return detail::two_point_coeffs(Family::Euler, mu, z, K, flavor, prec);
}

HPComplex psi(long k, long N, const HPComplex &mu, Flavor flavor)
{
    return detail::scale_function(Family::Euler, k, N, mu, flavor);
}

ApproxValue twopoint_sum_E(long n, const HPComplex &mu, const HPComplex &z, std::size_t K, Flavor flavor,
                           mpfr_prec_t prec)
{
    return detail::two_point_sum(Family::Euler, n, mu, z, K, flavor, prec);
}

HPComplex twopoint_ratio_check_E(long n, const HPComplex &mu, long k)
{
    const HPComplex den = mu - (k + 1 - n);
    if (den.is_zero()) {
        throw domain_error("twopoint_ratio_check_E: mu - k - 1 + n = 0 is a pole of the ratio");
    }
    const HPReal pi_p = pi(mu.precision());
    return (mu - (k + 1)) / den * (pi_p * pi_p);
}

} // namespace polyasym

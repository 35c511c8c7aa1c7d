#ifndef POLYASYM_ORACLE_HPP
#define POLYASYM_ORACLE_HPP

#include <vector>

#include <polyasym/approx_value.hpp>
#include <polyasym/combinatorics.hpp>
#include <polyasym/errors.hpp>
#include <polyasym/power_series.hpp>

namespace polyasym
{

namespace detail
{

// (e^w - 1)/w = sum w^k/(k+1)!, built directly to avoid the 0/0 at w = 0.
template <Field F>
PowerSeries<F> expm1_over_w(const F &like, std::size_t order)
{
    std::vector<F> v;
    v.reserve(order + 1);
    v.push_back(field_one(like));
    for (std::size_t k = 1; k <= order; ++k) {
        v.push_back(v.back() / static_cast<long>(k + 1));
    }
    return PowerSeries<F>(std::move(v));
}

// (e^w + 1)/2
template <Field F>
PowerSeries<F> half_exp_plus_one(const F &like, std::size_t order)
{
    std::vector<F> v;
    v.reserve(order + 1);
    v.push_back(field_one(like));
    F fact = field_one(like);
    for (std::size_t k = 1; k <= order; ++k) {
        fact = fact / static_cast<long>(k);
        v.push_back(fact / 2);
    }
    return PowerSeries<F>(std::move(v));
}

template <Field F>
std::vector<F> scale_by_factorials(const PowerSeries<F> &s)
{
    std::vector<F> out;
    out.reserve(s.order() + 1);
    F fact = field_one(s[0]);
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (k > 0) {
            fact = fact * static_cast<long>(k);
        }
        out.push_back(s[k] * fact);
    }
    return out;
}

} // namespace detail

// B_0^mu(z) .. B_{n_max}^mu(z) from w^mu e^{wz} / (e^w - 1)^mu.
template <Field F>
std::vector<F> bernoulli_values(long n_max, const F &mu, const F &z)
{
    if (n_max < 0) {
        throw domain_error("bernoulli_values: n_max must be non-negative");
    }
    const auto N = static_cast<std::size_t>(n_max);
    const auto gen = series_pow(detail::expm1_over_w(mu, N), -mu) * PowerSeries<F>::exponential(z, N);
    return detail::scale_by_factorials(gen);
}

// E_0^mu(z) .. E_{n_max}^mu(z) from 2^mu e^{wz} / (e^w + 1)^mu.
template <Field F>
std::vector<F> euler_values(long n_max, const F &mu, const F &z)
{
    if (n_max < 0) {
        throw domain_error("euler_values: n_max must be non-negative");
    }
    const auto N = static_cast<std::size_t>(n_max);
    const auto gen = series_pow(detail::half_exp_plus_one(mu, N), -mu) * PowerSeries<F>::exponential(z, N);
    return detail::scale_by_factorials(gen);
}

// Coefficients p_0..p_n of B_n^mu(z) = sum p_i z^i.
template <Field F>
std::vector<F> bernoulli_polynomial(long n, const F &mu)
{
    if (n < 0) {
        throw domain_error("bernoulli_polynomial: negative degree");
    }
    const auto N = static_cast<std::size_t>(n);
    const auto a = series_pow(detail::expm1_over_w(mu, N), -mu);
    // B_n = n! sum_j a_j z^(n-j) / (n-j)!
    std::vector<F> p(N + 1, field_zero(mu));
    for (std::size_t j = 0; j <= N; ++j) {
        const long i = n - static_cast<long>(j);
        p[static_cast<std::size_t>(i)] = a[j] * field_from(factorial(n) / factorial(i), mu);
    }
    return p;
}

template <Field F>
F evaluate_polynomial(const std::vector<F> &p, const F &z)
{
    F r = field_zero(z);
    for (std::size_t i = p.size(); i-- > 0;) {
        r = r * z + p[i];
    }
    return r;
}

// n!/(n+m)! sum_r (-1)^(m-r) C(m,r) (z+r)^(n+m)
template <Field F>
F bernoulli_neg_int(long n, long m, const F &z)
{
    if (n < 0 || m < 0) {
        throw domain_error("bernoulli_neg_int: n and m must be non-negative");
    }
    F sum = field_zero(z);
    for (long r = 0; r <= m; ++r) {
        F term = field_one(z);
        const F base = z + field_from(r, z);
        for (long e = 0; e < n + m; ++e) {
            term = term * base;
        }
        term = term * field_from(binomial(m, r), z);
        sum = ((m - r) % 2 == 0) ? sum + term : sum - term;
    }
    return sum * field_from(factorial(n) / factorial(n + m), z);
}

// 2^(-m) sum_r C(m,r) (z+r)^n
template <Field F>
F euler_neg_int(long n, long m, const F &z)
{
    if (n < 0 || m < 0) {
        throw domain_error("euler_neg_int: n and m must be non-negative");
    }
    F sum = field_zero(z);
    for (long r = 0; r <= m; ++r) {
        F term = field_one(z);
        const F base = z + field_from(r, z);
        for (long e = 0; e < n; ++e) {
            term = term * base;
        }
        sum = sum + term * field_from(binomial(m, r), z);
    }
    return sum * field_from(Rational(1) / Rational(2).pow(m), z);
}

// B_n^{mu+1}(z) = ((mu - n) B_n^mu(z) + n (z - mu) B_{n-1}^mu(z)) / mu
template <Field F>
F bernoulli_raise_order(long n, const F &mu, const F &z)
{
    if (n < 1) {
        throw domain_error("bernoulli_raise_order: n must be at least 1");
    }
    if (is_zero(mu)) {
        throw domain_error("bernoulli_raise_order: mu = 0");
    }
    const auto b = bernoulli_values(n, mu, z);
    const auto nn = static_cast<std::size_t>(n);
    return ((mu - field_from(n, mu)) * b[nn] + (z - mu) * b[nn - 1] * n) / mu;
}

// d/dz B_n^mu(z) = n B_{n-1}^mu(z): the derivative is taken on the exact
// polynomial in z and compared at z with the value path of the oracle.
template <Field F>
bool bernoulli_derivative_check(long n, const F &mu, const F &z)
{
    if (n < 1) {
        throw domain_error("bernoulli_derivative_check: n must be at least 1");
    }
    const auto p = bernoulli_polynomial(n, mu);
    const auto q = bernoulli_polynomial(n - 1, mu);
    for (long i = 0; i < n; ++i) {
        const auto lhs = p[static_cast<std::size_t>(i + 1)] * (i + 1);
        const auto rhs = q[static_cast<std::size_t>(i)] * n;
        if (!is_zero(lhs - rhs)) {
            return false;
        }
    }
    std::vector<F> dp;
    for (long i = 1; i <= n; ++i) {
        dp.push_back(p[static_cast<std::size_t>(i)] * i);
    }
    const auto values = bernoulli_values(n - 1, mu, z);
    return is_zero(evaluate_polynomial(dp, z) - values.back() * n);
}

// (1 - e^{-w0})^m n!/(n+m)! (z+m)^(n+m), w0 = (n+m)/(z+m). The relative error
// estimate (m+1) e^{-Re w0} is flagged low-confidence unless it is below 1.
ApproxValue saddle_estimate_neg_int(long n, long m, const HPComplex &z);

} // namespace polyasym

#endif

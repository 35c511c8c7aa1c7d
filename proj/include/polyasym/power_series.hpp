#ifndef POLYASYM_POWER_SERIES_HPP
#define POLYASYM_POWER_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <polyasym/errors.hpp>
#include <polyasym/field.hpp>

namespace polyasym
{

// Truncated power series c_0 + c_1 s + ... + c_N s^N over a coefficient
// field. Binary operations truncate to the smaller of the operand orders.
template <Field F>
class PowerSeries
{
public:
    explicit PowerSeries(std::vector<F> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) {
            throw domain_error("PowerSeries: empty coefficient list");
        }
    }

    static PowerSeries constant(const F &c, std::size_t order)
    {
        std::vector<F> v(order + 1, field_zero(c));
        v[0] = c;
        return PowerSeries(std::move(v));
    }

    // The identity series s (requires order >= 1 to be meaningful).
    static PowerSeries variable(const F &like, std::size_t order)
    {
        std::vector<F> v(order + 1, field_zero(like));
        if (order >= 1) {
            v[1] = field_one(like);
        }
        return PowerSeries(std::move(v));
    }

    // sum_k (a s)^k / k!
    static PowerSeries exponential(const F &a, std::size_t order)
    {
        std::vector<F> v;
        v.reserve(order + 1);
        v.push_back(field_one(a));
        for (std::size_t k = 1; k <= order; ++k) {
            v.push_back(v.back() * a / static_cast<long>(k));
        }
        return PowerSeries(std::move(v));
    }

    std::size_t order() const { return c_.size() - 1; }
    const F &operator[](std::size_t k) const { return c_[k]; }
    std::span<const F> coeffs() const { return c_; }

    PowerSeries truncated(std::size_t order) const
    {
        std::vector<F> v(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
        return PowerSeries(std::move(v));
    }

    // Coefficients shifted down by one (division by s); the constant term is
    // discarded and the order drops by one.
    PowerSeries divided_by_variable() const
    {
        if (order() == 0) {
            throw domain_error("PowerSeries: cannot divide an order-0 series by s");
        }
        return PowerSeries(std::vector<F>(c_.begin() + 1, c_.end()));
    }

    // Horner evaluation of the truncated polynomial.
    F evaluate(const F &x) const
    {
        F r = c_.back();
        for (std::size_t k = c_.size() - 1; k-- > 0;) {
            r = r * x + c_[k];
        }
        return r;
    }

    friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<F> v;
        v.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            v.push_back(a.c_[k] + b.c_[k]);
        }
        return PowerSeries(std::move(v));
    }

    friend PowerSeries operator-(const PowerSeries &a, const PowerSeries &b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<F> v;
        v.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            v.push_back(a.c_[k] - b.c_[k]);
        }
        return PowerSeries(std::move(v));
    }

    friend PowerSeries operator*(const PowerSeries &a, const F &s)
    {
        std::vector<F> v;
        v.reserve(a.c_.size());
        for (const auto &c : a.c_) {
            v.push_back(c * s);
        }
        return PowerSeries(std::move(v));
    }

    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<F> v;
        v.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            F acc = a.c_[0] * b.c_[k];
            for (std::size_t j = 1; j <= k; ++j) {
                acc = acc + a.c_[j] * b.c_[k - j];
            }
            v.push_back(std::move(acc));
        }
        return PowerSeries(std::move(v));
    }

    friend bool operator==(const PowerSeries &a, const PowerSeries &b) { return a.c_ == b.c_; }

private:
    std::vector<F> c_;
};

template <Field F>
PowerSeries<F> series_mul(const PowerSeries<F> &a, const PowerSeries<F> &b)
{
    return a * b;
}

// 1/a; requires a(0) != 0.
template <Field F>
PowerSeries<F> series_inverse(const PowerSeries<F> &a)
{
    if (is_zero(a[0])) {
        throw domain_error("series_inverse: zero constant term");
    }
    const F inv0 = field_one(a[0]) / a[0];
    std::vector<F> v;
    v.reserve(a.order() + 1);
    v.push_back(inv0);
    for (std::size_t k = 1; k <= a.order(); ++k) {
        F acc = a[1] * v[k - 1];
        for (std::size_t j = 2; j <= k; ++j) {
            acc = acc + a[j] * v[k - j];
        }
        v.push_back(-(acc * inv0));
    }
    return PowerSeries<F>(std::move(v));
}

template <Field F>
PowerSeries<F> series_derivative(const PowerSeries<F> &a)
{
    if (a.order() == 0) {
        return PowerSeries<F>::constant(field_zero(a[0]), 0);
    }
    std::vector<F> v;
    v.reserve(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        v.push_back(a[k] * static_cast<long>(k));
    }
    return PowerSeries<F>(std::move(v));
}

// log(a) with log(a)(0) = 0; requires a(0) = 1.
//   k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
template <Field F>
PowerSeries<F> series_log(const PowerSeries<F> &a)
{
    if (!is_zero(a[0] - field_one(a[0]))) {
        throw domain_error("series_log: constant term must be 1");
    }
    std::vector<F> b;
    b.reserve(a.order() + 1);
    b.push_back(field_zero(a[0]));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        F acc = a[k] * static_cast<long>(k);
        for (std::size_t j = 1; j < k; ++j) {
            acc = acc - b[j] * a[k - j] * static_cast<long>(j);
        }
        b.push_back(acc / static_cast<long>(k));
    }
    return PowerSeries<F>(std::move(b));
}

// exp(a); requires a(0) = 0.
//   k e_k = sum_{j=1}^{k} j a_j e_{k-j}
template <Field F>
PowerSeries<F> series_exp(const PowerSeries<F> &a)
{
    if (!is_zero(a[0])) {
        throw domain_error("series_exp: constant term must be 0");
    }
    std::vector<F> e;
    e.reserve(a.order() + 1);
    e.push_back(field_one(a[0]));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        F acc = a[1] * e[k - 1];
        for (std::size_t j = 2; j <= k; ++j) {
            acc = acc + a[j] * e[k - j] * static_cast<long>(j);
        }
        e.push_back(acc / static_cast<long>(k));
    }
    return PowerSeries<F>(std::move(e));
}

namespace detail
{

// a / a(0) with the constant term set to exactly one (rounding in the
// floating field would otherwise leave it a few ulps away).
template <Field F>
PowerSeries<F> normalized(const PowerSeries<F> &a)
{
    const F inv0 = field_one(a[0]) / a[0];
    std::vector<F> v;
    v.reserve(a.order() + 1);
    v.push_back(field_one(a[0]));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        v.push_back(a[k] * inv0);
    }
    return PowerSeries<F>(std::move(v));
}

inline std::optional<Rational> rational_power(const Rational &c, const Rational &mu)
{
    if (c == Rational(1)) {
        return Rational(1);
    }
    if (auto m = mu.to_long()) {
        return c.pow(*m);
    }
    return std::nullopt;
}

inline std::optional<HPComplex> rational_power(const HPComplex &c, const HPComplex &mu)
{
    return pow(c, mu);
}

} // namespace detail

// a^mu = c0^mu exp(mu log(a / c0)), principal branch for c0^mu. Over the
// rationals the constant c0^mu must itself be rational: c0 = 1 or integer mu.
template <Field F>
PowerSeries<F> series_pow(const PowerSeries<F> &a, const F &mu)
{
    if (is_zero(a[0])) {
        throw domain_error("series_pow: zero constant term");
    }
    if (is_zero(mu)) {
        return PowerSeries<F>::constant(field_one(a[0]), a.order());
    }
    auto c0mu = detail::rational_power(a[0], mu);
    if (!c0mu) {
        throw domain_error("series_pow: constant term has no rational power; use the HPComplex field");
    }
    return series_exp(series_log(detail::normalized(a)) * mu) * *c0mu;
}

namespace detail
{

// The log/exp route can lose a few bits per order when the normalized
// coefficients exceed one; powers are formed with this many extra bits.
inline constexpr mpfr_prec_t series_pow_guard_bits = 32;

inline PowerSeries<HPComplex> with_precision(const PowerSeries<HPComplex> &a, mpfr_prec_t prec)
{
    std::vector<HPComplex> v;
    v.reserve(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        v.push_back(a[k].with_precision(prec));
    }
    return PowerSeries<HPComplex>(std::move(v));
}

} // namespace detail

inline PowerSeries<HPComplex> series_pow(const PowerSeries<HPComplex> &a, const HPComplex &mu)
{
    const mpfr_prec_t p = std::max(a[0].precision(), mu.precision());
    const mpfr_prec_t w = p + detail::series_pow_guard_bits;
    const auto r = series_pow<HPComplex>(detail::with_precision(a, w), mu.with_precision(w));
    return detail::with_precision(r, p);
}

// a^mu with an explicitly chosen logarithm of the constant term, for
// functions continued analytically onto a non-principal branch.
inline PowerSeries<HPComplex> series_pow(const PowerSeries<HPComplex> &a, const HPComplex &mu,
                                         const HPComplex &log_c0)
{
    if (is_zero(a[0])) {
        throw domain_error("series_pow: zero constant term");
    }
    const mpfr_prec_t p = std::max(a[0].precision(), mu.precision());
    const mpfr_prec_t w = p + detail::series_pow_guard_bits;
    const HPComplex mu_w = mu.with_precision(w);
    const auto r = series_exp(series_log(detail::normalized(detail::with_precision(a, w))) * mu_w) *
                   exp(mu_w * log_c0.with_precision(w));
    return detail::with_precision(r, p);
}

// outer(inner(s)), truncated to the outer order; requires inner(0) = 0 and
// inner order >= outer order.
template <Field F>
PowerSeries<F> series_compose(const PowerSeries<F> &outer, const PowerSeries<F> &inner)
{
    if (!is_zero(inner[0])) {
        throw domain_error("series_compose: inner series must vanish at 0");
    }
    if (inner.order() < outer.order()) {
        throw domain_error("series_compose: inner order below outer order");
    }
    const std::size_t n = outer.order();
    const PowerSeries<F> q = inner.truncated(n);
    PowerSeries<F> r = PowerSeries<F>::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        r = r * q;
        std::vector<F> v(r.coeffs().begin(), r.coeffs().end());
        v[0] = v[0] + outer[k];
        r = PowerSeries<F>(std::move(v));
    }
    return r;
}

} // namespace polyasym

#endif

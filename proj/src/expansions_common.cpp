#include "expansions_common.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <polyasym/combinatorics.hpp>
#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>
#include <polyasym/gamma.hpp>
#include <polyasym/oracle.hpp>

namespace polyasym::detail
{

mpfr_prec_t common_precision(const HPComplex &a, const HPComplex &b)
{
    return std::max(a.precision(), b.precision());
}

bool is_real_in_unit_interval(const HPComplex &z, bool closed)
{
    if (!z.is_real()) {
        return false;
    }
    const int lo = z.re().sign();
    const auto hi = z.re() <=> HPReal(1L, z.precision());
    if (closed) {
        return lo >= 0 && hi != std::partial_ordering::greater;
    }
    return lo > 0 && hi == std::partial_ordering::less;
}

HPReal tail_bound(const HPReal &first_omitted, double a, double b, long K, long p)
{
    const double x0 = a * static_cast<double>(K + 1) + b;
    const double factor = 1.0 + x0 / (a * static_cast<double>(p - 1));
    return first_omitted * HPReal(factor, first_omitted.precision());
}

ApproxValue neg_int_leading_generic(Family family, long n, long m, const HPComplex &z)
{
    if (n < 0 || m < 0) {
        throw domain_error("negative-order leading form: n and m must be non-negative");
    }
    const mpfr_prec_t p = z.precision() + guard_bits;
    const HPComplex zp = z.with_precision(p);
    ApproxValue out;
    out.method = Method::NegIntLeading;
    out.error_kind = ErrorKind::Relative;
    if (m == 0) {
        out.value = pow(zp, n).with_precision(z.precision());
        out.error_estimate = HPReal(z.precision());
        out.confidence = Confidence::Exact;
        out.terms_used = 1;
        return out;
    }

    const bool bern = family == Family::Bernoulli;
    const long power = bern ? n + m : n;
    const Rational scale = bern ? factorial(n) / factorial(n + m) : Rational(1) / Rational(2).pow(m);
    std::vector<HPComplex> terms;
    for (long r = 0; r <= m; ++r) {
        HPComplex t = pow(zp + r, power) * HPComplex(binomial(m, r) * scale, p);
        if (bern && (m - r) % 2 != 0) {
            t = -t;
        }
        terms.push_back(t);
    }

    const RegionCase region = region_classify(m, z);
    std::vector<bool> leading(static_cast<std::size_t>(m + 1), false);
    if (region != RegionCase::LowerDominant) {
        leading[static_cast<std::size_t>(m)] = true;
    }
    if (region != RegionCase::UpperDominant) {
        leading[0] = true;
    }
    HPComplex value(p);
    HPReal leading_mag(p);
    HPReal rest(p);
    for (long r = 0; r <= m; ++r) {
        const auto idx = static_cast<std::size_t>(r);
        if (leading[idx]) {
            value += terms[idx];
            leading_mag += abs(terms[idx]);
        } else {
            rest += abs(terms[idx]);
        }
    }
    out.terms_used = region == RegionCase::Boundary ? 2 : 1;
    out.confidence = Confidence::Asymptotic;
    const HPReal vmag = abs(value);
    // |exact| >= |value| - rest, so rest / (|value| - rest) bounds the relative
    // error. The two boundary terms can cancel; fall back to absolute then.
    if (vmag.is_zero() || vmag < ldexp(leading_mag, -static_cast<long>(z.precision()) / 2) || !(rest < vmag)) {
        out.error_kind = ErrorKind::Absolute;
        out.error_estimate = rest.with_precision(z.precision());
    } else {
        out.error_estimate = (rest / (vmag - rest)).with_precision(z.precision());
    }
    out.value = value.with_precision(z.precision());
    return out;
}

void reject_integer_order(const HPComplex &mu, const char *what)
{
    if (is_integer_valued(mu)) {
        throw domain_error(std::string(what) +
                           ": integer order mu is not supported; use method fourier (mu = 1, 2, ...) or "
                           "finite-sum/leading (mu = 0, -1, -2, ...)");
    }
}

std::vector<HPComplex> watson_coeffs(Family family, const HPComplex &mu, const HPComplex &z, std::size_t K,
                                     mpfr_prec_t prec, int sign)
{
    if (sign != 1 && sign != -1) {
        throw domain_error("watson coefficients: sign must be +1 or -1");
    }
    using Series = PowerSeries<HPComplex>;
    const HPComplex one(1L, prec);
    const HPComplex mu_p = mu.with_precision(prec);
    const HPComplex z_p = z.with_precision(prec);
    const std::size_t N = K;

    // e^s - 1
    std::vector<HPComplex> em1(N + 1, HPComplex(prec));
    HPComplex fact = one;
    for (std::size_t k = 1; k <= N; ++k) {
        fact = fact / static_cast<long>(k);
        em1[k] = fact;
    }
    const Series es_minus_1(std::move(em1));
    const HPComplex c = HPComplex::i(prec) * pi(prec) * (family == Family::Bernoulli ? 2L * sign : 1L * sign);
    const Series u = es_minus_1 * c;
    const Series A = expm1_over_w(one, N);
    const Series Eu = series_compose(expm1_over_w(one, N), u);
    const Series power = series_pow(A * Eu, -mu_p);
    Series exponent = u * z_p;
    if (family == Family::Bernoulli) {
        exponent = exponent + Series::variable(one, N) * mu_p;
    }
    const Series g = power * series_exp(exponent);
    return {g.coeffs().begin(), g.coeffs().end()};
}

ApproxValue watson_sum(Family family, long n, const HPComplex &mu, const HPComplex &z, std::size_t K,
                       mpfr_prec_t prec)
{
    if (n < 1) {
        throw domain_error("watson expansion: n must be at least 1");
    }
    const mpfr_prec_t p = prec + guard_bits;
    const HPComplex mu_p = mu.with_precision(p);
    const HPComplex z_p = z.with_precision(p);
    const ExpansionParams params(family, n, mu_p, z_p);
    const auto gp = watson_coeffs(family, mu_p, z_p, K + 1, p, 1);
    const auto gm = watson_coeffs(family, mu_p, z_p, K + 1, p, -1);

    const HPComplex one(1L, p);
    const HPComplex one_minus_mu = one - mu_p;
    const HPComplex nn(n, p);
    HPComplex Sp(p), Sm(p);
    HPComplex poch = one;
    HPComplex npow = one;
    for (std::size_t k = 0; k <= K; ++k) {
        Sp += poch * gp[k] / npow;
        Sm += poch * gm[k] / npow;
        poch *= one_minus_mu + static_cast<long>(k);
        npow *= nn;
    }
    const HPComplex next_p = poch * gp[K + 1] / npow;
    const HPComplex next_m = poch * gm[K + 1] / npow;

    const HPReal pi_p = pi(p);
    const HPComplex log_n = HPComplex(log(HPReal(n, p)));
    HPComplex log_pref = lgamma(HPComplex(n + 1, p)) + (mu_p - one) * log_n - lgamma(mu_p);
    if (family == Family::Bernoulli) {
        log_pref -= HPComplex(log(pi_p * 2) * n);
    } else {
        log_pref += mu_p * HPComplex(log(HPReal(2L, p)) - log(pi_p)) - HPComplex(log(pi_p) * n);
    }
    const HPComplex pref = exp(log_pref);
    const HPComplex i = HPComplex::i(p);
    const HPComplex ep = exp(i * params.chi);
    const HPComplex em = exp(-(i * params.chi));

    ApproxValue out;
    out.method = Method::Watson;
    out.terms_used = K + 1;
    out.confidence = Confidence::Asymptotic;
    out.error_kind = ErrorKind::Absolute;
    out.value = (pref * (ep * Sp + em * Sm)).with_precision(prec);
    out.error_estimate = (abs(pref) * (abs(ep * next_p) + abs(em * next_m))).with_precision(prec);
    return out;
}

namespace
{

// Continuation helpers: the mu-th power of P(w) (Bernoulli) or Q(w) (Euler),
// whose logarithm is continued from w = 0.
std::complex<double> base_double(Family family, std::complex<double> w)
{
    constexpr double pi_d = std::numbers::pi;
    if (family == Family::Bernoulli) {
        if (std::abs(w) < 1e-8) {
            return {4 * pi_d * pi_d, 0.0};
        }
        return (w * w + 4 * pi_d * pi_d) * w / (std::exp(w) - 1.0);
    }
    return (w * w + pi_d * pi_d) / (2 * pi_d * (std::exp(w) + 1.0));
}

HPComplex log_prefactor(Family family, const HPComplex &mu, mpfr_prec_t p)
{
    // 2^(-3mu) pi^(-2mu) for the Bernoulli function; 1 for the Euler one.
    if (family == Family::Euler) {
        return HPComplex(p);
    }
    const HPReal l = log(HPReal(2L, p)) * 3 + log(pi(p)) * 2;
    return -(mu * HPComplex(l));
}

} // namespace

HPComplex two_point_function(Family family, const HPComplex &mu, const HPComplex &z, const HPComplex &w)
{
    const mpfr_prec_t p = std::max(common_precision(mu, z), w.precision());
    const HPReal pi_p = pi(p);
    const HPComplex wp = w.with_precision(p);
    HPComplex base(p);
    if (family == Family::Bernoulli) {
        const HPComplex q = wp * wp + HPComplex(pi_p * pi_p * 4);
        if (wp.is_zero()) {
            base = HPComplex(pi_p * pi_p * 4);
        } else {
            const HPComplex d = exp(wp) - 1L;
            if (d.is_zero() || q.is_zero()) {
                throw domain_error("two-point function: evaluate at the expansion points via local series");
            }
            base = q * wp / d;
        }
    } else {
        const HPComplex d = exp(wp) + 1L;
        const HPComplex q = wp * wp + HPComplex(pi_p * pi_p);
        if (d.is_zero() || q.is_zero()) {
            throw domain_error("two-point function: evaluate at the expansion points via local series");
        }
        base = q / (d * pi_p * 2);
    }
    const HPReal theta = continued_arg([family](std::complex<double> x) { return base_double(family, x); },
                                       w.to_complex(), base);
    const HPComplex log_base(log(abs(base)), theta);
    return exp(log_prefactor(family, mu.with_precision(p), p) + mu.with_precision(p) * log_base +
               z.with_precision(p) * wp);
}

TwoPointSeries two_point_coeffs(Family family, const HPComplex &mu, const HPComplex &z, std::size_t K,
                                Flavor flavor, mpfr_prec_t prec)
{
    using Series = PowerSeries<HPComplex>;
    const HPComplex mu_p = mu.with_precision(prec);
    const HPComplex z_p = z.with_precision(prec);
    const HPReal pi_p = pi(prec);
    const HPComplex lpref = log_prefactor(family, mu_p, prec);

    LocalSeriesFn local = [&](const HPComplex &w0, std::size_t order) {
        const HPComplex one(1L, prec);
        // (w0 + t)^2 + c^2 = t (2 w0 + t) and e^{w0 + t} = +-e^t at the two
        // points, so the removable factors cancel against (e^t - 1)/t.
        std::vector<HPComplex> lin(order + 1, HPComplex(prec));
        lin[0] = w0 * 2;
        lin[1] = one;
        Series base = Series(std::move(lin)) * series_inverse(expm1_over_w(one, order));
        if (family == Family::Bernoulli) {
            std::vector<HPComplex> w(order + 1, HPComplex(prec));
            w[0] = w0;
            w[1] = one;
            base = base * Series(std::move(w));
        } else {
            base = base * HPComplex(-(HPReal(1L, prec) / (pi_p * 2)));
        }
        const HPComplex c0 = base[0];
        const HPReal theta = continued_arg([family](std::complex<double> x) { return base_double(family, x); },
                                           w0.to_complex(), c0);
        const HPComplex log_c0(log(abs(c0)), theta);
        const HPComplex scale = exp(lpref + z_p * w0);
        return series_pow(base, mu_p, log_c0) * Series::exponential(z_p, order) * scale;
    };
    const HPComplex c(family == Family::Bernoulli ? pi_p * 2 : pi_p);
    return two_point_expand(local, c, flavor, K, prec);
}

HPComplex scale_function(Family family, long k, long N, const HPComplex &mu, Flavor flavor)
{
    const mpfr_prec_t p = mu.precision();
    if (N < 0 || k < 0) {
        throw domain_error("scale function: negative index");
    }
    if (N % 2 != 0) {
        return HPComplex(p);
    }
    const long h = N / 2;
    const HPReal c = family == Family::Bernoulli ? pi(p) * 2 : pi(p);
    const HPComplex log_c(log(c));
    const HPComplex mu_k = mu - k;
    if (flavor == Flavor::Standard) {
        // (-1)^h c^(2k - 2mu - 2h) (mu-k)_h / h!
        const HPComplex e = HPComplex(2 * k - 2 * h, p) - mu * 2;
        HPComplex v = exp(e * log_c) * pochhammer(mu_k, h) / HPComplex(factorial(h), p);
        return h % 2 == 0 ? v : -v;
    }
    // (-1)^(h+k) c^(-2mu - 2h) (mu-k)_(h+k) / (h+k)!
    const HPComplex e = HPComplex(-2 * h, p) - mu * 2;
    HPComplex v = exp(e * log_c) * pochhammer(mu_k, h + k) / HPComplex(factorial(h + k), p);
    return (h + k) % 2 == 0 ? v : -v;
}

ApproxValue two_point_sum(Family family, long n, const HPComplex &mu, const HPComplex &z, std::size_t K,
                          Flavor flavor, mpfr_prec_t prec)
{
    if (n < 0) {
        throw domain_error("two-point sum: n must be non-negative");
    }
    std::size_t K_eff = K;
    bool terminated = false;
    if (is_integer_valued(mu)) {
        if (flavor == Flavor::Standard) {
            throw domain_error("two-point sum: the standard flavor needs a non-integer mu (the scale functions "
                               "vanish below k = n + mu); use twopoint-tilde for mu = 1, 2, ...");
        }
        const long m = std::lround(mu.re().to_double());
        if (m <= 0) {
            throw domain_error("two-point sum: all tilde terms vanish for mu = 0, -1, -2, ...; use finite-sum");
        }
        if (K >= static_cast<std::size_t>(m - 1)) {
            K_eff = static_cast<std::size_t>(m - 1);
            terminated = true;
        }
    }
    const mpfr_prec_t p = prec + guard_bits;
    const HPComplex mu_p = mu.with_precision(p);
    const TwoPointSeries coeffs = two_point_coeffs(family, mu_p, z, terminated ? K_eff : K_eff + 1, flavor, p);

    const HPReal pi_p = pi(p);
    HPComplex log_pref = lgamma(HPComplex(n + 1, p));
    if (family == Family::Bernoulli) {
        log_pref += mu_p * HPComplex(log(HPReal(2L, p)) * 3 + log(pi_p) * 2);
    } else {
        log_pref += mu_p * HPComplex(log(pi_p * 4));
    }
    const HPComplex pref = exp(log_pref);

    auto term = [&](std::size_t k) {
        const long kk = static_cast<long>(k);
        HPComplex t = coeffs.a[k] * scale_function(family, kk, n, mu_p, flavor);
        if (n >= 1) {
            t += coeffs.b[k] * scale_function(family, kk, n - 1, mu_p, flavor);
        }
        return t;
    };
    HPComplex sum(p);
    for (std::size_t k = 0; k <= K_eff; ++k) {
        sum += term(k);
    }

    ApproxValue out;
    out.method = flavor == Flavor::Standard ? Method::TwoPoint : Method::TwoPointTilde;
    out.terms_used = K_eff + 1;
    out.error_kind = ErrorKind::Absolute;
    out.confidence = flavor == Flavor::Standard ? Confidence::Convergent : Confidence::Asymptotic;
    const HPComplex value = pref * sum;
    if (terminated) {
        // Only the discarded singularities remain; they are smaller by the
        // ratio of distances of the next singular points.
        const HPReal ratio = HPReal(1L, p) / (family == Family::Bernoulli ? 2L : 3L);
        out.error_estimate = (abs(value) * pow(ratio, HPReal(n, p))).with_precision(prec);
    } else {
        out.error_estimate = abs(pref * term(K_eff + 1)).with_precision(prec);
    }
    out.value = value.with_precision(prec);
    return out;
}

} // namespace polyasym::detail

#include <polyasym/gamma.hpp>

#include <cmath>

#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>

namespace polyasym
{

namespace
{

bool is_pole(const HPComplex &z)
{
    return is_integer_valued(z) && z.re().sign() <= 0 && z.re() < HPReal(0.5, z.precision());
}

} // namespace

HPComplex lgamma(const HPComplex &z)
{
    if (is_pole(z)) {
        throw domain_error("Gamma: pole at non-positive integer " + z.re().to_string(6));
    }
    const mpfr_prec_t p = z.precision() + 16;
    HPComplex w = z.with_precision(p);

    // Stirling remainder after K terms behaves like (2K)!/(2 pi |w|)^(2K);
    // |w| >= p/2 makes the smallest term far below 2^-p.
    const double threshold = std::max(10.0, static_cast<double>(p) / 2.0);
    HPComplex shift_log(p);
    const double re = w.re().to_double();
    if (re < threshold || abs(w).to_double() < threshold) {
        const long m = static_cast<long>(std::ceil(threshold - re)) + 1;
        for (long j = 0; j < m; ++j) {
            shift_log += log(w);
            w = w + 1L;
        }
    }

    const HPComplex half(Rational(1, 2), p);
    HPComplex result = (w - half) * log(w) - w + HPComplex(log(pi(p) * 2) / 2);
    const HPComplex w2 = w * w;
    HPComplex wpow = w; // w^(2k-1)
    const HPReal tol = ldexp(HPReal(1L, p), -static_cast<long>(p) - 8);
    HPReal last(p);
    for (unsigned k = 1; k < 4 * static_cast<unsigned>(p); ++k) {
        const Rational coef = bernoulli_number(2 * k) / Rational(static_cast<long>(2 * k) * (2 * k - 1));
        HPComplex term = HPComplex(coef, p) / wpow;
        const HPReal mag = abs(term);
        if (k > 1 && mag > last) {
            break;
        }
        result += term;
        if (mag < tol * abs(result)) {
            break;
        }
        last = mag;
        wpow *= w2;
    }
    return (result - shift_log).with_precision(z.precision());
}

HPComplex gamma(const HPComplex &z)
{
    return exp(lgamma(z));
}

HPComplex rgamma(const HPComplex &z)
{
    if (is_pole(z)) {
        return HPComplex(z.precision());
    }
    return exp(-lgamma(z));
}

} // namespace polyasym

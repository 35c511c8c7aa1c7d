#include <polyasym/two_point.hpp>

#include <cmath>
#include <numbers>

#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>

namespace polyasym
{

HPComplex TwoPointSeries::evaluate(const HPComplex &w, std::size_t terms) const
{
    const std::size_t n = std::min(terms, size());
    const HPComplex w2 = w * w;
    HPComplex q = w2 + c * c;
    if (flavor == Flavor::Tilde) {
        q /= w2;
    }
    HPComplex acc(w.precision());
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * q + a[k] + w * b[k];
    }
    return acc;
}

namespace
{

using Series = PowerSeries<HPComplex>;

// One reduction step on the local series F(t) = f_j(w0 + t).
// `other` is the second factor of w^2 + c^2 expressed in t: 2 w0 + t.
Series reduce(const Series &F, const HPComplex &w0, const HPComplex &a, const HPComplex &b, Flavor flavor)
{
    const std::size_t N = F.order();
    std::vector<HPComplex> g(F.coeffs().begin(), F.coeffs().end());
    g[0] = g[0] - a - w0 * b;
    if (N >= 1) {
        g[1] = g[1] - b;
    }
    Series G(std::move(g));
    G = G.divided_by_variable();
    const std::size_t M = G.order();
    std::vector<HPComplex> other(M + 1, field_zero(w0));
    other[0] = w0 * 2;
    if (M >= 1) {
        other[1] = field_one(w0);
    }
    G = G * series_inverse(Series(std::move(other)));
    if (flavor == Flavor::Tilde) {
        std::vector<HPComplex> sq(M + 1, field_zero(w0));
        sq[0] = w0 * w0;
        if (M >= 1) {
            sq[1] = w0 * 2;
        }
        if (M >= 2) {
            sq[2] = field_one(w0);
        }
        G = G * Series(std::move(sq));
    }
    return G;
}

} // namespace

TwoPointSeries two_point_expand(const LocalSeriesFn &f, const HPComplex &c, Flavor flavor, std::size_t K,
                                mpfr_prec_t prec)
{
    const HPComplex cc = c.with_precision(prec);
    const HPComplex ic = HPComplex::i(prec) * cc;
    const HPComplex mic = -ic;
    const std::size_t order = K + 2;
    Series Fp = f(ic, order);
    Series Fm = f(mic, order);
    if (Fp.order() < order || Fm.order() < order) {
        throw domain_error("two_point_expand: local series of insufficient order");
    }

    TwoPointSeries out;
    out.c = cc;
    out.flavor = flavor;
    const HPComplex two_ic = ic * 2;
    for (std::size_t j = 0; j <= K; ++j) {
        const HPComplex a = (Fp[0] + Fm[0]) / 2;
        const HPComplex b = (Fp[0] - Fm[0]) / two_ic;
        out.a.push_back(a);
        out.b.push_back(b);
        if (j == K) {
            break;
        }
        Fp = reduce(Fp, ic, a, b, flavor);
        Fm = reduce(Fm, mic, a, b, flavor);
    }
    return out;
}

HPReal continued_arg(const std::function<std::complex<double>(std::complex<double>)> &h, std::complex<double> w0,
                     const HPComplex &exact_at_end)
{
    constexpr int steps = 256;
    constexpr double t_end = 1.0 - 1e-6;
    double theta = std::arg(h(std::complex<double>(0.0, 0.0)));
    for (int s = 1; s <= steps; ++s) {
        const double t = t_end * s / steps;
        const double next = std::arg(h(w0 * t));
        double d = next - std::remainder(theta, 2 * std::numbers::pi);
        d = std::remainder(d, 2 * std::numbers::pi);
        theta += d;
    }
    const mpfr_prec_t p = exact_at_end.precision();
    const HPReal principal = arg(exact_at_end);
    const HPReal two_pi = pi(p) * 2;
    const double turns = std::round((theta - principal.to_double()) / (2 * std::numbers::pi));
    return principal + two_pi * static_cast<long>(turns);
}

} // namespace polyasym

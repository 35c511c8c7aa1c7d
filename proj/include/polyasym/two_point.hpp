#ifndef POLYASYM_TWO_POINT_HPP
#define POLYASYM_TWO_POINT_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include <polyasym/hp_complex.hpp>
#include <polyasym/power_series.hpp>

namespace polyasym
{

enum class Flavor
{
    Standard, // sum (a_k + w b_k) (w^2 + c^2)^k
    Tilde     // sum (a_k + w b_k) ((w^2 + c^2) / w^2)^k
};

struct TwoPointSeries
{
    std::vector<HPComplex> a;
    std::vector<HPComplex> b;
    HPComplex c;
    Flavor flavor = Flavor::Standard;

    std::size_t size() const { return a.size(); }

    // Resummation of the first `terms` pairs at w (all pairs when terms
    // exceeds the stored count).
    HPComplex evaluate(const HPComplex &w, std::size_t terms) const;
    HPComplex evaluate(const HPComplex &w) const { return evaluate(w, size()); }
};

// Taylor coefficients of f(w0 + t) in t up to the given order.
using LocalSeriesFn = std::function<PowerSeries<HPComplex>(const HPComplex &w0, std::size_t order)>;

// Pairs (a_0, b_0) .. (a_K, b_K) of f about the points +ic and -ic. Each step
// reads f_j(+-ic) off local Taylor series and forms
//   f_{j+1} = (f_j - a_j - w b_j) / (w^2 + c^2)         (Standard)
//   f_{j+1} = w^2 (f_j - a_j - w b_j) / (w^2 + c^2)     (Tilde)
// directly on those local series.
TwoPointSeries two_point_expand(const LocalSeriesFn &f, const HPComplex &c, Flavor flavor, std::size_t K,
                                mpfr_prec_t prec);

// Argument of h(w0), continued from the principal argument of h(0) along the
// segment [0, w0]. The path is sampled in double precision and stops short of
// w0, so h may have a removable singularity there. Returns the branch of
// arg h(w0) closest to the continued value of `exact_at_end`'s argument.
HPReal continued_arg(const std::function<std::complex<double>(std::complex<double>)> &h,
                     std::complex<double> w0, const HPComplex &exact_at_end);

} // namespace polyasym

#endif

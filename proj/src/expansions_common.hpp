#ifndef POLYASYM_SRC_EXPANSIONS_COMMON_HPP
#define POLYASYM_SRC_EXPANSIONS_COMMON_HPP

#include <cstddef>
#include <vector>

#include <polyasym/approx_value.hpp>
#include <polyasym/bernoulli_expansions.hpp>
#include <polyasym/expansion_params.hpp>
#include <polyasym/two_point.hpp>

// Family-generic pieces shared by the Bernoulli and Euler expansion modules.
namespace polyasym::detail
{

// Extra bits carried internally by the expansion sums.
inline constexpr mpfr_prec_t guard_bits = 32;

mpfr_prec_t common_precision(const HPComplex &a, const HPComplex &b);

ApproxValue neg_int_leading_generic(Family family, long n, long m, const HPComplex &z);

std::vector<HPComplex> watson_coeffs(Family family, const HPComplex &mu, const HPComplex &z, std::size_t K,
                                     mpfr_prec_t prec, int sign);
ApproxValue watson_sum(Family family, long n, const HPComplex &mu, const HPComplex &z, std::size_t K,
                       mpfr_prec_t prec);
void reject_integer_order(const HPComplex &mu, const char *what);

HPComplex two_point_function(Family family, const HPComplex &mu, const HPComplex &z, const HPComplex &w);
TwoPointSeries two_point_coeffs(Family family, const HPComplex &mu, const HPComplex &z, std::size_t K,
                                Flavor flavor, mpfr_prec_t prec);
HPComplex scale_function(Family family, long k, long N, const HPComplex &mu, Flavor flavor);
ApproxValue two_point_sum(Family family, long n, const HPComplex &mu, const HPComplex &z, std::size_t K,
                          Flavor flavor, mpfr_prec_t prec);

// Bound on sum_{j>K} |T_j| from |T_{K+1}| for terms decaying like
// (a j + b)^(-p): |T_{K+1}| (1 + (a(K+1) + b) / (a (p - 1))).
HPReal tail_bound(const HPReal &first_omitted, double a, double b, long K, long p);

bool is_real_in_unit_interval(const HPComplex &z, bool closed);

} // namespace polyasym::detail

#endif

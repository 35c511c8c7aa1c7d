#ifndef POLYASYM_EULER_EXPANSIONS_HPP
#define POLYASYM_EULER_EXPANSIONS_HPP

#include <cstddef>
#include <vector>

#include <polyasym/approx_value.hpp>
#include <polyasym/bernoulli_expansions.hpp>
#include <polyasym/hp_complex.hpp>
#include <polyasym/two_point.hpp>

namespace polyasym
{

// Leading term(s) of E_n^{-m}(z); regions as for region_classify.
ApproxValue neg_int_leading_E(long n, long m, const HPComplex &z);

// 4 n! sum_{k=0}^K sin((2k+1) pi z - n pi / 2) / ((2k+1) pi)^(n+1). Requires
// n >= 1, or n = 0 with 0 < Re z < 1.
ApproxValue fourier_E1(long n, const HPComplex &z, long K);

// 4 n! / pi^(n+1) sin(pi z - n pi / 2)
ApproxValue fourier_E1_leading(long n, const HPComplex &z);

// Residue coefficient of the pole at (2k+1) pi i for order m >= 1 (k may be
// negative):
//   2^(m-1) / ((2k+1) pi i)^(m-1) C(n+m-1,m-1)
//     sum_nu B_nu^m(z) C(m-1,nu) (n+m-nu-1)!/(n+m-1)! (-(2k+1) pi i)^nu
HPComplex epsilon_coeff(long m, long n, const HPComplex &z, long k);

// epsilon_k^m from a numerically integrated residue.
HPComplex epsilon_residue(long m, long n, const HPComplex &z, long k);

// 2 n! sum over k = 0..K and their partners -1-k of
// epsilon_k^m e^{(2k+1) pi i z} / ((2k+1) pi i)^(n+1).
ApproxValue fourier_Em(long n, long m, const HPComplex &z, long K);

// The k = 0, -1 pair with per-nu phases tau = (z - n/2 - (m-1)/2 - nu/2) pi.
ApproxValue fourier_Em_leading(long n, long m, const HPComplex &z);

// h_0 .. h_K of h(s) = e^{zu} (pi i s / (e^u - 1))^mu, u = pi i (e^s - 1).
std::vector<HPComplex> watson_h_coeffs(const HPComplex &mu, const HPComplex &z, std::size_t K, mpfr_prec_t prec,
                                       int sign = 1);

// 2^mu n! n^(mu-1) / (pi^(n+mu) Gamma(mu)) [e^{i chi} S_+ + e^{-i chi} S_-].
ApproxValue watson_expansion_E(long n, const HPComplex &mu, const HPComplex &z, std::size_t K, mpfr_prec_t prec);

namespace detail
{
ApproxValue watson_expansion_E_unchecked(long n, const HPComplex &mu, const HPComplex &z, std::size_t K,
                                         mpfr_prec_t prec);
} // namespace detail

// g(w) = ((w^2 + pi^2) / (2 pi))^mu (e^w + 1)^(-mu) e^{wz}
HPComplex twopoint_function_E(const HPComplex &mu, const HPComplex &z, const HPComplex &w);

// (gamma_k, delta_k) pairs of g about +-pi i.
TwoPointSeries twopoint_coeffs_E(const HPComplex &mu, const HPComplex &z, std::size_t K, Flavor flavor,
                                 mpfr_prec_t prec);

// Psi_k^(N) (Standard) or its tilde counterpart; zero for odd N.
HPComplex psi(long k, long N, const HPComplex &mu, Flavor flavor);

// (4 pi)^mu n! sum_{k<=K} [gamma_k Psi_k^(n) + delta_k Psi_k^(n-1)].
ApproxValue twopoint_sum_E(long n, const HPComplex &mu, const HPComplex &z, std::size_t K, Flavor flavor,
                           mpfr_prec_t prec);

// Psi_{k+1}^(2n) / Psi_k^(2n) = pi^2 (mu-k-1) / (mu-k-1+n)
HPComplex twopoint_ratio_check_E(long n, const HPComplex &mu, long k);

} // namespace polyasym

#endif

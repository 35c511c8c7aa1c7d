#ifndef POLYASYM_BERNOULLI_EXPANSIONS_HPP
#define POLYASYM_BERNOULLI_EXPANSIONS_HPP

#include <cstddef>
#include <vector>

#include <polyasym/approx_value.hpp>
#include <polyasym/bivariate_polynomial.hpp>
#include <polyasym/hp_complex.hpp>
#include <polyasym/two_point.hpp>

namespace polyasym
{

// Which terms of the finite sum for a negative integer order dominate.
enum class RegionCase
{
    UpperDominant, // Re z > -m/2: the r = m term
    Boundary,      // Re z = -m/2: r = 0 and r = m together
    LowerDominant  // Re z < -m/2: the r = 0 term
};

// Equality Re z = -m/2 is decided with absolute tolerance 2^(-p/2).
RegionCase region_classify(long m, const HPComplex &z);

// Leading term(s) of B_n^{-m}(z). error_estimate is relative: with S the
// summed magnitude of the omitted finite-sum terms and L the leading
// magnitude, S / (L - S). When S >= L or the leading terms cancel the
// estimate is S, absolute.
ApproxValue neg_int_leading(long n, long m, const HPComplex &z);

// -n! sum_{0<|k|<=K} e^{2 pi i k z} / (2 pi i k)^n. Requires n >= 2, or n = 1
// with 0 < Re z < 1.
ApproxValue fourier_B1(long n, const HPComplex &z, long K);

// 2 (-1)^(n+1) n! / (2 pi)^n cos(2 pi z + n pi / 2)
ApproxValue fourier_B1_leading(long n, const HPComplex &z);

// Residue coefficient of the pole at 2 pi i k (k != 0) for order m, 1 <= m <= n:
//   (-1)^(m-1) C(n-1,m-1) sum_nu B_nu^m(z) C(m-1,nu) (n-nu-1)!/(n-1)! (-2 pi i k)^nu
HPComplex beta_coeff(long m, long n, const HPComplex &z, long k);

// The same coefficient as an exact polynomial in z and t = 2 pi i k.
BivariatePolynomial beta_coeff_polynomial(long m, long n);

// Built from beta^1 = 1 by
//   m beta^{m+1} = [m - n + t (z - m)] beta^m + (z - m) d/dz beta^m.
BivariatePolynomial beta_coeff_recurrence_polynomial(long m, long n);
HPComplex beta_coeff_recurrence(long m, long n, const HPComplex &z, long k);

// beta_k^m from a numerically integrated residue (trapezoidal rule on a
// circle of radius 1 about 2 pi i k).
HPComplex beta_residue(long m, long n, const HPComplex &z, long k);

// -n! sum_{0<|k|<=K} beta_k^m(n,z) e^{2 pi i k z} / (2 pi i k)^n, 1 <= m < n.
ApproxValue fourier_Bm(long n, long m, const HPComplex &z, long K);

// The k = +-1 terms written as a sum over nu with per-nu phases
// sigma = (2z + n/2 - nu/2) pi.
ApproxValue fourier_Bm_leading(long n, long m, const HPComplex &z);

// Smallest K whose relative tail (K+1)^(-(n-m+1)) is below 2^-target_bits,
// capped at 64.
long default_fourier_terms(long n, long m, mpfr_prec_t target_bits);

// g_0 .. g_K of g(s) = (2 pi i s / (e^u - 1))^mu e^{zu + mu s},
// u = 2 pi i (e^s - 1). sign = -1 gives the mirrored lower-loop function.
std::vector<HPComplex> watson_g_coeffs(const HPComplex &mu, const HPComplex &z, std::size_t K, mpfr_prec_t prec,
                                       int sign = 1);

// n! n^(mu-1) / ((2 pi)^n Gamma(mu)) [e^{i chi} S_+ + e^{-i chi} S_-],
// S_pm = sum_{k<=K} (1-mu)_k g_k^pm / n^k. Integer mu is rejected.
ApproxValue watson_expansion_B(long n, const HPComplex &mu, const HPComplex &z, std::size_t K, mpfr_prec_t prec);

namespace detail
{
// As above without the integer-order check, for reduction tests.
ApproxValue watson_expansion_B_unchecked(long n, const HPComplex &mu, const HPComplex &z, std::size_t K,
                                         mpfr_prec_t prec);
} // namespace detail

// f(w) = 2^(-3mu) pi^(-2mu) (w^2 + 4 pi^2)^mu (w / (e^w - 1))^mu e^{wz},
// continued from w = 0 along a straight segment.
HPComplex twopoint_function_B(const HPComplex &mu, const HPComplex &z, const HPComplex &w);

// (alpha_k, beta_k) pairs, k = 0..K, of f about +-2 pi i.
TwoPointSeries twopoint_coeffs_B(const HPComplex &mu, const HPComplex &z, std::size_t K, Flavor flavor,
                                 mpfr_prec_t prec);

// Phi_k^(N) (Standard) or its tilde counterpart; zero for odd N.
HPComplex phi(long k, long N, const HPComplex &mu, Flavor flavor);

// n! 2^(3mu) pi^(2mu) sum_{k<=K} [alpha_k Phi_k^(n) + beta_k Phi_k^(n-1)].
ApproxValue twopoint_sum_B(long n, const HPComplex &mu, const HPComplex &z, std::size_t K, Flavor flavor,
                           mpfr_prec_t prec);

// Phi_{k+1}^(2n) / Phi_k^(2n) = 4 pi^2 (mu-k-1) / (mu-k+n-1)
HPComplex twopoint_ratio_check(long n, const HPComplex &mu, long k);

} // namespace polyasym

#endif

#ifndef POLYASYM_CONSTANTS_HPP
#define POLYASYM_CONSTANTS_HPP

#include <polyasym/hp_complex.hpp>
#include <polyasym/hp_real.hpp>
#include <polyasym/rational.hpp>

namespace polyasym
{

// pi rounded to `prec` bits. Values are cached per precision; the cache is
// safe for concurrent use.
HPReal pi(mpfr_prec_t prec);

// 2*pi*i at the given precision.
HPComplex two_pi_i(mpfr_prec_t prec);

// Classical Bernoulli number B_k (B_1 = -1/2), exact. Cached.
Rational bernoulli_number(unsigned k);

// Extra bits needed so that degree-n sums carrying factors like (2 pi)^(-n)
// keep `target` bits of relative accuracy: target + 32 + ceil(n log2(2 pi)).
mpfr_prec_t working_precision(mpfr_prec_t target, long n);

} // namespace polyasym

#endif

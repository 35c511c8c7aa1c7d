#ifndef POLYASYM_GAMMA_HPP
#define POLYASYM_GAMMA_HPP

#include <polyasym/hp_complex.hpp>

namespace polyasym
{

// log Gamma(z) for complex z away from the poles 0, -1, -2, ...; the branch is
// the sum of principal logarithms produced by the upward shift, so
// exp(lgamma(z)) is always Gamma(z). Stirling series after shifting Re z past
// a precision-dependent threshold.
HPComplex lgamma(const HPComplex &z);
HPComplex gamma(const HPComplex &z);
// 1 / Gamma(z); zero at the poles.
HPComplex rgamma(const HPComplex &z);

} // namespace polyasym

#endif

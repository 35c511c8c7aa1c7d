#ifndef POLYASYM_EXPANSION_PARAMS_HPP
#define POLYASYM_EXPANSION_PARAMS_HPP

#include <string_view>

#include <polyasym/hp_complex.hpp>

namespace polyasym
{

enum class Family
{
    Bernoulli,
    Euler
};

std::string_view family_name(Family f);

// Degree, order and argument of one evaluation together with the phase
// quantities shared by the Watson and two-point expansions:
//   zeta = (z - mu/2) pi, eta = mu - 2z,
//   chi  = 2 zeta - n pi / 2 (Bernoulli) or zeta - n pi / 2 (Euler).
struct ExpansionParams
{
    ExpansionParams(Family family, long n, const HPComplex &mu, const HPComplex &z);

    Family family;
    long n;
    HPComplex mu;
    HPComplex z;
    HPComplex zeta;
    HPComplex chi;
    HPComplex eta;
};

} // namespace polyasym

#endif

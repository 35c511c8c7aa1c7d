#include <polyasym/expansion_params.hpp>

#include <algorithm>

#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>

namespace polyasym
{

std::string_view family_name(Family f)
{
    return f == Family::Bernoulli ? "bernoulli" : "euler";
}

ExpansionParams::ExpansionParams(Family family_, long n_, const HPComplex &mu_, const HPComplex &z_)
    : family(family_), n(n_), mu(mu_), z(z_)
{
    if (n < 0) {
        throw domain_error("degree n must be non-negative");
    }
    const mpfr_prec_t p = std::max(mu.precision(), z.precision());
    const HPReal pi_p = pi(p);
    zeta = (z - mu / 2) * pi_p;
    eta = mu - z * 2;
    const HPComplex quarter_turn = HPComplex(pi_p * n / 2, HPReal(p));
    chi = (family == Family::Bernoulli ? zeta * 2 : zeta) - quarter_turn;
}

} // namespace polyasym

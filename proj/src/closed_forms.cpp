#include <polyasym/closed_forms.hpp>

#include <polyasym/constants.hpp>
#include <polyasym/expansion_params.hpp>

namespace polyasym
{

namespace
{

struct Ctx
{
    Ctx(Family f, const HPComplex &mu_, const HPComplex &z_)
        : par(f, 0, mu_, z_), p(par.mu.precision()), one(1L, p), i(HPComplex::i(p)), pi_c(pi(p)),
          pi2(pi(p) * pi(p))
    {
    }
    ExpansionParams par;
    mpfr_prec_t p;
    HPComplex one;
    HPComplex i;
    HPComplex pi_c;
    HPComplex pi2;
};

} // namespace

std::optional<HPComplex> watson_g_closed_form(const HPComplex &mu, const HPComplex &z, long k)
{
    const Ctx c(Family::Bernoulli, mu, z);
    const HPComplex &m = c.par.mu;
    const HPComplex &x = c.par.zeta;
    const HPComplex m2 = m * m;
    const HPComplex x2 = x * x;
    switch (k) {
    case 0:
        return c.one;
    case 1:
        return m / 2 + c.i * x * 2;
    case 2:
        return (m2 * 3 + (c.pi2 * 4 - 1L) * m - x2 * 48) / 24L + c.i * (m + 1L) * x;
    case 3:
        return (m2 * m + (c.pi2 * 4 - 1L) * m2 + (c.pi2 - x2 * 6) * m * 8 - x2 * 96) / 48L +
               c.i * x * (m2 * 3 + (c.pi2 * 4 + 5L) * m - x2 * 16 + 4L) / 12L;
    default:
        return std::nullopt;
    }
}

std::optional<HPComplex> watson_h_closed_form(const HPComplex &mu, const HPComplex &z, long k)
{
    const Ctx c(Family::Euler, mu, z);
    const HPComplex &m = c.par.mu;
    const HPComplex &x = c.par.zeta;
    const HPComplex m2 = m * m;
    const HPComplex x2 = x * x;
    switch (k) {
    case 0:
        return c.one;
    case 1:
        return -(m / 2) + c.i * x;
    case 2:
        return ((c.one - c.pi2 * 2) * m2 * 3 + (c.pi2 * 13 - x * c.pi_c * 12 - 1L) * m - x2 * 12) / 24L +
               c.i * (c.one - m) * x / 2;
    case 3:
        return c.par.z * (-(m2 * m) + (c.one - c.pi2) * m2 + (c.pi2 + x2 * 6) * m * 2 - x2 * 24) / 48L +
               c.i * x * (m2 * 3 + (c.pi2 - 7L) * m - x2 * 4 + 4L) / 24L;
    default:
        return std::nullopt;
    }
}

std::optional<HPComplex> watson_h_derived_form(const HPComplex &mu, const HPComplex &z, long k)
{
    const Ctx c(Family::Euler, mu, z);
    const HPComplex &m = c.par.mu;
    const HPComplex &x = c.par.zeta;
    const HPComplex m2 = m * m;
    const HPComplex x2 = x * x;
    switch (k) {
    case 2:
        return (m2 * 3 + (c.pi2 - 1L) * m - x2 * 12) / 24L + c.i * (c.one - m) * x / 2;
    case 3:
        return (-(m2 * m) + (c.one - c.pi2) * m2 + (c.pi2 + x2 * 6) * m * 2 - x2 * 24) / 48L +
               c.i * x * (m2 * 3 + (c.pi2 - 7L) * m - x2 * 4 + 4L) / 24L;
    default:
        return watson_h_closed_form(mu, z, k);
    }
}

std::optional<std::pair<HPComplex, HPComplex>> twopoint_closed_form_B(const HPComplex &mu, const HPComplex &z,
                                                                      long k)
{
    const Ctx c(Family::Bernoulli, mu, z);
    const HPComplex &m = c.par.mu;
    const HPComplex &e = c.par.eta;
    const HPComplex C = cos(c.par.zeta * 2);
    const HPComplex S = sin(c.par.zeta * 2);
    const HPComplex &pi1 = c.pi_c;
    const HPComplex &pi2 = c.pi2;
    switch (k) {
    case 0:
        return std::pair{C, S / (pi1 * 2)};
    case 1:
        return std::pair{-(m * C * 3 + pi1 * e * S * 2) / (pi2 * 16),
                         (pi1 * e * C * 2 + (c.one * 2 - m * 3) * S) / (pi2 * pi1 * 32)};
    case 2:
        return std::pair{((-(pi2 * e * e * 12) + pi2 * m * 4 - m * 33 + m * m * 27) * C +
                          pi1 * e * (m * 3 - 1L) * S * 12) /
                             (pi2 * pi2 * 1536),
                         (-(pi1 * e * (m - 1L) * C * 36) +
                          (c.one * 36 - m * 69 + m * m * 27 + pi2 * m * 4 - pi2 * e * e * 12) * S) /
                             (pi2 * pi2 * pi1 * 3072)};
    default:
        return std::nullopt;
    }
}

std::optional<std::pair<HPComplex, HPComplex>> twopoint_closed_form_E(const HPComplex &mu, const HPComplex &z,
                                                                      long k)
{
    const Ctx c(Family::Euler, mu, z);
    const HPComplex &m = c.par.mu;
    const HPComplex &e = c.par.eta;
    const HPComplex C = cos(c.par.zeta);
    const HPComplex S = sin(c.par.zeta);
    const HPComplex &pi1 = c.pi_c;
    const HPComplex &pi2 = c.pi2;
    switch (k) {
    case 0:
        return std::pair{C, S / pi1};
    case 1:
        return std::pair{-(m * C + pi1 * e * S) / (pi2 * 4), (pi1 * e * C + (c.one * 2 - m) * S) / (pi2 * pi1 * 4)};
    case 2:
        return std::pair{((-(m * 9) - pi2 * e * e * 3 + pi2 * m + m * m * 3) * C + pi1 * e * (m - 1L) * S * 6) /
                             (pi2 * pi2 * 96),
                         (pi1 * e * (c.one * 3 - m) * C * 6 +
                          (c.one * 36 - m * 21 + m * m * 3 + pi2 * m - pi2 * e * e * 3) * S) /
                             (pi2 * pi2 * pi1 * 96)};
    default:
        return std::nullopt;
    }
}

} // namespace polyasym

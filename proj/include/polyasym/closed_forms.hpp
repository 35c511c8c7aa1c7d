#ifndef POLYASYM_CLOSED_FORMS_HPP
#define POLYASYM_CLOSED_FORMS_HPP

#include <optional>
#include <utility>

#include <polyasym/hp_complex.hpp>

namespace polyasym
{

// Reference closed forms of the low-order expansion coefficients, written in
// zeta = (z - mu/2) pi and eta = mu - 2z, for comparison with the generated
// coefficients. k outside the tabulated range gives nullopt.

// g_0 .. g_3 of the Bernoulli loop function.
std::optional<HPComplex> watson_g_closed_form(const HPComplex &mu, const HPComplex &z, long k);

// h_0 .. h_3 of the Euler loop function in their reference form; the real
// parts of h_2 and h_3 are known to be wrong.
std::optional<HPComplex> watson_h_closed_form(const HPComplex &mu, const HPComplex &z, long k);

// h_0 .. h_3 re-derived by symbolic expansion, correcting the real parts of
// h_2 and h_3.
std::optional<HPComplex> watson_h_derived_form(const HPComplex &mu, const HPComplex &z, long k);

// (alpha_k, beta_k), k <= 2.
std::optional<std::pair<HPComplex, HPComplex>> twopoint_closed_form_B(const HPComplex &mu, const HPComplex &z,
                                                                      long k);

// (gamma_k, delta_k), k <= 2.
std::optional<std::pair<HPComplex, HPComplex>> twopoint_closed_form_E(const HPComplex &mu, const HPComplex &z,
                                                                      long k);

} // namespace polyasym

#endif

#ifndef POLYASYM_CLI_COMMANDS_HPP
#define POLYASYM_CLI_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <polyasym/approx_value.hpp>
#include <polyasym/cli/complex_parse.hpp>
#include <polyasym/cli/format.hpp>
#include <polyasym/expansion_params.hpp>

namespace polyasym::cli
{

inline constexpr mpfr_prec_t default_precision = 256;

Family family_from_name(const std::string &name);

// A value of the oracle: exact when both parameters are real rationals.
struct Reference
{
    std::optional<Rational> exact;
    HPComplex value;
};

// B_n^mu(z) or E_n^mu(z) for n = 0..n_max. Inexact values are computed with
// the guard bits needed for n_max and are not rounded.
std::vector<Reference> oracle_values(Family family, long n_max, const ComplexRational &mu, const ComplexRational &z,
                                     mpfr_prec_t prec);

struct EvalRequest
{
    Family family = Family::Bernoulli;
    long n = 0;
    ComplexRational mu;
    ComplexRational z;
    std::string method = "oracle";
    std::optional<long> terms;
    mpfr_prec_t precision = default_precision;
};

struct EvalOutcome
{
    ApproxValue approx;
    std::optional<Rational> exact;

    std::string value_text(mpfr_prec_t prec) const;
};

// Default truncation when --terms is absent.
long default_terms(Method m, Family family, long n, const ComplexRational &mu, mpfr_prec_t prec);

// Dispatches to the module implementing the method. Throws usage_error for
// an unknown method and domain_error for an unsupported parameter set.
EvalOutcome evaluate(const EvalRequest &req);

Table eval_table(const EvalRequest &req, const EvalOutcome &out);

struct CompareRequest
{
    Family family = Family::Bernoulli;
    std::vector<long> ns;
    ComplexRational mu;
    ComplexRational z;
    std::vector<std::string> methods;
    std::optional<long> terms;
    mpfr_prec_t precision = default_precision;
};

// One row per (n, method) ordered by n, then method name.
Table compare(const CompareRequest &req);

struct CoeffsRequest
{
    std::optional<Family> family;
    std::string kind;
    ComplexRational mu;
    ComplexRational z;
    long K = 4;
    std::optional<long> m;
    std::optional<long> n;
    mpfr_prec_t precision = default_precision;
};

std::vector<std::string> coeff_kinds();

// Columns k, re, im, residual. The residual is relative to the reference
// closed form (g, h, alpha..delta for small k) or to an independent
// construction (beta-m, epsilon-m and the residue kinds); empty otherwise.
Table coeffs(const CoeffsRequest &req);

} // namespace polyasym::cli

#endif

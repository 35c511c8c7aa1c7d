#include <polyasym/cli/commands.hpp>

#include <algorithm>

#include <polyasym/bernoulli_expansions.hpp>
#include <polyasym/closed_forms.hpp>
#include <polyasym/constants.hpp>
#include <polyasym/errors.hpp>
#include <polyasym/euler_expansions.hpp>
#include <polyasym/oracle.hpp>

namespace polyasym::cli
{

Family family_from_name(const std::string &name)
{
    if (name == "bernoulli") {
        return Family::Bernoulli;
    }
    if (name == "euler") {
        return Family::Euler;
    }
    throw usage_error("unknown family '" + name + "' (expected bernoulli or euler)");
}

std::vector<Reference> oracle_values(Family family, long n_max, const ComplexRational &mu, const ComplexRational &z,
                                     mpfr_prec_t prec)
{
    if (n_max < 0) {
        throw domain_error("oracle: n must be non-negative");
    }
    std::vector<Reference> out;
    if (mu.is_real() && z.is_real()) {
        const auto v = family == Family::Bernoulli ? bernoulli_values(n_max, mu.re, z.re)
                                                   : euler_values(n_max, mu.re, z.re);
        const mpfr_prec_t p = working_precision(prec, 0);
        for (const auto &q : v) {
            out.push_back({q, HPComplex(q, p)});
        }
        return out;
    }
    const mpfr_prec_t p = working_precision(prec, n_max);
    const HPComplex m = mu.to_hp(p);
    const HPComplex x = z.to_hp(p);
    const auto v = family == Family::Bernoulli ? bernoulli_values(n_max, m, x) : euler_values(n_max, m, x);
    for (const auto &c : v) {
        out.push_back({std::nullopt, c});
    }
    return out;
}

std::string EvalOutcome::value_text(mpfr_prec_t prec) const
{
    return exact ? format_exact(*exact) : format_complex(approx.value, prec);
}

namespace
{

Method parse_method(const std::string &name)
{
    const auto m = method_from_name(name);
    if (!m) {
        throw usage_error("unknown method '" + name +
                          "' (expected oracle, finite-sum, leading, saddle, fourier, fourier-leading, watson, "
                          "twopoint or twopoint-tilde)");
    }
    return *m;
}

// m >= 0 with mu = -m.
long negative_order(const ComplexRational &mu, const std::string &method)
{
    const auto v = mu.as_integer();
    if (!v || *v > 0) {
        throw domain_error(method + " requires mu = -m with m a non-negative integer, got mu = " + mu.to_string());
    }
    return -*v;
}

// m >= 1 with mu = m.
long positive_order(const ComplexRational &mu, const std::string &method)
{
    const auto v = mu.as_integer();
    if (!v || *v < 1) {
        throw domain_error(method + " requires mu = m with m a positive integer, got mu = " + mu.to_string());
    }
    return *v;
}

} // namespace

long default_terms(Method m, Family family, long n, const ComplexRational &mu, mpfr_prec_t prec)
{
    switch (m) {
    case Method::Fourier: {
        const auto order = mu.as_integer().value_or(1);
        return default_fourier_terms(n, std::clamp<long>(order, 1, std::max<long>(n - 1, 1)), prec) -
               (family == Family::Euler ? 1 : 0);
    }
    case Method::Watson:
        return 3;
    case Method::TwoPoint:
    case Method::TwoPointTilde:
        return 12;
    default:
        return 0;
    }
}

EvalOutcome evaluate(const EvalRequest &req)
{
    const Method method = parse_method(req.method);
    if (req.n < 0) {
        throw domain_error("n must be non-negative, got " + std::to_string(req.n));
    }
    if (req.terms && *req.terms < 0) {
        throw domain_error("terms must be non-negative");
    }
    const bool ber = req.family == Family::Bernoulli;
    const mpfr_prec_t p = req.precision;
    const long K = req.terms.value_or(default_terms(method, req.family, req.n, req.mu, p));
    const HPComplex mu = req.mu.to_hp(p);
    const HPComplex z = req.z.to_hp(p);
    EvalOutcome out;
    switch (method) {
    case Method::Oracle: {
        const auto ref = oracle_values(req.family, req.n, req.mu, req.z, p).back();
        out.exact = ref.exact;
        out.approx.value = ref.value;
        out.approx.method = Method::Oracle;
        out.approx.error_estimate = HPReal(p);
        out.approx.confidence = Confidence::Exact;
        break;
    }
    case Method::FiniteSum: {
        const long m = negative_order(req.mu, req.method);
        if (req.z.is_real()) {
            const Rational q = ber ? bernoulli_neg_int(req.n, m, req.z.re) : euler_neg_int(req.n, m, req.z.re);
            out.exact = q;
            out.approx.value = HPComplex(q, p);
        } else {
            out.approx.value = ber ? bernoulli_neg_int(req.n, m, z) : euler_neg_int(req.n, m, z);
        }
        out.approx.method = Method::FiniteSum;
        out.approx.terms_used = static_cast<std::size_t>(m + 1);
        out.approx.error_estimate = HPReal(p);
        out.approx.confidence = Confidence::Exact;
        break;
    }
    case Method::NegIntLeading: {
        const long m = negative_order(req.mu, req.method);
        out.approx = ber ? neg_int_leading(req.n, m, z) : neg_int_leading_E(req.n, m, z);
        break;
    }
    case Method::Saddle:
        if (!ber) {
            throw domain_error("saddle is only available for the bernoulli family");
        }
        out.approx = saddle_estimate_neg_int(req.n, negative_order(req.mu, req.method), z);
        break;
    case Method::Fourier: {
        const long m = positive_order(req.mu, req.method);
        if (ber) {
            out.approx = m == 1 ? fourier_B1(req.n, z, K) : fourier_Bm(req.n, m, z, K);
        } else {
            out.approx = m == 1 ? fourier_E1(req.n, z, K) : fourier_Em(req.n, m, z, K);
        }
        break;
    }
    case Method::FourierLeading: {
        const long m = positive_order(req.mu, req.method);
        if (ber) {
            out.approx = m == 1 ? fourier_B1_leading(req.n, z) : fourier_Bm_leading(req.n, m, z);
        } else {
            out.approx = m == 1 ? fourier_E1_leading(req.n, z) : fourier_Em_leading(req.n, m, z);
        }
        break;
    }
    case Method::Watson: {
        const auto k = static_cast<std::size_t>(K);
        out.approx = ber ? watson_expansion_B(req.n, mu, z, k, p) : watson_expansion_E(req.n, mu, z, k, p);
        break;
    }
    case Method::TwoPoint:
    case Method::TwoPointTilde: {
        const auto k = static_cast<std::size_t>(K);
        const Flavor fl = method == Method::TwoPoint ? Flavor::Standard : Flavor::Tilde;
        out.approx = ber ? twopoint_sum_B(req.n, mu, z, k, fl, p) : twopoint_sum_E(req.n, mu, z, k, fl, p);
        break;
    }
    }
    return out;
}

Table eval_table(const EvalRequest &req, const EvalOutcome &out)
{
    Table t;
    t.columns = {"family",         "n",          "mu",         "z",         "method",        "value",
                 "terms_used",     "error_estimate", "error_kind", "confidence", "low_confidence"};
    const auto &a = out.approx;
    t.rows.push_back({Cell::str(std::string(family_name(req.family))), Cell::integer(req.n),
                      Cell::complex(req.mu.to_string()), Cell::complex(req.z.to_string()),
                      Cell::str(std::string(method_name(a.method))), Cell::complex(out.value_text(req.precision)),
                      Cell::integer(static_cast<long>(a.terms_used)), Cell::str(format_error(a.error_estimate)),
                      Cell::str(std::string(error_kind_name(a.error_kind))),
                      Cell::str(std::string(confidence_name(a.confidence))),
                      Cell::str(a.low_confidence ? "true" : "false")});
    return t;
}

Table compare(const CompareRequest &req)
{
    Table t;
    t.columns = {"n",          "method",     "value",      "abs_err", "rel_err",
                 "error_estimate", "error_kind", "terms_used", "confidence"};
    if (req.ns.empty()) {
        return t;
    }
    std::vector<long> ns = req.ns;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<std::string> methods = req.methods;
    for (const auto &m : methods) {
        parse_method(m);
    }
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    const auto refs = oracle_values(req.family, ns.back(), req.mu, req.z, req.precision);
    for (long n : ns) {
        const Reference &ref = refs.at(static_cast<std::size_t>(n));
        for (const auto &m : methods) {
            EvalRequest er{req.family, n, req.mu, req.z, m, req.terms, req.precision};
            const EvalOutcome out = evaluate(er);
            std::string abs_err;
            std::string rel_err;
            if (out.exact && ref.exact) {
                const Rational d = (*out.exact - *ref.exact).abs();
                abs_err = d.is_zero() ? "0" : format_error(HPReal(d, req.precision));
                rel_err = d.is_zero() ? "0"
                                      : (ref.exact->is_zero() ? abs_err
                                                              : format_error(HPReal(d / ref.exact->abs(), req.precision)));
            } else {
                abs_err = format_error(abs(out.approx.value - ref.value));
                rel_err = format_error(relative_error(out.approx.value, ref.value));
            }
            const auto &a = out.approx;
            t.rows.push_back({Cell::integer(n), Cell::str(m), Cell::complex(out.value_text(req.precision)),
                              Cell::str(abs_err), Cell::str(rel_err), Cell::str(format_error(a.error_estimate)),
                              Cell::str(std::string(error_kind_name(a.error_kind))),
                              Cell::integer(static_cast<long>(a.terms_used)),
                              Cell::str(std::string(confidence_name(a.confidence)))});
        }
    }
    return t;
}

std::vector<std::string> coeff_kinds()
{
    return {"g",          "h",          "alpha",     "beta",          "gamma",          "delta",
            "alpha-tilde", "beta-tilde", "gamma-tilde", "delta-tilde", "beta-m",      "epsilon-m",
            "beta-residue", "epsilon-residue"};
}

namespace
{

Family kind_family(const std::string &kind)
{
    static const std::vector<std::string> euler = {"h",           "gamma",     "delta",          "gamma-tilde",
                                                   "delta-tilde", "epsilon-m", "epsilon-residue"};
    return std::find(euler.begin(), euler.end(), kind) != euler.end() ? Family::Euler : Family::Bernoulli;
}

std::string residual_text(const HPComplex &v, const std::optional<HPComplex> &ref)
{
    return ref ? format_error(relative_error(v, *ref)) : std::string();
}

} // namespace

Table coeffs(const CoeffsRequest &req)
{
    const auto kinds = coeff_kinds();
    if (std::find(kinds.begin(), kinds.end(), req.kind) == kinds.end()) {
        throw usage_error("unknown coefficient kind '" + req.kind + "'");
    }
    const Family fam = kind_family(req.kind);
    if (req.family && *req.family != fam) {
        throw usage_error("kind '" + req.kind + "' belongs to the " + std::string(family_name(fam)) + " family");
    }
    if (req.K < 0) {
        throw domain_error("K must be non-negative");
    }
    const mpfr_prec_t p = req.precision;
    const HPComplex mu = req.mu.to_hp(p);
    const HPComplex z = req.z.to_hp(p);
    const auto K = static_cast<std::size_t>(req.K);

    Table t;
    t.columns = {"k", "re", "im", "residual"};
    auto push = [&](long k, const HPComplex &v, const std::string &residual) {
        const HPComplex r = v.with_precision(p);
        t.rows.push_back({Cell::integer(k), Cell::str(r.re().to_string(decimal_digits(p))),
                          Cell::str(r.im().to_string(decimal_digits(p))), Cell::str(residual)});
    };

    const std::string &kind = req.kind;
    if (kind == "g" || kind == "h") {
        const auto c = kind == "g" ? watson_g_coeffs(mu, z, K, p) : watson_h_coeffs(mu, z, K, p);
        for (std::size_t k = 0; k < c.size(); ++k) {
            const long kk = static_cast<long>(k);
            push(kk, c[k],
                 residual_text(c[k], kind == "g" ? watson_g_closed_form(mu, z, kk) : watson_h_closed_form(mu, z, kk)));
        }
        return t;
    }
    if (kind.find("-m") != std::string::npos || kind.find("-residue") != std::string::npos) {
        if (!req.m || !req.n) {
            throw usage_error("kind '" + kind + "' needs --m and --n");
        }
        const long m = *req.m;
        const long n = *req.n;
        const bool ber = fam == Family::Bernoulli;
        const bool residue = kind.find("-residue") != std::string::npos;
        for (long k = ber ? 1 : 0; k <= req.K; ++k) {
            const HPComplex closed = ber ? beta_coeff(m, n, z, k) : epsilon_coeff(m, n, z, k);
            if (residue) {
                const HPComplex r = ber ? beta_residue(m, n, z, k) : epsilon_residue(m, n, z, k);
                push(k, r, format_error(relative_error(r, closed)));
            } else {
                const HPComplex other = ber ? beta_coeff_recurrence(m, n, z, k) : epsilon_residue(m, n, z, k);
                push(k, closed, format_error(relative_error(closed, other)));
            }
        }
        return t;
    }
    const Flavor fl = kind.find("-tilde") != std::string::npos ? Flavor::Tilde : Flavor::Standard;
    const TwoPointSeries s = fam == Family::Bernoulli ? twopoint_coeffs_B(mu, z, K, fl, p)
                                                      : twopoint_coeffs_E(mu, z, K, fl, p);
    const bool first = kind.rfind("alpha", 0) == 0 || kind.rfind("gamma", 0) == 0;
    for (std::size_t k = 0; k <= K && k < s.size(); ++k) {
        const long kk = static_cast<long>(k);
        const HPComplex &v = first ? s.a[k] : s.b[k];
        std::optional<HPComplex> ref;
        if (fl == Flavor::Standard) {
            const auto cf = fam == Family::Bernoulli ? twopoint_closed_form_B(mu, z, kk)
                                                     : twopoint_closed_form_E(mu, z, kk);
            if (cf) {
                ref = first ? cf->first : cf->second;
            }
        }
        push(kk, v, residual_text(v, ref));
    }
    return t;
}

} // namespace polyasym::cli

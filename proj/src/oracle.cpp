#include <polyasym/oracle.hpp>

namespace polyasym
{

ApproxValue saddle_estimate_neg_int(long n, long m, const HPComplex &z)
{
    if (n < 0 || m < 0) {
        throw domain_error("saddle_estimate_neg_int: n and m must be non-negative");
    }
    const mpfr_prec_t p = z.precision();
    const HPComplex zm = z + m;
    if (zm.is_zero()) {
        throw domain_error("saddle_estimate_neg_int: z = -m leaves the saddle point undefined");
    }
    ApproxValue out;
    out.method = Method::Saddle;
    out.terms_used = 1;
    out.error_kind = ErrorKind::Relative;
    const HPComplex base = pow(zm, n + m) * HPComplex(factorial(n) / factorial(n + m), p);
    if (m == 0) {
        out.value = base;
        out.error_estimate = HPReal(p);
        out.confidence = Confidence::Exact;
        return out;
    }
    const HPComplex w0 = HPComplex(n + m, p) / zm;
    const HPComplex one(1L, p);
    out.value = pow(one - exp(-w0), m) * base;
    out.error_estimate = exp(-w0.re()) * (m + 1);
    out.confidence = Confidence::Asymptotic;
    out.low_confidence = w0.re().sign() <= 0 || out.error_estimate >= HPReal(1L, p);
    return out;
}

} // namespace polyasym

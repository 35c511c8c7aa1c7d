#ifndef POLYASYM_COMBINATORICS_HPP
#define POLYASYM_COMBINATORICS_HPP

#include <polyasym/errors.hpp>
#include <polyasym/field.hpp>
#include <polyasym/rational.hpp>

namespace polyasym
{

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
template <Field F>
F pochhammer(const F &a, long k)
{
    if (k < 0) {
        throw domain_error("pochhammer: negative length");
    }
    F r = field_one(a);
    for (long j = 0; j < k; ++j) {
        r = r * (a + field_from(j, a));
    }
    return r;
}

inline Rational factorial(long n)
{
    if (n < 0) {
        throw domain_error("factorial: negative argument");
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f, mpz_class(1));
}

// Generalised binomial coefficient (n choose k) = (n-k+1)_k / k!, valid for
// any field element n.
template <Field F>
F binomial(const F &n, long k)
{
    if (k < 0) {
        throw domain_error("binomial: negative lower index");
    }
    return pochhammer(n - field_from(k - 1, n), k) / field_from(factorial(k), n);
}

inline Rational binomial(long n, long k)
{
    return binomial(Rational(n), k);
}

} // namespace polyasym

#endif

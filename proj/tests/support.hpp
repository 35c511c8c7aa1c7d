#ifndef POLYASYM_TESTS_SUPPORT_HPP
#define POLYASYM_TESTS_SUPPORT_HPP

#include <random>
#include <string>

#include <polyasym/hp_complex.hpp>
#include <polyasym/rational.hpp>

namespace testing
{

using polyasym::HPComplex;
using polyasym::HPReal;
using polyasym::Rational;

inline HPComplex hp(const std::string &re, const std::string &im, mpfr_prec_t p)
{
    return HPComplex(HPReal::parse(re, p), HPReal::parse(im, p));
}

inline HPComplex hp(const Rational &q, mpfr_prec_t p)
{
    return HPComplex(q, p);
}

inline double rel(const HPComplex &a, const HPComplex &b)
{
    return polyasym::relative_error(a, b).to_double();
}

// log2 of the relative error; -inf for exact agreement.
inline double rel_bits(const HPComplex &a, const HPComplex &b)
{
    const HPReal r = polyasym::relative_error(a, b);
    return r.is_zero() ? -1e9 : log(r).to_double() / std::log(2.0);
}

// Random rational with numerator in [-range*den, range*den].
inline Rational random_rational(std::mt19937_64 &rng, long range, long den)
{
    std::uniform_int_distribution<long> num(-range * den, range * den);
    std::uniform_int_distribution<long> d(1, den);
    return Rational(num(rng), d(rng));
}

} // namespace testing

#endif

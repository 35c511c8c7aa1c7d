#ifndef POLYASYM_FIELD_HPP
#define POLYASYM_FIELD_HPP

#include <concepts>

#include <polyasym/hp_complex.hpp>
#include <polyasym/rational.hpp>

namespace polyasym
{

// Coefficient fields used by the series engine and the oracle: exact
// rationals and configurable-precision complex numbers. Constants are built
// "like" an existing element so HPComplex picks up the right precision.
template <typename F>
concept Field = requires(const F &a, const F &b, long n, const Rational &q) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a * n } -> std::convertible_to<F>;
    { a / n } -> std::convertible_to<F>;
    { field_one(a) } -> std::convertible_to<F>;
    { field_zero(a) } -> std::convertible_to<F>;
    { field_from(n, a) } -> std::convertible_to<F>;
    { field_from(q, a) } -> std::convertible_to<F>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

static_assert(Field<Rational>);
static_assert(Field<HPComplex>);

inline HPComplex to_complex(const Rational &q, mpfr_prec_t prec)
{
    return HPComplex(q, prec);
}

inline HPComplex to_complex(const HPComplex &z, mpfr_prec_t prec)
{
    return z.with_precision(prec);
}

} // namespace polyasym

#endif

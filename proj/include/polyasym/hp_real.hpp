#ifndef POLYASYM_HP_REAL_HPP
#define POLYASYM_HP_REAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <mpfr.h>

#include <polyasym/rational.hpp>

namespace polyasym
{

inline constexpr mpfr_prec_t min_precision = 64;

// RAII owner of an mpfr_t. Binary operations produce a result carrying the
// larger of the two operand precisions; all rounding is to nearest.
class HPReal
{
public:
    HPReal();
    explicit HPReal(mpfr_prec_t prec);
    HPReal(long v, mpfr_prec_t prec);
    HPReal(double v, mpfr_prec_t prec);
    HPReal(const Rational &q, mpfr_prec_t prec);
    HPReal(const HPReal &o);
    HPReal(HPReal &&o) noexcept;
    HPReal &operator=(const HPReal &o);
    HPReal &operator=(HPReal &&o) noexcept;
    ~HPReal();

    // Decimal string in the usual C syntax, correctly rounded.
    static HPReal parse(std::string_view text, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    HPReal with_precision(mpfr_prec_t prec) const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    // Base-2 exponent e with |x| in [2^(e-1), 2^e); very negative for zero.
    long exponent2() const;

    // Scientific notation with the requested number of significant digits,
    // round-half-even.
    std::string to_string(int digits) const;

    HPReal &operator+=(const HPReal &o);
    HPReal &operator-=(const HPReal &o);
    HPReal &operator*=(const HPReal &o);
    HPReal &operator/=(const HPReal &o);
    HPReal operator-() const;

    friend HPReal operator+(const HPReal &a, const HPReal &b);
    friend HPReal operator-(const HPReal &a, const HPReal &b);
    friend HPReal operator*(const HPReal &a, const HPReal &b);
    friend HPReal operator/(const HPReal &a, const HPReal &b);
    friend HPReal operator*(const HPReal &a, long b);
    friend HPReal operator/(const HPReal &a, long b);
    friend HPReal operator+(const HPReal &a, long b);

    friend bool operator==(const HPReal &a, const HPReal &b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const HPReal &a, const HPReal &b);

private:
    mpfr_t v_;
};

std::ostream &operator<<(std::ostream &os, const HPReal &x);

HPReal abs(const HPReal &x);
HPReal sqrt(const HPReal &x);
HPReal exp(const HPReal &x);
HPReal log(const HPReal &x);
HPReal sin(const HPReal &x);
HPReal cos(const HPReal &x);
HPReal sinh(const HPReal &x);
HPReal cosh(const HPReal &x);
HPReal atan2(const HPReal &y, const HPReal &x);
HPReal hypot(const HPReal &x, const HPReal &y);
HPReal pow(const HPReal &x, const HPReal &y);
HPReal max(const HPReal &a, const HPReal &b);
// ldexp(x, e) = x * 2^e, exact
HPReal ldexp(const HPReal &x, long e);

} // namespace polyasym

#endif

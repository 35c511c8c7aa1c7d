#ifndef POLYASYM_HP_COMPLEX_HPP
#define POLYASYM_HP_COMPLEX_HPP

#include <complex>
#include <ostream>
#include <string>

#include <polyasym/hp_real.hpp>
#include <polyasym/rational.hpp>

namespace polyasym
{

// Configurable-precision complex number. The precision of a value is the
// larger of its two parts; arithmetic between operands uses the larger of
// their precisions.
class HPComplex
{
public:
    HPComplex() = default;
    explicit HPComplex(mpfr_prec_t prec);
    HPComplex(long re, mpfr_prec_t prec);
    HPComplex(const Rational &re, mpfr_prec_t prec);
    HPComplex(const Rational &re, const Rational &im, mpfr_prec_t prec);
    HPComplex(HPReal re, HPReal im);
    explicit HPComplex(HPReal re);

    static HPComplex i(mpfr_prec_t prec);
    static HPComplex from_double(std::complex<double> v, mpfr_prec_t prec);

    const HPReal &re() const { return re_; }
    const HPReal &im() const { return im_; }

    mpfr_prec_t precision() const;
    HPComplex with_precision(mpfr_prec_t prec) const;

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    // "re+imi" / "re-imi" in scientific notation with the given number of
    // significant digits per part, round-half-even.
    std::string to_string(int digits) const;

    HPComplex &operator+=(const HPComplex &o);
    HPComplex &operator-=(const HPComplex &o);
    HPComplex &operator*=(const HPComplex &o);
    HPComplex &operator/=(const HPComplex &o);
    HPComplex operator-() const;

    friend HPComplex operator+(const HPComplex &a, const HPComplex &b);
    friend HPComplex operator-(const HPComplex &a, const HPComplex &b);
    friend HPComplex operator*(const HPComplex &a, const HPComplex &b);
    friend HPComplex operator/(const HPComplex &a, const HPComplex &b);
    friend HPComplex operator*(const HPComplex &a, long b);
    friend HPComplex operator/(const HPComplex &a, long b);
    friend HPComplex operator+(const HPComplex &a, long b);
    friend HPComplex operator-(const HPComplex &a, long b) { return a + (-b); }
    friend HPComplex operator*(const HPComplex &a, const HPReal &b);
    friend HPComplex operator/(const HPComplex &a, const HPReal &b);

private:
    HPReal re_;
    HPReal im_;
};

std::ostream &operator<<(std::ostream &os, const HPComplex &z);

HPReal abs(const HPComplex &z);
HPReal arg(const HPComplex &z);
HPComplex conj(const HPComplex &z);
HPComplex exp(const HPComplex &z);
// Principal branch, arg in (-pi, pi].
HPComplex log(const HPComplex &z);
HPComplex pow(const HPComplex &z, const HPComplex &w);
HPComplex pow(const HPComplex &z, long n);
HPComplex sqrt(const HPComplex &z);
HPComplex sin(const HPComplex &z);
HPComplex cos(const HPComplex &z);

// |a - b| / |b|, or |a - b| when b = 0.
HPReal relative_error(const HPComplex &approx, const HPComplex &exact);

// Non-positive or positive integer tests with tolerance 2^(-prec/2).
bool is_integer_valued(const HPComplex &z);

inline HPComplex field_one(const HPComplex &like) { return HPComplex(1, like.precision()); }
inline HPComplex field_zero(const HPComplex &like) { return HPComplex(like.precision()); }
inline HPComplex field_from(long v, const HPComplex &like) { return HPComplex(v, like.precision()); }
inline HPComplex field_from(const Rational &q, const HPComplex &like) { return HPComplex(q, like.precision()); }
inline bool is_zero(const HPComplex &z) { return z.is_zero(); }

} // namespace polyasym

#endif

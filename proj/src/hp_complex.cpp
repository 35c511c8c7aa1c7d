#include <polyasym/hp_complex.hpp>

#include <algorithm>
#include <cmath>

#include <polyasym/errors.hpp>

namespace polyasym
{

HPComplex::HPComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}

HPComplex::HPComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

HPComplex::HPComplex(const Rational &re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

HPComplex::HPComplex(const Rational &re, const Rational &im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

HPComplex::HPComplex(HPReal re, HPReal im) : re_(std::move(re)), im_(std::move(im)) {}

HPComplex::HPComplex(HPReal re) : re_(std::move(re)), im_(re_.precision()) {}

HPComplex HPComplex::i(mpfr_prec_t prec)
{
    return HPComplex(HPReal(prec), HPReal(1L, prec));
}

HPComplex HPComplex::from_double(std::complex<double> v, mpfr_prec_t prec)
{
    return HPComplex(HPReal(v.real(), prec), HPReal(v.imag(), prec));
}

mpfr_prec_t HPComplex::precision() const
{
    return std::max(re_.precision(), im_.precision());
}

HPComplex HPComplex::with_precision(mpfr_prec_t prec) const
{
    return HPComplex(re_.with_precision(prec), im_.with_precision(prec));
}

std::string HPComplex::to_string(int digits) const
{
    std::string r = re_.to_string(digits);
    std::string i = im_.to_string(digits);
    if (i.front() != '-' && i.front() != '+') {
        i = "+" + i;
    }
    return r + i + "i";
}

HPComplex &HPComplex::operator+=(const HPComplex &o)
{
    return *this = *this + o;
}

HPComplex &HPComplex::operator-=(const HPComplex &o)
{
    return *this = *this - o;
}

HPComplex &HPComplex::operator*=(const HPComplex &o)
{
    return *this = *this * o;
}

HPComplex &HPComplex::operator/=(const HPComplex &o)
{
    return *this = *this / o;
}

HPComplex HPComplex::operator-() const
{
    return HPComplex(-re_, -im_);
}

HPComplex operator+(const HPComplex &a, const HPComplex &b)
{
    return HPComplex(a.re_ + b.re_, a.im_ + b.im_);
}

HPComplex operator-(const HPComplex &a, const HPComplex &b)
{
    return HPComplex(a.re_ - b.re_, a.im_ - b.im_);
}

HPComplex operator*(const HPComplex &a, const HPComplex &b)
{
    if (b.im_.is_zero()) {
        return HPComplex(a.re_ * b.re_, a.im_ * b.re_);
    }
    if (a.im_.is_zero()) {
        return HPComplex(a.re_ * b.re_, a.re_ * b.im_);
    }
    return HPComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

HPComplex operator/(const HPComplex &a, const HPComplex &b)
{
    if (b.is_zero()) {
        throw domain_error("HPComplex: division by zero");
    }
    if (b.im_.is_zero()) {
        return HPComplex(a.re_ / b.re_, a.im_ / b.re_);
    }
    const HPReal den = b.re_ * b.re_ + b.im_ * b.im_;
    return HPComplex((a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den);
}

HPComplex operator*(const HPComplex &a, long b)
{
    return HPComplex(a.re_ * b, a.im_ * b);
}

HPComplex operator/(const HPComplex &a, long b)
{
    if (b == 0) {
        throw domain_error("HPComplex: division by zero");
    }
    return HPComplex(a.re_ / b, a.im_ / b);
}

HPComplex operator+(const HPComplex &a, long b)
{
    return HPComplex(a.re_ + b, a.im_);
}

HPComplex operator*(const HPComplex &a, const HPReal &b)
{
    return HPComplex(a.re_ * b, a.im_ * b);
}

HPComplex operator/(const HPComplex &a, const HPReal &b)
{
    if (b.is_zero()) {
        throw domain_error("HPComplex: division by zero");
    }
    return HPComplex(a.re_ / b, a.im_ / b);
}

std::ostream &operator<<(std::ostream &os, const HPComplex &z)
{
    return os << z.to_string(static_cast<int>(static_cast<double>(z.precision()) * 0.30103));
}

HPReal abs(const HPComplex &z)
{
    return hypot(z.re(), z.im());
}

HPReal arg(const HPComplex &z)
{
    return atan2(z.im(), z.re());
}

HPComplex conj(const HPComplex &z)
{
    return HPComplex(z.re(), -z.im());
}

HPComplex exp(const HPComplex &z)
{
    const HPReal m = exp(z.re());
    if (z.im().is_zero()) {
        return HPComplex(m, HPReal(z.precision()));
    }
    HPReal s(z.precision()), c(z.precision());
    mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
    return HPComplex(m * c, m * s);
}

HPComplex log(const HPComplex &z)
{
    if (z.is_zero()) {
        throw domain_error("HPComplex: log of zero");
    }
    return HPComplex(log(abs(z)), arg(z));
}

HPComplex pow(const HPComplex &z, const HPComplex &w)
{
    if (w.is_zero()) {
        return field_one(z.precision() >= w.precision() ? z : w);
    }
    if (z.is_zero()) {
        if (w.re().sign() > 0) {
            return HPComplex(std::max(z.precision(), w.precision()));
        }
        throw domain_error("HPComplex: zero to a non-positive power");
    }
    return exp(w * log(z));
}

HPComplex pow(const HPComplex &z, long n)
{
    if (n < 0) {
        return field_one(z) / pow(z, -n);
    }
    HPComplex result = field_one(z);
    HPComplex base = z;
    unsigned long e = static_cast<unsigned long>(n);
    while (e != 0) {
        if (e & 1UL) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

HPComplex sqrt(const HPComplex &z)
{
    if (z.is_zero()) {
        return z;
    }
    HPComplex half(Rational(1, 2), z.precision());
    return exp(half * log(z));
}

HPComplex sin(const HPComplex &z)
{
    if (z.im().is_zero()) {
        return HPComplex(sin(z.re()), HPReal(z.precision()));
    }
    return HPComplex(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im()));
}

HPComplex cos(const HPComplex &z)
{
    if (z.im().is_zero()) {
        return HPComplex(cos(z.re()), HPReal(z.precision()));
    }
    return HPComplex(cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im())));
}

HPReal relative_error(const HPComplex &approx, const HPComplex &exact)
{
    const HPReal diff = abs(approx - exact);
    const HPReal den = abs(exact);
    if (den.is_zero()) {
        return diff;
    }
    return diff / den;
}

bool is_integer_valued(const HPComplex &z)
{
    const mpfr_prec_t p = z.precision();
    const HPReal tol = ldexp(HPReal(1L, p), -static_cast<long>(p / 2));
    if (abs(z.im()) > tol) {
        return false;
    }
    HPReal rounded(p);
    mpfr_round(rounded.get(), z.re().get());
    return abs(z.re() - rounded) <= tol;
}

} // namespace polyasym

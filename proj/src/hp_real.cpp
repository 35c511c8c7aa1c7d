#include <polyasym/hp_real.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polyasym
{

namespace
{

void check_precision(mpfr_prec_t prec)
{
    if (prec < min_precision) {
        throw std::invalid_argument("precision below " + std::to_string(min_precision) + " bits: "
                                    + std::to_string(static_cast<long>(prec)));
    }
}

template <typename Fn>
HPReal unary(const HPReal &x, Fn fn)
{
    HPReal r(x.precision());
    fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}

template <typename Fn>
HPReal binary(const HPReal &a, const HPReal &b, Fn fn)
{
    HPReal r(std::max(a.precision(), b.precision()));
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

} // namespace

HPReal::HPReal() : HPReal(min_precision) {}

HPReal::HPReal(mpfr_prec_t prec)
{
    check_precision(prec);
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long v, mpfr_prec_t prec) : HPReal(prec)
{
    mpfr_set_si(v_, v, MPFR_RNDN);
}

HPReal::HPReal(double v, mpfr_prec_t prec) : HPReal(prec)
{
    mpfr_set_d(v_, v, MPFR_RNDN);
}

HPReal::HPReal(const Rational &q, mpfr_prec_t prec) : HPReal(prec)
{
    mpfr_set_q(v_, q.get().get_mpq_t(), MPFR_RNDN);
}

HPReal::HPReal(const HPReal &o)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal &&o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

HPReal &HPReal::operator=(const HPReal &o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HPReal &HPReal::operator=(HPReal &&o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

HPReal::~HPReal()
{
    mpfr_clear(v_);
}

HPReal HPReal::parse(std::string_view text, mpfr_prec_t prec)
{
    HPReal r(prec);
    std::string s(text);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("malformed real number '" + s + "'");
    }
    return r;
}

HPReal HPReal::with_precision(mpfr_prec_t prec) const
{
    HPReal r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long HPReal::exponent2() const
{
    if (is_zero()) {
        return -(1L << 40);
    }
    return static_cast<long>(mpfr_get_exp(v_));
}

std::string HPReal::to_string(int digits) const
{
    if (digits < 1) {
        digits = 1;
    }
    char *buf = nullptr;
    if (mpfr_zero_p(v_)) {
        // no signed zeros in text
        mpfr_asprintf(&buf, "%.*Re", digits - 1, HPReal(precision()).v_);
    } else {
        mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    }
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

HPReal &HPReal::operator+=(const HPReal &o)
{
    return *this = *this + o;
}

HPReal &HPReal::operator-=(const HPReal &o)
{
    return *this = *this - o;
}

HPReal &HPReal::operator*=(const HPReal &o)
{
    return *this = *this * o;
}

HPReal &HPReal::operator/=(const HPReal &o)
{
    return *this = *this / o;
}

HPReal HPReal::operator-() const
{
    return unary(*this, mpfr_neg);
}

HPReal operator+(const HPReal &a, const HPReal &b)
{
    return binary(a, b, mpfr_add);
}

HPReal operator-(const HPReal &a, const HPReal &b)
{
    return binary(a, b, mpfr_sub);
}

HPReal operator*(const HPReal &a, const HPReal &b)
{
    return binary(a, b, mpfr_mul);
}

HPReal operator/(const HPReal &a, const HPReal &b)
{
    return binary(a, b, mpfr_div);
}

HPReal operator*(const HPReal &a, long b)
{
    HPReal r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

HPReal operator/(const HPReal &a, long b)
{
    HPReal r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

HPReal operator+(const HPReal &a, long b)
{
    HPReal r(a.precision());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const HPReal &a, const HPReal &b)
{
    if (mpfr_unordered_p(a.v_, b.v_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::ostream &operator<<(std::ostream &os, const HPReal &x)
{
    return os << x.to_string(static_cast<int>(static_cast<double>(x.precision()) * 0.30103));
}

HPReal abs(const HPReal &x)
{
    return unary(x, mpfr_abs);
}

HPReal sqrt(const HPReal &x)
{
    return unary(x, mpfr_sqrt);
}

HPReal exp(const HPReal &x)
{
    return unary(x, mpfr_exp);
}

HPReal log(const HPReal &x)
{
    return unary(x, mpfr_log);
}

HPReal sin(const HPReal &x)
{
    return unary(x, mpfr_sin);
}

HPReal cos(const HPReal &x)
{
    return unary(x, mpfr_cos);
}

HPReal sinh(const HPReal &x)
{
    return unary(x, mpfr_sinh);
}

HPReal cosh(const HPReal &x)
{
    return unary(x, mpfr_cosh);
}

HPReal atan2(const HPReal &y, const HPReal &x)
{
    return binary(y, x, mpfr_atan2);
}

HPReal hypot(const HPReal &x, const HPReal &y)
{
    return binary(x, y, mpfr_hypot);
}

HPReal pow(const HPReal &x, const HPReal &y)
{
    return binary(x, y, mpfr_pow);
}

HPReal max(const HPReal &a, const HPReal &b)
{
    return binary(a, b, mpfr_max);
}

HPReal ldexp(const HPReal &x, long e)
{
    HPReal r(x.precision());
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

} // namespace polyasym

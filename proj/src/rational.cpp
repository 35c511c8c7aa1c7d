#include <polyasym/rational.hpp>

#include <cctype>
#include <stdexcept>

#include <polyasym/errors.hpp>

namespace polyasym
{

Rational::Rational(long n) : q_(n) {}

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class &n, const mpz_class &d)
{
    if (d == 0) {
        throw domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpq_class &q) : q_(q)
{
    if (q_.get_den() == 0) {
        throw domain_error("Rational: zero denominator");
    }
    q_.canonicalize();
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    mpz_class v(std::string(s), 10);
    return neg ? mpz_class(-v) : v;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }

    bool neg = false;
    std::string_view s = text;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mpz_class ev = parse_integer(s.substr(e + 1));
        if (!ev.fits_slong_p()) {
            throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
        }
        exponent = ev.get_si();
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
        digits = std::string(s);
    }
    if (digits.empty()) {
        digits = "0";
    }
    mpz_class mant(digits, 10);
    if (neg) {
        mant = -mant;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? Rational(mant * scale, mpz_class(1)) : Rational(mant, scale);
}

std::optional<long> Rational::to_long() const
{
    if (!is_integer() || !q_.get_num().fits_slong_p()) {
        return std::nullopt;
    }
    return q_.get_num().get_si();
}

Rational Rational::pow(long e) const
{
    if (e < 0) {
        if (is_zero()) {
            throw domain_error("Rational::pow: zero to a negative power");
        }
        return Rational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(q_)));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o)
{
    q_ += o.q_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    q_ -= o.q_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    q_ *= o.q_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-q_));
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.to_string();
}

} // namespace polyasym

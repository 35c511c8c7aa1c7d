#ifndef POLYASYM_RATIONAL_HPP
#define POLYASYM_RATIONAL_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyasym
{

// Exact arbitrary-precision fraction. The representation is kept canonical
// (denominator > 0, gcd(|num|, den) = 1) after every operation.
class Rational
{
public:
    Rational() = default;
    Rational(long n);
    Rational(long n, long d);
    Rational(const mpz_class &n, const mpz_class &d);
    explicit Rational(const mpq_class &q);

    // Accepts "p", "p/q" and decimal notation with optional exponent
    // ("-2.5", "1e-3", ".75"). Decimal strings are converted exactly.
    static Rational parse(std::string_view text);

    const mpz_class &numerator() const { return q_.get_num(); }
    const mpz_class &denominator() const { return q_.get_den(); }
    const mpq_class &get() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    std::optional<long> to_long() const;
    double to_double() const { return q_.get_d(); }

    Rational pow(long e) const;
    Rational abs() const;

    std::string to_string() const;

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator*(Rational a, long b) { return a *= Rational(b); }
    friend Rational operator/(Rational a, long b) { return a /= Rational(b); }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    mpq_class q_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

// Field helpers shared with HPComplex so series code can be written once.
inline Rational field_one(const Rational &) { return Rational(1); }
inline Rational field_zero(const Rational &) { return Rational(0); }
inline Rational field_from(long v, const Rational &) { return Rational(v); }
inline Rational field_from(const Rational &q, const Rational &) { return q; }
inline bool is_zero(const Rational &q) { return q.is_zero(); }

} // namespace polyasym

#endif

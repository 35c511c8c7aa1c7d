#ifndef POLYASYM_BIVARIATE_POLYNOMIAL_HPP
#define POLYASYM_BIVARIATE_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include <polyasym/hp_complex.hpp>
#include <polyasym/rational.hpp>

namespace polyasym
{

// Exact polynomial sum c_ij z^i t^j with rational coefficients. Used to carry
// Fourier residue coefficients symbolically in z and in t = 2 pi i k, so
// z-derivatives and identities between constructions are exact.
class BivariatePolynomial
{
public:
    BivariatePolynomial() = default;
    static BivariatePolynomial constant(const Rational &c);
    static BivariatePolynomial z_power(std::size_t i);
    static BivariatePolynomial t_power(std::size_t j);

    // Degree bounds (exclusive) of the stored coefficient grid.
    std::size_t z_extent() const { return c_.size(); }
    std::size_t t_extent() const;

    Rational coeff(std::size_t i, std::size_t j) const;
    void add_to(std::size_t i, std::size_t j, const Rational &v);

    BivariatePolynomial derivative_z() const;
    HPComplex evaluate(const HPComplex &z, const HPComplex &t) const;

    friend BivariatePolynomial operator+(const BivariatePolynomial &a, const BivariatePolynomial &b);
    friend BivariatePolynomial operator-(const BivariatePolynomial &a, const BivariatePolynomial &b);
    friend BivariatePolynomial operator*(const BivariatePolynomial &a, const BivariatePolynomial &b);
    friend BivariatePolynomial operator*(const BivariatePolynomial &a, const Rational &s);

    // Equality as polynomials (trailing zero coefficients ignored).
    friend bool operator==(const BivariatePolynomial &a, const BivariatePolynomial &b);

private:
    std::vector<std::vector<Rational>> c_;
};

} // namespace polyasym

#endif

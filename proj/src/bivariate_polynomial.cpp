#include <polyasym/bivariate_polynomial.hpp>

#include <algorithm>

namespace polyasym
{

BivariatePolynomial BivariatePolynomial::constant(const Rational &c)
{
    BivariatePolynomial p;
    p.add_to(0, 0, c);
    return p;
}

BivariatePolynomial BivariatePolynomial::z_power(std::size_t i)
{
    BivariatePolynomial p;
    p.add_to(i, 0, Rational(1));
    return p;
}

BivariatePolynomial BivariatePolynomial::t_power(std::size_t j)
{
    BivariatePolynomial p;
    p.add_to(0, j, Rational(1));
    return p;
}

std::size_t BivariatePolynomial::t_extent() const
{
    std::size_t n = 0;
    for (const auto &row : c_) {
        n = std::max(n, row.size());
    }
    return n;
}

Rational BivariatePolynomial::coeff(std::size_t i, std::size_t j) const
{
    if (i >= c_.size() || j >= c_[i].size()) {
        return Rational(0);
    }
    return c_[i][j];
}

void BivariatePolynomial::add_to(std::size_t i, std::size_t j, const Rational &v)
{
    if (c_.size() <= i) {
        c_.resize(i + 1);
    }
    if (c_[i].size() <= j) {
        c_[i].resize(j + 1);
    }
    c_[i][j] += v;
}

BivariatePolynomial BivariatePolynomial::derivative_z() const
{
    BivariatePolynomial d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            if (!c_[i][j].is_zero()) {
                d.add_to(i - 1, j, c_[i][j] * static_cast<long>(i));
            }
        }
    }
    return d;
}

HPComplex BivariatePolynomial::evaluate(const HPComplex &z, const HPComplex &t) const
{
    const mpfr_prec_t p = std::max(z.precision(), t.precision());
    HPComplex result(p);
    for (std::size_t i = c_.size(); i-- > 0;) {
        HPComplex row(p);
        for (std::size_t j = c_[i].size(); j-- > 0;) {
            row = row * t + HPComplex(c_[i][j], p);
        }
        result = result * z + row;
    }
    return result;
}

BivariatePolynomial operator+(const BivariatePolynomial &a, const BivariatePolynomial &b)
{
    BivariatePolynomial r = a;
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_[i].size(); ++j) {
            r.add_to(i, j, b.c_[i][j]);
        }
    }
    return r;
}

BivariatePolynomial operator-(const BivariatePolynomial &a, const BivariatePolynomial &b)
{
    return a + b * Rational(-1);
}

BivariatePolynomial operator*(const BivariatePolynomial &a, const BivariatePolynomial &b)
{
    BivariatePolynomial r;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
            if (a.c_[i][j].is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < b.c_.size(); ++k) {
                for (std::size_t l = 0; l < b.c_[k].size(); ++l) {
                    if (!b.c_[k][l].is_zero()) {
                        r.add_to(i + k, j + l, a.c_[i][j] * b.c_[k][l]);
                    }
                }
            }
        }
    }
    return r;
}

BivariatePolynomial operator*(const BivariatePolynomial &a, const Rational &s)
{
    BivariatePolynomial r = a;
    for (auto &row : r.c_) {
        for (auto &v : row) {
            v *= s;
        }
    }
    return r;
}

bool operator==(const BivariatePolynomial &a, const BivariatePolynomial &b)
{
    const std::size_t ni = std::max(a.z_extent(), b.z_extent());
    const std::size_t nj = std::max(a.t_extent(), b.t_extent());
    for (std::size_t i = 0; i < ni; ++i) {
        for (std::size_t j = 0; j < nj; ++j) {
            if (a.coeff(i, j) != b.coeff(i, j)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace polyasym

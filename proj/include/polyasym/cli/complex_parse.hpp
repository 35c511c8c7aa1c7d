#ifndef POLYASYM_CLI_COMPLEX_PARSE_HPP
#define POLYASYM_CLI_COMPLEX_PARSE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <polyasym/hp_complex.hpp>
#include <polyasym/rational.hpp>

namespace polyasym::cli
{

// Thrown for malformed command-line or config input.
class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an input or output file cannot be read or written.
class io_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A complex number with exact rational parts. Every accepted literal
// (integers, decimals, a/b, exponents) is exact, so the rational oracle
// can be used whenever the imaginary part vanishes.
struct ComplexRational
{
    Rational re;
    Rational im;

    bool is_real() const { return im.is_zero(); }
    // The integer value when real and integral.
    std::optional<long> as_integer() const;
    HPComplex to_hp(mpfr_prec_t prec) const;
    // Canonical text: "3/2", "-1/4i", "3/2+1/4i".
    std::string to_string() const;
};

// Accepts "x", "yi", "x+yi", "x-yi", "i", "-i" where x and y are rational
// literals such as 2, -0.3, 1/2 or 1e-3.
ComplexRational parse_complex(std::string_view text);

// "A:B:step" (inclusive, A <= B, step > 0 and defaulting to 1) or a single integer.
std::vector<long> parse_n_range(std::string_view text);

// Comma-separated items, each an integer or an A:B:step range, kept in order.
std::vector<long> parse_n_list(std::string_view text);

// Splits on commas and trims whitespace; empty items are rejected.
std::vector<std::string> split_list(std::string_view text);

std::string_view trim(std::string_view s);

} // namespace polyasym::cli

#endif

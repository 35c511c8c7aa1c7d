#ifndef POLYASYM_CLI_FORMAT_HPP
#define POLYASYM_CLI_FORMAT_HPP

#include <ostream>
#include <string>
#include <vector>

#include <polyasym/hp_complex.hpp>
#include <polyasym/rational.hpp>

namespace polyasym::cli
{

enum class OutputFormat
{
    Text,
    Csv,
    Json
};

OutputFormat format_from_name(const std::string &name);

struct Cell
{
    enum class Kind
    {
        Integer,
        Complex,
        Text
    };
    std::string text;
    Kind kind = Kind::Text;

    static Cell integer(long v) { return {std::to_string(v), Kind::Integer}; }
    static Cell complex(std::string v) { return {std::move(v), Kind::Complex}; }
    static Cell str(std::string v) { return {std::move(v), Kind::Text}; }
};

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Significant decimal digits carried by a binary precision.
int decimal_digits(mpfr_prec_t prec);

std::string format_complex(const HPComplex &z, mpfr_prec_t prec);
std::string format_exact(const Rational &q);
// Error-like quantities: a short mantissa, "0" when exactly zero.
std::string format_error(const HPReal &x);

// CSV: header row, comma separated, complex cells always quoted.
// JSON: array of objects keyed by column name; integer cells as numbers.
// Text: "column: value" lines for a single row, aligned columns otherwise.
void write_table(std::ostream &os, const Table &t, OutputFormat f);

} // namespace polyasym::cli

#endif

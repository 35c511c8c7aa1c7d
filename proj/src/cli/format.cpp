#include <polyasym/cli/format.hpp>

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include <polyasym/cli/complex_parse.hpp>

namespace polyasym::cli
{

OutputFormat format_from_name(const std::string &name)
{
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw usage_error("unknown format '" + name + "' (expected text, csv or json)");
}

int decimal_digits(mpfr_prec_t prec)
{
    return std::max(1, static_cast<int>(std::floor(static_cast<double>(prec) * std::log10(2.0))));
}

std::string format_complex(const HPComplex &z, mpfr_prec_t prec)
{
    return z.with_precision(prec).to_string(decimal_digits(prec));
}

std::string format_exact(const Rational &q)
{
    return q.to_string();
}

std::string format_error(const HPReal &x)
{
    if (x.is_zero()) {
        return "0";
    }
    return x.to_string(6);
}

namespace
{

std::string csv_field(const Cell &c)
{
    const bool quote = c.kind == Cell::Kind::Complex || c.text.find_first_of(",\"\n") != std::string::npos;
    if (!quote) {
        return c.text;
    }
    std::string out = "\"";
    for (char ch : c.text) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}

} // namespace

void write_table(std::ostream &os, const Table &t, OutputFormat f)
{
    switch (f) {
    case OutputFormat::Csv:
        for (std::size_t j = 0; j < t.columns.size(); ++j) {
            os << (j ? "," : "") << t.columns[j];
        }
        os << '\n';
        for (const auto &row : t.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                os << (j ? "," : "") << csv_field(row[j]);
            }
            os << '\n';
        }
        break;
    case OutputFormat::Json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto &row : t.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j].kind == Cell::Kind::Integer) {
                    obj[t.columns[j]] = std::stol(row[j].text);
                } else {
                    obj[t.columns[j]] = row[j].text;
                }
            }
            arr.push_back(std::move(obj));
        }
        os << arr.dump(2) << '\n';
        break;
    }
    case OutputFormat::Text:
        if (t.rows.size() == 1) {
            for (std::size_t j = 0; j < t.columns.size(); ++j) {
                os << t.columns[j] << ": " << t.rows[0][j].text << '\n';
            }
            break;
        }
        {
            std::vector<std::size_t> width(t.columns.size());
            for (std::size_t j = 0; j < t.columns.size(); ++j) {
                width[j] = t.columns[j].size();
                for (const auto &row : t.rows) {
                    width[j] = std::max(width[j], row[j].text.size());
                }
            }
            auto line = [&](auto cell) {
                for (std::size_t j = 0; j < t.columns.size(); ++j) {
                    const std::string &s = cell(j);
                    os << s;
                    if (j + 1 < t.columns.size()) {
                        os << std::string(width[j] - s.size() + 2, ' ');
                    }
                }
                os << '\n';
            };
            line([&](std::size_t j) -> const std::string & { return t.columns[j]; });
            for (const auto &row : t.rows) {
                line([&](std::size_t j) -> const std::string & { return row[j].text; });
            }
        }
        break;
    }
}

} // namespace polyasym::cli

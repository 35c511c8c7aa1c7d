#ifndef POLYASYM_CLI_REPORT_HPP
#define POLYASYM_CLI_REPORT_HPP

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <polyasym/cli/commands.hpp>

namespace polyasym::cli
{

struct SweepConfig
{
    std::string name;
    Family family = Family::Bernoulli;
    std::vector<std::string> methods;
    std::vector<long> ns;
    std::vector<ComplexRational> mus;
    std::vector<ComplexRational> zs;
    // nullopt selects the method default.
    std::vector<std::optional<long>> terms{std::nullopt};
    mpfr_prec_t precision = default_precision;
};

// Line-oriented key = value. Global keys (output, precision, title) come
// before the first [sweep] section; each section takes name, family,
// methods, n, mu, z, terms and precision. '#' starts a comment.
struct ReportConfig
{
    std::string title = "polyasym report";
    std::string output = "report";
    mpfr_prec_t precision = default_precision;
    std::vector<SweepConfig> sweeps;
};

ReportConfig parse_report_config(std::istream &in, const std::string &source);
ReportConfig load_report_config(const std::string &path);

struct ReportSummary
{
    std::size_t rows = 0;
    std::size_t errors = 0;
    std::vector<std::string> files;
};

// Writes <sweep>-<method>.csv, rates.csv, report.md and manifest.txt into
// out_dir. Only the manifest is written when the sweeps contain no points.
ReportSummary run_report(const ReportConfig &cfg, const std::filesystem::path &out_dir);

// Least-squares slope of ly against lx (both already logarithms); nullopt
// with fewer than two distinct abscissae.
std::optional<double> fit_slope(const std::vector<double> &lx, const std::vector<double> &ly);

} // namespace polyasym::cli

#endif

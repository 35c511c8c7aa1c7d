#include <polyasym/cli/report.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <gmp.h>
#include <mpfr.h>

#include <polyasym/errors.hpp>

#ifndef POLYASYM_VERSION
#define POLYASYM_VERSION "unknown"
#endif

namespace polyasym::cli
{

namespace
{

mpfr_prec_t parse_precision(const std::string &v, const std::string &where)
{
    const auto n = parse_n_range(v);
    if (n.size() != 1 || n[0] < min_precision) {
        throw usage_error(where + ": precision must be an integer >= " + std::to_string(min_precision));
    }
    return n[0];
}

bool valid_name(const std::string &s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') {
            return false;
        }
    }
    return true;
}

template <class T>
std::string join(const std::vector<T> &v, const std::string &sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? sep : "") << v[i];
    }
    return os.str();
}

std::string terms_text(const std::optional<long> &t)
{
    return t ? std::to_string(*t) : std::string("default");
}

std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

void write_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot write " + path.string());
    }
    out << content;
    out.close();
    if (!out) {
        throw io_error("write failed for " + path.string());
    }
}

struct RowResult
{
    long n;
    std::size_t mu_index;
    std::size_t z_index;
    std::size_t terms_index;
    std::vector<Cell> cells;
    std::optional<HPReal> rel_err;
    bool failed = false;
};

struct RateKey
{
    std::size_t mu;
    std::size_t z;
    std::size_t terms;
    auto operator<=>(const RateKey &) const = default;
};

} // namespace

ReportConfig parse_report_config(std::istream &in, const std::string &source)
{
    ReportConfig cfg;
    SweepConfig *cur = nullptr;
    std::vector<bool> sweep_precision_set;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = source + ":" + std::to_string(lineno);
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string_view s = trim(line);
        if (s.empty()) {
            continue;
        }
        if (s.front() == '[') {
            if (s != "[sweep]") {
                throw usage_error(where + ": unknown section " + std::string(s));
            }
            cfg.sweeps.emplace_back();
            cfg.sweeps.back().name = "sweep" + std::to_string(cfg.sweeps.size());
            sweep_precision_set.push_back(false);
            cur = &cfg.sweeps.back();
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) {
            throw usage_error(where + ": expected key = value");
        }
        const std::string key(trim(s.substr(0, eq)));
        const std::string value(trim(s.substr(eq + 1)));
        try {
            if (!cur) {
                if (key == "output") {
                    cfg.output = value;
                } else if (key == "precision") {
                    cfg.precision = parse_precision(value, where);
                } else if (key == "title") {
                    cfg.title = value;
                } else {
                    throw usage_error(where + ": unknown global key '" + key + "'");
                }
                continue;
            }
            if (key == "name") {
                if (!valid_name(value)) {
                    throw usage_error(where + ": sweep name must use letters, digits, '-' or '_'");
                }
                cur->name = value;
            } else if (key == "family") {
                cur->family = family_from_name(value);
            } else if (key == "methods") {
                cur->methods = split_list(value);
                for (const auto &m : cur->methods) {
                    if (!method_from_name(m)) {
                        throw usage_error(where + ": unknown method '" + m + "'");
                    }
                }
            } else if (key == "n") {
                cur->ns = parse_n_list(value);
                for (long n : cur->ns) {
                    if (n < 0) {
                        throw usage_error(where + ": n must be non-negative");
                    }
                }
            } else if (key == "mu" || key == "z") {
                std::vector<ComplexRational> v;
                for (const auto &item : split_list(value)) {
                    v.push_back(parse_complex(item));
                }
                (key == "mu" ? cur->mus : cur->zs) = std::move(v);
            } else if (key == "terms") {
                cur->terms.clear();
                for (const auto &item : split_list(value)) {
                    if (item == "default") {
                        cur->terms.emplace_back(std::nullopt);
                        continue;
                    }
                    const auto t = parse_n_range(item);
                    if (t.size() != 1 || t[0] < 0) {
                        throw usage_error(where + ": terms must be non-negative integers or 'default'");
                    }
                    cur->terms.emplace_back(t[0]);
                }
            } else if (key == "precision") {
                cur->precision = parse_precision(value, where);
                sweep_precision_set.back() = true;
            } else {
                throw usage_error(where + ": unknown sweep key '" + key + "'");
            }
        } catch (const usage_error &e) {
            const std::string msg = e.what();
            throw usage_error(msg.rfind(source, 0) == 0 ? msg : where + ": " + msg);
        }
    }
    for (std::size_t i = 0; i < cfg.sweeps.size(); ++i) {
        auto &sw = cfg.sweeps[i];
        if (!sweep_precision_set[i]) {
            sw.precision = cfg.precision;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (cfg.sweeps[j].name == sw.name) {
                throw usage_error(source + ": duplicate sweep name '" + sw.name + "'");
            }
        }
    }
    return cfg;
}

ReportConfig load_report_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot read config " + path);
    }
    return parse_report_config(in, path);
}

std::optional<double> fit_slope(const std::vector<double> &lx, const std::vector<double> &ly)
{
    const std::size_t k = lx.size();
    if (k < 2 || ly.size() != k) {
        return std::nullopt;
    }
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < k; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

ReportSummary run_report(const ReportConfig &cfg, const std::filesystem::path &out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        throw io_error("cannot create output directory " + out_dir.string());
    }

    ReportSummary summary;
    std::ostringstream manifest_sweeps;
    std::ostringstream rates;
    std::ostringstream md;
    rates << "sweep,method,mu,z,terms,points,slope\n";
    md << "# " << cfg.title << "\n";

    std::map<std::string, std::string> outputs;
    for (const auto &sw : cfg.sweeps) {
        std::size_t sweep_rows = 0;
        std::size_t sweep_errors = 0;
        std::vector<long> ns = sw.ns;
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        std::vector<std::string> methods = sw.methods;
        std::sort(methods.begin(), methods.end());
        methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

        md << "\n## " << sw.name << "\n\n";
        md << "family " << family_name(sw.family) << ", n = " << join(ns, ",") << ", precision " << sw.precision
           << " bits\n";

        // Oracle values per (mu, z), shared by all methods.
        std::vector<std::vector<std::vector<Reference>>> refs(sw.mus.size());
        if (!ns.empty() && !methods.empty()) {
            for (std::size_t i = 0; i < sw.mus.size(); ++i) {
                for (std::size_t j = 0; j < sw.zs.size(); ++j) {
                    refs[i].push_back(oracle_values(sw.family, ns.back(), sw.mus[i], sw.zs[j], sw.precision));
                }
            }
        }

        for (const auto &method : methods) {
            Table t;
            t.columns = {"n",       "mu",      "z",          "terms",      "value",      "oracle", "abs_err",
                         "rel_err", "error_estimate", "error_kind", "terms_used", "confidence", "error"};
            std::map<RateKey, std::pair<std::vector<double>, std::vector<double>>> fits;
            std::map<RateKey, HPReal> worst;
            for (std::size_t i = 0; i < sw.mus.size(); ++i) {
                for (std::size_t j = 0; j < sw.zs.size(); ++j) {
                    for (std::size_t q = 0; q < sw.terms.size(); ++q) {
                        for (long n : ns) {
                            const Reference &ref = refs[i][j].at(static_cast<std::size_t>(n));
                            const std::string oracle_text =
                                ref.exact ? format_exact(*ref.exact) : format_complex(ref.value, sw.precision);
                            std::vector<Cell> row = {Cell::integer(n), Cell::complex(sw.mus[i].to_string()),
                                                     Cell::complex(sw.zs[j].to_string()),
                                                     Cell::str(terms_text(sw.terms[q]))};
                            ++sweep_rows;
                            try {
                                const EvalRequest er{sw.family, n, sw.mus[i], sw.zs[j], method, sw.terms[q],
                                                     sw.precision};
                                const EvalOutcome out = evaluate(er);
                                HPReal rel;
                                std::string abs_text;
                                if (out.exact && ref.exact) {
                                    const Rational d = (*out.exact - *ref.exact).abs();
                                    rel = HPReal(ref.exact->is_zero() ? d : d / ref.exact->abs(), sw.precision);
                                    abs_text = format_error(HPReal(d, sw.precision));
                                } else {
                                    rel = relative_error(out.approx.value, ref.value);
                                    abs_text = format_error(abs(out.approx.value - ref.value));
                                }
                                const auto &a = out.approx;
                                row.insert(row.end(),
                                           {Cell::complex(out.value_text(sw.precision)), Cell::complex(oracle_text),
                                            Cell::str(abs_text), Cell::str(format_error(rel)),
                                            Cell::str(format_error(a.error_estimate)),
                                            Cell::str(std::string(error_kind_name(a.error_kind))),
                                            Cell::integer(static_cast<long>(a.terms_used)),
                                            Cell::str(std::string(confidence_name(a.confidence))), Cell::str("")});
                                const RateKey key{i, j, q};
                                if (!rel.is_zero() && rel.is_finite() && n > 0) {
                                    fits[key].first.push_back(std::log(static_cast<double>(n)));
                                    fits[key].second.push_back(log(rel).to_double());
                                }
                                auto it = worst.find(key);
                                if (it == worst.end()) {
                                    worst.emplace(key, rel);
                                } else if (rel > it->second) {
                                    it->second = rel;
                                }
                            } catch (const domain_error &e) {
                                ++sweep_errors;
                                row.insert(row.end(), {Cell::complex(""), Cell::complex(oracle_text), Cell::str(""),
                                                       Cell::str(""), Cell::str(""), Cell::str(""), Cell::str(""),
                                                       Cell::str(""), Cell::str(e.what())});
                            }
                            t.rows.push_back(std::move(row));
                        }
                    }
                }
            }
            if (t.rows.empty()) {
                continue;
            }
            std::ostringstream csv;
            write_table(csv, t, OutputFormat::Csv);
            outputs[sw.name + "-" + method + ".csv"] = csv.str();

            md << "\n### " << method << "\n\n| mu | z | terms | points | slope | max rel err |\n|---|---|---|---|---|---|\n";
            for (std::size_t i = 0; i < sw.mus.size(); ++i) {
                for (std::size_t j = 0; j < sw.zs.size(); ++j) {
                    for (std::size_t q = 0; q < sw.terms.size(); ++q) {
                        const RateKey key{i, j, q};
                        const auto f = fits.find(key);
                        const std::size_t points = f == fits.end() ? 0 : f->second.first.size();
                        const auto slope = f == fits.end() ? std::nullopt : fit_slope(f->second.first, f->second.second);
                        const std::string slope_text = slope ? fixed(*slope, 4) : "";
                        const auto w = worst.find(key);
                        const std::string worst_text = w == worst.end() ? "error" : format_error(w->second);
                        rates << sw.name << ',' << method << ",\"" << sw.mus[i].to_string() << "\",\""
                              << sw.zs[j].to_string() << "\"," << terms_text(sw.terms[q]) << ',' << points << ','
                              << slope_text << '\n';
                        md << "| " << sw.mus[i].to_string() << " | " << sw.zs[j].to_string() << " | "
                           << terms_text(sw.terms[q]) << " | " << points << " | " << slope_text << " | "
                           << worst_text << " |\n";
                    }
                }
            }
        }
        if (sweep_errors) {
            md << "\n" << sweep_errors << " row(s) failed; see the error column of the CSV files.\n";
        }

        std::vector<std::string> mu_text;
        std::vector<std::string> z_text;
        std::vector<std::string> t_text;
        for (const auto &m : sw.mus) {
            mu_text.push_back(m.to_string());
        }
        for (const auto &z : sw.zs) {
            z_text.push_back(z.to_string());
        }
        for (const auto &t : sw.terms) {
            t_text.push_back(terms_text(t));
        }
        manifest_sweeps << "\n[sweep]\nname = " << sw.name << "\nfamily = " << family_name(sw.family)
                        << "\nmethods = " << join(methods, ",") << "\nn = " << join(ns, ",")
                        << "\nmu = " << join(mu_text, ",") << "\nz = " << join(z_text, ",")
                        << "\nterms = " << join(t_text, ",") << "\nprecision = " << sw.precision
                        << "\nrows = " << sweep_rows << "\nerrors = " << sweep_errors << "\n";
        summary.rows += sweep_rows;
        summary.errors += sweep_errors;
    }

    if (summary.rows > 0) {
        outputs["rates.csv"] = rates.str();
        outputs["report.md"] = md.str();
    }
    for (const auto &[name, content] : outputs) {
        write_file(out_dir / name, content);
        summary.files.push_back(name);
    }

    std::ostringstream manifest;
    manifest << "title = " << cfg.title << "\ntool = polyasym " << POLYASYM_VERSION << "\ngmp = " << gmp_version
             << "\nmpfr = " << mpfr_get_version() << "\nprecision = " << cfg.precision
             << "\nsweeps = " << cfg.sweeps.size() << "\nrows = " << summary.rows
             << "\nerror_count = " << summary.errors << "\nfiles = " << join(summary.files, ",") << "\n"
             << manifest_sweeps.str();
    write_file(out_dir / "manifest.txt", manifest.str());
    summary.files.push_back("manifest.txt");
    return summary;
}

} // namespace polyasym::cli

#include <polyasym/cli/app.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include <polyasym/cli/commands.hpp>
#include <polyasym/cli/report.hpp>
#include <polyasym/errors.hpp>

namespace polyasym::cli
{

namespace
{

struct Common
{
    std::string family_pos;
    std::string family_opt;
    std::string mu;
    std::string z;
    std::optional<long> terms;
    std::optional<long> precision;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App *cmd, Common &c)
{
    cmd->add_option("FAMILY", c.family_pos, "bernoulli or euler");
    cmd->add_option("--family", c.family_opt, "bernoulli or euler");
    cmd->add_option("--mu", c.mu, "order mu (complex, e.g. 1/2 or 3/2+1/4i)")->required();
    cmd->add_option("--z", c.z, "argument z (complex)")->required();
    cmd->add_option("--terms,-K", c.terms, "truncation index K");
    cmd->add_option("--precision", c.precision, "working precision in bits (default 256)");
    cmd->add_option("--format", c.format, "text, csv or json");
    cmd->add_option("--out", c.out, "write to this file instead of stdout");
}

std::optional<Family> resolve_family(const Common &c, bool required)
{
    if (!c.family_pos.empty() && !c.family_opt.empty() && c.family_pos != c.family_opt) {
        throw usage_error("conflicting families '" + c.family_pos + "' and '" + c.family_opt + "'");
    }
    const std::string &name = c.family_opt.empty() ? c.family_pos : c.family_opt;
    if (name.empty()) {
        if (required) {
            throw usage_error("a family (bernoulli or euler) is required");
        }
        return std::nullopt;
    }
    return family_from_name(name);
}

mpfr_prec_t resolve_precision(const std::optional<long> &flag)
{
    long p = default_precision;
    if (flag) {
        p = *flag;
    } else if (const char *env = std::getenv("POLYASYM_PRECISION"); env && *env) {
        const auto v = parse_n_range(env);
        if (v.size() != 1) {
            throw usage_error("POLYASYM_PRECISION must be an integer");
        }
        p = v[0];
    }
    if (p < min_precision) {
        throw usage_error("precision must be at least " + std::to_string(min_precision) + " bits");
    }
    return p;
}

void emit(const Table &t, const Common &c, std::ostream &out)
{
    const OutputFormat f = format_from_name(c.format);
    if (c.out.empty()) {
        write_table(out, t, f);
        return;
    }
    std::ostringstream buf;
    write_table(buf, t, f);
    std::ofstream file(c.out, std::ios::binary);
    if (!file || !(file << buf.str()) || (file.close(), !file)) {
        throw io_error("cannot write " + c.out);
    }
}

} // namespace

int run_app(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Asymptotic and convergent expansions of generalized Bernoulli and Euler polynomials", "polyasym"};
    app.require_subcommand(1);

    Common ev;
    long eval_n = 0;
    std::string eval_method = "oracle";
    auto *eval = app.add_subcommand("eval", "evaluate one value with a chosen method");
    add_common(eval, ev);
    eval->add_option("--n", eval_n, "degree n")->required();
    eval->add_option("--method", eval_method, "oracle, finite-sum, leading, saddle, fourier, fourier-leading, "
                                              "watson, twopoint or twopoint-tilde");

    Common cmp;
    std::string cmp_n;
    std::string cmp_range;
    std::string cmp_methods;
    auto *compare_cmd = app.add_subcommand("compare", "compare methods against the oracle over a range of n");
    add_common(compare_cmd, cmp);
    auto *n_opt = compare_cmd->add_option("--n", cmp_n, "degree n");
    compare_cmd->add_option("--n-range", cmp_range, "degrees A:B:step")->excludes(n_opt);
    compare_cmd->add_option("--methods,--method", cmp_methods, "comma-separated method names")->required();

    Common cf;
    std::string kind;
    std::optional<long> cf_m;
    std::optional<long> cf_n;
    auto *coeffs_cmd = app.add_subcommand("coeffs", "tabulate expansion coefficients");
    add_common(coeffs_cmd, cf);
    coeffs_cmd->add_option("--kind", kind, "g, h, alpha, beta, gamma, delta, *-tilde, beta-m, epsilon-m, "
                                           "beta-residue or epsilon-residue")
        ->required();
    coeffs_cmd->add_option("--m", cf_m, "order m for the Fourier coefficient kinds");
    coeffs_cmd->add_option("--n", cf_n, "degree n for the Fourier coefficient kinds");

    std::string config_path;
    std::string report_out;
    auto *report_cmd = app.add_subcommand("report", "run the sweeps declared in a config file");
    report_cmd->add_option("config", config_path, "config file")->required();
    report_cmd->add_option("--out", report_out, "output directory (overrides the config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "polyasym: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*eval) {
            EvalRequest req;
            req.family = *resolve_family(ev, true);
            req.n = eval_n;
            req.mu = parse_complex(ev.mu);
            req.z = parse_complex(ev.z);
            req.method = eval_method;
            req.terms = ev.terms;
            req.precision = resolve_precision(ev.precision);
            const EvalOutcome res = evaluate(req);
            emit(eval_table(req, res), ev, out);
        } else if (*compare_cmd) {
            CompareRequest req;
            req.family = *resolve_family(cmp, true);
            if (cmp_n.empty() && cmp_range.empty()) {
                throw usage_error("compare needs --n or --n-range");
            }
            req.ns = parse_n_list(cmp_range.empty() ? cmp_n : cmp_range);
            req.mu = parse_complex(cmp.mu);
            req.z = parse_complex(cmp.z);
            req.methods = split_list(cmp_methods);
            req.terms = cmp.terms;
            req.precision = resolve_precision(cmp.precision);
            emit(compare(req), cmp, out);
        } else if (*coeffs_cmd) {
            CoeffsRequest req;
            req.family = resolve_family(cf, false);
            req.kind = kind;
            req.mu = parse_complex(cf.mu);
            req.z = parse_complex(cf.z);
            req.K = cf.terms.value_or(4);
            req.m = cf_m;
            req.n = cf_n;
            req.precision = resolve_precision(cf.precision);
            emit(coeffs(req), cf, out);
        } else if (*report_cmd) {
            const ReportConfig cfg = load_report_config(config_path);
            const std::string dir = report_out.empty() ? cfg.output : report_out;
            const ReportSummary s = run_report(cfg, dir);
            out << "wrote " << s.files.size() << " file(s) to " << dir << " (" << s.rows << " rows, " << s.errors
                << " errors)\n";
        }
    } catch (const usage_error &e) {
        err << "polyasym: usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const io_error &e) {
        err << "polyasym: i/o error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::domain_error &e) {
        err << "polyasym: domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::invalid_argument &e) {
        err << "polyasym: usage error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

} // namespace polyasym::cli

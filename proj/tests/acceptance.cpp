// One line per acceptance criterion; exits non-zero when any criterion fails.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <polyasym/bernoulli_expansions.hpp>
#include <polyasym/closed_forms.hpp>
#include <polyasym/combinatorics.hpp>
#include <polyasym/constants.hpp>
#include <polyasym/euler_expansions.hpp>
#include <polyasym/expansion_params.hpp>
#include <polyasym/gamma.hpp>
#include <polyasym/oracle.hpp>

using namespace polyasym;
namespace fs = std::filesystem;

namespace
{

constexpr mpfr_prec_t P = 256;

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;
};

void report(int id, const std::string &title, const Outcome &o, int &failures)
{
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title;
    const std::string d = o.detail.str();
    if (!d.empty()) {
        std::cout << " [" << d << "]";
    }
    std::cout << std::endl;
    if (!o.pass) {
        ++failures;
    }
}

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

double rel(const HPComplex &a, const HPComplex &b)
{
    return relative_error(a, b).to_double();
}

HPComplex oracle(Family f, long n, const HPComplex &mu, const HPComplex &z)
{
    const mpfr_prec_t w = working_precision(P, n);
    const HPComplex m = mu.with_precision(w), x = z.with_precision(w);
    return (f == Family::Bernoulli ? bernoulli_values(n, m, x) : euler_values(n, m, x)).back();
}

HPComplex oracle(Family f, long n, const Rational &mu, const Rational &z)
{
    return HPComplex(f == Family::Bernoulli ? bernoulli_values(n, mu, z).back() : euler_values(n, mu, z).back(), P);
}

Rational random_rational(std::mt19937_64 &rng, long range, long den)
{
    std::uniform_int_distribution<long> num(-range * den, range * den);
    std::uniform_int_distribution<long> d(1, den);
    return Rational(num(rng), d(rng));
}

Outcome finite_sum_exactness()
{
    Outcome o;
    long checked = 0, bad = 0;
    for (long m = 0; m <= 5; ++m) {
        for (long n = 0; n <= 30; ++n) {
            for (const Rational &z : {Rational(0), Rational(1, 3), Rational(-2), Rational(5, 2)}) {
                checked += 2;
                if (bernoulli_neg_int(n, m, z) != bernoulli_values(n, Rational(-m), z).back()) {
                    ++bad;
                }
                if (euler_neg_int(n, m, z) != euler_values(n, Rational(-m), z).back()) {
                    ++bad;
                }
            }
        }
    }
    o.pass = bad == 0;
    o.detail << checked << " exact comparisons, " << bad << " mismatches";
    return o;
}

Outcome recurrence_identities()
{
    Outcome o;
    std::mt19937_64 rng(7);
    long bad = 0, checked = 0;
    for (int t = 0; t < 50; ++t) {
        Rational mu = random_rational(rng, 4, 9);
        if (mu.is_zero()) {
            mu = Rational(1, 7);
        }
        const Rational z = random_rational(rng, 3, 11);
        const auto lower = bernoulli_values(25, mu, z);
        const auto upper = bernoulli_values(25, mu + Rational(1), z);
        for (long n = 1; n <= 25; ++n) {
            const auto k = static_cast<std::size_t>(n);
            const Rational raised = ((mu - Rational(n)) * lower[k] + (z - mu) * lower[k - 1] * n) / mu;
            ++checked;
            if (raised != upper[k]) {
                ++bad;
            }
        }
        std::uniform_int_distribution<long> pick(1, 25);
        const long n = pick(rng);
        checked += 2;
        if (bernoulli_raise_order(n, mu, z) != upper[static_cast<std::size_t>(n)]) {
            ++bad;
        }
        if (!bernoulli_derivative_check(n, mu, z) || !bernoulli_derivative_check(25L, mu, z)) {
            ++bad;
        }
    }
    o.pass = bad == 0;
    o.detail << checked << " identities, " << bad << " failures";
    return o;
}

// |n! beta_k e^{2 pi i k z} / (2 pi i k)^n| + the same for -k
double first_omitted_B(long n, long m, const HPComplex &z, long k)
{
    double sum = 0;
    for (long kk : {k, -k}) {
        const HPComplex t = two_pi_i(P) * kk;
        sum += abs(beta_coeff(m, n, z, kk) * exp(t * z) / pow(t, n) * HPComplex(factorial(n), P)).to_double();
    }
    return sum;
}

// the pair of poles (2k+1) pi i and -(2k+1) pi i
double first_omitted_E(long n, long m, const HPComplex &z, long k)
{
    double sum = 0;
    for (long kk : {k, -1 - k}) {
        const HPComplex x = HPComplex::i(P) * pi(P) * (2 * kk + 1);
        sum += abs(epsilon_coeff(m, n, z, kk) * exp(x * z) / pow(x, n + 1) * HPComplex(factorial(n) * 2, P))
                   .to_double();
    }
    return sum;
}

Outcome fourier_convergence()
{
    Outcome o;
    const long K = 16;
    long cases = 0, bad = 0, max_gap = 0;
    std::set<std::string> bad_z;
    double worst = 0;
    std::string worst_case;
    for (Family f : {Family::Bernoulli, Family::Euler}) {
        for (long m = 1; m <= 3; ++m) {
            for (long n = std::max(2L, m + 1); n <= 12; ++n) {
                for (const Rational &zq : {Rational(0), Rational(1, 4), Rational(1, 2)}) {
                    const HPComplex z(zq, P);
                    const bool bern = f == Family::Bernoulli;
                    const HPComplex s = bern ? fourier_Bm(n, m, z, K).value : fourier_Em(n, m, z, K).value;
                    const double term = bern ? first_omitted_B(n, m, z, K + 1) : first_omitted_E(n, m, z, K + 1);
                    const double err = abs(s - oracle(f, n, Rational(m), zq)).to_double();
                    ++cases;
                    const double ratio = err / term;
                    if (!(err <= 2 * term)) {
                        ++bad;
                        max_gap = std::max(max_gap, n - m);
                        bad_z.insert(zq.to_string());
                    }
                    if (ratio > worst) {
                        worst = ratio;
                        std::ostringstream c;
                        c << family_name(f) << " n=" << n << " m=" << m << " z=" << zq;
                        worst_case = c.str();
                    }
                }
            }
        }
    }
    o.pass = bad == 0;
    o.detail << cases << " cases, " << bad << " with error > 2x first omitted term";
    if (bad > 0) {
        o.detail << " (n - m <= " << max_gap << ", z in {";
        for (auto it = bad_z.begin(); it != bad_z.end(); ++it) {
            o.detail << (it == bad_z.begin() ? "" : ", ") << *it;
        }
        o.detail << "})";
    }
    o.detail << "; worst error/term " << sci(worst) << " at " << worst_case;
    return o;
}

Outcome leading_term_scaling()
{
    Outcome o;
    const Rational zq(3, 10);
    const HPComplex z(zq, P);
    for (Family f : {Family::Bernoulli, Family::Euler}) {
        std::map<long, double> bits;
        for (long n = 8; n <= 24; ++n) {
            const HPComplex lead = f == Family::Bernoulli ? fourier_B1_leading(n, z).value : fourier_E1_leading(n, z).value;
            bits[n] = std::log2(rel(lead, oracle(f, n, Rational(1), zq)));
        }
        const double target = f == Family::Bernoulli ? 4.0 : 4.0 * std::log2(3.0);
        const double tol = f == Family::Bernoulli ? 1.0 : 1.5;
        o.detail << family_name(f) << " drops:";
        for (long n = 8; n + 4 <= 24; ++n) {
            const double drop = bits[n] - bits[n + 4];
            if (std::abs(drop - target) > tol) {
                o.pass = false;
            }
            if (n % 4 == 0) {
                char buf[16];
                std::snprintf(buf, sizeof buf, " %.2f", drop);
                o.detail << buf;
            }
        }
        o.detail << " bits (target " << target << "); ";
    }
    return o;
}

Outcome watson_coefficients()
{
    Outcome o;
    std::mt19937_64 rng(11);
    const double limit = std::ldexp(1.0, -static_cast<int>(P) + 16);
    std::map<std::string, double> worst;
    for (int t = 0; t < 5; ++t) {
        const HPComplex mu(random_rational(rng, 3, 17), P);
        const HPComplex z(random_rational(rng, 2, 13), P);
        const auto g = watson_g_coeffs(mu, z, 3, P);
        const auto h = watson_h_coeffs(mu, z, 3, P);
        for (long k = 1; k <= 3; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const double eg = rel(g[kk], *watson_g_closed_form(mu, z, k));
            const double eh = rel(h[kk], *watson_h_closed_form(mu, z, k));
            const std::string sg = "g" + std::to_string(k), sh = "h" + std::to_string(k);
            worst[sg] = std::max(worst[sg], eg);
            worst[sh] = std::max(worst[sh], eh);
        }
    }
    for (const char *key : {"g1", "g2", "h1", "h2"}) {
        if (!(worst[key] <= limit)) {
            o.pass = false;
        }
    }
    o.detail << "max rel:";
    for (const auto &[key, v] : worst) {
        o.detail << " " << key << "=" << sci(v);
    }
    o.detail << "; limit " << sci(limit) << " for g1 g2 h1 h2, g3 h3 informational";
    return o;
}

Outcome watson_rates()
{
    Outcome o;
    const HPComplex mu(Rational(1, 2), P), z(Rational(3, 10), P);
    for (Family f : {Family::Bernoulli, Family::Euler}) {
        const HPComplex o40 = oracle(f, 40, mu, z), o80 = oracle(f, 80, mu, z);
        o.detail << family_name(f) << ":";
        for (std::size_t k = 0; k <= 2; ++k) {
            auto w = [&](long n) {
                return f == Family::Bernoulli ? watson_expansion_B(n, mu, z, k, P).value
                                              : watson_expansion_E(n, mu, z, k, P).value;
            };
            const double r = rel(w(80), o80) / rel(w(40), o40);
            const double target = std::ldexp(1.0, -static_cast<int>(k + 1));
            if (!(r >= 0.5 * target && r <= 2 * target)) {
                o.pass = false;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, " k=%zu %.3f", k, r);
            o.detail << buf;
        }
        o.detail << "; ";
    }
    return o;
}

Outcome twopoint_sums()
{
    Outcome o;
    const HPComplex z(Rational(3, 10), P);
    const HPComplex mus[] = {HPComplex(Rational(1, 2), P), HPComplex(Rational(3, 2), Rational(1, 4), P)};
    const double ratio_limit = std::ldexp(1.0, -static_cast<int>(P) + 8);
    for (Family f : {Family::Bernoulli, Family::Euler}) {
        for (const HPComplex &mu : mus) {
            for (long n : {10L, 11L}) {
                const ApproxValue s = f == Family::Bernoulli ? twopoint_sum_B(n, mu, z, 12, Flavor::Standard, P)
                                                             : twopoint_sum_E(n, mu, z, 12, Flavor::Standard, P);
                const double e = rel(s.value, oracle(f, n, mu, z));
                if (!(e < 1e-8)) {
                    o.pass = false;
                }
                o.detail << family_name(f) << " n=" << n << " mu=" << mu.to_string(3) << " " << sci(e) << "; ";

                const long N = n % 2 == 0 ? n : n - 1;
                for (long k = 0; k < 12; ++k) {
                    const HPComplex ratio = f == Family::Bernoulli
                                                ? phi(k + 1, N, mu, Flavor::Standard) / phi(k, N, mu, Flavor::Standard)
                                                : psi(k + 1, N, mu, Flavor::Standard) / psi(k, N, mu, Flavor::Standard);
                    const HPComplex closed = f == Family::Bernoulli ? twopoint_ratio_check(N / 2, mu, k)
                                                                    : twopoint_ratio_check_E(N / 2, mu, k);
                    if (!(rel(ratio, closed) <= ratio_limit)) {
                        o.pass = false;
                        o.detail << "ratio mismatch at k=" << k << "; ";
                    }
                }
            }
        }
    }
    o.detail << "limit 1e-8 at K=12";
    return o;
}

Outcome tilde_reductions()
{
    Outcome o;
    const HPComplex one(1, P), z(Rational(3, 10), P);
    const double limit = std::ldexp(1.0, -static_cast<int>(P) + 16);
    double worst = 0;
    for (long n : {10L, 11L, 20L}) {
        const ApproxValue b = twopoint_sum_B(n, one, z, 8, Flavor::Tilde, P);
        const ApproxValue e = twopoint_sum_E(n, one, z, 8, Flavor::Tilde, P);
        if (b.terms_used != 1 || e.terms_used != 1) {
            o.pass = false;
        }
        const double db = rel(b.value, fourier_B1(n, z, 1).value);
        const double de = rel(e.value, fourier_E1(n, z, 0).value);
        worst = std::max({worst, db, de});
    }
    if (!(worst <= limit)) {
        o.pass = false;
    }
    o.detail << "one term each, max rel " << sci(worst);
    return o;
}

Outcome first_order_agreement()
{
    Outcome o;
    // both forms describe degree 2n
    const long n = 50;
    const HPComplex z(Rational(3, 10), P);
    for (Family f : {Family::Bernoulli, Family::Euler}) {
        for (const Rational &mq : {Rational(1, 2), Rational(5, 2)}) {
            const HPComplex mu(mq, P);
            const HPComplex tp = f == Family::Bernoulli ? twopoint_sum_B(2 * n, mu, z, 0, Flavor::Standard, P).value
                                                        : twopoint_sum_E(2 * n, mu, z, 0, Flavor::Standard, P).value;
            const HPComplex wa = f == Family::Bernoulli ? watson_expansion_B(2 * n, mu, z, 0, P).value
                                                        : watson_expansion_E(2 * n, mu, z, 0, P).value;
            const HPComplex ratio = tp / wa;
            const HPComplex expect =
                gamma(mu + HPComplex(n, P)) / (HPComplex(factorial(n), P) * pow(HPComplex(n, P), mu - 1L));
            const double d = rel(ratio, expect);
            const double bound = 2 * std::abs((mq - Rational(1)).to_double()) / n;
            const double off = abs(ratio - 1L).to_double();
            if (!(d < 1e-60) || !(off <= bound)) {
                o.pass = false;
            }
            o.detail << family_name(f) << " mu=" << mq << " |ratio-1|=" << sci(off) << " (bound " << sci(bound)
                     << ", vs gamma ratio " << sci(d) << "); ";
        }
    }
    return o;
}

std::map<std::string, std::string> read_bundle(const fs::path &dir)
{
    std::map<std::string, std::string> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        files[entry.path().filename().string()] =
            std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return files;
}

Outcome determinism()
{
    Outcome o;
    const fs::path base = fs::temp_directory_path() / "polyasym-acceptance";
    fs::remove_all(base);
    fs::create_directories(base);
    const std::string cfg = std::string(POLYASYM_SOURCE_DIR) + "/configs/default.cfg";
    std::vector<std::map<std::string, std::string>> bundles;
    for (const char *name : {"a", "b"}) {
        const fs::path out = base / name;
        const std::string cmd =
            std::string("\"") + POLYASYM_TOOL + "\" report \"" + cfg + "\" --out \"" + out.string() + "\" > /dev/null";
        if (std::system(cmd.c_str()) != 0) {
            o.pass = false;
            o.detail << "report run failed";
            return o;
        }
        bundles.push_back(read_bundle(out));
    }
    o.pass = !bundles[0].empty() && bundles[0] == bundles[1];
    o.detail << bundles[0].size() << " files compared";
    fs::remove_all(base);
    return o;
}

} // namespace

int main()
{
    int failures = 0;
    report(1, "finite sums equal the oracle exactly", finite_sum_exactness(), failures);
    report(2, "order-raising and derivative identities hold exactly", recurrence_identities(), failures);
    report(3, "Fourier sums within 2x the first omitted term at K=16", fourier_convergence(), failures);
    report(4, "leading Fourier term deviation scales as 2^-n and 3^-n", leading_term_scaling(), failures);
    report(5, "generated loop coefficients match the closed forms", watson_coefficients(), failures);
    report(6, "Watson truncation error ratios err(80)/err(40)", watson_rates(), failures);
    report(7, "two-point sums reach 1e-8 by K=12 with exact scale ratios", twopoint_sums(), failures);
    report(8, "tilde sums at mu=1 reduce to the first Fourier term", tilde_reductions(), failures);
    report(9, "first-order two-point and Watson terms agree", first_order_agreement(), failures);
    report(10, "report bundles are byte-identical across runs", determinism(), failures);
    std::cout << (10 - failures) << "/10 criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}

#include <polyasym/constants.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace polyasym
{

namespace
{

std::shared_mutex pi_mutex;
std::map<mpfr_prec_t, HPReal> pi_cache;

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

} // namespace

HPReal pi(mpfr_prec_t prec)
{
    {
        std::shared_lock lock(pi_mutex);
        if (auto it = pi_cache.find(prec); it != pi_cache.end()) {
            return it->second;
        }
    }
    HPReal v(prec);
    mpfr_const_pi(v.get(), MPFR_RNDN);
    std::unique_lock lock(pi_mutex);
    return pi_cache.try_emplace(prec, std::move(v)).first->second;
}

HPComplex two_pi_i(mpfr_prec_t prec)
{
    return HPComplex(HPReal(prec), pi(prec) * 2);
}

Rational bernoulli_number(unsigned k)
{
    std::lock_guard lock(bernoulli_mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    while (bernoulli_cache.size() <= k) {
        const unsigned m = static_cast<unsigned>(bernoulli_cache.size());
        Rational s(0);
        mpz_class binom(1); // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            s += Rational(binom, mpz_class(1)) * bernoulli_cache[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        bernoulli_cache.push_back(-s / Rational(static_cast<long>(m) + 1));
    }
    return bernoulli_cache[k];
}

mpfr_prec_t working_precision(mpfr_prec_t target, long n)
{
    const double extra = n > 0 ? std::ceil(static_cast<double>(n) * std::log2(2.0 * M_PI)) : 0.0;
    return std::max<mpfr_prec_t>(target, min_precision) + 32 + static_cast<mpfr_prec_t>(extra);
}

} // namespace polyasym

#pragma once

/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers, exact and modulo a prime.
 *
 * Convention: B_1 = -1/2, fixed by the recurrence
 *   sum_{k=0}^{m} C(m+1, k) B_k = 0.
 */

#include <symcong/rational.hpp>

#include <cstdint>
#include <mutex>
#include <vector>

namespace symcong {

/// The m-th Bernoulli number as an exact rational (B_1 = -1/2).
/// Values are cached; the cache is guarded, so calls are thread-safe.
inline Rat bernoulli_exact(unsigned m) {
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= m) {
        unsigned j = static_cast<unsigned>(cache.size());
        Rat sum(0);
        for (unsigned k = 0; k < j; ++k)
            sum += Rat(binomial(j + 1, k)) * cache[k];
        cache.push_back(-sum / Rat(Int(j) + 1));
    }
    return cache[m];
}

/// Residues of B_0 .. B_{p-3} modulo p.
///
/// Every B_m in this index range has denominator prime to p (von
/// Staudt-Clausen: (p-1) does not divide m for 0 < m <= p-3), so the
/// reduction is well defined. Computed with the defining recurrence in
/// O(p^2) word operations, using factorial tables for the binomials.
struct BernoulliModTable {
    long p;
    std::vector<std::uint64_t> residues;  // residues[m] = B_m mod p, 0 <= m <= p-3

    std::uint64_t operator[](size_t m) const { return residues.at(m); }
};

namespace detail {

inline std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<unsigned __int128>(r) * b % m;
        b = static_cast<unsigned __int128>(b) * b % m;
        e >>= 1;
    }
    return r;
}

}  // namespace detail

inline BernoulliModTable bernoulli_mod_p(long p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("bernoulli_mod_p: requires a prime p >= 5");
    const std::uint64_t up = static_cast<std::uint64_t>(p);
    const size_t count = static_cast<size_t>(p) - 2;  // indices 0 .. p-3

    // factorials up to p-2 and their inverses (all prime to p)
    std::vector<std::uint64_t> fact(count + 2), ifact(count + 2);
    fact[0] = 1;
    for (size_t i = 1; i < fact.size(); ++i)
        fact[i] = static_cast<unsigned __int128>(fact[i - 1]) * i % up;
    ifact.back() = detail::pow_mod_u64(fact.back(), up - 2, up);
    for (size_t i = ifact.size() - 1; i > 0; --i)
        ifact[i - 1] = static_cast<unsigned __int128>(ifact[i]) * i % up;

    auto binom = [&](size_t m, size_t k) -> std::uint64_t {
        return static_cast<unsigned __int128>(fact[m]) * ifact[k] % up *
               ifact[m - k] % up;
    };
    auto inv = [&](std::uint64_t x) { return detail::pow_mod_u64(x, up - 2, up); };

    BernoulliModTable table{p, std::vector<std::uint64_t>(count)};
    table.residues[0] = 1;
    for (size_t m = 1; m < count; ++m) {
        std::uint64_t sum = 0;
        for (size_t k = 0; k < m; ++k) {
            sum += static_cast<unsigned __int128>(binom(m + 1, k)) *
                   table.residues[k] % up;
            if (sum >= up) sum -= up;
        }
        // B_m = -sum / C(m+1, m) = -sum / (m+1)
        table.residues[m] = (up - sum) % up * static_cast<unsigned __int128>(inv((m + 1) % up)) % up;
    }
    return table;
}

}  // namespace symcong

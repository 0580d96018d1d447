#pragma once

// Independent oracles for the test suites. Everything here is brute
// force on purpose and never calls the implementation path it checks.

#include <symcong/rational.hpp>
#include <symcong/symfunc.hpp>

#include <functional>
#include <random>
#include <vector>

namespace oracle {

using symcong::Int;
using symcong::Rat;

/// Binomials by the Pascal recurrence.
inline Int pascal_binomial(unsigned m, unsigned k) {
    if (k > m) return 0;
    std::vector<Int> row{1};
    for (unsigned i = 1; i <= m; ++i) {
        std::vector<Int> next(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

/// Primes by trial division.
inline std::vector<long> trial_division_primes(long lo, long hi) {
    std::vector<long> out;
    for (long n = std::max(lo, 2L); n <= hi; ++n) {
        bool prime = n >= 2;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) { prime = false; break; }
        if (prime) out.push_back(n);
    }
    return out;
}

/// Bernoulli numbers by the Akiyama-Tanigawa algorithm (B_1 = -1/2
/// after the sign flip), independent of the recurrence used by the
/// library.
inline Rat akiyama_tanigawa_bernoulli(unsigned m) {
    std::vector<Rat> a(m + 1);
    Rat b(0);
    for (unsigned i = 0; i <= m; ++i) {
        a[i] = symcong::make_rat(Int(1), Int(i) + 1);
        for (unsigned j = i; j >= 1; --j) a[j - 1] = Rat(long(j)) * (a[j - 1] - a[j]);
        b = a[0];
    }
    // Akiyama-Tanigawa yields B_m with B_1 = +1/2
    if (m == 1) return -b;
    return b;
}

/// Multiple harmonic sum by direct nested summation (compositions of
/// length <= 4 are enough for the tests).
inline Rat direct_mhs(unsigned nmax, const std::vector<unsigned>& s) {
    auto ipow = [](unsigned base, unsigned e) {
        Int r = 1;
        for (unsigned i = 0; i < e; ++i) r *= base;
        return r;
    };
    std::vector<unsigned> idx(s.size());
    Rat total(0);
    // odometer over strictly decreasing tuples
    std::function<void(size_t, unsigned, Rat)> rec = [&](size_t i, unsigned upper, Rat acc) {
        if (i == s.size()) {
            total += acc;
            return;
        }
        for (unsigned n = upper; n >= 1; --n)
            rec(i + 1, n - 1, acc * symcong::make_rat(Int(1), ipow(n, s[i])));
    };
    rec(0, nmax, Rat(1));
    return total;
}

/// e_k evaluated at concrete rationals by direct expansion over all
/// k-subsets.
inline Rat direct_elementary(unsigned k, const std::vector<Rat>& xs) {
    Rat total(0);
    std::vector<size_t> pick(k);
    std::function<void(size_t, size_t, Rat)> rec = [&](size_t i, size_t start, Rat acc) {
        if (i == k) {
            total += acc;
            return;
        }
        for (size_t j = start; j + (k - i) <= xs.size(); ++j) rec(i + 1, j + 1, acc * xs[j]);
    };
    if (k == 0) return Rat(1);
    rec(0, 0, Rat(1));
    return total;
}

/// p_k at concrete rationals.
inline Rat direct_power_sum(unsigned k, const std::vector<Rat>& xs) {
    Rat total(0);
    for (const Rat& x : xs) {
        Rat v(1);
        for (unsigned i = 0; i < k; ++i) v *= x;
        total += v;
    }
    return total;
}

/// Evaluates a SymFunc at concrete values (x_1..x_m) by expanding every
/// elementary generator directly.
inline Rat evaluate_symfunc_direct(const symcong::SymFunc& f, const std::vector<Rat>& xs) {
    Rat total(0);
    for (const auto& [m, c] : f.terms()) {
        Rat v = c;
        for (auto [k, a] : m.factors())
            for (unsigned i = 0; i < a; ++i) v *= direct_elementary(k, xs);
        total += v;
    }
    return total;
}

/// Number of partitions of d into parts >= 2, by brute-force recursion.
inline unsigned partitions_min2(unsigned d, unsigned min_part = 2) {
    if (d == 0) return 1;
    unsigned count = 0;
    for (unsigned part = min_part; part <= d; ++part) count += partitions_min2(d - part, part);
    return count;
}

/// Deterministic random rational with small numerator/denominator.
inline Rat random_rat(std::mt19937& rng, long span = 20) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return symcong::make_rat(num(rng), den(rng));
}

/// Deterministic random SymFunc: a few terms on generators e_1..e_maxk.
inline symcong::SymFunc random_symfunc(std::mt19937& rng, unsigned maxk = 4,
                                       unsigned max_terms = 4, long span = 5) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> gen(1, maxk);
    std::uniform_int_distribution<unsigned> expo(0, 2);
    symcong::SymFunc f;
    unsigned t = nterms(rng);
    for (unsigned i = 0; i < t; ++i) {
        symcong::EMonomial m;
        for (unsigned k = 1; k <= maxk; ++k) {
            unsigned a = expo(rng) == 2 && gen(rng) == k ? 1 + expo(rng) % 2 : 0;
            if (a) m = m * symcong::EMonomial::generator(k, a);
        }
        f.add_term(m, random_rat(rng, span));
    }
    return f;
}

}  // namespace oracle

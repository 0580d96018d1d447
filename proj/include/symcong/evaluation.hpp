#pragma once

/**
 * @file evaluation.hpp
 * @brief Evaluation of symmetric functions at (p/1, ..., p/(p-1)),
 *        exactly and modulo prime powers, plus the congruence verifier
 *        over prime ranges and the Wolstenholme-prime scanner.
 */

#include <symcong/rational.hpp>
#include <symcong/symfunc.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace symcong {

/// Exact elementary values e_0 .. e_deg at (p/1, ..., p/(p-1)): the
/// coefficients of prod_{i=1}^{p-1} (1 - (p/i) t), with e_k = (-1)^k
/// times the t^k coefficient. O(p * deg) rational operations.
inline std::vector<Rat> elementary_values_exact(long p, unsigned deg) {
    std::vector<Rat> c(deg + 1, Rat(0));
    c[0] = 1;
    unsigned top = 0;
    for (long i = 1; i < p; ++i) {
        Rat root = make_rat(Int(p), Int(i));  // factor (1 - root * t)
        top = std::min<unsigned>(top + 1, deg);
        for (unsigned k = top; k >= 1; --k) c[k] -= root * c[k - 1];
    }
    std::vector<Rat> e(deg + 1);
    for (unsigned k = 0; k <= deg; ++k) e[k] = (k % 2 == 0) ? c[k] : -c[k];
    return e;
}

/// Exact value of f at the p-1 arguments p/1, ..., p/(p-1). Slow path;
/// used directly for small p and as the oracle for the modular path.
inline Rat zp_exact(const SymFunc& f, long p) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("zp_exact: requires a prime p >= 3");
    unsigned deg = 0;
    for (const auto& [m, c] : f.terms())
        for (auto [k, a] : m.factors()) deg = std::max(deg, k);
    deg = std::min<unsigned>(deg, static_cast<unsigned>(p - 1));
    std::vector<Rat> e = elementary_values_exact(p, deg);
    Rat total(0);
    for (const auto& [m, c] : f.terms()) {
        Rat v = c;
        bool vanishes = false;
        for (auto [k, a] : m.factors()) {
            if (k > static_cast<unsigned>(p - 1)) { vanishes = true; break; }
            for (unsigned i = 0; i < a; ++i) v *= e[k];
        }
        if (!vanishes) total += v;
    }
    return total;
}

/// Residues v_k = e_k(p/1, ..., p/(p-1)) mod p^n for 0 <= k < n.
///
/// Computed as the product prod_{i=1}^{p-1} (1 - p i^{-1} t) in
/// (Z/p^n)[t] truncated at degree n-1 (e_k vanishes mod p^n for k >= n,
/// which is what caps the degree and keeps the sweep at O(p n) ring
/// operations). Inverses of 1..p-1 are batched.
struct ElementaryValueTable {
    long p;
    unsigned n;
    Int modulus;             // p^n
    std::vector<Int> values; // values[k] = v_k, 0 <= k < n

    /// v_k as a residue; zero for k >= n (and for k >= p).
    Residue value(unsigned k) const {
        if (k < values.size()) return Residue(p, n, values[k]);
        return Residue(p, n, 0);
    }
};

inline ElementaryValueTable elementary_values_mod(long p, unsigned n) {
    if (p < 3 || !is_prime(p))
        throw std::domain_error("elementary_values_mod: requires a prime p >= 3");
    if (n == 0) throw std::domain_error("elementary_values_mod: n must be >= 1");
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), n);

    std::vector<Int> inv = batch_inverses(p - 1, modulus);
    const unsigned deg = std::min<unsigned>(n - 1, static_cast<unsigned>(p - 1));
    std::vector<Int> c(deg + 1);
    c[0] = 1;
    unsigned top = 0;
    for (long i = 1; i < p; ++i) {
        Int root = p * inv[i] % modulus;
        top = std::min<unsigned>(top + 1, deg);
        for (unsigned k = top; k >= 1; --k) {
            c[k] -= root * c[k - 1] % modulus;
            if (c[k] < 0) c[k] += modulus;
        }
    }
    ElementaryValueTable table{p, n, modulus, std::vector<Int>(n, Int(0))};
    for (unsigned k = 0; k <= deg; ++k)
        table.values[k] = (k % 2 == 0) ? c[k] : (c[k] == 0 ? Int(0) : modulus - c[k]);
    return table;
}

/// f(p/1, ..., p/(p-1)) mod p^n, evaluated monomial-by-monomial from a
/// precomputed value table. Throws DenominatorNotInvertible when p
/// divides a coefficient denominator of f.
inline Residue zp_mod(const SymFunc& f, const ElementaryValueTable& table) {
    Residue total(table.p, table.n, 0);
    for (const auto& [m, c] : f.terms()) {
        Residue v = reduce_mod(c, table.p, table.n);
        for (auto [k, a] : m.factors()) v *= table.value(k).pow(a);
        total += v;
    }
    return total;
}

inline Residue zp_mod(const SymFunc& f, long p, unsigned n) {
    return zp_mod(f, elementary_values_mod(p, n));
}

/// Per-prime outcome of a congruence sweep.
struct PrimeResult {
    long p;
    bool pass;
    std::optional<long> valuation;  // exact p-adic valuation when known
    bool valuation_infinite = false;  // exact value was 0
    Int residue;                    // nonzero residue mod p^n when failing
};

struct SkippedPrime {
    long p;
    std::string reason;
};

/// Record of verifying f(p/1,...,p/(p-1)) = 0 mod p^n over a prime range.
/// Every prime in [p_min, p_max] lands in exactly one of results/skipped.
/// A report only ever says "passes for all tested primes"; it never
/// extrapolates beyond the range.
struct CongruenceReport {
    std::string expr;
    unsigned n;
    long p_min, p_max;
    std::vector<PrimeResult> results;  // sorted by prime
    std::vector<SkippedPrime> skipped; // sorted by prime

    bool all_passed() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    size_t passed() const {
        size_t c = 0;
        for (const auto& r : results) c += r.pass;
        return c;
    }
    size_t failed() const { return results.size() - passed(); }
};

struct VerifyOptions {
    long exact_cutoff = 101;  // primes up to this get an exact valuation
    unsigned jobs = 1;
};

namespace detail {

inline PrimeResult verify_one_prime(const SymFunc& f, unsigned n, long p,
                                    const VerifyOptions& opt) {
    PrimeResult r{p, false, std::nullopt, false, Int(0)};
    Residue value = zp_mod(f, p, n);  // may throw DenominatorNotInvertible
    r.pass = value.is_zero();
    if (!r.pass) r.residue = value.value();
    if (p <= opt.exact_cutoff) {
        auto v = padic_valuation(zp_exact(f, p), p);
        if (v) r.valuation = *v;
        else r.valuation_infinite = true;
    } else if (!r.pass) {
        // valuation of the residue is the true valuation (it is < n)
        long v = 0;
        Int x = value.value();
        while (x % p == 0) { x /= p; ++v; }
        r.valuation = v;
    }
    return r;
}

}  // namespace detail

/// Sweeps all primes in [p_min, p_max], recording pass/fail per prime.
/// Primes where a coefficient denominator is not invertible are skipped,
/// not failed. Work fans out over opt.jobs threads; output order is by
/// prime regardless of scheduling.
inline CongruenceReport verify_congruence(const SymFunc& f, unsigned n, long p_min,
                                          long p_max, const VerifyOptions& opt = {}) {
    if (p_min < 3) throw std::domain_error("verify_congruence: p_min must be >= 3");
    if (n == 0) throw std::domain_error("verify_congruence: n must be >= 1");
    CongruenceReport report{to_string(f), n, p_min, p_max, {}, {}};
    std::vector<long> primes = primes_in_range(p_min, p_max);

    struct Slot {
        bool skipped = false;
        std::string reason;
        PrimeResult result;
    };
    std::vector<Slot> slots(primes.size());
    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            try {
                slots[i].result = detail::verify_one_prime(f, n, primes[i], opt);
            } catch (const DenominatorNotInvertible&) {
                slots[i].skipped = true;
                slots[i].reason = "denominator divisible by p";
            }
        }
    };
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || primes.size() < 2 * jobs) {
        work(0, primes.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (primes.size() + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            size_t b = std::min(primes.size(), t * chunk);
            size_t e = std::min(primes.size(), b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    for (size_t i = 0; i < primes.size(); ++i) {
        if (slots[i].skipped) report.skipped.push_back({primes[i], slots[i].reason});
        else report.results.push_back(slots[i].result);
    }
    return report;
}

/// Checks the exact identity
///   e_k(p/...) + sum_{j>=k} (-1)^{j+1} C(j,k) e_j(p/...) = 0
/// for 0 <= k <= k_max, with exact rationals (the sum is finite: terms
/// vanish for j >= p). This is the functional equation f_p(t) = f_p(1-t)
/// of f_p(t) = prod (1 - (p/i) t), coefficient by coefficient.
struct BetaIdentityResult {
    unsigned k;
    bool holds;
    Rat defect;  // the left-hand side; zero iff holds
};

inline std::vector<BetaIdentityResult> check_beta_identity(long p, unsigned k_max) {
    if (p < 3 || !is_prime(p))
        throw std::domain_error("check_beta_identity: requires a prime p >= 3");
    std::vector<Rat> e = elementary_values_exact(p, static_cast<unsigned>(p - 1));
    std::vector<BetaIdentityResult> out;
    out.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        Rat lhs = (k <= static_cast<unsigned>(p - 1)) ? e[k] : Rat(0);
        for (unsigned j = k; j <= static_cast<unsigned>(p - 1); ++j) {
            Rat term = Rat(binomial(j, k)) * e[j];
            if (j % 2 == 0) lhs -= term;  // (-1)^{j+1}
            else lhs += term;
        }
        out.push_back({k, lhs == 0, lhs});
    }
    return out;
}

/// Primes p in [p_min, p_max] with H_{p-1} = sum 1/i = 0 mod p^3
/// (equivalently e_1(p/...) = 0 mod p^4): the Wolstenholme primes.
/// O(p) modular operations per prime via batched inverses mod p^3.
inline std::vector<long> wolstenholme_scan(long p_min, long p_max) {
    if (p_min < 5) throw std::domain_error("wolstenholme_scan: p_min must be >= 5");
    std::vector<long> hits;
    for (long p : primes_in_range(p_min, p_max)) {
        Int m = Int(p) * p * p;
        std::vector<Int> inv = batch_inverses(p - 1, m);
        Int sum = 0;
        for (long i = 1; i < p; ++i) sum += inv[i];
        if (sum % m == 0) hits.push_back(p);
    }
    return hits;
}

}  // namespace symcong

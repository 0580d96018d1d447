#pragma once

/**
 * @file rational.hpp
 * @brief Exact integer/rational arithmetic, primes, binomials, and
 *        residues modulo prime powers.
 *
 * All arithmetic is exact; no floating point anywhere in the library.
 * Big integers and rationals are GMP's mpz_class / mpq_class, which keep
 * rationals in canonical form (denominator > 0, gcd(num, den) = 1).
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcong {

using Int = mpz_class;
using Rat = mpq_class;

/// Rational from numerator/denominator, canonicalized.
/// Throws std::domain_error on zero denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

/// Deterministic primality test by trial division (desk-scale inputs).
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline bool is_prime(long n) { return is_prime(Int(n)); }

/// All primes p with lo <= p <= hi, ascending (sieve of Eratosthenes).
inline std::vector<long> primes_in_range(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("primes_in_range: lo > hi");
    std::vector<long> out;
    if (hi < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(hi) + 1, false);
    for (long d = 2; d * d <= hi; ++d) {
        if (composite[d]) continue;
        for (long m = d * d; m <= hi; m += d) composite[m] = true;
    }
    for (long p = std::max(lo, 2L); p <= hi; ++p)
        if (!composite[p]) out.push_back(p);
    return out;
}

/// Binomial coefficient C(m, k); zero when k > m.
inline Int binomial(unsigned long m, unsigned long k) {
    if (k > m) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), m, k);
    return r;
}

/// p-adic valuation of a rational. Empty optional encodes +infinity
/// (the valuation of zero).
inline std::optional<long> padic_valuation(const Rat& q, long p) {
    if (!is_prime(p)) throw std::domain_error("padic_valuation: p is not prime");
    if (q == 0) return std::nullopt;
    long v = 0;
    Int n = q.get_num();
    while (n % p == 0) { n /= p; ++v; }
    Int d = q.get_den();
    while (d % p == 0) { d /= p; --v; }
    return v;
}

/// Raised when reducing a rational whose denominator is divisible by p.
/// In a prime sweep this means the prime must be skipped, not failed.
struct DenominatorNotInvertible : std::runtime_error {
    long p;
    explicit DenominatorNotInvertible(long p_)
        : std::runtime_error("denominator not invertible modulo " + std::to_string(p_)),
          p(p_) {}
};

/// An integer residue modulo p^n, tagged with (p, n).
///
/// Residues combine arithmetically only when their (p, n) tags match;
/// a mismatch is a programming error and throws.
class Residue {
public:
    Residue() : p_(0), n_(0), modulus_(1), value_(0) {}

    Residue(long p, unsigned n, Int value) : p_(p), n_(n) {
        if (n == 0) throw std::domain_error("Residue: exponent must be positive");
        mpz_ui_pow_ui(modulus_.get_mpz_t(), static_cast<unsigned long>(p), n);
        value_ = mod(std::move(value));
    }

    long p() const { return p_; }
    unsigned n() const { return n_; }
    const Int& modulus() const { return modulus_; }
    const Int& value() const { return value_; }

    bool is_zero() const { return value_ == 0; }

    Residue operator+(const Residue& o) const {
        check_compatible(o);
        return with_value(value_ + o.value_);
    }
    Residue operator-(const Residue& o) const {
        check_compatible(o);
        return with_value(value_ - o.value_);
    }
    Residue operator*(const Residue& o) const {
        check_compatible(o);
        return with_value(value_ * o.value_);
    }
    Residue operator-() const { return with_value(-value_); }

    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    bool operator==(const Residue& o) const {
        return p_ == o.p_ && n_ == o.n_ && value_ == o.value_;
    }

    /// Multiplicative inverse; throws DenominatorNotInvertible when
    /// the value is divisible by p.
    Residue inverse() const {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t()) == 0)
            throw DenominatorNotInvertible(p_);
        return with_value(std::move(inv));
    }

    Residue pow(unsigned long e) const {
        Int r;
        mpz_powm_ui(r.get_mpz_t(), value_.get_mpz_t(), e, modulus_.get_mpz_t());
        return with_value(std::move(r));
    }

private:
    void check_compatible(const Residue& o) const {
        if (p_ != o.p_ || n_ != o.n_)
            throw std::logic_error("Residue: mixed moduli");
    }
    Int mod(Int v) const {
        Int r;
        mpz_mod(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
        return r;
    }
    Residue with_value(Int v) const {
        Residue r;
        r.p_ = p_;
        r.n_ = n_;
        r.modulus_ = modulus_;
        r.value_ = mod(std::move(v));
        return r;
    }

    long p_;
    unsigned n_;
    Int modulus_;
    Int value_;
};

/// Reduce a rational modulo p^n: numerator * denominator^{-1} mod p^n.
/// Throws DenominatorNotInvertible when p divides the denominator.
inline Residue reduce_mod(const Rat& q, long p, unsigned n) {
    Residue num(p, n, q.get_num());
    Residue den(p, n, q.get_den());
    return num * den.inverse();
}

/// Batch modular inverses of 1..count modulo m (Montgomery's trick:
/// one inversion plus O(count) multiplications). m must be coprime to
/// every argument, which holds for m a power of a prime p > count.
inline std::vector<Int> batch_inverses(long count, const Int& m) {
    std::vector<Int> prefix(static_cast<size_t>(count) + 1);
    prefix[0] = 1;
    for (long i = 1; i <= count; ++i)
        prefix[i] = prefix[i - 1] * i % m;
    Int acc;
    if (mpz_invert(acc.get_mpz_t(), prefix[count].get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("batch_inverses: argument not invertible");
    std::vector<Int> inv(static_cast<size_t>(count) + 1);
    for (long i = count; i >= 1; --i) {
        inv[i] = acc * prefix[i - 1] % m;
        acc = acc * i % m;
    }
    return inv;
}

}  // namespace symcong

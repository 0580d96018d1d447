#pragma once

/**
 * @file symfunc.hpp
 * @brief The ring of symmetric functions in the elementary basis, graded
 *        by H-degree (e_k is homogeneous of H-degree k+1).
 *
 * Everything is represented in the elementary generators e_1, e_2, ...
 * exclusively; they freely generate the ring, so equality and grading
 * are structural. Power sums are converted at the door (Newton's
 * identities). Values are immutable in spirit: all operations are pure.
 */

#include <symcong/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace symcong {

/// A monomial e_1^{a_1} e_2^{a_2} ... in the elementary generators.
/// Stored as (index, exponent) pairs, ascending index, no zero exponents.
/// The empty monomial is the unit.
class EMonomial {
public:
    EMonomial() = default;

    /// Single generator e_k (k >= 1).
    static EMonomial generator(unsigned k, unsigned exp = 1) {
        if (k == 0) throw std::domain_error("EMonomial: generator index must be >= 1");
        EMonomial m;
        if (exp > 0) m.factors_.emplace_back(k, exp);
        return m;
    }

    bool is_unit() const { return factors_.empty(); }

    const std::vector<std::pair<unsigned, unsigned>>& factors() const { return factors_; }

    /// H-degree: sum over factors of exponent * (index + 1).
    unsigned h_degree() const {
        unsigned d = 0;
        for (auto [k, a] : factors_) d += a * (k + 1);
        return d;
    }

    unsigned exponent_of(unsigned k) const {
        for (auto [i, a] : factors_)
            if (i == k) return a;
        return 0;
    }

    EMonomial operator*(const EMonomial& o) const {
        EMonomial r;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
                r.factors_.push_back(*a++);
            else if (a == factors_.end() || b->first < a->first)
                r.factors_.push_back(*b++);
            else {
                r.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return r;
    }

    /// Monomial with one factor of e_k removed. Requires e_k present.
    EMonomial without_one(unsigned k) const {
        EMonomial r;
        bool found = false;
        for (auto [i, a] : factors_) {
            if (i == k) {
                found = true;
                if (a > 1) r.factors_.emplace_back(i, a - 1);
            } else {
                r.factors_.emplace_back(i, a);
            }
        }
        if (!found) throw std::logic_error("EMonomial::without_one: factor absent");
        return r;
    }

    bool operator==(const EMonomial& o) const { return factors_ == o.factors_; }

    /// Canonical order: by H-degree, then lexicographically on exponent
    /// vectors with the larger exponent at the smallest differing index
    /// first (so e_1^3 < e_1 e_3 < e_2^2 < e_5 among H-degree 6).
    bool operator<(const EMonomial& o) const {
        unsigned da = h_degree(), db = o.h_degree();
        if (da != db) return da < db;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first != b->first) return a->first < b->first;
            if (a->second != b->second) return a->second > b->second;
            ++a, ++b;
        }
        return a != factors_.end();
    }

private:
    std::vector<std::pair<unsigned, unsigned>> factors_;
};

/// A symmetric function: finite Rat-linear combination of EMonomials.
/// Zero coefficients are never stored; zero is the empty map.
class SymFunc {
public:
    using TermMap = std::map<EMonomial, Rat>;

    SymFunc() = default;
    /*implicit*/ SymFunc(const Rat& c) {
        if (c != 0) terms_[EMonomial{}] = c;
    }
    /*implicit*/ SymFunc(long c) : SymFunc(Rat(c)) {}

    static SymFunc monomial(const EMonomial& m, const Rat& c = Rat(1)) {
        SymFunc f;
        if (c != 0) f.terms_[m] = c;
        return f;
    }
    static SymFunc generator(unsigned k) { return monomial(EMonomial::generator(k)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rat coefficient(const EMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    SymFunc& operator+=(const SymFunc& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    SymFunc operator+(const SymFunc& o) const { SymFunc r = *this; return r += o; }
    SymFunc operator-(const SymFunc& o) const { SymFunc r = *this; return r -= o; }
    SymFunc operator-() const {
        SymFunc r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    SymFunc operator*(const SymFunc& o) const {
        SymFunc r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    SymFunc operator*(const Rat& c) const {
        SymFunc r;
        if (c == 0) return r;
        for (const auto& [m, cf] : terms_) r.terms_[m] = cf * c;
        return r;
    }

    SymFunc pow(unsigned e) const {
        SymFunc r(Rat(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

    void add_term(const EMonomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

inline SymFunc operator*(const Rat& c, const SymFunc& f) { return f * c; }

/// Splits f into its homogeneous H-degree components; empty parts omitted.
inline std::map<unsigned, SymFunc> graded_parts(const SymFunc& f) {
    std::map<unsigned, SymFunc> parts;
    for (const auto& [m, c] : f.terms()) parts[m.h_degree()].add_term(m, c);
    return parts;
}

/// v(f) = least H-degree with a nonzero component; empty = +infinity (f = 0).
inline std::optional<unsigned> h_valuation(const SymFunc& f) {
    if (f.is_zero()) return std::nullopt;
    // terms are ordered by H-degree first
    return f.terms().begin()->first.h_degree();
}

/// f with every monomial of H-degree >= n dropped: a representative of
/// the class of f in the quotient by the ideal I_n.
inline SymFunc truncate_symfunc(const SymFunc& f, unsigned n) {
    SymFunc r;
    for (const auto& [m, c] : f.terms()) {
        if (m.h_degree() >= n) break;
        r.add_term(m, c);
    }
    return r;
}

/// A symmetric function all of whose monomials have H-degree < n;
/// represents a class in the quotient at truncation level n.
class QuotientElement {
public:
    QuotientElement(SymFunc f, unsigned n) : f_(truncate_symfunc(f, n)), n_(n) {
        if (n == 0) throw std::domain_error("QuotientElement: level must be >= 1");
    }

    const SymFunc& inner() const { return f_; }
    unsigned level() const { return n_; }
    bool is_zero() const { return f_.is_zero(); }

    bool operator==(const QuotientElement& o) const {
        return n_ == o.n_ && f_ == o.f_;
    }

private:
    SymFunc f_;
    unsigned n_;
};

namespace detail {

inline void enumerate_quotient_basis(unsigned n, unsigned min_k, EMonomial prefix,
                                     unsigned used, std::vector<EMonomial>& out) {
    out.push_back(prefix);
    for (unsigned k = min_k; k + 1 + used < n; ++k) {
        // append factors e_k^a while the H-degree stays below n
        EMonomial m = prefix;
        unsigned d = used;
        for (unsigned a = 1; d + (k + 1) < n; ++a) {
            m = m * EMonomial::generator(k);
            d += k + 1;
            enumerate_quotient_basis(n, k + 1, m, d, out);
        }
    }
}

}  // namespace detail

/// All monomials of H-degree < n, in canonical order. These are a basis
/// of the level-n quotient as a Q-vector space.
inline std::vector<EMonomial> quotient_basis(unsigned n) {
    if (n == 0) throw std::domain_error("quotient_basis: n must be >= 1");
    std::vector<EMonomial> out;
    detail::enumerate_quotient_basis(n, 1, EMonomial{}, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// The power sum p_k as a polynomial in e_1..e_k, via Newton's identity
///   p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k.
inline SymFunc power_sum_to_e(unsigned k) {
    if (k == 0) throw std::domain_error("power_sum_to_e: k must be >= 1");
    std::vector<SymFunc> p(k + 1);
    for (unsigned i = 1; i <= k; ++i) {
        SymFunc s;
        int sign = 1;
        for (unsigned j = 1; j < i; ++j) {
            s += Rat(sign) * (SymFunc::generator(j) * p[i - j]);
            sign = -sign;
        }
        s += Rat(sign * static_cast<long>(i)) * SymFunc::generator(i);
        p[i] = s;
    }
    return p[k];
}

/// A composition: ordered list of positive integers.
struct Composition {
    std::vector<unsigned> parts;

    Composition() = default;
    Composition(std::initializer_list<unsigned> p) : parts(p) { validate(); }
    explicit Composition(std::vector<unsigned> p) : parts(std::move(p)) { validate(); }

    unsigned weight() const {
        unsigned w = 0;
        for (unsigned s : parts) w += s;
        return w;
    }
    size_t length() const { return parts.size(); }

private:
    void validate() const {
        for (unsigned s : parts)
            if (s == 0) throw std::domain_error("Composition: parts must be positive");
    }
};

/// Multiple harmonic sum H_nmax(s): sum over nmax >= n_1 > ... > n_k >= 1
/// of 1/(n_1^{s_1} ... n_k^{s_k}). Zero when the composition is longer
/// than the range; 1 for the empty composition.
inline Rat mhs_value(unsigned nmax, const Composition& s) {
    if (nmax == 0) throw std::domain_error("mhs_value: nmax must be >= 1");
    const size_t k = s.length();
    if (k > nmax) return Rat(0);
    // tail[m] = H_m(s_i, ..., s_k) for the suffix currently processed
    std::vector<Rat> tail(nmax + 1, Rat(1));
    for (size_t i = k; i-- > 0;) {
        std::vector<Rat> next(nmax + 1, Rat(0));
        for (unsigned m = 1; m <= nmax; ++m) {
            Int mp;
            mpz_ui_pow_ui(mp.get_mpz_t(), m, s.parts[i]);
            next[m] = next[m - 1] + make_rat(Int(1), mp) * tail[m - 1];
        }
        tail = std::move(next);
    }
    return tail[nmax];
}

// ---- canonical printing ----------------------------------------------

inline std::string to_string(const Rat& q) {
    return q.get_str();
}

inline std::string to_string(const EMonomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (auto [k, a] : m.factors()) {
        if (!s.empty()) s += "*";
        s += "e" + std::to_string(k);
        if (a > 1) s += "^" + std::to_string(a);
    }
    return s;
}

/// Canonical printer: terms in quotient-basis (H-degree, then lex) order;
/// output re-parses to an identical SymFunc.
inline std::string to_string(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_unit()) os << to_string(a);
        else if (a == 1) os << to_string(m);
        else os << to_string(a) << "*" << to_string(m);
    }
    return os.str();
}

inline std::string to_string(const QuotientElement& q) { return to_string(q.inner()); }

}  // namespace symcong

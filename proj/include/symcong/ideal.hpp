#pragma once

/**
 * @file ideal.hpp
 * @brief The beta generators, ideal membership by exact linear algebra,
 *        normal forms in the even generators, kernel decisions, and
 *        lifting of congruences to higher truncation levels.
 *
 * beta_k = e_k + sum_{j>=k} (-1)^{j+1} C(j,k) e_j, truncated at level n,
 * spans (together with its multiples) the ideal whose membership problem
 * this module solves over Q.
 */

#include <symcong/bernoulli.hpp>
#include <symcong/evaluation.hpp>
#include <symcong/parse.hpp>
#include <symcong/symfunc.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace symcong {

/// beta_k truncated to H-degree < n. Zero whenever k >= n-1.
inline QuotientElement beta_truncated(unsigned k, unsigned n) {
    SymFunc f = (k == 0) ? SymFunc(Rat(1)) : SymFunc::generator(k);
    for (unsigned j = k; j + 1 < n || j == 0; ++j) {
        SymFunc ej = (j == 0) ? SymFunc(Rat(1)) : SymFunc::generator(j);
        Rat c = Rat(binomial(j, k));
        if (j % 2 == 0) f -= c * ej;  // (-1)^{j+1}
        else f += c * ej;
        if (j + 1 >= n) break;  // only the j == 0 special case lands here
    }
    return QuotientElement(f, n);
}

/// Row-reduced basis of the span of { m * beta_k : m in quotient_basis(n),
/// 0 <= k <= n-2 } inside the level-n quotient, with provenance: each row
/// remembers polynomials r_k with row = sum_k truncate(r_k * beta_k, n).
class IdealBasis {
public:
    struct Row {
        size_t pivot;                       // index into basis()
        std::vector<Rat> coeffs;            // leading coefficient 1
        std::map<unsigned, SymFunc> prov;   // k -> r_k
    };

    explicit IdealBasis(unsigned n) : n_(n), basis_(quotient_basis(n)) {
        for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
        for (unsigned k = 0; k + 1 < n; ++k) {
            QuotientElement beta = beta_truncated(k, n);
            if (beta.is_zero()) continue;
            for (const EMonomial& m : basis_) {
                SymFunc g = truncate_symfunc(SymFunc::monomial(m) * beta.inner(), n);
                if (g.is_zero()) continue;
                insert(to_vector(g), {{k, SymFunc::monomial(m)}});
            }
        }
        back_eliminate();
    }

    unsigned level() const { return n_; }
    const std::vector<EMonomial>& basis() const { return basis_; }
    const std::vector<Row>& rows() const { return rows_; }
    size_t dimension() const { return rows_.size(); }

    std::vector<Rat> to_vector(const SymFunc& f) const {
        std::vector<Rat> v(basis_.size(), Rat(0));
        for (const auto& [m, c] : f.terms()) v[index_.at(m)] = c;
        return v;
    }

    SymFunc from_vector(const std::vector<Rat>& v) const {
        SymFunc f;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) f.add_term(basis_[i], v[i]);
        return f;
    }

    /// Reduces f against the rows; returns the residual and accumulates
    /// the combination of generators used into rep.
    SymFunc reduce(const SymFunc& f, std::map<unsigned, SymFunc>& rep) const {
        std::vector<Rat> v = to_vector(truncate_symfunc(f, n_));
        for (const Row& row : rows_) {
            Rat c = v[row.pivot];
            if (c == 0) continue;
            for (size_t i = row.pivot; i < v.size(); ++i)
                if (row.coeffs[i] != 0) v[i] -= c * row.coeffs[i];
            for (const auto& [k, r] : row.prov) {
                auto [it, inserted] = rep.emplace(k, c * r);
                if (!inserted) it->second += c * r;
                if (it->second.is_zero()) rep.erase(it);
            }
        }
        return from_vector(v);
    }

private:
    void insert(std::vector<Rat> v, std::map<unsigned, SymFunc> prov) {
        for (const Row& row : rows_) {
            Rat c = v[row.pivot];
            if (c == 0) continue;
            for (size_t i = row.pivot; i < v.size(); ++i)
                if (row.coeffs[i] != 0) v[i] -= c * row.coeffs[i];
            for (const auto& [k, r] : row.prov) {
                auto [it, inserted] = prov.emplace(k, -c * r);
                if (!inserted) it->second -= c * r;
                if (it->second.is_zero()) prov.erase(it);
            }
        }
        size_t pivot = v.size();
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) { pivot = i; break; }
        if (pivot == v.size()) return;  // dependent generator
        Rat lead = v[pivot];
        Rat inv_lead = Rat(1) / lead;
        for (Rat& x : v) x *= inv_lead;
        for (auto& [k, r] : prov) r = r * inv_lead;
        Row row{pivot, std::move(v), std::move(prov)};
        auto pos = std::find_if(rows_.begin(), rows_.end(),
                                [&](const Row& r) { return r.pivot > row.pivot; });
        rows_.insert(pos, std::move(row));
    }

    void back_eliminate() {
        for (size_t i = rows_.size(); i-- > 0;) {
            for (size_t j = 0; j < i; ++j) {
                Rat c = rows_[j].coeffs[rows_[i].pivot];
                if (c == 0) continue;
                for (size_t col = rows_[i].pivot; col < rows_[j].coeffs.size(); ++col)
                    rows_[j].coeffs[col] -= c * rows_[i].coeffs[col];
                for (const auto& [k, r] : rows_[i].prov) {
                    auto [it, inserted] = rows_[j].prov.emplace(k, -c * r);
                    if (!inserted) it->second -= c * r;
                    if (it->second.is_zero()) rows_[j].prov.erase(it);
                }
            }
        }
    }

    unsigned n_;
    std::vector<EMonomial> basis_;
    std::map<EMonomial, size_t> index_;
    std::vector<Row> rows_;
};

/// Shared, cached ideal bases (read-only after construction).
inline const IdealBasis& ideal_basis(unsigned n) {
    static std::map<unsigned, IdealBasis> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, IdealBasis(n)).first;
    return it->second;
}

/// Rewrites every odd generator e_{2k+1} via
///   e_{2k+1} = -(1/2) sum_{j>=2k+2} (-1)^{j+1} C(j,2k+1) e_j  (mod the ideal)
/// until only even-index generators remain. Each substitution strictly
/// raises H-degree, so with H-degree bounded below n this terminates.
/// Lowest odd index is rewritten first, making the result deterministic.
inline QuotientElement eliminate_odd(const QuotientElement& q) {
    const unsigned n = q.level();
    SymFunc f = q.inner();
    for (;;) {
        // find the smallest odd generator index present
        unsigned odd = 0;
        for (const auto& [m, c] : f.terms())
            for (auto [k, a] : m.factors())
                if (k % 2 == 1 && (odd == 0 || k < odd)) odd = k;
        if (odd == 0) break;

        // substitution target for e_odd
        SymFunc subst;
        for (unsigned j = odd + 1; j + 1 < n; ++j) {
            Rat c = make_rat(binomial(j, odd), Int(2));
            if (j % 2 == 0) subst += c * SymFunc::generator(j);  // -(1/2)(-1)^{j+1}
            else subst -= c * SymFunc::generator(j);
        }

        SymFunc next;
        for (const auto& [m, c] : f.terms()) {
            if (m.exponent_of(odd) == 0) {
                next.add_term(m, c);
            } else {
                next += c * (SymFunc::monomial(m.without_one(odd)) * subst);
            }
        }
        f = truncate_symfunc(next, n);
    }
    return QuotientElement(f, n);
}

/// Outcome of the ideal membership test at level n.
///
/// member is decided by exact linear algebra over Q. When member, the
/// representation satisfies f = sum_k r_k * beta_k modulo I_n exactly.
/// The normal form is the even-generator representative and is zero iff
/// member.
struct MembershipCertificate {
    unsigned n;
    bool member;
    std::map<unsigned, QuotientElement> representation;  // k -> r_k
    QuotientElement normal_form;
};

inline MembershipCertificate membership(const SymFunc& f, unsigned n) {
    MembershipCertificate cert{n, false, {}, eliminate_odd(QuotientElement(f, n))};
    SymFunc reduced = truncate_symfunc(f, n);

    // exact match against a single generator first (smallest k wins)
    for (unsigned k = 0; k + 1 < n; ++k) {
        QuotientElement beta = beta_truncated(k, n);
        if (!beta.is_zero() && beta.inner() == reduced) {
            cert.member = true;
            cert.representation.emplace(k, QuotientElement(SymFunc(Rat(1)), n));
            return cert;
        }
    }

    const IdealBasis& ib = ideal_basis(n);
    std::map<unsigned, SymFunc> rep;
    SymFunc residual = ib.reduce(reduced, rep);
    cert.member = residual.is_zero();
    if (cert.member)
        for (auto& [k, r] : rep) cert.representation.emplace(k, QuotientElement(r, n));
    return cert;
}

/// A polynomial in odd-index variables x_3, x_5, ..., with
/// deg(x_{2k+1}) = 2k+1, used as conjecture witnesses.
class BernoulliPolynomial {
public:
    using Monomial = std::map<unsigned, unsigned>;  // odd index -> exponent

    BernoulliPolynomial() = default;
    /*implicit*/ BernoulliPolynomial(const Rat& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }

    static BernoulliPolynomial variable(unsigned idx) {
        if (idx < 3 || idx % 2 == 0)
            throw std::domain_error("BernoulliPolynomial: variables are x3, x5, ...");
        BernoulliPolynomial h;
        h.terms_[{{idx, 1}}] = 1;
        return h;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BernoulliPolynomial& operator+=(const BernoulliPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BernoulliPolynomial& operator-=(const BernoulliPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    BernoulliPolynomial operator-() const {
        BernoulliPolynomial r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    BernoulliPolynomial operator*(const BernoulliPolynomial& o) const {
        BernoulliPolynomial r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma;
                for (auto [idx, a] : mb) m[idx] += a;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    BernoulliPolynomial pow(unsigned e) const {
        BernoulliPolynomial r{Rat(1)};
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Largest variable index appearing; 0 for constants.
    unsigned max_variable() const {
        unsigned top = 0;
        for (const auto& [m, c] : terms_)
            for (auto [idx, a] : m) top = std::max(top, idx);
        return top;
    }

    static unsigned weighted_degree(const Monomial& m) {
        unsigned d = 0;
        for (auto [idx, a] : m) d += idx * a;
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = weighted_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (weighted_degree(m) != d) return false;
        return true;
    }

    /// Value modulo p with x_{2k+1} = B_{p-2k-1} taken from the table.
    /// Throws DenominatorNotInvertible when p divides a coefficient
    /// denominator.
    std::uint64_t evaluate_mod_p(const BernoulliModTable& table) const {
        const long p = table.p;
        const std::uint64_t up = static_cast<std::uint64_t>(p);
        std::uint64_t total = 0;
        for (const auto& [m, c] : terms_) {
            Residue coef = reduce_mod(c, p, 1);
            std::uint64_t v = coef.value().get_ui();
            for (auto [idx, a] : m) {
                std::uint64_t b = table[static_cast<size_t>(p) - idx];
                v = static_cast<unsigned __int128>(v) %
                    up * detail::pow_mod_u64(b, a, up) % up;
            }
            total = (total + v) % up;
        }
        return total;
    }

    bool operator==(const BernoulliPolynomial& o) const { return terms_ == o.terms_; }

private:
    std::map<Monomial, Rat> terms_;
};

inline std::string to_string(const BernoulliPolynomial& h) {
    if (h.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : h.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (auto [idx, e] : m) {
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(idx);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) out += to_string(a);
        else if (a == 1) out += mono;
        else out += to_string(a) + "*" + mono;
    }
    return out;
}

/// Decision for "does the congruence hold for all large p": membership
/// gives an unconditional yes; the no direction is conditional on the
/// Bernoulli independence conjecture and comes with the witness
/// polynomial h built from the lowest homogeneous piece w of the normal
/// form by h(x3, x5, ...) = w(-x3/3, -x5/5, ...).
struct KernelDecision {
    bool in_kernel;  // true: unconditional; false: conditional on the conjecture
    MembershipCertificate certificate;
    std::optional<BernoulliPolynomial> witness;  // present iff !in_kernel
};

inline KernelDecision kernel_decision(const SymFunc& f, unsigned n) {
    MembershipCertificate cert = membership(f, n);
    if (cert.member) return {true, std::move(cert), std::nullopt};

    auto parts = graded_parts(cert.normal_form.inner());
    const SymFunc& w = parts.begin()->second;  // lowest H-degree piece
    BernoulliPolynomial h;
    for (const auto& [m, c] : w.terms()) {
        BernoulliPolynomial::Monomial xm;
        Rat coef = c;
        for (auto [k, a] : m.factors()) {
            // normal forms are even-generator only; e_{2j} -> -x_{2j+1}/(2j+1)
            xm[k + 1] = a;
            for (unsigned i = 0; i < a; ++i) coef *= make_rat(-1L, static_cast<long>(k) + 1);
        }
        h.add_term(xm, coef);
    }
    return {false, std::move(cert), std::move(h)};
}

struct NotAMember : std::runtime_error {
    NotAMember() : std::runtime_error("element is not in the ideal at this level") {}
};

/// A lift of a level-n ideal member to every higher truncation level:
/// truncation_at(N) = truncate(sum_k r_k * beta_k^{[N]}, N), which lies
/// in the level-N ideal by construction and restricts to f at level n.
class KernelLift {
public:
    KernelLift(unsigned n, std::map<unsigned, SymFunc> lifts)
        : n_(n), lifts_(std::move(lifts)) {}

    unsigned base_level() const { return n_; }
    const std::map<unsigned, SymFunc>& lifts() const { return lifts_; }

    SymFunc truncation_at(unsigned N) const {
        if (N < n_) throw std::domain_error("KernelLift: N must be >= the base level");
        SymFunc g;
        for (const auto& [k, r] : lifts_)
            g += truncate_symfunc(r * beta_truncated(k, N).inner(), N);
        return g;
    }

private:
    unsigned n_;
    std::map<unsigned, SymFunc> lifts_;
};

/// Lifts f (an ideal member with H-degree < n) along the beta family.
/// The lift coefficients are the unique representatives of H-degree < n.
/// Throws NotAMember when f is not in the level-n ideal.
inline KernelLift lift_to_kernel(const SymFunc& f, unsigned n) {
    MembershipCertificate cert = membership(f, n);
    if (!cert.member) throw NotAMember();
    std::map<unsigned, SymFunc> lifts;
    for (const auto& [k, r] : cert.representation)
        if (!r.is_zero()) lifts.emplace(k, r.inner());
    return KernelLift(n, std::move(lifts));
}

/// Parses a polynomial in the odd-index variables x3, x5, ... with
/// rational coefficients (same grammar as symmetric-function input).
inline BernoulliPolynomial parse_bernoulli_poly(std::string_view text) {
    auto atom = [](char letter, unsigned k) -> std::optional<BernoulliPolynomial> {
        if (letter != 'x') return std::nullopt;
        return BernoulliPolynomial::variable(k);
    };
    return detail::ExprParser<BernoulliPolynomial, decltype(atom)>(text, atom).parse();
}

/// Searches for the smallest prime p <= p_max with p not dividing the
/// numerator of h(B_{p-3}, B_{p-5}, ...). Primes start at 2n+3 (so every
/// Bernoulli index is positive and even); primes dividing a coefficient
/// denominator are passed over. An empty result is only "not witnessed
/// below p_max", never a refutation.
inline std::optional<long> conjecture_witness(const BernoulliPolynomial& h, long p_max) {
    if (h.is_zero())
        throw std::domain_error("conjecture_witness: h must be nonzero");
    unsigned top = h.max_variable();        // 2n+1
    long p_start = top == 0 ? 5 : static_cast<long>(top) + 2;  // 2n+3
    for (long p : primes_in_range(std::max(p_start, 5L), p_max)) {
        try {
            if (h.evaluate_mod_p(bernoulli_mod_p(p)) != 0) return p;
        } catch (const DenominatorNotInvertible&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace symcong

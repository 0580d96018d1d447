// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria. Everything asserts exact equality; there are no
// tolerances anywhere.

#include <symcong/symcong.hpp>

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>

using namespace symcong;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << "\n";
    if (!ok) ++failures;
}

Rat random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-5, 5);
    return Rat(d(rng));
}

// random element of H-degree < n with coefficients in [-5, 5]
SymFunc random_quotient_element(std::mt19937& rng, unsigned n) {
    SymFunc f;
    for (const EMonomial& m : quotient_basis(n)) f.add_term(m, random_coeff(rng));
    return f;
}

void criterion1() {
    bool ok = true;
    for (long p : primes_in_range(3, 101)) {
        for (const auto& r : check_beta_identity(p, static_cast<unsigned>(p)))
            if (!r.holds) ok = false;
    }
    report(1, "exact beta identity for all primes 3..101, all k <= p", ok);
}

void criterion2(bool long_mode) {
    bool ok = verify_congruence(SymFunc::generator(1), 3, 5, 2000).all_passed();
    std::vector<long> hits = wolstenholme_scan(5, 20000);
    ok = ok && hits == std::vector<long>{16843};
    report(2, "Wolstenholme: e1 passes mod p^3 up to 2000; scan(5,20000) = [16843]", ok);
    if (long_mode) {
        std::vector<long> big = wolstenholme_scan(2124600, 2124700);
        report(2, "long mode: scan around 2124679 finds it",
               big == std::vector<long>{2124679});
    }
}

void criterion3() {
    // odd k: e_k(1/...) = -(k+1)/(2(k+2)) p^2 B_{p-k-2} mod p^3
    // even k: e_k(1/...) = -1/(k+1) p B_{p-k-1} mod p^2
    bool ok = true;
    for (unsigned k = 1; k <= 9; ++k) {
        unsigned nn = (k % 2 == 1) ? 3 : 2;
        for (long p : primes_in_range(static_cast<long>(k) + 3, 300)) {
            ElementaryValueTable table = elementary_values_mod(p, k + nn);
            Int pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
            if (table.values[k] % pk != 0) { ok = false; continue; }
            Residue lhs(p, nn, table.values[k] / pk);
            BernoulliModTable bt = bernoulli_mod_p(p);
            Residue rhs(p, nn, 0);
            if (k % 2 == 1) {
                rhs = reduce_mod(make_rat(-(long(k) + 1), 2 * (long(k) + 2)), p, nn) *
                      Residue(p, nn, Int(p) * p) *
                      Residue(p, nn, Int(bt[size_t(p) - k - 2]));
            } else {
                rhs = reduce_mod(make_rat(-1, long(k) + 1), p, nn) * Residue(p, nn, p) *
                      Residue(p, nn, Int(bt[size_t(p) - k - 1]));
            }
            if (!(lhs == rhs)) ok = false;
        }
    }
    report(3, "Bernoulli congruence suite for k in 1..9, primes k+3..300", ok);
}

void criterion4() {
    bool ok = true;
    for (unsigned m : {1u, 2u, 3u}) {
        SymFunc f = Rat(2) * SymFunc::generator(2 * m - 1) -
                    Rat(2 * long(m)) * SymFunc::generator(2 * m);
        CongruenceReport r = verify_congruence(f, 2 * m + 3, 2 * long(m) + 5, 200);
        if (!r.all_passed() || !r.skipped.empty()) ok = false;
    }
    report(4, "2e_{2m-1} - 2m e_{2m} vanishes mod p^{2m+3}, m in {1,2,3}, p <= 200", ok);
}

void criterion5() {
    SymFunc f = parse_symfunc("e1 - e2 + 1/6*p3");
    bool ok = verify_congruence(f, 6, 11, 300).all_passed();

    MembershipCertificate cert = membership(f, 6);
    ok = ok && cert.member;
    SymFunc expanded;
    for (const auto& [k, r] : cert.representation)
        expanded += truncate_symfunc(r.inner() * beta_truncated(k, 6).inner(), 6);
    ok = ok && expanded == truncate_symfunc(f, 6);
    report(5, "Tauraso congruence at n=6 and its membership certificate", ok);
}

void criterion6() {
    std::mt19937 rng(2024);
    bool ok = true;
    for (unsigned n = 3; n <= 7; ++n) {
        for (int i = 0; i < 50; ++i) {
            SymFunc f;
            for (unsigned k = 0; k + 1 < n; ++k)
                f += random_quotient_element(rng, n) * beta_truncated(k, n).inner();
            f = truncate_symfunc(f, n);
            CongruenceReport r = verify_congruence(f, n, long(n) + 3, 150);
            if (!r.all_passed()) ok = false;
        }
    }
    report(6, "50 random ideal elements per n in 3..7 pass verification", ok);
}

void criterion7() {
    MembershipCertificate cert = membership(SymFunc::generator(1), 4);
    bool ok = !cert.member && cert.normal_form.inner() == SymFunc::generator(2);

    KernelDecision d = kernel_decision(SymFunc::generator(1), 4);
    ok = ok && !d.in_kernel && d.witness &&
         *d.witness == parse_bernoulli_poly("-1/3*x3");

    ok = ok && conjecture_witness(parse_bernoulli_poly("x3"), 100) == 5;

    CongruenceReport r = verify_congruence(SymFunc::generator(1), 4, 7, 2000);
    ok = ok && r.failed() == r.results.size() && !r.results.empty();
    report(7, "converse mechanics: e1 at n=4 (normal form e2, witness -x3/3, all fail)", ok);
}

void criterion8() {
    SymFunc f = parse_symfunc("2*e1 - 2*e2");
    KernelLift lift = lift_to_kernel(f, 4);
    bool ok = lift.truncation_at(4) == f;
    for (unsigned N : {5u, 6u}) {
        CongruenceReport r = verify_congruence(lift.truncation_at(N), N, 11, 150);
        if (!r.all_passed()) ok = false;
    }
    report(8, "lift of 2e1 - 2e2 restricts to f and verifies at levels 5, 6", ok);
}

void criterion9() {
    bool ok = true;

    // dimension per H-degree = partitions into parts >= 2
    std::function<unsigned(unsigned, unsigned)> partitions =
        [&](unsigned d, unsigned min_part) -> unsigned {
        if (d == 0) return 1;
        unsigned c = 0;
        for (unsigned part = min_part; part <= d; ++part) c += partitions(d - part, part);
        return c;
    };
    auto qb = quotient_basis(13);
    for (unsigned d = 0; d <= 12; ++d) {
        unsigned count = 0;
        for (const auto& m : qb) count += (m.h_degree() == d);
        if (count != partitions(d, 2)) ok = false;
    }

    // grading multiplicativity + truncation homomorphism on random pairs
    std::mt19937 rng(99);
    auto random_f = [&rng]() {
        std::uniform_int_distribution<unsigned> nterms(1, 4), gen(1, 4), expo(1, 2);
        std::uniform_int_distribution<long> coeff(-9, 9);
        SymFunc f;
        unsigned t = nterms(rng);
        for (unsigned i = 0; i < t; ++i) {
            EMonomial m;
            unsigned nf = 1 + nterms(rng) % 2;
            for (unsigned j = 0; j < nf; ++j)
                m = m * EMonomial::generator(gen(rng), expo(rng));
            f.add_term(m, Rat(coeff(rng)));
        }
        return f;
    };
    for (int i = 0; i < 200; ++i) {
        SymFunc f = random_f(), g = random_f();
        if (!f.is_zero() && !g.is_zero()) {
            if (*h_valuation(f * g) != *h_valuation(f) + *h_valuation(g)) ok = false;
        }
        for (unsigned n : {4u, 6u, 9u}) {
            if (truncate_symfunc(f * g, n) !=
                truncate_symfunc(truncate_symfunc(f, n) * truncate_symfunc(g, n), n))
                ok = false;
        }
    }
    report(9, "structural invariants: basis dimensions, grading, truncation", ok);
}

}  // namespace

int main(int argc, char** argv) {
    bool long_mode = argc > 1 && std::strcmp(argv[1], "--long") == 0;
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2(long_mode);
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (failures == 0 ? "all criteria passed" : "CRITERIA FAILED") << " ("
              << dt << "s)\n";
    return failures;
}

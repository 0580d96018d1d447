/**
 * Command-line front end: congruence verification over prime ranges,
 * ideal membership and normal forms, beta generators, Bernoulli
 * utilities, the Wolstenholme scan, and conjecture witness probes.
 *
 * Exit codes: 0 = pass/member/found, 1 = mathematical negative,
 * 2 = usage or parse error.
 */

#include <symcong/json.hpp>
#include <symcong/symcong.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace symcong;

unsigned default_jobs() {
    if (const char* env = std::getenv("SYMCONG_JOBS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

struct Options {
    std::string expr;
    unsigned n = 1;
    long pmin = 0;  // 0 = derive default n+3
    long pmax = 200;
    std::string format = "text";
    unsigned jobs = default_jobs();
    long exact_cutoff = 101;
    unsigned k = 0;
    unsigned m = 0;
    long modp = 0;
    unsigned target_level = 0;
    long p = 0;
    unsigned kmax = 0;
};

int run_verify(const Options& opt) {
    SymFunc f = parse_symfunc(opt.expr);
    long pmin = opt.pmin > 0 ? opt.pmin : static_cast<long>(opt.n) + 3;
    VerifyOptions vo{opt.exact_cutoff, opt.jobs};
    CongruenceReport report = verify_congruence(f, opt.n, pmin, opt.pmax, vo);
    if (opt.format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        for (const auto& r : report.results)
            if (!r.pass)
                std::cout << "FAIL p=" << r.p << " residue=" << r.residue.get_str()
                          << (r.valuation ? " valuation=" + std::to_string(*r.valuation) : "")
                          << "\n";
        for (const auto& s : report.skipped)
            std::cout << "SKIP p=" << s.p << " (" << s.reason << ")\n";
        std::cout << "verify " << to_string(f) << " mod p^" << opt.n << " over ["
                  << pmin << ", " << opt.pmax << "]: " << report.passed() << " passed, "
                  << report.failed() << " failed, " << report.skipped.size()
                  << " skipped\n";
        if (report.all_passed())
            std::cout << "passes for all tested primes (no extrapolation implied)\n";
    }
    return report.all_passed() ? 0 : 1;
}

int run_member(const Options& opt) {
    SymFunc f = parse_symfunc(opt.expr);
    KernelDecision d = kernel_decision(f, opt.n);
    if (opt.format == "json") {
        nlohmann::json j = to_json(d.certificate, opt.expr);
        if (d.witness) j["witness"] = to_string(*d.witness);
        std::cout << j.dump(2) << "\n";
    } else if (d.in_kernel) {
        std::cout << "member of the level-" << opt.n << " ideal (congruence holds "
                  << "unconditionally, mod p^" << opt.n << " for large p)\n";
        for (const auto& [k, r] : d.certificate.representation)
            std::cout << "  r_" << k << " = " << to_string(r) << "\n";
    } else {
        std::cout << "not a member of the level-" << opt.n << " ideal\n";
        std::cout << "  normal form: " << to_string(d.certificate.normal_form) << "\n";
        std::cout << "  witness h = " << to_string(*d.witness) << "\n";
        std::cout << "  (non-membership implies congruence failure only under the "
                  << "Bernoulli independence conjecture)\n";
    }
    return d.in_kernel ? 0 : 1;
}

int run_normal_form(const Options& opt) {
    SymFunc f = parse_symfunc(opt.expr);
    QuotientElement nf = eliminate_odd(QuotientElement(f, opt.n));
    std::cout << to_string(nf) << "\n";
    return 0;
}

int run_lift(const Options& opt) {
    SymFunc f = parse_symfunc(opt.expr);
    unsigned N = opt.target_level ? opt.target_level : opt.n + 1;
    try {
        KernelLift lift = lift_to_kernel(f, opt.n);
        std::cout << to_string(lift.truncation_at(N)) << "\n";
        return 0;
    } catch (const NotAMember&) {
        std::cerr << "not a member of the level-" << opt.n << " ideal; nothing to lift\n";
        return 1;
    }
}

int run_beta(const Options& opt) {
    std::cout << to_string(beta_truncated(opt.k, opt.n)) << "\n";
    return 0;
}

int run_bernoulli(const Options& opt) {
    if (opt.modp == 0) {
        std::cout << to_string(bernoulli_exact(opt.m)) << "\n";
        return 0;
    }
    BernoulliModTable table = bernoulli_mod_p(opt.modp);
    if (opt.m != 0 || opt.expr == "table") {
        std::cout << table[opt.m] << "\n";
    } else {
        for (size_t i = 0; i < table.residues.size(); ++i)
            std::cout << "B_" << i << " = " << table.residues[i] << " mod " << opt.modp
                      << "\n";
    }
    return 0;
}

int run_scan(const Options& opt) {
    long pmin = opt.pmin > 0 ? opt.pmin : 5;
    std::vector<long> hits = wolstenholme_scan(pmin, opt.pmax);
    if (opt.format == "json") {
        std::cout << nlohmann::json(hits).dump() << "\n";
    } else {
        for (long p : hits) std::cout << p << "\n";
        if (hits.empty()) std::cout << "no Wolstenholme primes in range\n";
    }
    return 0;
}

int run_check_identity(const Options& opt) {
    auto results = check_beta_identity(opt.p, opt.kmax);
    bool all = true;
    for (const auto& r : results) {
        if (!r.holds) {
            all = false;
            std::cout << "FAIL k=" << r.k << " defect=" << to_string(r.defect) << "\n";
        }
    }
    std::cout << "identity check p=" << opt.p << " k<=" << opt.kmax << ": "
              << (all ? "all exact" : "FAILURES") << "\n";
    return all ? 0 : 1;
}

int run_witness(const Options& opt) {
    BernoulliPolynomial h = parse_bernoulli_poly(opt.expr);
    auto p = conjecture_witness(h, opt.pmax);
    if (p) {
        std::cout << *p << "\n";
        return 0;
    }
    std::cout << "not witnessed below " << opt.pmax << " (not a refutation)\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact congruences for symmetric functions evaluated at (p/1, ..., p/(p-1))"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "Verify f = 0 mod p^n over a prime range");
    verify->add_option("--expr", opt.expr, "Symmetric function expression")->required();
    verify->add_option("--n", opt.n, "Modulus exponent")->required()->check(CLI::PositiveNumber);
    verify->add_option("--pmin", opt.pmin, "Smallest prime (default n+3)");
    verify->add_option("--pmax", opt.pmax, "Largest prime")->required();
    verify->add_option("--jobs", opt.jobs, "Parallel workers (env SYMCONG_JOBS)");
    verify->add_option("--exact-cutoff", opt.exact_cutoff,
                       "Exact rational evaluation for primes up to this bound");
    add_common(verify);

    CLI::App* member = app.add_subcommand("member", "Ideal membership with certificate");
    member->add_option("--expr", opt.expr)->required();
    member->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);
    add_common(member);

    CLI::App* nform = app.add_subcommand("normal-form", "Even-generator normal form");
    nform->add_option("--expr", opt.expr)->required();
    nform->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);

    CLI::App* lift = app.add_subcommand("lift", "Lift an ideal member to a higher level");
    lift->add_option("--expr", opt.expr)->required();
    lift->add_option("--n", opt.n, "Base level")->required()->check(CLI::PositiveNumber);
    lift->add_option("--N", opt.target_level, "Target truncation level (default n+1)");

    CLI::App* beta = app.add_subcommand("beta", "Print beta_k truncated at level n");
    beta->add_option("--k", opt.k)->required();
    beta->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);

    CLI::App* bern = app.add_subcommand("bernoulli", "Bernoulli numbers, exact or mod p");
    bern->add_option("--m", opt.m, "Index");
    bern->add_option("--modp", opt.modp, "Prime modulus: residues B_0..B_{p-3}");

    CLI::App* scan = app.add_subcommand("scan-wolstenholme",
                                        "Primes with H_{p-1} = 0 mod p^3 in a range");
    scan->add_option("--pmin", opt.pmin);
    scan->add_option("--pmax", opt.pmax)->required();
    add_common(scan);

    CLI::App* check = app.add_subcommand("check-identity",
                                         "Exact beta identity check at one prime");
    check->add_option("--p", opt.p)->required();
    check->add_option("--kmax", opt.kmax)->required();

    CLI::App* witness = app.add_subcommand("conjecture-witness",
                                           "First prime witnessing h(B_{p-3}, ...) != 0 mod p");
    witness->add_option("--expr", opt.expr, "Polynomial in x3, x5, ...")->required();
    witness->add_option("--pmax", opt.pmax)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(opt);
        if (member->parsed()) return run_member(opt);
        if (nform->parsed()) return run_normal_form(opt);
        if (lift->parsed()) return run_lift(opt);
        if (beta->parsed()) return run_beta(opt);
        if (bern->parsed()) return run_bernoulli(opt);
        if (scan->parsed()) return run_scan(opt);
        if (check->parsed()) return run_check_identity(opt);
        if (witness->parsed()) return run_witness(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

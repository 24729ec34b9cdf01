// End-to-end acceptance battery. Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.
// Budgets are wall-clock seconds, pinned here and asserted.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "zsl/classifier.hpp"
#include "zsl/davenport.hpp"
#include "zsl/factorization.hpp"
#include "zsl/group.hpp"
#include "zsl/lemma1.hpp"
#include "zsl/products.hpp"
#include "zsl/reports.hpp"
#include "zsl/sequence.hpp"

using namespace zsl;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* label;
    double budget_s;
    Clock::time_point start = Clock::now();

    explicit Criterion(const char* l, double budget) : label(l), budget_s(budget) {}

    void finish(bool ok, const std::string& detail) const {
        double elapsed =
            std::chrono::duration<double>(Clock::now() - start).count();
        bool in_budget = elapsed <= budget_s;
        if (!ok || !in_budget) ++failures;
        std::printf("%s %s (%.2fs of %.0fs budget) %s\n",
                    (ok && in_budget) ? "PASS" : "FAIL", label, elapsed,
                    budget_s, detail.c_str());
        std::fflush(stdout);
    }
};

const std::vector<std::pair<int, long long>> kPairs = {
    {8, 3}, {8, 5}, {12, 5}, {12, 7}, {16, 7}, {16, 9}};

void criterion1_davenport() {
    Criterion c("1 davenport constants", 300.0);
    bool ok = true;
    std::string detail;
    for (int m = 2; m <= 16; ++m) {
        DavenportConfig cfg;
        cfg.max_len = m;
        DavenportResult r = small_davenport(Group::cyclic(m), cfg);
        if (!(r.exhaustive && r.d == m - 1)) {
            ok = false;
            detail += " C_" + std::to_string(m) + "=" + std::to_string(r.d);
        }
    }
    for (auto [n, s] : kPairs) {
        DavenportConfig cfg;
        cfg.max_len = n + 1;
        cfg.workers = 4;
        DavenportResult r = small_davenport(Group::metacyclic(n, s), cfg);
        if (!(r.exhaustive && r.d == n)) {
            ok = false;
            detail += " (" + std::to_string(n) + "," + std::to_string(s) +
                      ")=" + std::to_string(r.d);
        }
    }
    c.finish(ok, ok ? "d(C_m)=m-1 for m=2..16, d(G)=n for all six pairs" : detail);
}

void criterion2_census() {
    Criterion c("2 extremal census", 1800.0);
    bool ok = true;
    std::string detail;
    const std::uint64_t expect[] = {32, 64, 48, 48, 128, 256};
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
        auto [n, s] = kPairs[i];
        TheoremConfig cfg;
        cfg.workers = 4;
        cfg.time_budget_ms = 25 * 60 * 1000;  // declared budget per pair
        TheoremReport rep = verify_theorem(Group::metacyclic(n, s), cfg);
        bool this_ok = rep.complete && rep.equal &&
                       rep.formula_count == expect[i] &&
                       rep.enumerated_count == expect[i];
        if (!this_ok) {
            ok = false;
            detail += " (" + std::to_string(n) + "," + std::to_string(s) +
                      "): complete=" + (rep.complete ? "yes" : "no") +
                      " enumerated=" + std::to_string(rep.enumerated_count);
        }
    }
    c.finish(ok, ok ? "counts 32/64/48/48/128/256, all complete, no diffs" : detail);
}

void criterion3_families() {
    Criterion c("3 family freeness", 60.0);
    bool ok = true;
    std::uint64_t checked = 0;
    for (int n : {8, 12, 16}) {
        for (int s : admissible_twists(n)) {
            FamiliesReport rep = verify_families_pof(Group::metacyclic(n, s));
            checked += rep.type1 + rep.type2xx + rep.type2xy;
            ok = ok && rep.all_pof();
        }
    }
    c.finish(ok, std::to_string(checked) + " instances, zero failures");
}

void criterion4_oracle() {
    Criterion c("4 oracle equivalence", 600.0);
    std::vector<Group> groups;
    groups.push_back(Group::metacyclic(8, 3));
    groups.push_back(Group::metacyclic(8, 5));
    groups.push_back(Group::metacyclic(12, 5));
    groups.push_back(Group::metacyclic(6, 5));
    groups.push_back(Group::cyclic(24));
    groups.push_back(Group::cyclic(7));
    bool ok = true;
    std::uint64_t cases = 0;

    auto agree = [&](const Sequence& s, const Group& g) {
        ProductReport fast = compute_products(s, g);
        ProductReport slow = brute_force_oracle(s, g);
        ++cases;
        return fast.pi == slow.pi && fast.subproducts == slow.subproducts &&
               fast.product_one_free == slow.product_one_free;
    };

    for (const Group& g : groups) {
        for (int k = 0; k <= 3; ++k) {
            for (const Sequence& s : all_multisets(g.order(), k)) {
                if (!agree(s, g)) ok = false;
            }
        }
    }
    std::mt19937_64 rng(20240819);
    for (const Group& g : groups) {
        for (int trial = 0; trial < 100; ++trial) {
            int len = 4 + static_cast<int>(rng() % 4);  // 4..7
            Sequence s(g.order());
            for (int i = 0; i < len; ++i)
                s.add(static_cast<int>(rng() % g.order()));
            if (!agree(s, g)) ok = false;
        }
    }
    c.finish(ok, std::to_string(cases) + " sequences, exact set equality");
}

void criterion5_factorization() {
    Criterion c("5 twist factorization", 60.0);
    bool ok = true;
    std::uint64_t pairs = 0;
    for (int n = 2; n <= 200; ++n) {
        for (int s : admissible_twists(n)) {
            ++pairs;
            Factorization f = factor(n, s);
            bool good = std::gcd(f.n1, f.n2) == 1;
            if (f.n1 > 1) good = good && (s + 1) % f.n1 == 0;
            if (f.n2 > 1) good = good && (s - 1) % f.n2 == 0;
            good = good && (f.case_tag == FactorCase::A ? n == f.n1 * f.n2
                                                        : n == 2 * f.n1 * f.n2);
            CrtProjection p = build_projection(f);
            for (int k = 0; k < n && good; ++k) {
                auto [k1, k2] = p.apply(k);
                auto tw = p.apply(static_cast<long long>(s) * k);
                good = tw.first == (f.n1 - k1) % f.n1 && tw.second == k2;
            }
            ok = ok && good;
        }
    }
    // No admissible twist over rigid moduli: odd prime powers and their
    // doubles have no square root of 1 besides +-1.
    auto odd_prime_power = [](int v) {
        for (int p = 3; p <= v; p += 2) {
            if (v % p) continue;
            while (v % p == 0) v /= p;
            return v == 1;
        }
        return false;
    };
    for (int n = 3; n <= 200; ++n) {
        int odd = n % 2 ? n : n / 2;
        bool rigid = (n % 2 || (n / 2) % 2) && odd_prime_power(odd);
        if (rigid && !admissible_twists(n).empty()) ok = false;
    }
    c.finish(ok, std::to_string(pairs) + " admissible pairs, all congruences hold");
}

void criterion6_lemma1() {
    Criterion c("6 cyclic lemma audit", 600.0);
    Lemma1Report ex = audit_lemma1(3, 12, AuditMode::Exhaustive);
    Lemma1Report sm = audit_lemma1(13, 20, AuditMode::Sample, 10'000, 20240819);
    bool ok = ex.clean() && sm.clean() && ex.instances > 0 &&
              sm.instances == 8 * 10'000;
    c.finish(ok, std::to_string(ex.instances) + " exhaustive + " +
                     std::to_string(sm.instances) + " sampled instances, " +
                     std::to_string(ex.falsifications.size() +
                                    sm.falsifications.size()) +
                     " falsifications");
}

void criterion7_determinism() {
    Criterion c("7 determinism", 120.0);
    Group g = Group::metacyclic(8, 5);
    TheoremConfig cfg;
    cfg.workers = 4;
    std::string a =
        strip_stats(theorem_report(g, verify_theorem(g, cfg))).dump();
    std::string b =
        strip_stats(theorem_report(g, verify_theorem(g, cfg))).dump();
    c.finish(a == b, a == b ? "byte-identical reports after stats strip"
                            : "reports differ");
}

}  // namespace

int main() {
    criterion1_davenport();
    criterion2_census();
    criterion3_families();
    criterion4_oracle();
    criterion5_factorization();
    criterion6_lemma1();
    criterion7_determinism();
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 7 criteria pass\n");
    return 0;
}

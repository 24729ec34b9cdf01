#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zsl/sequence.hpp"

namespace zsl {

// Certificate checkers for the structure of long product-one free sequences
// over C_m. Hypotheses common to all three: m >= 3, S a product-one free
// sequence over C_m with |S| > m/2 (strict; |S| == m/2 inputs are refused,
// the bound is not extrapolated). Hypothesis violations raise
// PreconditionError; a checker returning a negative result is data.
// Elements of C_m are their residues, so index k means y^k.

struct MultiplicityCheck {
    bool ok = false;
    int heavy_term = -1;    // smallest element index meeting the bound
    long long bound = 0;    // max(m - 2|S| + 1, |S| - floor((m-1)/3))
};

// Some term must repeat at least `bound` times.
MultiplicityCheck check_multiplicity_bound(const Sequence& s, int m);

struct NormalizerResult {
    bool found = false;
    int t = 0;                  // smallest unit with the sum below m
    long long residue_sum = 0;  // sum over terms of (a*t mod m) in [0, m-1]
};

// Scans units t mod m in increasing order for one that drags the whole
// sequence onto residues summing below m.
NormalizerResult find_normalizer(const Sequence& s, int m);

// With residues r_i = a_i * t mod m: every k in [1, sum r_i] must be an
// integer subset sum of the r_i. Pre: gcd(t, m) = 1.
bool check_subsum_coverage(const Sequence& s, int m, int t);

enum class AuditMode { Exhaustive, Sample };

struct Lemma1Falsification {
    int m = 0;
    Sequence seq;
    std::string which;  // "multiplicity" | "normalizer" | "coverage"
};

struct Lemma1Report {
    std::uint64_t instances = 0;  // sequences put through all three checkers
    std::vector<Lemma1Falsification> falsifications;  // expected empty
    bool clean() const { return falsifications.empty(); }
};

// Exhaustive mode enumerates every qualifying product-one free sequence for
// each m in [m_min, m_max] (allowed only up to m = 12). Sample mode draws
// `samples` qualifying sequences per m from the given seed; identical seeds
// give identical reports.
Lemma1Report audit_lemma1(int m_min, int m_max, AuditMode mode,
                          std::uint64_t samples = 10'000, std::uint64_t seed = 0);

// Abelian product-one test: no nonempty subset of the residues sums to
// 0 mod m. Shared by the checkers and the audit filter; m <= 64.
bool cyclic_product_one_free(const Sequence& s, int m);

}  // namespace zsl

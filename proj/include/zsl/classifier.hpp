#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zsl/group.hpp"
#include "zsl/products.hpp"
#include "zsl/sequence.hpp"

namespace zsl {

// The two extremal families of maximal product-one free sequences, length n.
//   TypeI   : (y^u)^[n-1] * x y^v   with gcd(u,n) = 1, any v
//   TypeIIxx: (x y^u)^[n-1] * x y^v with u odd, v even
//   TypeIIxy: (x y^u)^[n-1] * y^v   with u odd, v odd
// The TypeII kinds exist only for (n,s) = (2^t, 2^(t-1)+1), t >= 3.
enum class PatternKind { TypeI, TypeIIxx, TypeIIxy };

const char* to_string(PatternKind kind);

struct ExtremalPattern {
    PatternKind kind = PatternKind::TypeI;
    int u = 0;
    int v = 0;
    friend bool operator==(const ExtremalPattern&, const ExtremalPattern&) = default;
};

// Every applicable pattern, TypeI (u asc, v asc) then TypeIIxx then TypeIIxy.
std::vector<ExtremalPattern> all_patterns(const Group& g);

// phi(n)*n, plus 2*(n/2)^2 when the TypeII kinds apply. Computed from the
// parameter ranges alone; enumeration must reproduce it independently.
std::uint64_t predicted_extremal_count(const Group& g);

Sequence realize(const ExtremalPattern& p, const Group& g);

// Purely syntactic match against the family shapes and side conditions; no
// product computation. Pre: |S| = n, group of the studied class.
std::optional<ExtremalPattern> match_pattern(const Sequence& s, const Group& g);

struct FamilyFailure {
    ExtremalPattern pattern;
    std::vector<int> witness;  // product-one ordering found in the instance
};

struct FamiliesReport {
    std::uint64_t type1 = 0;  // instances checked per kind
    std::uint64_t type2xx = 0;
    std::uint64_t type2xy = 0;
    std::vector<FamilyFailure> failures;  // expected empty
    bool all_pof() const { return failures.empty(); }
};

// Realizes every pattern instance and checks product-one freeness directly.
FamiliesReport verify_families_pof(const Group& g, const EngineConfig& cfg = {});

struct TheoremConfig {
    EngineConfig engine;
    int workers = 1;
    std::uint64_t time_budget_ms = 0;  // 0 = unlimited; partial result if hit
};

struct TheoremReport {
    std::uint64_t formula_count = 0;     // closed-form parameter count
    std::uint64_t predicted_count = 0;   // realized pattern set size
    std::uint64_t enumerated_count = 0;  // POF multisets of length n found
    std::vector<Sequence> missing;       // predicted minus enumerated
    std::vector<Sequence> extra;         // enumerated minus predicted
    bool complete = false;  // enumeration covered the whole tree
    bool equal = false;     // complete, counts agree, both diffs empty
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned = 0;
    double runtime_ms = 0.0;
};

// Every product-one free multiset of length exactly n, by pruned canonical
// enumeration. Sorted lexicographically. complete (when given) reports
// whether the search finished within the time budget.
std::vector<Sequence> enumerate_extremal_pof(const Group& g,
                                             const TheoremConfig& cfg = {},
                                             bool* complete = nullptr,
                                             std::uint64_t* nodes = nullptr,
                                             std::uint64_t* pruned = nullptr);

// Set equality between the realized patterns and the enumeration.
TheoremReport verify_theorem(const Group& g, const TheoremConfig& cfg = {});

struct ClosureReport {
    int v = 0;
    std::vector<int> generators;
    int closure_size = 0;
    bool full = false;  // the generators span the whole group
};

// Size of the subgroup generated by {x, x y^v}. When it is the whole group,
// the TypeII families are TypeI families written in the new generators.
ClosureReport generator_change_note(const Group& g, int v);

}  // namespace zsl

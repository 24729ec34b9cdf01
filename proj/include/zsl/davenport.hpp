#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zsl/group.hpp"
#include "zsl/products.hpp"
#include "zsl/sequence.hpp"

namespace zsl {

struct DavenportConfig {
    int max_len = 0;  // search depth cap, >= 1
    int workers = 1;  // top-level DFS branches split round-robin
    EngineConfig engine;
};

struct DavenportResult {
    int d = 0;          // deepest product-one free multiset found
    Sequence witness;   // lexicographically least among the deepest
    std::uint64_t nodes_explored = 0;  // product-one free nodes entered
    std::uint64_t pruned = 0;          // extensions rejected by the POF test
    bool exhaustive = false;       // full tree covered and d < max_len
    bool max_len_reached = false;  // a POF multiset of length max_len exists
};

// Depth-first search over nondecreasing-index multisets, pruning the moment a
// multiset stops being product-one free (sound: sub-multisets of POF multisets
// are POF). d is exact when exhaustive; with max_len_reached the truth is
// d >= max_len. StateBudgetExceeded propagates.
DavenportResult small_davenport(const Group& g, const DavenportConfig& cfg);

struct DavenportClaim {
    int n = 0;
    int s = 0;
    int expected = 0;  // the claimed value d = n
    int actual = 0;
    bool ok = false;
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned = 0;
    double runtime_ms = 0.0;
};

// Checks d(C_n x| C_2) = n for each pair. Mismatches come back as records
// with ok = false, never as exceptions. Pre: every pair TwistedMetacyclic.
std::vector<DavenportClaim> verify_davenport_claims(
    const std::vector<std::pair<int, long long>>& pairs,
    const DavenportConfig& base = {});

}  // namespace zsl

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zsl/group.hpp"
#include "zsl/sequence.hpp"

namespace zsl {

struct EngineConfig {
    // Cap on live DP states (one per sub-multiset of the stacked sequence).
    std::size_t state_budget = 10'000'000;
};

struct EngineStats {
    std::uint64_t states_created = 0;  // table inserts over the lifetime
    std::uint64_t peak_live = 0;       // max concurrent table size
};

// pi: products of ALL of S over every ordering. subproducts: the union of pi
// over every nonempty sub-multiset of S. The empty sequence has pi = {1}
// (empty product) and subproducts = {}.
struct ProductReport {
    std::vector<int> pi;           // sorted element indices
    std::vector<int> subproducts;  // sorted element indices
    bool product_one_free = true;
    std::optional<std::vector<int>> witness;  // ordered, multiplies to identity
    EngineStats stats;
};

struct PofResult {
    bool product_one_free = true;
    std::optional<std::vector<int>> witness;
    EngineStats stats;
};

// Incremental product-set DP shaped for depth-first search. The stack holds a
// sequence S and a table mapping every sub-multiset U of S to the bitmask of
// pi(U); push extends S by one element and fills in exactly the new table
// rows, pop rolls them back. Requires group order <= 64 (masks are 64-bit).
//
// The product-one test in try_push is exact and O(1): a product-one ordering
// of U + g rotates to one that starts with g, so 1 lands in Pi(S + g) iff it
// was already in Pi(S), g is the identity, or g^-1 is in Pi(S).
class SubproductStack {
  public:
    explicit SubproductStack(const Group& g, EngineConfig cfg = {});

    // Extends by elem if the extension keeps the sequence product-one free;
    // returns false (stack untouched) otherwise.
    bool try_push(int elem);

    // Extends unconditionally; the sequence may stop being product-one free.
    // On StateBudgetExceeded the stack is left as it was.
    void push(int elem);

    // Undoes the most recent push.
    void pop();

    const Sequence& sequence() const { return seq_; }
    const Group& group() const { return group_; }
    std::size_t depth() const { return trail_.size(); }

    std::uint64_t pi_mask() const;  // bit e set iff element e in pi(S)
    std::uint64_t subproducts_mask() const { return sub_mask_; }
    bool product_one_free() const { return (sub_mask_ & 1ULL) == 0; }
    bool would_stay_pof(int elem) const;  // the try_push test, non-mutating

    // An ordering of some nonempty sub-multiset of S whose product is q.
    // Deterministic: smallest (size, key) table row, smallest last element at
    // each backward step. Pre: bit q set in subproducts_mask().
    std::vector<int> ordering_for(int q) const;

    std::size_t live_states() const { return table_.size(); }
    const EngineStats& stats() const { return stats_; }

  private:
    using Key = std::string;  // counts packed big-endian u16 per element

    std::uint64_t apply(std::uint64_t mask, int h) const;
    void insert_rows_for(int elem, std::vector<Key>& inserted,
                         std::uint64_t& new_bits);

    struct TrailEntry {
        int elem;
        std::uint64_t prev_sub_mask;
        std::vector<Key> inserted;
    };

    const Group& group_;
    EngineConfig cfg_;
    Sequence seq_;
    Key cur_key_;
    std::unordered_map<Key, std::uint64_t> table_;
    std::uint64_t sub_mask_ = 0;
    std::vector<TrailEntry> trail_;
    EngineStats stats_;
};

// Exact pi(S) and Pi(S) by the sub-multiset DP. No early exit: the sets are
// complete even when S is not product-one free (then a witness is attached).
ProductReport compute_products(const Sequence& s, const Group& g,
                               const EngineConfig& cfg = {});

// Early-exits on the first identity hit; witness attached when the answer is
// false. Sequences containing the identity short-circuit before the DP.
PofResult is_product_one_free(const Sequence& s, const Group& g,
                              const EngineConfig& cfg = {});

// Independent ground truth: every nonempty sub-multiset times every distinct
// permutation, multiplied out term by term. Rejects |S| > 8.
ProductReport brute_force_oracle(const Sequence& s, const Group& g);

// Sorted element indices of the set bits.
std::vector<int> mask_to_elements(std::uint64_t mask);

}  // namespace zsl

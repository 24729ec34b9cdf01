#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zsl/errors.hpp"
#include "zsl/group.hpp"

namespace zsl {

// A finite unordered multiset of group elements (the free abelian monoid over
// the element set). Counts are kept as a dense vector indexed by element; the
// vector doubles as the canonical memoization key in the product engine.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(int group_order) : counts_(group_order, 0) {}

    static Sequence single(int group_order, int elem, std::uint32_t mult = 1) {
        Sequence s(group_order);
        s.add(elem, mult);
        return s;
    }

    int group_order() const { return static_cast<int>(counts_.size()); }
    std::uint64_t length() const { return length_; }
    bool empty() const { return length_ == 0; }

    std::uint32_t count(int elem) const { return counts_[elem]; }
    const std::vector<std::uint32_t>& counts() const { return counts_; }

    void add(int elem, std::uint32_t mult = 1) {
        counts_[elem] += mult;
        length_ += mult;
    }
    void remove(int elem, std::uint32_t mult = 1) {
        if (counts_[elem] < mult)
            throw PreconditionError("Sequence::remove: multiplicity underflow");
        counts_[elem] -= mult;
        length_ -= mult;
    }

    int distinct() const {
        int d = 0;
        for (auto c : counts_) d += (c != 0);
        return d;
    }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.counts_ == b.counts_;
    }

private:
    std::vector<std::uint32_t> counts_;
    std::uint64_t length_ = 0;
};

// Concatenation product: pointwise sum of multiplicities.
Sequence concat(const Sequence& s, const Sequence& t);

// T | S in the divisibility order of the free abelian monoid.
bool divides(const Sequence& t, const Sequence& s);

// S * T^[-1]; requires divides(t, s).
Sequence remove(const Sequence& s, const Sequence& t);

// Subsequence of the terms whose element satisfies the predicate.
Sequence restrict(const Sequence& s, const std::function<bool(int)>& keep);

// Lexicographic order on the nondecreasing element-index tuples. This is the
// tie-breaking rule everywhere a "first" sequence is reported.
bool seq_lex_less(const Sequence& a, const Sequence& b);

// Depth-first enumeration of all multisets of size k over the alphabet
// 0..alphabet-1, in lexicographic order of the nondecreasing index tuple.
//
// enter(e) is called when a copy of e is appended to the current prefix; a
// false return prunes the whole subtree rooted at the extended prefix (leave
// is not called for pruned nodes). leave(e) undoes enter. complete() fires at
// depth exactly k. Visitors keep their own prefix state.
template <typename Enter, typename Leave, typename Complete>
void enumerate_multisets(int alphabet, int k, Enter&& enter, Leave&& leave,
                         Complete&& complete) {
    if (k == 0) {
        complete();
        return;
    }
    // Iterative stack of "next element to try" per depth, min-index discipline.
    struct Level { int elem; };
    std::vector<Level> stack;
    stack.reserve(k);
    int e = 0;
    while (true) {
        if (e >= alphabet) {
            if (stack.empty()) return;
            e = stack.back().elem;
            stack.pop_back();
            leave(e);
            ++e;
            continue;
        }
        if (enter(e)) {
            if (static_cast<int>(stack.size()) + 1 == k) {
                complete();
                leave(e);
                ++e;
            } else {
                stack.push_back(Level{e});
                // children start from the same element index (nondecreasing)
            }
        } else {
            ++e;
        }
    }
}

// Convenience: collect every multiset of size k over the group's elements.
std::vector<Sequence> all_multisets(int group_order, int k);

// Stars-and-bars count C(alphabet+k-1, k) as a checked 64-bit value.
std::uint64_t multiset_count(int alphabet, int k);

}  // namespace zsl

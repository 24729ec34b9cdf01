#include "zsl/products.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "zsl/errors.hpp"

namespace zsl {
namespace {

constexpr int kMaskBits = 64;

std::uint64_t key_size(const std::string& key) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i + 1 < key.size(); i += 2)
        total += (static_cast<std::uint64_t>(static_cast<unsigned char>(key[i])) << 8) |
                 static_cast<unsigned char>(key[i + 1]);
    return total;
}

std::uint32_t key_count(const std::string& key, int elem) {
    return (static_cast<std::uint32_t>(static_cast<unsigned char>(key[2 * elem])) << 8) |
           static_cast<unsigned char>(key[2 * elem + 1]);
}

void key_set(std::string& key, int elem, std::uint32_t c) {
    key[2 * elem] = static_cast<char>((c >> 8) & 0xFF);
    key[2 * elem + 1] = static_cast<char>(c & 0xFF);
}

}  // namespace

std::vector<int> mask_to_elements(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

SubproductStack::SubproductStack(const Group& g, EngineConfig cfg)
    : group_(g), cfg_(cfg), seq_(g.order()) {
    if (g.order() > kMaskBits)
        throw PreconditionError("product engine handles group order <= 64");
    cur_key_.assign(static_cast<std::size_t>(2 * g.order()), '\0');
    table_.emplace(cur_key_, 1ULL);  // pi(empty) = {identity}
    stats_.states_created = 1;
    stats_.peak_live = 1;
}

std::uint64_t SubproductStack::apply(std::uint64_t mask, int h) const {
    std::uint64_t out = 0;
    while (mask) {
        int p = std::countr_zero(mask);
        mask &= mask - 1;
        out |= 1ULL << group_.mul(p, h);
    }
    return out;
}

std::uint64_t SubproductStack::pi_mask() const { return table_.at(cur_key_); }

bool SubproductStack::would_stay_pof(int elem) const {
    if (!product_one_free()) return false;
    if (elem == group_.identity()) return false;
    return (sub_mask_ & (1ULL << group_.inverse(elem))) == 0;
}

bool SubproductStack::try_push(int elem) {
    if (!would_stay_pof(elem)) return false;
    push(elem);
    return true;
}

void SubproductStack::insert_rows_for(int elem, std::vector<Key>& inserted,
                                      std::uint64_t& new_bits) {
    // New rows are exactly V + elem^[c+1] for the rows V that hold no copy of
    // elem; V ranges over sub-multisets of S on the other coordinates.
    std::uint32_t new_count = seq_.count(elem) + 1;
    std::vector<std::pair<std::uint64_t, Key>> pending;
    pending.reserve(table_.size() / new_count + 1);
    for (const auto& [key, mask] : table_) {
        if (key_count(key, elem) != 0) continue;
        Key extended = key;
        key_set(extended, elem, new_count);
        pending.emplace_back(key_size(key), std::move(extended));
    }
    // Size order guarantees every U - h lookup below hits a finished row.
    std::sort(pending.begin(), pending.end());

    for (auto& [vsize, key] : pending) {
        if (table_.size() >= cfg_.state_budget) {
            for (const Key& k : inserted) table_.erase(k);
            throw StateBudgetExceeded("product DP state budget exceeded");
        }
        Key below = key;
        key_set(below, elem, new_count - 1);
        std::uint64_t mask = apply(table_.at(below), elem);
        for (int h = 0; h < group_.order(); ++h) {
            std::uint32_t c = key_count(key, h);
            if (c == 0 || h == elem) continue;
            Key sub = key;
            key_set(sub, h, c - 1);
            mask |= apply(table_.at(sub), h);
        }
        table_.emplace(key, mask);
        inserted.push_back(std::move(key));
        new_bits |= mask;
        ++stats_.states_created;
    }
}

void SubproductStack::push(int elem) {
    if (elem < 0 || elem >= group_.order())
        throw PreconditionError("push: element index out of range");
    if (seq_.count(elem) >= 0xFFFF)
        throw PreconditionError("push: element multiplicity exceeds 65535");

    TrailEntry entry;
    entry.elem = elem;
    entry.prev_sub_mask = sub_mask_;
    std::uint64_t new_bits = 0;
    insert_rows_for(elem, entry.inserted, new_bits);  // may throw, rolled back

    sub_mask_ |= new_bits;
    seq_.add(elem);
    key_set(cur_key_, elem, seq_.count(elem));
    stats_.peak_live = std::max<std::uint64_t>(stats_.peak_live, table_.size());
    trail_.push_back(std::move(entry));
}

void SubproductStack::pop() {
    if (trail_.empty()) throw PreconditionError("pop on empty stack");
    TrailEntry& entry = trail_.back();
    for (const Key& k : entry.inserted) table_.erase(k);
    sub_mask_ = entry.prev_sub_mask;
    seq_.remove(entry.elem);
    key_set(cur_key_, entry.elem, seq_.count(entry.elem));
    trail_.pop_back();
}

std::vector<int> SubproductStack::ordering_for(int q) const {
    if (q < 0 || q >= group_.order() || (sub_mask_ & (1ULL << q)) == 0)
        throw PreconditionError("ordering_for: product not in subproduct set");

    // Canonical starting row: among nonempty rows containing q, the smallest
    // (size, key). Map iteration order does not leak into the result.
    const Key* best = nullptr;
    std::uint64_t best_size = 0;
    for (const auto& [key, mask] : table_) {
        if ((mask & (1ULL << q)) == 0) continue;
        std::uint64_t size = key_size(key);
        if (size == 0) continue;
        if (!best || size < best_size || (size == best_size && key < *best)) {
            best = &key;
            best_size = size;
        }
    }

    std::vector<int> rev;
    Key key = *best;
    int target = q;
    for (std::uint64_t remaining = best_size; remaining > 0; --remaining) {
        bool stepped = false;
        for (int h = 0; h < group_.order() && !stepped; ++h) {
            std::uint32_t c = key_count(key, h);
            if (c == 0) continue;
            Key sub = key;
            key_set(sub, h, c - 1);
            // target = r * h for some r in pi(U - h)?
            int r = group_.mul(target, group_.inverse(h));
            if (table_.at(sub) & (1ULL << r)) {
                rev.push_back(h);
                key = std::move(sub);
                target = r;
                stepped = true;
            }
        }
        if (!stepped)
            throw PreconditionError("ordering_for: inconsistent product table");
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

ProductReport compute_products(const Sequence& s, const Group& g,
                               const EngineConfig& cfg) {
    if (s.group_order() != g.order())
        throw PreconditionError("sequence and group orders disagree");
    SubproductStack st(g, cfg);
    for (int e = 0; e < g.order(); ++e)
        for (std::uint32_t c = 0; c < s.count(e); ++c) st.push(e);

    ProductReport rep;
    rep.pi = mask_to_elements(st.pi_mask());
    rep.subproducts = mask_to_elements(st.subproducts_mask());
    rep.product_one_free = st.product_one_free();
    if (!rep.product_one_free) rep.witness = st.ordering_for(g.identity());
    rep.stats = st.stats();
    return rep;
}

PofResult is_product_one_free(const Sequence& s, const Group& g,
                              const EngineConfig& cfg) {
    if (s.group_order() != g.order())
        throw PreconditionError("sequence and group orders disagree");
    PofResult res;
    if (s.count(g.identity()) > 0) {
        res.product_one_free = false;
        res.witness = std::vector<int>{g.identity()};
        return res;
    }
    SubproductStack st(g, cfg);
    for (int e = 0; e < g.order(); ++e) {
        for (std::uint32_t c = 0; c < s.count(e); ++c) {
            if (!st.try_push(e)) {
                res.product_one_free = false;
                auto witness = st.ordering_for(g.inverse(e));
                witness.push_back(e);
                res.witness = std::move(witness);
                res.stats = st.stats();
                return res;
            }
        }
    }
    res.product_one_free = true;
    res.stats = st.stats();
    return res;
}

ProductReport brute_force_oracle(const Sequence& s, const Group& g) {
    if (s.group_order() != g.order())
        throw PreconditionError("sequence and group orders disagree");
    if (g.order() > kMaskBits)
        throw PreconditionError("product engine handles group order <= 64");
    if (s.length() > 8)
        throw PreconditionError("brute_force_oracle: |S| > 8");

    std::vector<int> supp;
    std::vector<std::uint32_t> cap;
    for (int e = 0; e < g.order(); ++e) {
        if (s.count(e)) {
            supp.push_back(e);
            cap.push_back(s.count(e));
        }
    }

    ProductReport rep;
    std::uint64_t pi = 1ULL << g.identity();  // empty product
    std::uint64_t sub = 0;
    std::vector<std::uint32_t> c(supp.size(), 0);
    std::vector<int> flat;
    while (true) {
        // Odometer: advance to the next sub-multiset; all-zero was the start.
        std::size_t i = 0;
        while (i < c.size() && c[i] == cap[i]) {
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) break;
        ++c[i];

        flat.clear();
        for (std::size_t j = 0; j < supp.size(); ++j)
            for (std::uint32_t k = 0; k < c[j]; ++k) flat.push_back(supp[j]);
        bool full = flat.size() == s.length();
        std::uint64_t here = 0;
        do {  // next_permutation visits each distinct ordering exactly once
            int p = g.identity();
            for (int e : flat) p = g.mul(p, e);
            here |= 1ULL << p;
            if (p == g.identity() && !rep.witness) rep.witness = flat;
        } while (std::next_permutation(flat.begin(), flat.end()));
        sub |= here;
        if (full) pi = here;
    }

    rep.pi = mask_to_elements(pi);
    rep.subproducts = mask_to_elements(sub);
    rep.product_one_free = (sub & 1ULL) == 0;
    if (rep.product_one_free) rep.witness.reset();
    return rep;
}

}  // namespace zsl

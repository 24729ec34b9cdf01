#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "zsl/errors.hpp"
#include "zsl/group.hpp"
#include "zsl/products.hpp"
#include "zsl/sequence.hpp"

using namespace zsl;

namespace {

bool witness_is_valid(const Group& g, const Sequence& s, const std::vector<int>& w) {
    if (w.empty()) return false;
    Sequence used(g.order());
    int p = g.identity();
    for (int e : w) {
        p = g.mul(p, e);
        used.add(e);
    }
    return p == g.identity() && divides(used, s);
}

std::uint64_t mask_of(const std::vector<int>& elems) {
    std::uint64_t m = 0;
    for (int e : elems) m |= 1ULL << e;
    return m;
}

void check_against_oracle(const Group& g, const Sequence& s) {
    ProductReport want = brute_force_oracle(s, g);
    ProductReport got = compute_products(s, g);
    CHECK(got.pi == want.pi);
    CHECK(got.subproducts == want.subproducts);
    CHECK(got.product_one_free == want.product_one_free);
    PofResult pof = is_product_one_free(s, g);
    CHECK(pof.product_one_free == want.product_one_free);
    if (!want.product_one_free) {
        REQUIRE(got.witness.has_value());
        REQUIRE(pof.witness.has_value());
        REQUIRE(want.witness.has_value());
        CHECK(witness_is_valid(g, s, *got.witness));
        CHECK(witness_is_valid(g, s, *pof.witness));
        CHECK(witness_is_valid(g, s, *want.witness));
    } else {
        CHECK_FALSE(got.witness.has_value());
        CHECK_FALSE(pof.witness.has_value());
    }
}

Sequence random_sequence(const Group& g, int len, std::mt19937_64& rng) {
    Sequence s(g.order());
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int i = 0; i < len; ++i) s.add(pick(rng));
    return s;
}

}  // namespace

TEST_CASE("two-element products over (8,3)") {
    Group g = Group::metacyclic(8, 3);
    Sequence s(g.order());
    s.add(g.index(1, 0));  // x
    s.add(g.index(0, 1));  // y
    ProductReport rep = compute_products(s, g);
    CHECK(rep.pi == std::vector<int>{9, 11});  // xy and x y^3
    CHECK(rep.subproducts == std::vector<int>{1, 8, 9, 11});
    CHECK(rep.product_one_free);
    CHECK(brute_force_oracle(s, g).pi == rep.pi);
    CHECK(brute_force_oracle(s, g).subproducts == rep.subproducts);
}

TEST_CASE("repeated commuting terms") {
    for (auto [n, s] : {std::pair{8, 3}, {12, 5}}) {
        Group g = Group::metacyclic(n, s);
        Sequence seq = Sequence::single(g.order(), g.index(0, 1), 3);
        ProductReport rep = compute_products(seq, g);
        CHECK(rep.subproducts == std::vector<int>{1, 2, 3});
        CHECK(rep.pi == std::vector<int>{3});
        CHECK(rep.product_one_free);
    }
}

TEST_CASE("x times x hits the identity with witness") {
    Group g = Group::metacyclic(8, 3);
    Sequence s = Sequence::single(g.order(), g.index(1, 0), 2);
    ProductReport rep = compute_products(s, g);
    CHECK(rep.subproducts == std::vector<int>{0, 8});
    CHECK(rep.pi == std::vector<int>{0});
    CHECK_FALSE(rep.product_one_free);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == std::vector<int>{8, 8});
}

TEST_CASE("closed-form families at n = 8") {
    Group g83 = Group::metacyclic(8, 3);
    Group g85 = Group::metacyclic(8, 5);

    Sequence s(16);
    s.add(g83.index(0, 1), 7);
    s.add(g83.index(1, 0));
    CHECK(is_product_one_free(s, g83).product_one_free);

    Sequence t(16);
    t.add(g85.index(1, 1), 7);
    t.add(g85.index(1, 2));
    CHECK(is_product_one_free(t, g85).product_one_free);
    // same multiset read over (8,3) is not product-one free
    PofResult bad = is_product_one_free(t, g83);
    CHECK_FALSE(bad.product_one_free);
    REQUIRE(bad.witness.has_value());
    CHECK(witness_is_valid(g83, t, *bad.witness));
}

TEST_CASE("identity element short-circuits") {
    Group g = Group::metacyclic(8, 3);
    Sequence s = Sequence::single(g.order(), g.identity());
    s.add(g.index(0, 1));
    PofResult pof = is_product_one_free(s, g);
    CHECK_FALSE(pof.product_one_free);
    CHECK(*pof.witness == std::vector<int>{0});
    CHECK_FALSE(compute_products(s, g).product_one_free);
}

TEST_CASE("empty sequence") {
    Group g = Group::metacyclic(8, 3);
    ProductReport rep = compute_products(Sequence(g.order()), g);
    CHECK(rep.pi == std::vector<int>{0});  // empty product
    CHECK(rep.subproducts.empty());
    CHECK(rep.product_one_free);
    ProductReport oracle = brute_force_oracle(Sequence(g.order()), g);
    CHECK(oracle.pi == rep.pi);
    CHECK(oracle.subproducts.empty());
}

TEST_CASE("oracle equivalence, exhaustive |S| <= 3") {
    for (const Group& g : {Group::metacyclic(8, 3), Group::cyclic(6)}) {
        for (int k = 1; k <= 3; ++k)
            for (const Sequence& s : all_multisets(g.order(), k))
                check_against_oracle(g, s);
    }
}

TEST_CASE("oracle equivalence, randomized |S| <= 7") {
    std::mt19937_64 rng(20240817);
    std::vector<Group> groups;
    groups.push_back(Group::metacyclic(8, 3));
    groups.push_back(Group::metacyclic(8, 5));
    groups.push_back(Group::metacyclic(12, 5));
    std::uniform_int_distribution<int> len(1, 7);
    for (int i = 0; i < 120; ++i) {
        const Group& g = groups[i % groups.size()];
        check_against_oracle(g, random_sequence(g, len(rng), rng));
    }
}

TEST_CASE("abelian products reduce to subset sums") {
    std::mt19937_64 rng(7);
    for (int m : {6, 9}) {
        Group g = Group::cyclic(m);
        std::uniform_int_distribution<int> len(1, 6);
        for (int i = 0; i < 40; ++i) {
            Sequence s = random_sequence(g, len(rng), rng);
            std::uint64_t reach = 0;  // residues of nonempty subset sums
            std::uint64_t full = (m == 64) ? ~0ULL : (1ULL << m) - 1;
            for (int e = 0; e < m; ++e)
                for (std::uint32_t c = 0; c < s.count(e); ++c) {
                    std::uint64_t shifted =
                        ((reach << e) | (reach >> (m - e))) & full;
                    if (e == 0) shifted = reach;
                    reach = reach | shifted | (1ULL << e);
                }
            CHECK(mask_of(compute_products(s, g).subproducts) == reach);
        }
    }
}

TEST_CASE("product-one freeness is inherited by subsequences") {
    std::mt19937_64 rng(99);
    Group g = Group::metacyclic(8, 3);
    std::uniform_int_distribution<int> len(1, 6);
    int pof_seen = 0;
    for (int i = 0; i < 300; ++i) {
        Sequence s = random_sequence(g, len(rng), rng);
        if (!is_product_one_free(s, g).product_one_free) continue;
        ++pof_seen;
        // every sub-multiset, via an odometer over the support
        std::vector<int> supp;
        for (int e = 0; e < g.order(); ++e)
            if (s.count(e)) supp.push_back(e);
        std::vector<std::uint32_t> c(supp.size(), 0);
        while (true) {
            std::size_t j = 0;
            while (j < c.size() && c[j] == s.count(supp[j])) c[j++] = 0;
            if (j == c.size()) break;
            ++c[j];
            Sequence t(g.order());
            for (std::size_t q = 0; q < supp.size(); ++q)
                if (c[q]) t.add(supp[q], c[q]);
            CHECK(is_product_one_free(t, g).product_one_free);
        }
    }
    CHECK(pof_seen > 20);  // the sample actually exercised the property
}

TEST_CASE("pi is closed under rotating a leading factor") {
    // For p in pi(S) and g in supp(S) with g^-1 p in pi(S - g), some ordering
    // of S starts with g, so the rotation g^-1 p g lies in pi(S) too.
    std::mt19937_64 rng(123);
    for (auto [n, sparam] : {std::pair{8, 3}, {8, 5}}) {
        Group g = Group::metacyclic(n, sparam);
        std::uniform_int_distribution<int> len(2, 5);
        for (int i = 0; i < 60; ++i) {
            Sequence s = random_sequence(g, len(rng), rng);
            std::uint64_t pi = mask_of(compute_products(s, g).pi);
            for (int e = 0; e < g.order(); ++e) {
                if (!s.count(e)) continue;
                Sequence rest = s;
                rest.remove(e);
                std::uint64_t pi_rest = mask_of(compute_products(rest, g).pi);
                for (int p = 0; p < g.order(); ++p) {
                    if (!(pi & (1ULL << p))) continue;
                    if (!(pi_rest & (1ULL << g.mul(g.inverse(e), p)))) continue;
                    int rotated = g.mul(g.mul(g.inverse(e), p), e);
                    CHECK((pi & (1ULL << rotated)) != 0);
                }
            }
        }
    }
}

TEST_CASE("incremental stack push/pop discipline") {
    Group g = Group::metacyclic(8, 3);
    SubproductStack st(g);
    CHECK(st.pi_mask() == 1);  // empty product
    CHECK(st.subproducts_mask() == 0);
    CHECK(st.product_one_free());

    int y = g.index(0, 1);
    for (int i = 0; i < 7; ++i) CHECK(st.try_push(y));
    CHECK(st.depth() == 7);
    CHECK_FALSE(st.try_push(y));  // y^8 = 1
    CHECK(st.depth() == 7);       // failed push leaves no trace
    CHECK(st.try_push(g.index(1, 0)));
    CHECK(st.depth() == 8);
    CHECK(st.product_one_free());
    CHECK_FALSE(st.would_stay_pof(g.identity()));

    std::uint64_t before = st.subproducts_mask();
    st.push(g.index(0, 1));  // forcing y^8 in
    CHECK_FALSE(st.product_one_free());
    CHECK_FALSE(st.would_stay_pof(g.index(0, 5)));  // already dead
    st.pop();
    CHECK(st.subproducts_mask() == before);
    CHECK(st.product_one_free());

    while (st.depth()) st.pop();
    CHECK(st.live_states() == 1);
    CHECK(st.pi_mask() == 1);
    CHECK_THROWS_AS(st.pop(), PreconditionError);
}

TEST_CASE("witness reconstruction is deterministic") {
    Group g = Group::metacyclic(8, 3);
    auto build = [&] {
        SubproductStack st(g);
        st.push(g.index(0, 2));
        st.push(g.index(0, 3));
        st.push(g.index(1, 1));
        return st;
    };
    SubproductStack a = build();
    SubproductStack b = build();
    int q = g.mul(g.index(0, 2), g.index(0, 3));
    CHECK(a.ordering_for(q) == b.ordering_for(q));
    CHECK_THROWS_AS(a.ordering_for(g.index(0, 6)), PreconditionError);
}

TEST_CASE("state budget is enforced and recoverable") {
    Group g = Group::metacyclic(8, 3);
    Sequence s(g.order());
    s.add(g.index(0, 1));
    s.add(g.index(0, 2));
    s.add(g.index(1, 0));
    EngineConfig tight{.state_budget = 4};
    CHECK_THROWS_AS(compute_products(s, g, tight), StateBudgetExceeded);
    CHECK_NOTHROW(compute_products(s, g));  // default budget is plenty

    SubproductStack st(g, tight);
    CHECK(st.try_push(g.index(0, 1)));
    CHECK(st.try_push(g.index(0, 2)));
    CHECK(st.live_states() == 4);
    CHECK_THROWS_AS(st.push(g.index(1, 0)), StateBudgetExceeded);
    CHECK(st.depth() == 2);  // failed push rolled back
    CHECK(st.live_states() == 4);
    st.pop();
    CHECK(st.live_states() == 2);
    CHECK_NOTHROW(st.push(g.index(1, 0)));
}

TEST_CASE("input validation") {
    Group g = Group::metacyclic(8, 3);
    CHECK_THROWS_AS(compute_products(Sequence(10), g), PreconditionError);
    Sequence nine(g.order());
    nine.add(g.index(0, 1), 9);
    CHECK_THROWS_AS(brute_force_oracle(nine, g), PreconditionError);
    CHECK_NOTHROW(brute_force_oracle(Sequence(g.order()), g));
}

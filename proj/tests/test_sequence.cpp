#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "zsl/errors.hpp"
#include "zsl/group.hpp"
#include "zsl/sequence.hpp"

using namespace zsl;

TEST_CASE("counts, length, add, remove") {
    Sequence s(16);
    CHECK(s.empty());
    s.add(1, 3);
    s.add(8);
    CHECK(s.length() == 4);
    CHECK(s.count(1) == 3);
    CHECK(s.count(8) == 1);
    CHECK(s.distinct() == 2);
    s.remove(1, 2);
    CHECK(s.count(1) == 1);
    CHECK_THROWS_AS(s.remove(1, 2), PreconditionError);
    CHECK_THROWS_AS(s.remove(5), PreconditionError);
}

TEST_CASE("concat adds multiplicities") {
    Sequence a = Sequence::single(16, 1, 3);
    Sequence b = Sequence::single(16, 1, 2);
    CHECK(concat(a, b) == Sequence::single(16, 1, 5));

    Sequence x = Sequence::single(16, 8);
    Sequence y = Sequence::single(16, 1);
    Sequence xy = concat(x, y);
    CHECK(xy.count(8) == 1);
    CHECK(xy.count(1) == 1);
    CHECK(xy.length() == 2);
    CHECK(concat(x, y) == concat(y, x));
    CHECK_THROWS_AS(concat(Sequence(16), Sequence(10)), PreconditionError);
}

TEST_CASE("divides and remove") {
    Sequence s = Sequence::single(16, 1, 3);
    s.add(8);
    Sequence t = Sequence::single(16, 1, 2);
    CHECK(divides(t, s));
    Sequence rest = remove(s, t);
    CHECK(rest.count(1) == 1);
    CHECK(rest.count(8) == 1);
    CHECK(remove(concat(s, t), t) == s);

    CHECK_FALSE(divides(Sequence::single(16, 1, 4), Sequence::single(16, 1, 3)));
    CHECK(divides(Sequence(16), s));  // empty divides everything
    CHECK_THROWS_AS(remove(Sequence::single(16, 1, 1), Sequence::single(16, 2, 1)),
                    PreconditionError);
}

TEST_CASE("restrict splits along a predicate") {
    Group g = Group::metacyclic(8, 3);
    Sequence s = Sequence::single(g.order(), g.index(0, 1), 7);
    s.add(g.index(1, 0));
    Sequence h_part = restrict(s, [&](int e) { return g.in_h(e); });
    Sequence n_part = restrict(s, [&](int e) { return g.in_n(e); });
    CHECK(h_part == Sequence::single(g.order(), g.index(0, 1), 7));
    CHECK(n_part == Sequence::single(g.order(), g.index(1, 0), 1));
    CHECK(concat(h_part, n_part) == s);
}

TEST_CASE("lexicographic order on nondecreasing tuples") {
    auto seq = [](std::vector<int> elems) {
        Sequence s(16);
        for (int e : elems) s.add(e);
        return s;
    };
    // (1,1,1,1) < (1,1,1,2)
    CHECK(seq_lex_less(seq({1, 1, 1, 1}), seq({1, 1, 1, 2})));
    CHECK_FALSE(seq_lex_less(seq({1, 1, 1, 2}), seq({1, 1, 1, 1})));
    // proper prefix is smaller
    CHECK(seq_lex_less(seq({1, 1, 1}), seq({1, 1, 1, 2})));
    CHECK(seq_lex_less(seq({1, 1, 1}), seq({1, 1, 1, 1})));
    // (1,3) < (2,2): first entry decides
    CHECK(seq_lex_less(seq({1, 3}), seq({2, 2})));
    CHECK_FALSE(seq_lex_less(seq({2, 2}), seq({1, 3})));
    // (1,2) vs (1,2,5): prefix again, mixed support
    CHECK(seq_lex_less(seq({1, 2}), seq({1, 2, 5})));
    CHECK_FALSE(seq_lex_less(seq({1, 2, 5}), seq({1, 2})));
    // (2,) vs (1,1,...): larger first element loses no matter the lengths
    CHECK(seq_lex_less(seq({1, 1, 1}), seq({2})));
    CHECK_FALSE(seq_lex_less(seq({2}), seq({1, 1, 1})));
    // equal sequences: strictly-less is false both ways
    CHECK_FALSE(seq_lex_less(seq({1, 2}), seq({1, 2})));
}

TEST_CASE("enumeration is lexicographic and duplicate free") {
    std::vector<std::vector<int>> seen;
    std::vector<int> prefix;
    enumerate_multisets(
        2, 2,
        [&](int e) {
            prefix.push_back(e);
            return true;
        },
        [&](int) { prefix.pop_back(); },
        [&] { seen.push_back(prefix); });
    std::vector<std::vector<int>> want = {{0, 0}, {0, 1}, {1, 1}};
    CHECK(seen == want);
}

TEST_CASE("enumeration count matches stars and bars") {
    CHECK(multiset_count(2, 2) == 3);
    CHECK(multiset_count(16, 8) == 490314);  // C(23,8)
    CHECK(multiset_count(5, 0) == 1);

    std::uint64_t count = 0;
    int depth = 0;
    enumerate_multisets(
        16, 8, [&](int) { ++depth; return true; }, [&](int) { --depth; },
        [&] { ++count; });
    CHECK(count == 490314);
    CHECK(depth == 0);
}

TEST_CASE("k = 0 yields exactly the empty multiset") {
    int completes = 0;
    enumerate_multisets(4, 0, [&](int) { return true; }, [&](int) {},
                        [&] { ++completes; });
    CHECK(completes == 1);
}

TEST_CASE("pruning cuts whole subtrees") {
    std::vector<std::vector<int>> seen;
    std::vector<int> prefix;
    enumerate_multisets(
        3, 2,
        [&](int e) {
            if (e == 1) return false;  // forbid element 1 anywhere
            prefix.push_back(e);
            return true;
        },
        [&](int) { prefix.pop_back(); },
        [&] { seen.push_back(prefix); });
    std::vector<std::vector<int>> want = {{0, 0}, {0, 2}, {2, 2}};
    CHECK(seen == want);
}

TEST_CASE("all_multisets materializes the enumeration") {
    auto all = all_multisets(3, 2);
    REQUIRE(all.size() == 6);  // C(4,2)
    for (const auto& s : all) CHECK(s.length() == 2);
    CHECK(all.front().count(0) == 2);
    CHECK(all.back().count(2) == 2);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(seq_lex_less(all[i - 1], all[i]));
}

TEST_CASE("multiset_count rejects 64-bit overflow") {
    CHECK_THROWS_AS(multiset_count(64, 60), PreconditionError);
}

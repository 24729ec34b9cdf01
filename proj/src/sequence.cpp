#include "zsl/sequence.hpp"

#include <algorithm>

namespace zsl {

Sequence concat(const Sequence& s, const Sequence& t) {
    if (s.group_order() != t.group_order())
        throw PreconditionError("concat: sequences over different groups");
    Sequence r = s;
    for (int e = 0; e < t.group_order(); ++e)
        if (t.count(e)) r.add(e, t.count(e));
    return r;
}

bool divides(const Sequence& t, const Sequence& s) {
    if (s.group_order() != t.group_order())
        throw PreconditionError("divides: sequences over different groups");
    for (int e = 0; e < t.group_order(); ++e)
        if (t.count(e) > s.count(e)) return false;
    return true;
}

Sequence remove(const Sequence& s, const Sequence& t) {
    if (!divides(t, s))
        throw PreconditionError("remove: T does not divide S");
    Sequence r = s;
    for (int e = 0; e < t.group_order(); ++e)
        if (t.count(e)) r.remove(e, t.count(e));
    return r;
}

Sequence restrict(const Sequence& s, const std::function<bool(int)>& keep) {
    Sequence r(s.group_order());
    for (int e = 0; e < s.group_order(); ++e)
        if (s.count(e) && keep(e)) r.add(e, s.count(e));
    return r;
}

bool seq_lex_less(const Sequence& a, const Sequence& b) {
    // Walk the nondecreasing tuples without materializing them. At the first
    // element index where the counts differ, the side with more copies of
    // that (smaller) element continues with it while the other side either
    // continues with a larger element or ends as a proper prefix.
    int order = std::min(a.group_order(), b.group_order());
    std::uint64_t arem = a.length(), brem = b.length();  // entries at index >= e
    for (int e = 0; e < order; ++e) {
        std::uint32_t ca = a.count(e), cb = b.count(e);
        if (ca == cb) {
            arem -= ca;
            brem -= cb;
            continue;
        }
        std::uint32_t common = std::min(ca, cb);
        arem -= common;
        brem -= common;
        if (ca > cb) return brem > 0;  // b continues with a larger entry, or ends
        return arem == 0;              // a < b only when a is a proper prefix
    }
    return arem < brem;
}

std::vector<Sequence> all_multisets(int group_order, int k) {
    std::vector<Sequence> out;
    Sequence cur(group_order);
    enumerate_multisets(
        group_order, k,
        [&](int e) {
            cur.add(e);
            return true;
        },
        [&](int e) { cur.remove(e); },
        [&] { out.push_back(cur); });
    return out;
}

std::uint64_t multiset_count(int alphabet, int k) {
    // C(alphabet + k - 1, k)
    if (alphabet < 1 || k < 0)
        throw PreconditionError("multiset_count: alphabet >= 1, k >= 0");
    if (k == 0) return 1;
    unsigned long long r = 1;
    long long n = alphabet + k - 1;
    int kk = k;
    if (kk > n - kk) kk = static_cast<int>(n - kk);
    for (int i = 1; i <= kk; ++i) {
        unsigned long long f = static_cast<unsigned long long>(n - kk + i);
        if (r > ~0ULL / f)
            throw PreconditionError("multiset_count: result exceeds 64 bits");
        r = r * f / i;  // prefix of the product is itself a binomial, so exact
    }
    return r;
}

}  // namespace zsl

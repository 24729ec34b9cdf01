#include "zsl/lemma1.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "zsl/errors.hpp"

namespace zsl {
namespace {

void require_hypotheses(const Sequence& s, int m, const char* who) {
    if (m < 3) throw PreconditionError(std::string(who) + ": m must be >= 3");
    if (m > 64) throw PreconditionError(std::string(who) + ": m must be <= 64");
    if (s.group_order() != m)
        throw PreconditionError(std::string(who) + ": sequence is not over C_m");
    if (2 * s.length() <= static_cast<std::uint64_t>(m))
        throw PreconditionError(std::string(who) + ": requires |S| > m/2");
    if (!cyclic_product_one_free(s, m))
        throw PreconditionError(std::string(who) + ": sequence is not product-one free");
}

}  // namespace

bool cyclic_product_one_free(const Sequence& s, int m) {
    if (m < 1 || m > 64)
        throw PreconditionError("cyclic_product_one_free: m must be in [1, 64]");
    if (s.group_order() != m)
        throw PreconditionError("cyclic_product_one_free: sequence is not over C_m");
    std::uint64_t full = m == 64 ? ~0ULL : (1ULL << m) - 1;
    std::uint64_t reach = 0;  // bit r set: some nonempty subset sums to r mod m
    for (int e = 0; e < m; ++e) {
        for (std::uint32_t c = 0; c < s.count(e); ++c) {
            std::uint64_t shifted =
                e == 0 ? reach : ((reach << e) | (reach >> (m - e))) & full;
            reach |= shifted | (1ULL << e);
            if (reach & 1ULL) return false;
        }
    }
    return (reach & 1ULL) == 0;
}

MultiplicityCheck check_multiplicity_bound(const Sequence& s, int m) {
    require_hypotheses(s, m, "check_multiplicity_bound");
    MultiplicityCheck res;
    long long size = static_cast<long long>(s.length());
    res.bound = std::max(m - 2 * size + 1, size - (m - 1) / 3);
    for (int e = 0; e < m; ++e) {
        if (s.count(e) && static_cast<long long>(s.count(e)) >= res.bound) {
            res.ok = true;
            res.heavy_term = e;
            return res;
        }
    }
    return res;
}

NormalizerResult find_normalizer(const Sequence& s, int m) {
    require_hypotheses(s, m, "find_normalizer");
    NormalizerResult res;
    for (int t = 1; t < m; ++t) {
        if (std::gcd(t, m) != 1) continue;
        long long sum = 0;
        for (int e = 0; e < m; ++e)
            sum += static_cast<long long>(s.count(e)) * ((e * t) % m);
        if (sum < m) {
            res.found = true;
            res.t = t;
            res.residue_sum = sum;
            return res;
        }
    }
    return res;
}

bool check_subsum_coverage(const Sequence& s, int m, int t) {
    require_hypotheses(s, m, "check_subsum_coverage");
    if (t < 1 || t >= m || std::gcd(t, m) != 1)
        throw PreconditionError("check_subsum_coverage: t must be a unit mod m");
    long long total = 0;
    for (int e = 0; e < m; ++e)
        total += static_cast<long long>(s.count(e)) * ((e * t) % m);

    // Integer subset sums of the normalized residues, not sums mod m.
    std::vector<char> hit(static_cast<std::size_t>(total) + 1, 0);
    hit[0] = 1;
    for (int e = 0; e < m; ++e) {
        int r = (e * t) % m;
        for (std::uint32_t c = 0; c < s.count(e); ++c)
            for (long long k = total - r; k >= 0; --k)
                if (hit[k]) hit[k + r] = 1;
    }
    for (long long k = 1; k <= total; ++k)
        if (!hit[k]) return false;
    return true;
}

namespace {

void run_checkers(const Sequence& s, int m, Lemma1Report& rep) {
    ++rep.instances;
    MultiplicityCheck mc = check_multiplicity_bound(s, m);
    if (!mc.ok) rep.falsifications.push_back({m, s, "multiplicity"});
    NormalizerResult nr = find_normalizer(s, m);
    if (!nr.found) {
        rep.falsifications.push_back({m, s, "normalizer"});
        return;  // coverage needs a unit to normalize by
    }
    if (!check_subsum_coverage(s, m, nr.t))
        rep.falsifications.push_back({m, s, "coverage"});
}

void audit_exhaustive(int m, Lemma1Report& rep) {
    // Alphabet excludes 0 (the identity instantly breaks freeness).
    int lo = m / 2 + 1, hi = m - 1;
    for (int len = lo; len <= hi; ++len) {
        Sequence prefix(m);
        enumerate_multisets(
            m - 1, len,
            [&](int e) {
                prefix.add(e + 1);
                if (!cyclic_product_one_free(prefix, m)) {
                    prefix.remove(e + 1);
                    return false;
                }
                return true;
            },
            [&](int e) { prefix.remove(e + 1); },
            [&] { run_checkers(prefix, m, rep); });
    }
}

void audit_sample(int m, std::uint64_t samples, std::mt19937_64& rng,
                  Lemma1Report& rep) {
    std::vector<int> units;
    for (int t = 1; t < m; ++t)
        if (std::gcd(t, m) == 1) units.push_back(t);

    std::uniform_int_distribution<int> pick_len(m / 2 + 1, m - 1);
    std::uniform_int_distribution<std::size_t> pick_unit(0, units.size() - 1);
    for (std::uint64_t i = 0; i < samples; ++i) {
        int len = pick_len(rng);
        int total = std::uniform_int_distribution<int>(len, m - 1)(rng);
        // Random composition of total into len positive parts: choose len-1
        // cut points among the total-1 gaps.
        std::vector<int> gaps(total - 1);
        std::iota(gaps.begin(), gaps.end(), 1);
        std::shuffle(gaps.begin(), gaps.end(), rng);
        gaps.resize(len - 1);
        std::sort(gaps.begin(), gaps.end());
        gaps.push_back(total);

        // Parts sum below m, so t * S is product-one free for any unit t;
        // un-normalizing by t^-1 keeps it so.
        int t = units[pick_unit(rng)];
        int tinv = 1;
        for (int u : units)
            if (u * t % m == 1) tinv = u;

        Sequence s(m);
        int prev = 0;
        for (int cut : gaps) {
            int part = cut - prev;
            prev = cut;
            s.add(part * tinv % m);
        }
        run_checkers(s, m, rep);
    }
}

}  // namespace

Lemma1Report audit_lemma1(int m_min, int m_max, AuditMode mode,
                          std::uint64_t samples, std::uint64_t seed) {
    if (m_min > m_max) return {};
    if (m_min < 3) throw PreconditionError("audit_lemma1: m must be >= 3");
    if (mode == AuditMode::Exhaustive && m_max > 12)
        throw PreconditionError("audit_lemma1: exhaustive mode is limited to m <= 12");
    if (m_max > 64) throw PreconditionError("audit_lemma1: m must be <= 64");

    Lemma1Report rep;
    std::mt19937_64 rng(seed);
    for (int m = m_min; m <= m_max; ++m) {
        if (mode == AuditMode::Exhaustive)
            audit_exhaustive(m, rep);
        else
            audit_sample(m, samples, rng, rep);
    }
    return rep;
}

}  // namespace zsl

#include "zsl/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "zsl/errors.hpp"

namespace zsl {
namespace {

int euler_phi(int n) {
    int result = n;
    int k = n;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        while (k % p == 0) k /= p;
        result -= result / p;
    }
    if (k > 1) result -= result / k;
    return result;
}

void require_twisted(const Group& g, const char* who) {
    if (!g.group_class().twisted_metacyclic())
        throw PreconditionError(std::string(who) + ": group is not of the studied class");
}

bool type2_applies(const Group& g) {
    return g.group_class().subtag == MetacyclicSubtag::ModularMaximalCyclic;
}

}  // namespace

const char* to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::TypeI: return "type-1";
        case PatternKind::TypeIIxx: return "type-2-xx";
        case PatternKind::TypeIIxy: return "type-2-xy";
    }
    return "?";
}

std::vector<ExtremalPattern> all_patterns(const Group& g) {
    require_twisted(g, "all_patterns");
    int n = g.n();
    std::vector<ExtremalPattern> out;
    for (int u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        for (int v = 0; v < n; ++v) out.push_back({PatternKind::TypeI, u, v});
    }
    if (type2_applies(g)) {
        for (int u = 1; u < n; u += 2)
            for (int v = 0; v < n; v += 2) out.push_back({PatternKind::TypeIIxx, u, v});
        for (int u = 1; u < n; u += 2)
            for (int v = 1; v < n; v += 2) out.push_back({PatternKind::TypeIIxy, u, v});
    }
    return out;
}

std::uint64_t predicted_extremal_count(const Group& g) {
    require_twisted(g, "predicted_extremal_count");
    std::uint64_t n = g.n();
    std::uint64_t count = static_cast<std::uint64_t>(euler_phi(g.n())) * n;
    if (type2_applies(g)) count += 2 * (n / 2) * (n / 2);
    return count;
}

Sequence realize(const ExtremalPattern& p, const Group& g) {
    require_twisted(g, "realize");
    int n = g.n();
    Sequence s(g.order());
    switch (p.kind) {
        case PatternKind::TypeI:
            s.add(g.index(0, p.u), n - 1);
            s.add(g.index(1, p.v));
            break;
        case PatternKind::TypeIIxx:
            s.add(g.index(1, p.u), n - 1);
            s.add(g.index(1, p.v));
            break;
        case PatternKind::TypeIIxy:
            s.add(g.index(1, p.u), n - 1);
            s.add(g.index(0, p.v));
            break;
    }
    return s;
}

std::optional<ExtremalPattern> match_pattern(const Sequence& s, const Group& g) {
    require_twisted(g, "match_pattern");
    int n = g.n();
    if (s.group_order() != g.order() || s.length() != static_cast<std::uint64_t>(n))
        throw PreconditionError("match_pattern: sequence length must equal n");

    // Shape: one element with multiplicity n-1 plus one other (n >= 8 keeps
    // the two roles distinct).
    int big = -1, one = -1;
    for (int e = 0; e < g.order(); ++e) {
        std::uint32_t c = s.count(e);
        if (c == 0) continue;
        if (c == static_cast<std::uint32_t>(n - 1) && big < 0)
            big = e;
        else if (c == 1 && one < 0)
            one = e;
        else
            return std::nullopt;
    }
    if (big < 0 || one < 0) return std::nullopt;

    GroupElement eb = g.element(big), eo = g.element(one);
    if (eb.a == 0) {
        if (std::gcd(eb.b, n) != 1) return std::nullopt;
        if (eo.a != 1) return std::nullopt;
        return ExtremalPattern{PatternKind::TypeI, eb.b, eo.b};
    }
    if (!type2_applies(g)) return std::nullopt;
    if (eb.b % 2 == 0) return std::nullopt;  // u odd in both TypeII kinds
    if (eo.a == 1 && eo.b % 2 == 0)
        return ExtremalPattern{PatternKind::TypeIIxx, eb.b, eo.b};
    if (eo.a == 0 && eo.b % 2 == 1)
        return ExtremalPattern{PatternKind::TypeIIxy, eb.b, eo.b};
    return std::nullopt;
}

FamiliesReport verify_families_pof(const Group& g, const EngineConfig& cfg) {
    require_twisted(g, "verify_families_pof");
    FamiliesReport rep;
    for (const ExtremalPattern& p : all_patterns(g)) {
        switch (p.kind) {
            case PatternKind::TypeI: ++rep.type1; break;
            case PatternKind::TypeIIxx: ++rep.type2xx; break;
            case PatternKind::TypeIIxy: ++rep.type2xy; break;
        }
        PofResult pof = is_product_one_free(realize(p, g), g, cfg);
        if (!pof.product_one_free)
            rep.failures.push_back({p, pof.witness.value_or(std::vector<int>{})});
    }
    return rep;
}

namespace {

struct EnumOutcome {
    std::vector<Sequence> found;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
};

class Enumerator {
  public:
    Enumerator(const Group& g, const TheoremConfig& cfg,
               std::chrono::steady_clock::time_point deadline,
               std::atomic<bool>& expired)
        : stack_(g, cfg.engine),
          target_(g.n()),
          deadline_(deadline),
          use_deadline_(cfg.time_budget_ms > 0),
          expired_(expired) {}

    EnumOutcome run(const std::vector<int>& roots) {
        for (int e : roots) {
            if (out_of_time()) break;
            if (stack_.try_push(e)) {
                ++out_.nodes;
                descend(e);
                stack_.pop();
            } else {
                ++out_.pruned;
            }
        }
        return std::move(out_);
    }

  private:
    bool out_of_time() {
        if (!use_deadline_) return false;
        if (expired_.load(std::memory_order_relaxed)) return true;
        if (++ticks_ % 256 == 0 &&
            std::chrono::steady_clock::now() >= deadline_) {
            expired_.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void descend(int min_elem) {
        if (static_cast<int>(stack_.depth()) == target_) {
            out_.found.push_back(stack_.sequence());
            return;
        }
        for (int e = min_elem; e < stack_.group().order(); ++e) {
            if (out_of_time()) return;
            if (stack_.try_push(e)) {
                ++out_.nodes;
                descend(e);
                stack_.pop();
            } else {
                ++out_.pruned;
            }
        }
    }

    SubproductStack stack_;
    int target_;
    std::chrono::steady_clock::time_point deadline_;
    bool use_deadline_;
    std::atomic<bool>& expired_;
    std::uint64_t ticks_ = 0;
    EnumOutcome out_;
};

}  // namespace

std::vector<Sequence> enumerate_extremal_pof(const Group& g, const TheoremConfig& cfg,
                                             bool* complete, std::uint64_t* nodes,
                                             std::uint64_t* pruned) {
    require_twisted(g, "enumerate_extremal_pof");
    int workers = cfg.workers < 1 ? 1 : cfg.workers;
    if (workers > g.order()) workers = g.order();

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::milliseconds(cfg.time_budget_ms);
    std::atomic<bool> expired{false};

    std::vector<std::vector<int>> roots(workers);
    for (int e = 0; e < g.order(); ++e) roots[e % workers].push_back(e);

    std::vector<EnumOutcome> outcomes(workers);
    if (workers == 1) {
        outcomes[0] = Enumerator(g, cfg, deadline, expired).run(roots[0]);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    outcomes[w] = Enumerator(g, cfg, deadline, expired).run(roots[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    std::vector<Sequence> found;
    std::uint64_t n_nodes = 0, n_pruned = 0;
    for (EnumOutcome& o : outcomes) {
        std::move(o.found.begin(), o.found.end(), std::back_inserter(found));
        n_nodes += o.nodes;
        n_pruned += o.pruned;
    }
    std::sort(found.begin(), found.end(), seq_lex_less);

    if (complete) *complete = !expired.load();
    if (nodes) *nodes = n_nodes;
    if (pruned) *pruned = n_pruned;
    return found;
}

TheoremReport verify_theorem(const Group& g, const TheoremConfig& cfg) {
    require_twisted(g, "verify_theorem");
    auto start = std::chrono::steady_clock::now();

    TheoremReport rep;
    rep.formula_count = predicted_extremal_count(g);

    std::vector<Sequence> predicted;
    for (const ExtremalPattern& p : all_patterns(g)) predicted.push_back(realize(p, g));
    std::sort(predicted.begin(), predicted.end(), seq_lex_less);
    // Distinct supports make pattern instances pairwise distinct; anything
    // else would break the closed-form count.
    for (std::size_t i = 1; i < predicted.size(); ++i)
        if (predicted[i - 1] == predicted[i])
            throw std::logic_error("pattern realizations collide");
    rep.predicted_count = predicted.size();

    std::vector<Sequence> enumerated =
        enumerate_extremal_pof(g, cfg, &rep.complete, &rep.nodes_explored, &rep.pruned);
    rep.enumerated_count = enumerated.size();

    std::set_difference(predicted.begin(), predicted.end(), enumerated.begin(),
                        enumerated.end(), std::back_inserter(rep.missing), seq_lex_less);
    std::set_difference(enumerated.begin(), enumerated.end(), predicted.begin(),
                        predicted.end(), std::back_inserter(rep.extra), seq_lex_less);

    rep.equal = rep.complete && rep.missing.empty() && rep.extra.empty() &&
                rep.formula_count == rep.predicted_count &&
                rep.predicted_count == rep.enumerated_count;
    rep.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

ClosureReport generator_change_note(const Group& g, int v) {
    require_twisted(g, "generator_change_note");
    ClosureReport rep;
    rep.v = ((v % g.n()) + g.n()) % g.n();
    rep.generators = {g.index(1, 0), g.index(1, rep.v)};

    std::vector<bool> in_set(g.order(), false);
    std::vector<int> frontier = rep.generators;
    for (int e : frontier) in_set[e] = true;
    // Closure under multiplication; finiteness yields inverses and identity.
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b = 0; b < g.order(); ++b) {
                if (!in_set[b]) continue;
                for (int p : {g.mul(a, b), g.mul(b, a)}) {
                    if (!in_set[p]) {
                        in_set[p] = true;
                        next.push_back(p);
                    }
                }
            }
        frontier = std::move(next);
    }
    rep.closure_size = static_cast<int>(std::count(in_set.begin(), in_set.end(), true));
    rep.full = rep.closure_size == g.order();
    return rep;
}

}  // namespace zsl

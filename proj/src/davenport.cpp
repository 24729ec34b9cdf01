#include "zsl/davenport.hpp"

#include <chrono>
#include <exception>
#include <thread>

#include "zsl/errors.hpp"

namespace zsl {
namespace {

struct WorkerOutcome {
    int d = 0;
    Sequence witness;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    bool max_len_reached = false;
};

class Searcher {
  public:
    Searcher(const Group& g, const DavenportConfig& cfg) : stack_(g, cfg.engine), cfg_(cfg) {
        out_.witness = Sequence(g.order());
    }

    WorkerOutcome run(const std::vector<int>& roots) {
        for (int e : roots) {
            if (stack_.try_push(e)) {
                record();
                descend(e);
                stack_.pop();
            } else {
                ++out_.pruned;
            }
        }
        return std::move(out_);
    }

  private:
    void record() {
        ++out_.nodes;
        int depth = static_cast<int>(stack_.depth());
        if (depth > out_.d) {
            // First hit at each depth is the lex-least: DFS order is the
            // lexicographic order of the nondecreasing index tuples.
            out_.d = depth;
            out_.witness = stack_.sequence();
        }
        if (depth == cfg_.max_len) out_.max_len_reached = true;
    }

    void descend(int min_elem) {
        if (static_cast<int>(stack_.depth()) >= cfg_.max_len) return;
        for (int e = min_elem; e < stack_.group().order(); ++e) {
            if (stack_.try_push(e)) {
                record();
                descend(e);
                stack_.pop();
            } else {
                ++out_.pruned;
            }
        }
    }

    SubproductStack stack_;
    const DavenportConfig& cfg_;
    WorkerOutcome out_;
};

}  // namespace

DavenportResult small_davenport(const Group& g, const DavenportConfig& cfg) {
    if (cfg.max_len < 1)
        throw PreconditionError("small_davenport: max_len must be >= 1");
    int workers = cfg.workers < 1 ? 1 : cfg.workers;
    if (workers > g.order()) workers = g.order();

    std::vector<std::vector<int>> roots(workers);
    for (int e = 0; e < g.order(); ++e) roots[e % workers].push_back(e);

    std::vector<WorkerOutcome> outcomes(workers);
    if (workers == 1) {
        outcomes[0] = Searcher(g, cfg).run(roots[0]);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    outcomes[w] = Searcher(g, cfg).run(roots[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    DavenportResult res;
    res.witness = Sequence(g.order());
    for (const WorkerOutcome& o : outcomes) {
        res.nodes_explored += o.nodes;
        res.pruned += o.pruned;
        res.max_len_reached = res.max_len_reached || o.max_len_reached;
        if (o.d > res.d || (o.d == res.d && o.d > 0 && seq_lex_less(o.witness, res.witness))) {
            res.d = o.d;
            res.witness = o.witness;
        }
    }
    res.exhaustive = !res.max_len_reached;
    return res;
}

std::vector<DavenportClaim> verify_davenport_claims(
    const std::vector<std::pair<int, long long>>& pairs, const DavenportConfig& base) {
    std::vector<DavenportClaim> out;
    out.reserve(pairs.size());
    for (auto [n, s] : pairs) {
        Group g = Group::metacyclic(n, s);
        if (!g.group_class().twisted_metacyclic())
            throw PreconditionError("verify_davenport_claims: pair is not of the studied class");
        DavenportConfig cfg = base;
        if (cfg.max_len == 0) cfg.max_len = n + 1;
        auto start = std::chrono::steady_clock::now();
        DavenportResult r = small_davenport(g, cfg);
        auto stop = std::chrono::steady_clock::now();

        DavenportClaim claim;
        claim.n = n;
        claim.s = g.s();
        claim.expected = n;
        claim.actual = r.d;
        claim.ok = r.exhaustive && r.d == n;
        claim.nodes_explored = r.nodes_explored;
        claim.pruned = r.pruned;
        claim.runtime_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        out.push_back(claim);
    }
    return out;
}

}  // namespace zsl

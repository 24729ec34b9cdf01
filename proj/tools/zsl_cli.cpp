// Command-line front end. Subcommands mirror the library modules:
//
//   check          POF verdict + subproduct count for one sequence
//   davenport      small Davenport constant by pruned search
//   classify       parameter classification for the pair (n, s)
//   verify-theorem extremal-sequence census against the closed-form count
//   families       POF check for every closed-form extremal pattern
//   factor         split n = n1*n2 with s = -1 mod n1, s = +1 mod n2
//   lemma1-audit   certificate checkers over cyclic-group instances
//
// Exit codes: 0 success (for `check`: sequence is product-one free),
// 1 falsification or non-POF, 2 parse/usage error, 3 search incomplete
// (state budget exhausted or time budget hit before exhaustion).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "zsl/errors.hpp"
#include "zsl/parse.hpp"
#include "zsl/reports.hpp"

namespace {

constexpr int kExitFalsified = 1;
constexpr int kExitParseError = 2;
constexpr int kExitIncomplete = 3;

struct Output {
    zsl::OutputFormat format = zsl::OutputFormat::Json;
    std::string path;  // empty = stdout only

    int emit(const nlohmann::json& report, int code) const {
        std::string text = zsl::render(report, format);
        std::cout << text;
        if (!path.empty()) {
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << path << "\n";
                return kExitParseError;
            }
            out << text;
        }
        return code;
    }
};

// ZSL_STATE_BUDGET takes precedence over --state-budget so wrappers can
// pin a budget without threading a flag through every call site.
zsl::EngineConfig engine_config(std::uint64_t flag_budget) {
    zsl::EngineConfig cfg;
    cfg.state_budget = flag_budget;
    if (const char* env = std::getenv("ZSL_STATE_BUDGET")) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(env, &pos);
        } catch (const std::exception&) {
            throw zsl::ParseError("ZSL_STATE_BUDGET is not an integer", env);
        }
        if (pos != std::string(env).size()) {
            throw zsl::ParseError("ZSL_STATE_BUDGET is not an integer", env);
        }
        cfg.state_budget = v;
    }
    if (cfg.state_budget < 10'000) {
        throw zsl::PreconditionError("state budget must be at least 10000");
    }
    return cfg;
}

nlohmann::json incomplete_report(const char* command, const std::string& what) {
    return nlohmann::json{
        {"command", command}, {"complete", false}, {"error", what}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-sum sequence toolkit for groups <x,y | x^2, y^n, yx=xy^s>"};
    app.require_subcommand(1);

    Output out;
    std::map<std::string, zsl::OutputFormat> formats{
        {"json", zsl::OutputFormat::Json},
        {"table", zsl::OutputFormat::Table},
        {"csv", zsl::OutputFormat::Csv}};
    app.add_option("--format", out.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_val("json");
    app.add_option("--output", out.path, "also write the report to this file");

    std::string group_spec;
    std::string sequence_text;
    int n = 0;
    long long s = 0;
    std::uint64_t state_budget = zsl::EngineConfig{}.state_budget;
    int workers = 1;
    int max_len = 0;
    std::uint64_t time_budget_ms = 0;
    int m_min = 3;
    int m_max = 12;
    std::string mode = "exhaustive";
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;

    CLI::App* check = app.add_subcommand("check", "product-one-freeness of one sequence");
    check->fallthrough();
    check->add_option("group", group_spec, "group spec, e.g. metacyclic:n=8,s=3")->required();
    check->add_option("sequence", sequence_text, "sequence text or JSON array")->required();
    check->add_option("--state-budget", state_budget, "max stored product sets");

    CLI::App* dav = app.add_subcommand("davenport", "small Davenport constant");
    dav->fallthrough();
    dav->add_option("group", group_spec)->required();
    dav->add_option("--max-len", max_len, "search depth cap (default: order-derived)");
    dav->add_option("--workers", workers)->check(CLI::PositiveNumber);
    dav->add_option("--state-budget", state_budget);

    CLI::App* cls = app.add_subcommand("classify", "classify the parameter pair");
    cls->fallthrough();
    cls->add_option("n", n)->required();
    cls->add_option("s", s)->required();

    CLI::App* thm = app.add_subcommand("verify-theorem",
                                       "extremal POF census vs the closed-form count");
    thm->fallthrough();
    thm->add_option("group", group_spec)->required();
    thm->add_option("--workers", workers)->check(CLI::PositiveNumber);
    thm->add_option("--state-budget", state_budget);
    thm->add_option("--time-budget-ms", time_budget_ms, "0 = no time limit");

    CLI::App* fam = app.add_subcommand("families", "closed-form patterns are all POF");
    fam->fallthrough();
    fam->add_option("group", group_spec)->required();
    fam->add_option("--state-budget", state_budget);

    CLI::App* fac = app.add_subcommand("factor", "coprime split of n by the action of s");
    fac->fallthrough();
    fac->add_option("n", n)->required();
    fac->add_option("s", s)->required();

    CLI::App* lem = app.add_subcommand("lemma1-audit", "cyclic certificate checkers");
    lem->fallthrough();
    lem->add_option("--m-min", m_min);
    lem->add_option("--m-max", m_max);
    lem->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sample"}));
    lem->add_option("--samples", samples, "instances per modulus in sample mode");
    lem->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseError;
    }

    try {
        if (*check) {
            zsl::Group g = zsl::parse_group_spec(group_spec);
            zsl::Sequence seq = zsl::parse_sequence(sequence_text, g);
            zsl::ProductReport rep = zsl::compute_products(seq, g, engine_config(state_budget));
            return out.emit(zsl::check_report(g, seq, rep),
                            rep.product_one_free ? 0 : kExitFalsified);
        }
        if (*dav) {
            zsl::Group g = zsl::parse_group_spec(group_spec);
            zsl::DavenportConfig cfg;
            cfg.engine = engine_config(state_budget);
            cfg.workers = workers;
            cfg.max_len = max_len > 0 ? max_len
                          : g.is_cyclic() ? g.n()
                                          : g.n() + 1;
            try {
                zsl::DavenportResult r = zsl::small_davenport(g, cfg);
                nlohmann::json rep = zsl::davenport_report(g, cfg.max_len, r);
                return out.emit(rep, r.exhaustive ? 0 : kExitIncomplete);
            } catch (const zsl::StateBudgetExceeded& e) {
                return out.emit(incomplete_report("davenport", e.what()), kExitIncomplete);
            }
        }
        if (*cls) {
            return out.emit(zsl::classify_report(n, s), 0);
        }
        if (*thm) {
            zsl::Group g = zsl::parse_group_spec(group_spec);
            zsl::TheoremConfig cfg;
            cfg.engine = engine_config(state_budget);
            cfg.workers = workers;
            cfg.time_budget_ms = time_budget_ms;
            try {
                zsl::TheoremReport rep = zsl::verify_theorem(g, cfg);
                int code = rep.equal ? 0 : rep.complete ? kExitFalsified : kExitIncomplete;
                return out.emit(zsl::theorem_report(g, rep), code);
            } catch (const zsl::StateBudgetExceeded& e) {
                return out.emit(incomplete_report("verify-theorem", e.what()),
                                kExitIncomplete);
            }
        }
        if (*fam) {
            zsl::Group g = zsl::parse_group_spec(group_spec);
            zsl::FamiliesReport rep = zsl::verify_families_pof(g, engine_config(state_budget));
            return out.emit(zsl::families_report(g, rep),
                            rep.all_pof() ? 0 : kExitFalsified);
        }
        if (*fac) {
            return out.emit(zsl::factor_report(zsl::factor(n, s)), 0);
        }
        if (*lem) {
            zsl::AuditMode am = mode == "sample" ? zsl::AuditMode::Sample
                                                 : zsl::AuditMode::Exhaustive;
            zsl::Lemma1Report rep = zsl::audit_lemma1(m_min, m_max, am, samples, seed);
            return out.emit(zsl::lemma1_report(m_min, m_max, am, samples, seed, rep),
                            rep.clean() ? 0 : kExitFalsified);
        }
    } catch (const zsl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << " (at \"" << e.token << "\")\n";
        return kExitParseError;
    } catch (const zsl::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitParseError;
}

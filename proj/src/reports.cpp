#include "zsl/reports.hpp"

#include <algorithm>
#include <sstream>

#include "zsl/parse.hpp"

namespace zsl {

using nlohmann::json;

std::string witness_string(const std::vector<int>& witness, const Group& g) {
    std::string out;
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) out += ',';
        out += g.element_name(witness[i]);
    }
    return out;
}

json check_report(const Group& g, const Sequence& s, const ProductReport& rep) {
    json j;
    j["command"] = "check";
    j["group"] = g.spec_string();
    j["sequence"] = format_sequence(s, g);
    j["length"] = s.length();
    j["product_one_free"] = rep.product_one_free;
    j["subproduct_count"] = rep.subproducts.size();
    if (rep.witness.has_value()) {
        j["witness"] = witness_string(*rep.witness, g);
    } else {
        j["witness"] = nullptr;
    }
    j["stats"] = {{"states_created", rep.stats.states_created},
                  {"peak_live", rep.stats.peak_live}};
    return j;
}

json davenport_report(const Group& g, int max_len, const DavenportResult& r) {
    json j;
    j["command"] = "davenport";
    j["group"] = g.spec_string();
    j["max_len"] = max_len;
    j["d"] = r.d;
    j["witness"] = format_sequence(r.witness, g);
    j["exhaustive"] = r.exhaustive;
    j["max_len_reached"] = r.max_len_reached;
    j["complete"] = r.exhaustive;
    j["stats"] = {{"nodes_explored", r.nodes_explored}, {"pruned", r.pruned}};
    return j;
}

json claims_report(const std::vector<DavenportClaim>& claims) {
    json j;
    j["command"] = "davenport-claims";
    j["all_ok"] = std::all_of(claims.begin(), claims.end(),
                              [](const DavenportClaim& c) { return c.ok; });
    json rows = json::array();
    std::uint64_t nodes = 0;
    for (const auto& c : claims) {
        rows.push_back({{"n", c.n},
                        {"s", c.s},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"ok", c.ok}});
        nodes += c.nodes_explored;
    }
    j["claims"] = std::move(rows);
    j["stats"] = {{"nodes_explored", nodes}};
    return j;
}

json classify_report(int n, long long s) {
    GroupClass cls = validate_params(n, s);
    json j;
    j["command"] = "classify";
    j["n"] = n;
    j["s"] = s;
    j["tag"] = to_string(cls.tag);
    j["subtag"] = to_string(cls.subtag);
    j["valid"] = cls.tag != GroupTag::Invalid;
    if (cls.tag != GroupTag::Invalid) j["order"] = 2 * n;
    return j;
}

json families_report(const Group& g, const FamiliesReport& rep) {
    json j;
    j["command"] = "families";
    j["group"] = g.spec_string();
    j["type1"] = rep.type1;
    j["type2xx"] = rep.type2xx;
    j["type2xy"] = rep.type2xy;
    json fails = json::array();
    for (const auto& f : rep.failures) {
        fails.push_back({{"kind", to_string(f.pattern.kind)},
                         {"u", f.pattern.u},
                         {"v", f.pattern.v},
                         {"sequence", format_sequence(realize(f.pattern, g), g)},
                         {"witness", witness_string(f.witness, g)}});
    }
    j["failures"] = std::move(fails);
    j["all_pof"] = rep.all_pof();
    return j;
}

json theorem_report(const Group& g, const TheoremReport& rep) {
    json j;
    j["command"] = "verify-theorem";
    j["group"] = g.spec_string();
    j["formula_count"] = rep.formula_count;
    j["predicted_count"] = rep.predicted_count;
    j["enumerated_count"] = rep.enumerated_count;
    json missing = json::array();
    for (const auto& s : rep.missing) missing.push_back(format_sequence(s, g));
    json extra = json::array();
    for (const auto& s : rep.extra) extra.push_back(format_sequence(s, g));
    j["missing"] = std::move(missing);
    j["extra"] = std::move(extra);
    j["complete"] = rep.complete;
    j["equal"] = rep.equal;
    j["stats"] = {{"nodes_explored", rep.nodes_explored},
                  {"pruned", rep.pruned},
                  {"runtime_ms", rep.runtime_ms}};
    return j;
}

json factor_report(const Factorization& f) {
    return json{{"command", "factor"}, {"n", f.n},   {"s", f.s},
                {"n1", f.n1},          {"n2", f.n2}, {"case", to_string(f.case_tag)},
                {"t", f.t},            {"m1", f.m1}, {"m2", f.m2}};
}

json lemma1_report(int m_min, int m_max, AuditMode mode, std::uint64_t samples,
                   std::uint64_t seed, const Lemma1Report& rep) {
    json j;
    j["command"] = "lemma1-audit";
    j["m_min"] = m_min;
    j["m_max"] = m_max;
    j["mode"] = mode == AuditMode::Exhaustive ? "exhaustive" : "sample";
    if (mode == AuditMode::Sample) {
        j["samples_per_m"] = samples;
        j["seed"] = seed;
    }
    j["instances"] = rep.instances;
    json fails = json::array();
    for (const auto& f : rep.falsifications) {
        Group cyc = Group::cyclic(f.m);
        fails.push_back({{"m", f.m},
                         {"sequence", format_sequence(f.seq, cyc)},
                         {"which", f.which}});
    }
    j["falsifications"] = std::move(fails);
    j["clean"] = rep.clean();
    return j;
}

json strip_stats(json report) {
    report.erase("stats");
    return report;
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "null";
    return v.dump();
}

// Depth-first flatten to (dotted.path, scalar) rows; array indices in brackets.
void flatten(const json& v, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (v.is_object()) {
        for (const auto& [k, sub] : v.items()) {
            flatten(sub, prefix.empty() ? k : prefix + "." + k, rows);
        }
    } else if (v.is_array()) {
        if (v.empty()) rows.emplace_back(prefix, "[]");
        for (std::size_t i = 0; i < v.size(); ++i) {
            flatten(v[i], prefix + "[" + std::to_string(i) + "]", rows);
        }
    } else {
        rows.emplace_back(prefix, scalar_text(v));
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string render(const json& report, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return report.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::ostringstream out;
    if (fmt == OutputFormat::Csv) {
        out << "key,value\n";
        for (const auto& [k, v] : rows) {
            out << csv_quote(k) << ',' << csv_quote(v) << '\n';
        }
        return out.str();
    }
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) {
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    }
    return out.str();
}

}  // namespace zsl

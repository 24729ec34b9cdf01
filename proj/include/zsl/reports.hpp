#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "zsl/classifier.hpp"
#include "zsl/davenport.hpp"
#include "zsl/factorization.hpp"
#include "zsl/group.hpp"
#include "zsl/lemma1.hpp"
#include "zsl/products.hpp"

namespace zsl {

enum class OutputFormat { Json, Table, Csv };

// Comma-joined element names, e.g. "x,y^3,x*y^2".
std::string witness_string(const std::vector<int>& witness, const Group& g);

// Report builders. Volatile values (runtimes, node counters, state counts)
// live under the "stats" key; everything else is a pure function of the
// inputs, so byte comparison after dropping "stats" is a determinism check.
nlohmann::json check_report(const Group& g, const Sequence& s, const ProductReport& rep);
nlohmann::json davenport_report(const Group& g, int max_len, const DavenportResult& r);
nlohmann::json claims_report(const std::vector<DavenportClaim>& claims);
nlohmann::json classify_report(int n, long long s);
nlohmann::json families_report(const Group& g, const FamiliesReport& rep);
nlohmann::json theorem_report(const Group& g, const TheoremReport& rep);
nlohmann::json factor_report(const Factorization& f);
nlohmann::json lemma1_report(int m_min, int m_max, AuditMode mode,
                             std::uint64_t samples, std::uint64_t seed,
                             const Lemma1Report& rep);

nlohmann::json strip_stats(nlohmann::json report);  // drops the "stats" key

std::string render(const nlohmann::json& report, OutputFormat fmt);

}  // namespace zsl

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "negacorr/construction.hpp"
#include "negacorr/correlation.hpp"
#include "negacorr/equivalence.hpp"

namespace negacorr {

// JSON shapes are documented in README.md and consumed by the CLI.

nlohmann::json to_json(const CorrelationProfile& profile);
nlohmann::json to_json(const ValueMultiset& values);
nlohmann::json to_json(const AffineWitness& w);
/// {index, p, x, y, f, alpha, matched, branch, template, computed, expected, note}
nlohmann::json to_json(const VerificationReport& report);
/// [{class, members, representative, witnesses: [{member, d, t}]}]
nlohmann::json to_json(const std::vector<EquivalenceClass>& classes);
nlohmann::json to_json(const Table4RowResult& row);

/// Space-separated integers.
std::string to_text(const std::vector<int>& values);
/// One stable line per report.
std::string to_text(const VerificationReport& report);
std::string to_text(const Table4RowResult& row);

}  // namespace negacorr

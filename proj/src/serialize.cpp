#include "negacorr/serialize.hpp"

namespace negacorr {

using nlohmann::json;

json to_json(const CorrelationProfile& profile) {
  return {{"kind", to_string(profile.kind)},
          {"period", profile.period()},
          {"values", profile.values}};
}

json to_json(const ValueMultiset& values) {
  json entries = json::array();
  for (const auto& [value, count] : values.entries())
    entries.push_back({{"value", value}, {"multiplicity", count}});
  return {{"includes_zero_shift", values.includes_zero_shift()},
          {"total", values.total()},
          {"entries", entries}};
}

json to_json(const AffineWitness& w) { return {{"d", w.d}, {"t", w.t}}; }

json to_json(const VerificationReport& report) {
  return {{"index", report.index},   {"p", report.p},
          {"x", report.x},           {"y", report.y},
          {"f", report.f},           {"alpha", report.alpha},
          {"matched", report.matched}, {"branch", to_string(report.branch)},
          {"template", report.template_text},
          {"computed", report.computed}, {"expected", report.expected},
          {"note", report.note}};
}

json to_json(const std::vector<EquivalenceClass>& classes) {
  json out = json::array();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& cls = classes[k];
    json witnesses = json::array();
    for (const auto& member : cls.members) {
      const auto& w = cls.witnesses.at(member);
      witnesses.push_back({{"member", member}, {"d", w.d}, {"t", w.t}});
    }
    out.push_back({{"class", k + 1},
                   {"members", cls.members},
                   {"representative", cls.representative},
                   {"witnesses", witnesses}});
  }
  return out;
}

json to_json(const Table4RowResult& row) {
  json out{{"row", row.relation.row},
           {"source", row.relation.source},
           {"target", row.relation.target},
           {"alpha_exponent", row.relation.alpha_exponent},
           {"negation", row.relation.negation},
           {"p", row.p},
           {"alpha", row.alpha},
           {"d", row.d},
           {"holds", row.holds()},
           {"convention", row.convention()},
           {"decimation", {{"witness", to_json(row.decimation_witness)},
                           {"holds", row.holds_as_decimation}}},
           {"support_action", {{"witness", to_json(row.support_action_witness)},
                               {"holds", row.holds_as_support_action}}}};
  out["searched"] = row.searched ? to_json(*row.searched) : json(nullptr);
  return out;
}

std::string to_text(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::string out = "s" + std::to_string(report.index) + " p=" + std::to_string(report.p) +
                    " x=" + std::to_string(report.x) + " y=" + std::to_string(report.y) +
                    " f=" + std::to_string(report.f) + " alpha=" + std::to_string(report.alpha) +
                    (report.matched ? " PASS" : " FAIL") + " branch=" + to_string(report.branch) +
                    " computed={" + to_text(report.computed) + "}" + " expected={" +
                    to_text(report.expected) + "}";
  if (!report.note.empty()) out += " note: " + report.note;
  return out;
}

std::string to_text(const Table4RowResult& row) {
  const auto& rel = row.relation;
  std::string out = "row " + std::to_string(rel.row) + " p=" + std::to_string(row.p) + " s" +
                    std::to_string(rel.target) + " <- s" + std::to_string(rel.source) +
                    (rel.negation ? " negated" : "") + ", d=eta(1,alpha^" +
                    std::to_string(rel.alpha_exponent) + ")=" + std::to_string(row.d) +
                    (row.holds() ? " PASS" : " FAIL") + " convention=" + row.convention() +
                    " search=" + (row.searched ? to_string(*row.searched) : "none");
  return out;
}

}  // namespace negacorr

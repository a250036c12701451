#include "dlout/report.hpp"

#include "json.hpp"

namespace dlout {

namespace {

nlohmann::ordered_json literal_array(const LiteralSet& set) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& l : set) out.push_back(l.to_string());
  return out;
}

}  // namespace

std::string to_text(const OutlierReport& report) {
  std::string out;
  if (report.witnesses.empty()) return "outlier " + report.outlier.to_string() + " none\n";
  for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
    out += "outlier " + report.outlier.to_string() + " witness " +
           report.witnesses[i].to_string() +
           " strong=" + (report.witness_strong[i] ? "true" : "false") + "\n";
  }
  return out;
}

std::string to_record(const OutlierReport& report) {
  nlohmann::ordered_json record;
  record["outlier"] = literal_array(report.outlier);
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(literal_array(w));
  record["witnesses"] = witnesses;
  record["strong"] = report.strong;
  auto flags = nlohmann::ordered_json::array();
  for (bool f : report.witness_strong) flags.push_back(f);
  record["witness_strong"] = flags;
  return record.dump() + "\n";
}

std::string to_text(const EnumerationResult& result) {
  std::string out;
  for (const auto& r : result.reports) out += to_text(r);
  return out;
}

std::string to_records(const EnumerationResult& result) {
  std::string out;
  for (const auto& r : result.reports) out += to_record(r);
  return out;
}

}  // namespace dlout

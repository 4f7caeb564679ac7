#include "rcum/serialize.hpp"

namespace rcum {

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["estimate"] = report.estimate;
  j["target"] = report.target;
  j["standard_error"] = report.standard_error;
  j["n_samples"] = report.n_samples;
  j["gate"] = report.gate;
  j["rule"] = report.rule;
  j["pass"] = report.pass;
  if (!report.extras.empty()) {
    nlohmann::ordered_json extras;
    for (const auto& [key, value] : report.extras) extras[key] = value;
    j["extras"] = std::move(extras);
  }
  return j;
}

nlohmann::ordered_json to_json(const RealizedStatistic& stat) {
  nlohmann::ordered_json j;
  j["order"] = stat.order;
  j["value"] = stat.value;
  j["cells"] = stat.contributions.size();
  return j;
}

nlohmann::ordered_json suite_json(const std::string& suite,
                                  std::span<const VerificationReport> reports) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  bool pass = true;
  for (const VerificationReport& r : reports) {
    pass = pass && r.pass;
    list.push_back(to_json(r));
  }
  j["reports"] = std::move(list);
  j["pass"] = pass;
  return j;
}

}  // namespace rcum

#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "rcum/realized.hpp"
#include "rcum/report.hpp"

namespace rcum {

nlohmann::ordered_json to_json(const VerificationReport& report);

nlohmann::ordered_json to_json(const RealizedStatistic& stat);

// {suite, reports: [...], pass}
nlohmann::ordered_json suite_json(const std::string& suite,
                                  std::span<const VerificationReport> reports);

}  // namespace rcum

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "embfp/verifier.hpp"

namespace embfp {

// JSON verification report: scores, t statistics, verdict, the fitted map,
// the seeds that produced the inputs, and wall-clock timings.
nlohmann::json make_report(const VerifyResult& result,
                           const std::map<std::string, std::uint64_t>& seeds,
                           const std::map<std::string, double>& timings_ms);

}  // namespace embfp

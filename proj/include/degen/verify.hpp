#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace degen {

inline constexpr const char* kToolVersion = "degen 1.0.0";

struct VerificationReport {
  std::string check;
  std::size_t n = 0;
  std::string status;  // "pass", "fail" or "error"
  nlohmann::json witness;
  double elapsed_ms = 0;
};

// conical_part, pb_vertices, quotient_theorem, normal_fan, unstable_locus, base_recovery,
// fan_smooth_small.
const std::vector<std::string>& check_names();
// Smallest and largest n a check accepts.
std::pair<std::size_t, std::size_t> check_range(const std::string& check);
// Throws std::invalid_argument for an unknown check or n outside check_range.
VerificationReport verify(std::size_t n, const std::string& check);

}  // namespace degen

#pragma once

#include <string>

#include "json.hpp"

namespace qpu {

inline constexpr const char* kToolVersion = "1.0.0";

// Fixed-order JSON record of one command run. The payload carries no
// timestamps or environment data: identical inputs give identical bytes.
nlohmann::ordered_json make_certificate(const std::string& command,
                                        nlohmann::ordered_json inputs,
                                        nlohmann::ordered_json result,
                                        nlohmann::ordered_json witnesses);

std::string certificate_text(const nlohmann::ordered_json& cert);

void write_certificate(const std::string& path, const nlohmann::ordered_json& cert);

}  // namespace qpu

#pragma once

namespace hopf {

inline constexpr const char* kToolName = "hopf-verify";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

} // namespace hopf

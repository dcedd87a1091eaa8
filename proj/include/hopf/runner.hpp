#pragma once

#include "hopf/config.hpp"

namespace hopf {

// Exit statuses of a verification run.
inline constexpr int kStatusVerified = 0;
inline constexpr int kStatusRefuted = 1;
inline constexpr int kStatusInconclusive = 2;
inline constexpr int kStatusLawFailure = 3;
inline constexpr int kStatusUsageError = 4;

struct BuiltInstance {
    Category::Ptr category;
    Monad monad;
};

// Materializes the configured category and monad (corruption hooks applied).
BuiltInstance build_instance(const RunConfig& cfg);

struct RunReport {
    RunConfig config;
    LawReport laws;
    std::optional<HopfReport> hopf; // absent when the monad laws failed
    int exit_status = kStatusUsageError;
};

// Full pipeline: build, check monad laws, verify the Hopf property.
RunReport run(const RunConfig& cfg, int jobs = 1);

// Structured report: stable sorted keys, no timing, byte-identical for
// identical configs regardless of the worker count.
nlohmann::json report_to_json(const RunReport& report);
std::string report_to_text(const RunReport& report);

std::string emit_report(const RunReport& report, const std::string& format);

} // namespace hopf

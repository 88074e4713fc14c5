#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qhd/cli/config.hpp"

namespace qhd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

struct OutputFile {
    std::filesystem::path path;
    std::string content;
};

/// Computes every output of `config` in memory. Throws qhd::Error on failure.
std::vector<OutputFile> render(const RunConfig& config);

struct RunResult {
    int exit_status;
    std::vector<std::filesystem::path> written;
    std::string message;
};

/// Renders, then writes all files. On any failure nothing is left behind.
RunResult run(const RunConfig& config);

/// Whole CLI: parse, run, report. Returns 0, 1 or 2.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhd::cli

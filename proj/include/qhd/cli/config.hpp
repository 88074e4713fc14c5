#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qhd/errors.hpp"
#include "qhd/profile.hpp"

namespace qhd::cli {

enum class Mode { Rh, Classify, Profile, Loop, SweepMu, SweepVacuum, Phase };
enum class Format { Csv, Json, Svg };

const char* to_string(Mode mode);
const char* to_string(Format format);

/// Bad command line or config file. Maps to exit status 2.
class UsageError : public Error {
public:
    using Error::Error;
};

/// --help was given; carries the rendered help text. Maps to exit status 0.
class HelpRequested : public std::exception {
public:
    explicit HelpRequested(std::string text) : text_(std::move(text)) {}
    const char* what() const noexcept override { return text_.c_str(); }

private:
    std::string text_;
};

struct OutputSpec {
    std::filesystem::path directory = ".";
    std::vector<Format> formats;  ///< sorted, unique; csv when none requested
    int stride = 1;
};

struct RunConfig {
    Mode mode = Mode::Rh;

    std::optional<double> gamma;
    std::optional<double> mu;
    std::optional<double> k;
    std::optional<double> s;
    std::optional<double> rho_minus;
    std::optional<double> rho_plus;
    std::optional<double> A;  ///< constants mode, together with B
    std::optional<double> B;

    std::vector<double> mu_values;
    std::vector<double> mu_over_k_values;
    std::vector<double> rho_plus_values;
    bool use_preset = false;

    int loop_samples = 512;
    ShootOptions solver;
    OutputSpec output;

    bool constants_mode() const { return A.has_value(); }
    bool wants(Format f) const;
};

/// Parses `args` (without the program name). Flags override values from `--config`.
///
/// Throws UsageError for unknown options or config keys, missing parameters, or
/// conflicting flags; HelpRequested for --help.
RunConfig parse_config(const std::vector<std::string>& args);

}  // namespace qhd::cli

#pragma once

#include <string>
#include <vector>

#include "qhd/errors.hpp"

namespace qhd::cli {

class EmitError : public Error {
public:
    using Error::Error;
};

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct AxesSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 640;
    int height = 480;
};

/// Standalone SVG line plot: one polyline per series, linear axes with tick
/// labels (4 significant digits) and a legend. Output bytes depend only on input.
///
/// Throws EmitError for an empty dataset, mismatched x/y lengths or non-finite values.
std::string emit_svg(const std::vector<Series>& dataset, const AxesSpec& axes);

}  // namespace qhd::cli

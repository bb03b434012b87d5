#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qvp/analysis.hpp"

namespace qvp {

/// printf %.12e; the canonical float form in emitted CSV files.
std::string format_sci(double x);

/// Writes content to a temporary sibling and renames it into place, so
/// no partially written file is ever observable under the final name.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

/// One sweep output row; columns mirror the CSV header.
struct SweepRow {
    long long steps;
    double step_length;
    double separation;
    double predicted;
    double relative_error;
    double origin_suppression;
    double tv_to_gaussian;
};

/// Header `w,probability`, one row per lattice site in slot order.
std::string distribution_csv(const Distribution& dist);

/// Header `N,delta_w,separation,predicted,rel_error,origin_suppression,
/// tv_to_gaussian`, rows in the given (ascending N) order.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Minimal standalone polyline rendering of the distribution.
std::string distribution_svg(const Distribution& dist);

}  // namespace qvp

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "simet/counterexample.hpp"
#include "simet/function_space.hpp"
#include "simet/kernels.hpp"
#include "simet/linalg.hpp"
#include "simet/point.hpp"
#include "simet/validators.hpp"

namespace simet {

using ordered_json = nlohmann::ordered_json;

// --- matrix CSV: plain comma-separated rows, no header, square --------------

SymMatrix read_matrix_csv(const std::string& path);
SymMatrix read_matrix_csv_stream(std::istream& in);

/// Writes 17 significant digits per entry.
void write_matrix_csv(const SymMatrix& m, std::ostream& out);
void write_matrix_csv(const SymMatrix& m, const std::string& path);

// --- points CSV: one point per row ------------------------------------------

/// Default columns are real coordinates; in complex mode consecutive columns
/// pair up as (re, im).
std::vector<Point> read_points_csv(const std::string& path, bool complex_mode);
std::vector<Point> read_points_csv_stream(std::istream& in, bool complex_mode);

// --- edge-list CSV: two label columns per row, labels trimmed ---------------

std::vector<std::pair<std::string, std::string>> read_edges_csv(const std::string& path);
std::vector<std::pair<std::string, std::string>> read_edges_csv_stream(std::istream& in);

// --- piecewise functions: {"kind", "breakpoints", "values"} -----------------

ordered_json function_to_json(const PiecewiseFunction& f);
PiecewiseFunction function_from_json(const nlohmann::json& j);

/// A file holds either a bare array of function objects or a single object.
std::vector<PiecewiseFunction> read_functions_json(const std::string& path);
void write_functions_json(const std::vector<PiecewiseFunction>& fns, const std::string& path);

// --- kernel / metric specs: {"kind", "params", "children"} ------------------

ordered_json kernel_spec_to_json(const KernelSpec& k);
KernelSpec kernel_spec_from_json(const nlohmann::json& j);
ordered_json metric_spec_to_json(const MetricSpec& m);
MetricSpec metric_spec_from_json(const nlohmann::json& j);

KernelSpec read_kernel_spec(const std::string& path);
MetricSpec read_metric_spec(const std::string& path);

// --- reports -----------------------------------------------------------------

ordered_json report_to_json(const ValidationReport& rep);
ordered_json counterexample_to_json(const CounterexampleReport& rep);

/// Loads a whole file; throws InputError when it cannot be read or parsed.
nlohmann::json load_json(const std::string& path);

}  // namespace simet

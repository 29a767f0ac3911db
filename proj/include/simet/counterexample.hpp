#pragma once

#include <string>
#include <vector>

#include "simet/function_space.hpp"
#include "simet/graph.hpp"
#include "simet/linalg.hpp"

namespace simet {

struct CounterexampleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// One-shot reproduction of the five-function counterexample: the sup-metric
/// distance matrix on x1..x5, its spectrum, the sum-zero (CND) test, the
/// entrywise exp(-t d) Grams, the K_{2,3} restatement, and the
/// strict-convexity witness. Nothing here is a stored constant; every matrix
/// is recomputed from the function and graph definitions and cross-compared.
struct CounterexampleReport {
    SymMatrix delta;        // sup-metric distances of x1..x5
    SymMatrix graph_delta;  // BFS distances of K_{2,3}, order A..E
    std::vector<double> eigenvalues;
    int positive_count = 0;
    CndVerdict cnd;
    std::vector<double> exp_scales;           // tested t values
    std::vector<double> exp_min_eigenvalues;  // min eigenvalue of e^{-t d} per t
    bool convexity_equality = false;          // d(x1,x2) + d(x2,x5) == d(x1,x5) exactly
    bool convexity_not_multiple = false;      // x1-x2 not proportional to x2-x5
    std::vector<CounterexampleCheck> checks;
    std::vector<std::string> notes;
    std::string verdict;

    CounterexampleReport() : delta(5), graph_delta(5) {}

    bool all_pass() const;
};

/// Runs the whole pipeline. `exp_scales` are the t values at which the
/// entrywise e^{-t d} Gram must exhibit a negative eigenvalue.
CounterexampleReport run_counterexample(const std::vector<double>& exp_scales = {0.5, 1.0, 2.0});

/// Aligned plain-text rendering of the report (matrix pretty-print included).
std::string render_text(const CounterexampleReport& report);

}  // namespace simet

#pragma once

#include <cstddef>
#include <functional>

#include "simet/error.hpp"

namespace simet {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    std::size_t max_panels = 200000;  // refinement budget across the whole interval
};

/// Adaptive Gauss-Legendre integration of f over the finite interval [a, b].
///
/// Panels carry an embedded 8- vs 16-node error estimate; the worst panel is
/// split until the summed estimate drops below cfg.abs_tol. Deterministic.
/// Throws ConvergenceError when the panel budget runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

/// Single fixed 16-node Gauss-Legendre panel (exact through degree 31).
double gauss_legendre_16(const std::function<double(double)>& f, double a, double b);

}  // namespace simet

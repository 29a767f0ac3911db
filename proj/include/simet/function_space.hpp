#pragma once

#include <array>
#include <complex>
#include <vector>

#include "simet/quadrature.hpp"

namespace simet {

enum class FunctionKind { constant_segments, linear_segments };

/// Bounded piecewise-constant or piecewise-linear function on the real line,
/// complex-valued, zero outside its breakpoint range.
///
/// Constant kind: values[i] on [b_i, b_{i+1}) with the last segment closed.
/// Linear kind: node values at the breakpoints, linear in between; the first
/// and last node must be zero so the extension by zero stays continuous.
class PiecewiseFunction {
public:
    static PiecewiseFunction constant(std::vector<double> breakpoints,
                                      std::vector<std::complex<double>> values);
    static PiecewiseFunction linear(std::vector<double> breakpoints,
                                    std::vector<std::complex<double>> node_values);

    FunctionKind kind() const { return kind_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<std::complex<double>>& values() const { return values_; }

    std::complex<double> operator()(double s) const;

    /// Largest |value| (the bound witnessing boundedness).
    double max_abs() const;

    bool is_real() const;

    /// Same shape with every value multiplied by c.
    PiecewiseFunction scaled(double c) const;

private:
    PiecewiseFunction() = default;
    FunctionKind kind_ = FunctionKind::constant_segments;
    std::vector<double> breakpoints_;
    std::vector<std::complex<double>> values_;
};

/// sup over the real line of |f(s) - g(s)|, computed exactly on the merged
/// breakpoint partition (the difference is affine on each merged segment, so
/// its modulus peaks at segment ends or at the breakpoints themselves).
double sup_metric(const PiecewiseFunction& f, const PiecewiseFunction& g);

/// The five step functions of the built-in counterexample. x1 is the
/// indicator of [0,1]; x5 = -x1; x2, x3, x4 carry +-1 bumps on [2,3], [4,5],
/// [6,7] arranged so the sup distances come out {1, 2} in the documented
/// pattern.
std::array<PiecewiseFunction, 5> counterexample_functions();

enum class WeightKind { gaussian, indicator, table };

/// Nonnegative weight on the real line.
struct Weight {
    WeightKind kind = WeightKind::gaussian;
    double lo = 0.0, hi = 0.0;            // indicator support
    std::vector<double> breakpoints;      // table kind: piecewise-linear graph
    std::vector<double> values;

    static Weight gaussian();                       // e^{-t^2}
    static Weight indicator(double lo, double hi);  // 1 on [lo, hi]
    static Weight table(std::vector<double> breakpoints, std::vector<double> values);

    double operator()(double t) const;
};

/// integral over R of |f - g|^b w(t) dt for b in (0, 1].
///
/// Only continuous (linear-kind) inputs are accepted unless
/// allow_discontinuous is set; segments where the difference is real-affine
/// under an indicator weight integrate in closed form at b = 1, everything
/// else through adaptive Gauss-Legendre at the configured tolerance.
double weighted_lb_metric(const PiecewiseFunction& f, const PiecewiseFunction& g, double b,
                          const Weight& w, const QuadratureConfig& quad = {},
                          bool allow_discontinuous = false);

/// e^{-weighted_lb_metric(f, g, ...)}, in (0, 1].
double exp_similarity_fn(const PiecewiseFunction& f, const PiecewiseFunction& g, double b,
                         const Weight& w, const QuadratureConfig& quad = {},
                         bool allow_discontinuous = false);

/// True when (f1 - f2) and (g1 - g2) are scalar multiples of one another,
/// decided exactly on the common merged partition.
bool differences_proportional(const PiecewiseFunction& f1, const PiecewiseFunction& f2,
                              const PiecewiseFunction& g1, const PiecewiseFunction& g2);

}  // namespace simet

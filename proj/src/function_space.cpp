#include "simet/function_space.hpp"

#include <algorithm>
#include <cmath>

#include "simet/error.hpp"

namespace simet {

namespace {

void check_breakpoints(const std::vector<double>& b) {
    if (b.size() < 2) throw InputError("PiecewiseFunction: need at least two breakpoints");
    for (double v : b)
        if (!std::isfinite(v)) throw InputError("PiecewiseFunction: breakpoints must be finite");
    for (std::size_t i = 1; i < b.size(); ++i)
        if (!(b[i - 1] < b[i]))
            throw InputError("PiecewiseFunction: breakpoints must be strictly increasing");
}

void check_values(const std::vector<std::complex<double>>& v) {
    for (const auto& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InputError("PiecewiseFunction: values must be finite");
}

std::vector<double> merged_breakpoints(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    std::vector<double> m;
    m.reserve(f.breakpoints().size() + g.breakpoints().size());
    m.insert(m.end(), f.breakpoints().begin(), f.breakpoints().end());
    m.insert(m.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

/// Difference f - g restricted to one merged segment is affine; recover it
/// from two interior samples (robust to jump semantics at the segment ends).
struct AffineDiff {
    std::complex<double> at_left, at_right;

    AffineDiff(const PiecewiseFunction& f, const PiecewiseFunction& g, double l, double r) {
        const double p1 = l + (r - l) / 3.0;
        const double p2 = l + 2.0 * (r - l) / 3.0;
        const std::complex<double> h1 = f(p1) - g(p1);
        const std::complex<double> h2 = f(p2) - g(p2);
        const std::complex<double> slope = (h2 - h1) / (p2 - p1);
        at_left = h1 + slope * (l - p1);
        at_right = h1 + slope * (r - p1);
    }
};

}  // namespace

PiecewiseFunction PiecewiseFunction::constant(std::vector<double> breakpoints,
                                              std::vector<std::complex<double>> values) {
    check_breakpoints(breakpoints);
    check_values(values);
    if (values.size() + 1 != breakpoints.size())
        throw InputError("PiecewiseFunction: constant kind needs one value per segment");
    PiecewiseFunction f;
    f.kind_ = FunctionKind::constant_segments;
    f.breakpoints_ = std::move(breakpoints);
    f.values_ = std::move(values);
    return f;
}

PiecewiseFunction PiecewiseFunction::linear(std::vector<double> breakpoints,
                                            std::vector<std::complex<double>> node_values) {
    check_breakpoints(breakpoints);
    check_values(node_values);
    if (node_values.size() != breakpoints.size())
        throw InputError("PiecewiseFunction: linear kind needs one value per breakpoint");
    if (node_values.front() != std::complex<double>(0.0, 0.0) ||
        node_values.back() != std::complex<double>(0.0, 0.0))
        throw InputError("PiecewiseFunction: linear kind must vanish at its boundary nodes");
    PiecewiseFunction f;
    f.kind_ = FunctionKind::linear_segments;
    f.breakpoints_ = std::move(breakpoints);
    f.values_ = std::move(node_values);
    return f;
}

std::complex<double> PiecewiseFunction::operator()(double s) const {
    const auto& b = breakpoints_;
    if (s < b.front() || s > b.back()) return {0.0, 0.0};
    if (kind_ == FunctionKind::constant_segments) {
        if (s == b.back()) return values_.back();  // last segment closed on the right
        const auto it = std::upper_bound(b.begin(), b.end(), s);
        return values_[static_cast<std::size_t>(it - b.begin()) - 1];
    }
    const auto it = std::upper_bound(b.begin(), b.end(), s);
    if (it == b.end()) return values_.back();
    const std::size_t i = static_cast<std::size_t>(it - b.begin());
    if (i == 0) return values_.front();
    const double w = (s - b[i - 1]) / (b[i] - b[i - 1]);
    return values_[i - 1] + w * (values_[i] - values_[i - 1]);
}

double PiecewiseFunction::max_abs() const {
    double m = 0.0;
    for (const auto& z : values_) m = std::max(m, std::abs(z));
    return m;
}

bool PiecewiseFunction::is_real() const {
    for (const auto& z : values_)
        if (z.imag() != 0.0) return false;
    return true;
}

PiecewiseFunction PiecewiseFunction::scaled(double c) const {
    PiecewiseFunction f = *this;
    for (auto& z : f.values_) z *= c;
    if (kind_ == FunctionKind::linear_segments) {
        f.values_.front() = {0.0, 0.0};
        f.values_.back() = {0.0, 0.0};
    }
    return f;
}

double sup_metric(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    const std::vector<double> m = merged_breakpoints(f, g);
    double sup = 0.0;
    for (double b : m) sup = std::max(sup, std::abs(f(b) - g(b)));
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        // |affine| is convex, so the segment supremum sits at an endpoint.
        const AffineDiff h(f, g, m[i], m[i + 1]);
        sup = std::max({sup, std::abs(h.at_left), std::abs(h.at_right)});
    }
    return sup;
}

std::array<PiecewiseFunction, 5> counterexample_functions() {
    using C = std::complex<double>;
    auto step = [](std::vector<double> bp, std::vector<C> v) {
        return PiecewiseFunction::constant(std::move(bp), std::move(v));
    };
    return {
        step({0, 1}, {C(1)}),
        step({2, 3, 6, 7}, {C(1), C(0), C(-1)}),
        step({2, 3, 4, 5}, {C(-1), C(0), C(1)}),
        step({4, 5, 6, 7}, {C(-1), C(0), C(1)}),
        step({0, 1}, {C(-1)}),
    };
}

Weight Weight::gaussian() { return Weight{WeightKind::gaussian, 0.0, 0.0, {}, {}}; }

Weight Weight::indicator(double lo, double hi) {
    if (!(lo < hi)) throw InputError("Weight: indicator interval must be nonempty");
    return Weight{WeightKind::indicator, lo, hi, {}, {}};
}

Weight Weight::table(std::vector<double> breakpoints, std::vector<double> values) {
    check_breakpoints(breakpoints);
    if (values.size() != breakpoints.size())
        throw InputError("Weight: table needs one value per breakpoint");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw InputError("Weight: table values must be finite and nonnegative");
    return Weight{WeightKind::table, 0.0, 0.0, std::move(breakpoints), std::move(values)};
}

double Weight::operator()(double t) const {
    switch (kind) {
        case WeightKind::gaussian:
            return std::exp(-t * t);
        case WeightKind::indicator:
            return (t >= lo && t <= hi) ? 1.0 : 0.0;
        case WeightKind::table: {
            if (t <= breakpoints.front() || t >= breakpoints.back()) {
                if (t == breakpoints.front()) return values.front();
                if (t == breakpoints.back()) return values.back();
                return 0.0;
            }
            const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
            const std::size_t i = static_cast<std::size_t>(it - breakpoints.begin());
            const double w = (t - breakpoints[i - 1]) / (breakpoints[i] - breakpoints[i - 1]);
            return values[i - 1] + w * (values[i] - values[i - 1]);
        }
    }
    throw InputError("Weight: unknown kind");
}

namespace {

/// Closed form of integral |c0 + c1 s| ds over [l, r] for a real affine
/// difference, splitting at the sign change.
double abs_affine_integral(double c0, double c1, double l, double r) {
    auto primitive = [&](double s) { return c0 * s + 0.5 * c1 * s * s; };
    auto segment = [&](double x0, double x1) {
        const double v = primitive(x1) - primitive(x0);
        return std::abs(v);
    };
    if (c1 == 0.0) return std::abs(c0) * (r - l);
    const double root = -c0 / c1;
    if (root <= l || root >= r) return segment(l, r);
    return segment(l, root) + segment(root, r);
}

}  // namespace

double weighted_lb_metric(const PiecewiseFunction& f, const PiecewiseFunction& g, double b,
                          const Weight& w, const QuadratureConfig& quad,
                          bool allow_discontinuous) {
    if (!(b > 0.0 && b <= 1.0)) throw InputError("weighted_lb_metric: b must lie in (0, 1]");
    if (!allow_discontinuous && (f.kind() == FunctionKind::constant_segments ||
                                 g.kind() == FunctionKind::constant_segments))
        throw InputError(
            "weighted_lb_metric: discontinuous (constant-kind) input; pass "
            "allow_discontinuous to override");

    const std::vector<double> m = merged_breakpoints(f, g);
    const std::size_t nsegs = m.size() - 1;
    QuadratureConfig cfg = quad;
    cfg.abs_tol = quad.abs_tol / static_cast<double>(nsegs);

    double total = 0.0;
    for (std::size_t i = 0; i < nsegs; ++i) {
        const double l = m[i], r = m[i + 1];
        const AffineDiff h(f, g, l, r);
        if (h.at_left == std::complex<double>(0.0, 0.0) &&
            h.at_right == std::complex<double>(0.0, 0.0))
            continue;  // difference vanishes on this segment

        const bool real_diff = h.at_left.imag() == 0.0 && h.at_right.imag() == 0.0;
        if (b == 1.0 && w.kind == WeightKind::indicator && real_diff) {
            const double lo = std::max(l, w.lo), hi = std::min(r, w.hi);
            if (lo < hi) {
                const double c1 = (h.at_right.real() - h.at_left.real()) / (r - l);
                const double c0 = h.at_left.real() - c1 * l;
                total += abs_affine_integral(c0, c1, lo, hi);
            }
            continue;
        }
        total += integrate(
            [&](double s) { return std::pow(std::abs(f(s) - g(s)), b) * w(s); }, l, r, cfg);
    }
    return total;
}

double exp_similarity_fn(const PiecewiseFunction& f, const PiecewiseFunction& g, double b,
                         const Weight& w, const QuadratureConfig& quad,
                         bool allow_discontinuous) {
    return std::exp(-weighted_lb_metric(f, g, b, w, quad, allow_discontinuous));
}

bool differences_proportional(const PiecewiseFunction& f1, const PiecewiseFunction& f2,
                              const PiecewiseFunction& g1, const PiecewiseFunction& g2) {
    std::vector<double> pts;
    for (const PiecewiseFunction* fn : {&f1, &f2, &g1, &g2})
        pts.insert(pts.end(), fn->breakpoints().begin(), fn->breakpoints().end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<double> samples = pts;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) samples.push_back(0.5 * (pts[i] + pts[i + 1]));

    std::vector<std::complex<double>> u, v;
    for (double s : samples) {
        u.push_back(f1(s) - f2(s));
        v.push_back(g1(s) - g2(s));
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] - u[j] * v[i] != std::complex<double>(0.0, 0.0)) return false;
    return true;
}

}  // namespace simet

#include "simet/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace simet {

namespace {

/// Legendre nodes and weights on [-1, 1], computed once by Newton iteration
/// on P_n (converges to machine precision from the Chebyshev-like guesses).
template <std::size_t N>
struct GaussRule {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    GaussRule() {
        for (std::size_t i = 0; i < (N + 1) / 2; ++i) {
            double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                                (static_cast<double>(N) + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                // Recurrence for P_n(x) and P_{n-1}(x).
                double p0 = 1.0, p1 = x;
                for (std::size_t k = 2; k <= N; ++k) {
                    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = pk;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = -x;
            nodes[N - 1 - i] = x;
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[N - 1 - i] = w;
        }
    }
};

const GaussRule<8>& rule8() {
    static const GaussRule<8> r;
    return r;
}
const GaussRule<16>& rule16() {
    static const GaussRule<16> r;
    return r;
}

template <std::size_t N>
double panel(const GaussRule<N>& r, const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
    return half * s;
}

struct Panel {
    double a, b, value, err;
};

}  // namespace

double gauss_legendre_16(const std::function<double(double)>& f, double a, double b) {
    return panel(rule16(), f, a, b);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
    if (!(a <= b)) throw InputError("integrate: interval endpoints out of order");
    if (a == b) return 0.0;

    auto make_panel = [&](double lo, double hi) {
        const double v16 = panel(rule16(), f, lo, hi);
        const double v8 = panel(rule8(), f, lo, hi);
        return Panel{lo, hi, v16, std::abs(v16 - v8)};
    };

    std::vector<Panel> panels{make_panel(a, b)};
    while (true) {
        double total_err = 0.0;
        for (const Panel& p : panels) total_err += p.err;
        if (total_err <= cfg.abs_tol) break;
        if (panels.size() + 1 > cfg.max_panels)
            throw ConvergenceError("integrate: panel budget exhausted, error estimate " +
                                       std::to_string(total_err),
                                   total_err);
        // Split the worst panel; ties resolved by left endpoint for determinism.
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel& x, const Panel& y) {
                                          if (x.err != y.err) return x.err < y.err;
                                          return x.a > y.a;
                                      });
        const Panel w = *worst;
        const double mid = 0.5 * (w.a + w.b);
        if (mid <= w.a || mid >= w.b)
            throw ConvergenceError("integrate: interval cannot be split further", w.err);
        *worst = make_panel(w.a, mid);
        panels.push_back(make_panel(mid, w.b));
    }

    // Deterministic summation order.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double sum = 0.0;
    for (const Panel& p : panels) sum += p.value;
    return sum;
}

}  // namespace simet

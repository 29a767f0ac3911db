#include "simet/kernels.hpp"

#include <cmath>
#include <utility>

namespace simet {

namespace {

void require_unit_interval_open(double a, const char* who) {
    if (!(a > 0.0 && a < 1.0)) throw InputError(std::string(who) + ": exponent must lie in (0, 1)");
}

void require_positive(double t, const char* who) {
    if (!(t > 0.0)) throw InputError(std::string(who) + ": rate must be > 0");
}

void require_nonneg(double d, const char* who) {
    if (!(d >= 0.0)) throw InputError(std::string(who) + ": distance must be >= 0");
}

const MetricSpec& only_base(const KernelSpec& k, const char* who) {
    if (k.base.size() != 1) throw InputError(std::string(who) + ": expected exactly one base metric");
    return k.base.front();
}

const MetricSpec& only_child(const MetricSpec& m, const char* who) {
    if (m.children.size() != 1) throw InputError(std::string(who) + ": expected exactly one base metric");
    return m.children.front();
}

}  // namespace

MetricSpec MetricSpec::euclidean() { return MetricSpec{MetricKind::euclidean, 1.0, {}}; }
MetricSpec MetricSpec::normalized_euclidean() {
    return MetricSpec{MetricKind::normalized_euclidean, 1.0, {}};
}
MetricSpec MetricSpec::power(MetricSpec base, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw InputError("power metric: exponent must lie in (0, 1]");
    return MetricSpec{MetricKind::power, a, {std::move(base)}};
}
MetricSpec MetricSpec::bounded(MetricSpec base) {
    return MetricSpec{MetricKind::bounded, 1.0, {std::move(base)}};
}
MetricSpec MetricSpec::exp_complement(MetricSpec base) {
    return MetricSpec{MetricKind::exp_complement, 1.0, {std::move(base)}};
}

KernelSpec KernelSpec::fbm(double a, bool halved) {
    require_unit_interval_open(a, "fbm");
    KernelSpec k;
    k.kind = KernelKind::fbm;
    k.a = a;
    k.halved = halved;
    return k;
}
KernelSpec KernelSpec::exp_of_metric(MetricSpec base, double t) {
    require_positive(t, "exp_of_metric");
    KernelSpec k;
    k.kind = KernelKind::exp_of_metric;
    k.t = t;
    k.base.push_back(std::move(base));
    return k;
}
KernelSpec KernelSpec::cauchy_of_metric(MetricSpec base, double t) {
    require_positive(t, "cauchy_of_metric");
    KernelSpec k;
    k.kind = KernelKind::cauchy_of_metric;
    k.t = t;
    k.base.push_back(std::move(base));
    return k;
}
KernelSpec KernelSpec::normalized_euclidean_similarity() {
    KernelSpec k;
    k.kind = KernelKind::normalized_euclidean_similarity;
    return k;
}
KernelSpec KernelSpec::sphere_similarity(double a) {
    require_unit_interval_open(a, "sphere_similarity");
    KernelSpec k;
    k.kind = KernelKind::sphere_similarity;
    k.a = a;
    return k;
}
KernelSpec KernelSpec::sum(std::vector<KernelSpec> children) {
    KernelSpec k;
    k.kind = KernelKind::sum;
    k.children = std::move(children);
    return k;
}
KernelSpec KernelSpec::product(std::vector<KernelSpec> children) {
    KernelSpec k;
    k.kind = KernelKind::product;
    k.children = std::move(children);
    return k;
}
KernelSpec KernelSpec::scale(KernelSpec child, double factor) {
    if (!(factor > 0.0)) throw InputError("scale: factor must be > 0");
    KernelSpec k;
    k.kind = KernelKind::scale;
    k.factor = factor;
    k.children.push_back(std::move(child));
    return k;
}
KernelSpec KernelSpec::exp_of_kernel(KernelSpec child) {
    KernelSpec k;
    k.kind = KernelKind::exp_of_kernel;
    k.children.push_back(std::move(child));
    return k;
}

std::string to_string(MetricKind k) {
    switch (k) {
        case MetricKind::euclidean: return "euclidean";
        case MetricKind::power: return "power";
        case MetricKind::bounded: return "bounded";
        case MetricKind::exp_complement: return "exp_complement";
        case MetricKind::normalized_euclidean: return "normalized_euclidean";
    }
    return "?";
}

std::string to_string(KernelKind k) {
    switch (k) {
        case KernelKind::fbm: return "fbm";
        case KernelKind::exp_of_metric: return "exp_of_metric";
        case KernelKind::cauchy_of_metric: return "cauchy_of_metric";
        case KernelKind::normalized_euclidean_similarity: return "normalized_euclidean_similarity";
        case KernelKind::sphere_similarity: return "sphere_similarity";
        case KernelKind::sum: return "sum";
        case KernelKind::product: return "product";
        case KernelKind::scale: return "scale";
        case KernelKind::exp_of_kernel: return "exp";
    }
    return "?";
}

double eval(const MetricSpec& spec, const Point& x, const Point& y) {
    switch (spec.kind) {
        case MetricKind::euclidean:
            return distance(x, y);
        case MetricKind::power:
            return power_transform(eval(only_child(spec, "power"), x, y), spec.a);
        case MetricKind::bounded:
            return bounded_transform(eval(only_child(spec, "bounded"), x, y));
        case MetricKind::exp_complement:
            return -std::expm1(-eval(only_child(spec, "exp_complement"), x, y));
        case MetricKind::normalized_euclidean:
            return normalized_euclidean(x, y).D;
    }
    throw InputError("eval: unknown metric kind");
}

double eval(const KernelSpec& spec, const Point& x, const Point& y) {
    switch (spec.kind) {
        case KernelKind::fbm:
            return fbm_kernel(x, y, spec.a, spec.halved);
        case KernelKind::exp_of_metric:
            return exp_similarity(eval(only_base(spec, "exp_of_metric"), x, y), spec.t);
        case KernelKind::cauchy_of_metric:
            return cauchy_similarity(eval(only_base(spec, "cauchy_of_metric"), x, y), spec.t);
        case KernelKind::normalized_euclidean_similarity:
            return normalized_euclidean(x, y).S;
        case KernelKind::sphere_similarity:
            return sphere_similarity(x, y, spec.a);
        case KernelKind::sum: {
            double s = 0.0;
            for (const auto& c : spec.children) s += eval(c, x, y);
            return s;
        }
        case KernelKind::product: {
            double p = 1.0;
            for (const auto& c : spec.children) p *= eval(c, x, y);
            return p;
        }
        case KernelKind::scale: {
            if (spec.children.size() != 1) throw InputError("scale: expected exactly one child");
            if (!(spec.factor > 0.0)) throw InputError("scale: factor must be > 0");
            return spec.factor * eval(spec.children.front(), x, y);
        }
        case KernelKind::exp_of_kernel: {
            if (spec.children.size() != 1) throw InputError("exp: expected exactly one child");
            return std::exp(eval(spec.children.front(), x, y));
        }
    }
    throw InputError("eval: unknown kernel kind");
}

double fbm_kernel(const Point& x, const Point& y, double a, bool halved) {
    require_unit_interval_open(a, "fbm_kernel");
    if (x.dim() != y.dim()) throw InputError("fbm_kernel: dimension mismatch");
    const double v = std::pow(x.norm(), 2.0 * a) + std::pow(y.norm(), 2.0 * a) -
                     std::pow(distance(x, y), 2.0 * a);
    return halved ? 0.5 * v : v;
}

double induced_metric_from_values(double kxx, double kyy, double kxy) {
    double r = kxx + kyy - 2.0 * kxy;
    if (r < -1e-12)
        throw InputError("induced_metric: radicand " + std::to_string(r) +
                         " below -1e-12; kernel is not positive definite on this pair");
    if (r < 0.0) r = 0.0;
    return std::sqrt(r);
}

double induced_metric(const KernelSpec& k, const Point& x, const Point& y) {
    // In-scope kernels are real-valued, so Re k(x,y) is k(x,y) itself.
    return induced_metric_from_values(eval(k, x, x), eval(k, y, y), eval(k, x, y));
}

double exp_similarity(double d, double t) {
    require_nonneg(d, "exp_similarity");
    require_positive(t, "exp_similarity");
    return std::exp(-t * d);
}

double cauchy_similarity(double d, double t) {
    require_nonneg(d, "cauchy_similarity");
    require_positive(t, "cauchy_similarity");
    return 1.0 / (1.0 + t * d);
}

double laplace_identity_residual(double d, double t, const QuadratureConfig& quad) {
    require_nonneg(d, "laplace_identity_residual");
    require_positive(t, "laplace_identity_residual");
    const double closed = 1.0 / (1.0 + t * d);
    // Tail beyond U is below e^{-U} <= abs_tol / 2.
    const double upper = -std::log(0.5 * quad.abs_tol);
    QuadratureConfig cfg = quad;
    cfg.abs_tol = 0.5 * quad.abs_tol;
    const double integral =
        integrate([&](double u) { return std::exp(-u * t * d) * std::exp(-u); }, 0.0, upper, cfg);
    return std::abs(closed - integral);
}

double subordination_power(double z, double a, const QuadratureConfig& quad) {
    if (!(z > 0.0)) throw InputError("subordination_power: z must be > 0");
    require_unit_interval_open(a, "subordination_power");

    const double prefactor = a / std::tgamma(1.0 - a);
    const double tol = quad.abs_tol;

    // Dyadic tail windows [2^k, 2^{k+1}] until the remaining tail integral
    // bound 2^{-(k+1)a} / Gamma(1-a) falls below tol / 10.
    int windows = 0;
    while (prefactor * std::pow(2.0, -(windows + 1) * a) / a > 0.1 * tol && windows < 4096)
        ++windows;

    // Near t = 0 the substitution u = t^{1-a} removes the t^{-a-1} singularity:
    // the integrand becomes (1 - e^{-z t}) / ((1-a) t) with t = u^{1/(1-a)}.
    const double power = 1.0 / (1.0 - a);
    auto singular_part = [&](double u) {
        const double tt = std::pow(u, power);
        if (tt <= 0.0) return z / (1.0 - a);  // limit as u -> 0
        return -std::expm1(-z * tt) / tt / (1.0 - a);
    };

    QuadratureConfig cfg = quad;
    cfg.abs_tol = 0.4 * tol / prefactor;
    double total;
    try {
        total = integrate(singular_part, 0.0, 1.0, cfg);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(
            "subordination_power: quadrature failed on the singular half (split point t = 1): " +
                std::string(e.what()),
            e.residual);
    }

    auto plain = [&](double tt) { return -std::expm1(-z * tt) * std::pow(tt, -a - 1.0); };
    QuadratureConfig wincfg = quad;
    wincfg.abs_tol = 0.4 * tol / prefactor / std::max(1, windows);
    double lo = 1.0;
    for (int k = 0; k < windows; ++k) {
        total += integrate(plain, lo, 2.0 * lo, wincfg);
        lo *= 2.0;
    }
    return prefactor * total;
}

NormalizedEuclidean normalized_euclidean(const Point& x, const Point& y) {
    if (x.dim() != y.dim()) throw InputError("normalized_euclidean: dimension mismatch");
    if (x == y) {
        const bool at_origin = x.norm() == 0.0;
        return NormalizedEuclidean{0.0, at_origin ? 0.0 : 1.0};
    }
    const double denom = x.norm() + y.norm();  // > 0 since x != y
    const double D = distance(x, y) / denom;
    return NormalizedEuclidean{D, 1.0 - D};
}

double bounded_transform(double d) {
    require_nonneg(d, "bounded_transform");
    return d / (1.0 + d);
}

double power_transform(double d, double a) {
    require_nonneg(d, "power_transform");
    if (!(a > 0.0 && a <= 1.0)) throw InputError("power_transform: exponent must lie in (0, 1]");
    return a == 1.0 ? d : std::pow(d, a);
}

double sphere_radius(double a) {
    require_unit_interval_open(a, "sphere_radius");
    return std::pow(0.5, 1.0 / a);
}

double sphere_similarity(const Point& x, const Point& y, double a) {
    const double r = sphere_radius(a);
    if (x.dim() != y.dim()) throw InputError("sphere_similarity: dimension mismatch");
    for (const Point* p : {&x, &y}) {
        const double n = p->norm();
        if (std::abs(n - r) > 1e-9)
            throw InputError("sphere_similarity: point norm " + std::to_string(n) +
                             " is off the required sphere of radius " + std::to_string(r));
    }
    return 1.0 - std::pow(distance(x, y), a);
}

SymMatrix gram(const std::vector<Point>& points, const KernelSpec& k) {
    const std::size_t n = points.size();
    SymMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g.set(i, j, eval(k, points[i], points[j]));
    return g;
}

SymMatrix distance_matrix(const std::vector<Point>& points, const MetricSpec& d) {
    const std::size_t n = points.size();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, eval(d, points[i], points[j]));
    return m;
}

}  // namespace simet

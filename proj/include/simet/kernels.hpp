#pragma once

#include <string>
#include <vector>

#include "simet/linalg.hpp"
#include "simet/point.hpp"
#include "simet/quadrature.hpp"

namespace simet {

// ---------------------------------------------------------------------------
// Closed spec descriptors: a kernel or metric as (kind + parameters), so it
// can travel through files and reports and be evaluated on demand.
// ---------------------------------------------------------------------------

enum class MetricKind { euclidean, power, bounded, exp_complement, normalized_euclidean };

struct MetricSpec {
    MetricKind kind = MetricKind::euclidean;
    double a = 1.0;                    // power exponent, in (0, 1]
    std::vector<MetricSpec> children;  // transforms wrap exactly one base

    static MetricSpec euclidean();
    static MetricSpec normalized_euclidean();
    static MetricSpec power(MetricSpec base, double a);
    static MetricSpec bounded(MetricSpec base);
    static MetricSpec exp_complement(MetricSpec base);
};

enum class KernelKind {
    fbm,
    exp_of_metric,
    cauchy_of_metric,
    normalized_euclidean_similarity,
    sphere_similarity,
    sum,
    product,
    scale,
    exp_of_kernel
};

struct KernelSpec {
    KernelKind kind = KernelKind::fbm;
    double a = 0.5;       // exponent for fbm / sphere_similarity, in (0, 1)
    double t = 1.0;       // rate for the metric transforms, > 0
    bool halved = false;  // fbm covariance normalization
    double factor = 1.0;  // scale combinator, > 0
    std::vector<KernelSpec> children;
    std::vector<MetricSpec> base;  // exactly one for the *_of_metric kinds

    static KernelSpec fbm(double a, bool halved = false);
    static KernelSpec exp_of_metric(MetricSpec base, double t);
    static KernelSpec cauchy_of_metric(MetricSpec base, double t);
    static KernelSpec normalized_euclidean_similarity();
    static KernelSpec sphere_similarity(double a);
    static KernelSpec sum(std::vector<KernelSpec> children);
    static KernelSpec product(std::vector<KernelSpec> children);
    static KernelSpec scale(KernelSpec child, double factor);
    static KernelSpec exp_of_kernel(KernelSpec child);
};

std::string to_string(MetricKind k);
std::string to_string(KernelKind k);

double eval(const MetricSpec& spec, const Point& x, const Point& y);
double eval(const KernelSpec& spec, const Point& x, const Point& y);

// ---------------------------------------------------------------------------
// Named operations.
// ---------------------------------------------------------------------------

/// ||x||^{2a} + ||y||^{2a} - ||x-y||^{2a}, the fractional-Brownian-motion
/// covariance shape with Hurst parameter a; `halved` multiplies by 1/2.
double fbm_kernel(const Point& x, const Point& y, double a, bool halved);

/// sqrt(k(x,x) + k(y,y) - 2 Re k(x,y)). A radicand within -1e-12 of zero is
/// clamped to zero; anything lower signals a non-PSD kernel and throws.
double induced_metric(const KernelSpec& k, const Point& x, const Point& y);

/// Value-level form of the same, used by the spec version and directly
/// testable on arbitrary triples.
double induced_metric_from_values(double kxx, double kyy, double kxy);

/// e^{-t d}, in (0, 1] for d >= 0, t > 0.
double exp_similarity(double d, double t);

/// 1 / (1 + t d), in (0, 1] for d >= 0, t > 0.
double cauchy_similarity(double d, double t);

/// | 1/(1+td) - integral_0^inf e^{-utd} e^{-u} du |, the integral evaluated
/// by quadrature with the tail truncated where e^{-U} <= abs_tol / 2.
double laplace_identity_residual(double d, double t, const QuadratureConfig& quad = {});

/// The subordination integral a/Gamma(1-a) * integral_0^inf (1-e^{-tz}) t^{-a-1} dt,
/// numerically equal to z^a. The singular half [0,1] is integrated after the
/// substitution u = t^{1-a}; the tail is summed over dyadic windows [2^k, 2^{k+1}]
/// until the remaining tail bound drops below abs_tol / 10.
double subordination_power(double z, double a, const QuadratureConfig& quad = {});

struct NormalizedEuclidean {
    double D;  // ||x-y|| / (||x|| + ||y||), 0 at x = y
    double S;  // complement similarity; 0 at x = y = 0
};

/// Normalized Euclidean metric and its similarity. D + S = 1 exactly
/// whenever ||x|| + ||y|| > 0.
NormalizedEuclidean normalized_euclidean(const Point& x, const Point& y);

/// d / (1 + d), a normalized metric when d is a metric.
double bounded_transform(double d);

/// d^a for a in (0, 1]; a = 1 is the identity.
double power_transform(double d, double a);

/// 1 - ||x-y||^a on the sphere of radius (1/2)^{1/a}. Rejects points whose
/// norm is farther than 1e-9 from the sphere, reporting the measured radius.
double sphere_similarity(const Point& x, const Point& y, double a);

/// Radius of the sphere on which sphere_similarity lives.
double sphere_radius(double a);

/// Gram matrix G[i][j] = k(p_i, p_j); the upper triangle is computed and
/// mirrored, so the result is exactly symmetric.
SymMatrix gram(const std::vector<Point>& points, const KernelSpec& k);

/// Pairwise distance matrix under a metric spec; zero diagonal by evaluation.
SymMatrix distance_matrix(const std::vector<Point>& points, const MetricSpec& d);

}  // namespace simet

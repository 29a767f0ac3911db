#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "simet/kernels.hpp"
#include "simet/linalg.hpp"
#include "simet/point.hpp"

namespace simet {

// ---------------------------------------------------------------------------
// Finite-sample axiom checking. A check never proves an axiom; it either
// finds a concrete violating tuple or reports the worst margin it saw.
// ---------------------------------------------------------------------------

/// A finite sample together with a pairwise value (metric or similarity)
/// evaluated lazily by index. `same` marks index pairs known to be the same
/// underlying element (defaults to i == j).
struct PairwiseSample {
    std::size_t size = 0;
    std::function<double(std::size_t, std::size_t)> value;
    std::function<bool(std::size_t, std::size_t)> same;
    std::string description;

    PairwiseSample(std::size_t n, std::function<double(std::size_t, std::size_t)> v,
                   std::string desc = "");
};

enum class Verdict { pass, fail, consistent };

std::string to_string(Verdict v);

struct Witness {
    std::vector<std::size_t> indices;  // sample indices of the violating tuple
    std::vector<double> values;        // the pairwise values (or coefficients) involved
    std::string detail;
};

/// Margins are signed slack: nonnegative means satisfied with that much
/// room, negative means violated by that much. Pass thresholds are -slack
/// where slack = tol * max(1, magnitude of the compared values).
struct AxiomResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    double margin = 0.0;
    std::optional<Witness> witness;
};

struct SpectralSummary {
    double min_eigenvalue = 0.0;
    int positive_count = 0;
};

struct ValidationReport {
    std::string subject;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    double tol = 0.0;
    std::string rng = "mt19937_64/u53";
    std::vector<AxiomResult> axioms;
    std::optional<SpectralSummary> spectral;

    bool all_pass() const;
    const AxiomResult* find(const std::string& name) const;
};

/// Default slack factor for axiom comparisons.
inline constexpr double kAxiomTol = 1e-12;

/// Metric axioms: symmetry, d(x,x) = 0, positivity between distinct
/// elements, triangle inequality over all sampled triples.
ValidationReport check_metric(const PairwiseSample& d, double tol, std::uint64_t seed = 0);

/// Metric axioms plus range [0, 1].
ValidationReport check_normalized(const PairwiseSample& d, double tol, std::uint64_t seed = 0);

/// The five-condition similarity-metric axiom set: symmetry, s(x,x) >= 0,
/// s(x,x) >= s(x,y), s(x,y) + s(y,z) <= s(x,z) + s(y,y), and the
/// identity biconditional. The forward direction of the biconditional can
/// only be refuted by sampling, so it reports `consistent` when unviolated.
ValidationReport check_similarity_chen(const PairwiseSample& s, double tol, std::uint64_t seed = 0);

/// The normalized similarity axiom set: range [0, 1] (both sides), symmetry,
/// s(x,x) = 1, s(x,z) + s(z,y) <= s(x,y) + 1, s(x,y) = 1 iff x = y.
ValidationReport check_similarity_normalized(const PairwiseSample& s, double tol,
                                             std::uint64_t seed = 0);

/// Assembles the Gram matrix of the sample values and reports min eigenvalue
/// and PSD verdict; a failure carries the offending direction as witness.
ValidationReport check_pd(const PairwiseSample& k, double tol, std::uint64_t seed = 0);

/// Distance matrix screening: exact sum-zero CND test plus the
/// one-positive-eigenvalue necessary condition.
ValidationReport check_cnd(const PairwiseSample& d, double tol, std::uint64_t seed = 0);

/// Re-evaluates a failing axiom's witness from scratch against the sample;
/// returns the margin the witness exhibits now (no whole-sample scan).
/// Rechecking a result without a witness is an error.
double recheck_witness(const PairwiseSample& sample, const AxiomResult& axiom, double tol);

/// Soundness probe: recomputes the witness margin and confirms it (a) still
/// violates the axiom's pass rule at the report's tolerance and (b) is at
/// least as bad as reported, up to a 1e-12 drift allowance.
bool witness_still_violates(const PairwiseSample& sample, const AxiomResult& axiom, double tol);

// ---------------------------------------------------------------------------
// Deterministic sampling. Uniform doubles come from the top 53 bits of
// mt19937_64 output, so streams are identical across platforms.
// ---------------------------------------------------------------------------

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi);
    std::uint64_t integer(std::uint64_t bound);  // [0, bound)

private:
    std::mt19937_64 gen_;
};

std::vector<Point> sample_points(std::uint64_t seed, std::size_t count, std::size_t dim,
                                 bool complex_coords, double lo = -2.0, double hi = 2.0);

/// Convenience wrappers binding specs to point samples.
PairwiseSample metric_sample(const std::vector<Point>& points, const MetricSpec& d,
                             std::string description);
PairwiseSample kernel_sample(const std::vector<Point>& points, const KernelSpec& k,
                             std::string description);

}  // namespace simet

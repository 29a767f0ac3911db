#include "simet/validators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace simet {

namespace {

constexpr std::size_t kExhaustiveLimit = 32;
constexpr std::size_t kSampledTriples = 32768;

struct ValueTable {
    std::size_t n;
    std::vector<double> v;  // all ordered pairs

    explicit ValueTable(const PairwiseSample& s) : n(s.size), v(s.size * s.size) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = s.value(i, j);
    }
    double operator()(std::size_t i, std::size_t j) const { return v[i * n + j]; }
    double scale() const {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return std::max(1.0, m);
    }
};

/// Visits every ordered triple when the sample is small, or a seeded random
/// subset when it is not. Deterministic either way.
template <typename F>
void for_each_triple(std::size_t n, std::uint64_t seed, F&& visit) {
    if (n <= kExhaustiveLimit) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) visit(i, j, k);
        return;
    }
    SampleRng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (std::size_t c = 0; c < kSampledTriples; ++c)
        visit(rng.integer(n), rng.integer(n), rng.integer(n));
}

struct MarginTracker {
    double margin = std::numeric_limits<double>::infinity();
    Witness witness;
    bool has_witness = false;

    void offer(double m, std::initializer_list<std::size_t> idx,
               std::initializer_list<double> vals) {
        if (m < margin) {
            margin = m;
            witness.indices.assign(idx);
            witness.values.assign(vals);
            has_witness = true;
        }
    }
};

AxiomResult finish(const std::string& name, MarginTracker& t, double threshold,
                   bool strict = false, bool consistent_on_pass = false) {
    AxiomResult r;
    r.name = name;
    if (!t.has_witness) {  // nothing to compare (e.g. single-element sample)
        r.verdict = consistent_on_pass ? Verdict::consistent : Verdict::pass;
        r.margin = 0.0;
        return r;
    }
    r.margin = t.margin;
    const bool ok = strict ? t.margin > threshold : t.margin >= threshold;
    r.verdict = ok ? (consistent_on_pass ? Verdict::consistent : Verdict::pass) : Verdict::fail;
    if (r.verdict == Verdict::fail) r.witness = t.witness;
    return r;
}

ValidationReport base_report(const PairwiseSample& s, double tol, std::uint64_t seed) {
    ValidationReport rep;
    rep.subject = s.description;
    rep.seed = seed;
    rep.n = s.size;
    rep.tol = tol;
    return rep;
}

void append_metric_axioms(ValidationReport& rep, const ValueTable& V, const PairwiseSample& s,
                          double slack, std::uint64_t seed) {
    const std::size_t n = V.n;

    MarginTracker sym;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            sym.offer(-std::abs(V(i, j) - V(j, i)), {i, j}, {V(i, j), V(j, i)});
    rep.axioms.push_back(finish("symmetry", sym, -slack));

    MarginTracker ident;
    for (std::size_t i = 0; i < n; ++i) ident.offer(-std::abs(V(i, i)), {i}, {V(i, i)});
    rep.axioms.push_back(finish("identity", ident, -slack));

    MarginTracker pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !s.same(i, j)) pos.offer(V(i, j), {i, j}, {V(i, j)});
    rep.axioms.push_back(finish("positivity", pos, 0.0, /*strict=*/true));

    MarginTracker tri;
    for_each_triple(n, seed, [&](std::size_t i, std::size_t j, std::size_t k) {
        tri.offer(V(i, k) + V(j, k) - V(i, j), {i, j, k}, {V(i, j), V(i, k), V(j, k)});
    });
    rep.axioms.push_back(finish("triangle", tri, -slack));
}

void append_range_axioms(ValidationReport& rep, const ValueTable& V, double slack) {
    MarginTracker lower, upper;
    for (std::size_t i = 0; i < V.n; ++i)
        for (std::size_t j = 0; j < V.n; ++j) {
            lower.offer(V(i, j), {i, j}, {V(i, j)});
            upper.offer(1.0 - V(i, j), {i, j}, {V(i, j)});
        }
    rep.axioms.push_back(finish("range_lower", lower, -slack));
    rep.axioms.push_back(finish("range_upper", upper, -slack));
}

SymMatrix upper_triangle_matrix(const PairwiseSample& s) {
    SymMatrix m(s.size);
    for (std::size_t i = 0; i < s.size; ++i)
        for (std::size_t j = i; j < s.size; ++j) m.set(i, j, s.value(i, j));
    return m;
}

/// Shared shape of the two identity biconditionals. `deviation(i, j)` must be
/// zero exactly when the equality side of the biconditional holds for the
/// pair. Forward violations (distinct pair, deviation within slack) carry the
/// deviation as margin; backward violations (same element, deviation beyond
/// slack) carry its negation, so a fail margin is always <= slack.
template <typename Dev, typename Vals>
AxiomResult biconditional_axiom(const ValueTable& V, const PairwiseSample& s, double slack,
                                Dev&& deviation, Vals&& values) {
    AxiomResult r;
    r.name = "identity_biconditional";
    double forward = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < V.n; ++i)
        for (std::size_t j = 0; j < V.n; ++j) {
            if (i == j) continue;
            const double dev = deviation(i, j);
            if (s.same(i, j)) {
                if (dev > slack) {
                    r.verdict = Verdict::fail;
                    r.margin = -dev;
                    r.witness = Witness{{i, j}, values(i, j), "same element, values differ"};
                    return r;
                }
            } else if (dev < forward) {
                forward = dev;
                r.witness = Witness{{i, j}, values(i, j), "distinct elements, values coincide"};
            }
        }
    if (!std::isfinite(forward)) {  // no distinct pairs in the sample
        r.verdict = Verdict::consistent;
        r.margin = 0.0;
        r.witness.reset();
        return r;
    }
    r.margin = forward;
    if (forward > slack) {
        r.verdict = Verdict::consistent;
        r.witness.reset();
    } else {
        r.verdict = Verdict::fail;
    }
    return r;
}

}  // namespace

PairwiseSample::PairwiseSample(std::size_t n, std::function<double(std::size_t, std::size_t)> v,
                               std::string desc)
    : size(n), value(std::move(v)), same([](std::size_t i, std::size_t j) { return i == j; }),
      description(std::move(desc)) {
    if (n == 0) throw InputError("PairwiseSample: sample must be nonempty");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::consistent: return "consistent";
    }
    return "?";
}

bool ValidationReport::all_pass() const {
    for (const auto& a : axioms)
        if (a.verdict == Verdict::fail) return false;
    return true;
}

const AxiomResult* ValidationReport::find(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name) return &a;
    return nullptr;
}

ValidationReport check_metric(const PairwiseSample& d, double tol, std::uint64_t seed) {
    ValidationReport rep = base_report(d, tol, seed);
    const ValueTable V(d);
    append_metric_axioms(rep, V, d, tol * V.scale(), seed);
    return rep;
}

ValidationReport check_normalized(const PairwiseSample& d, double tol, std::uint64_t seed) {
    ValidationReport rep = base_report(d, tol, seed);
    const ValueTable V(d);
    const double slack = tol * V.scale();
    append_metric_axioms(rep, V, d, slack, seed);
    append_range_axioms(rep, V, slack);
    return rep;
}

ValidationReport check_similarity_chen(const PairwiseSample& s, double tol, std::uint64_t seed) {
    ValidationReport rep = base_report(s, tol, seed);
    const ValueTable V(s);
    const std::size_t n = V.n;
    const double slack = tol * V.scale();

    MarginTracker sym;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            sym.offer(-std::abs(V(i, j) - V(j, i)), {i, j}, {V(i, j), V(j, i)});
    rep.axioms.push_back(finish("symmetry", sym, -slack));

    MarginTracker self_nonneg;
    for (std::size_t i = 0; i < n; ++i) self_nonneg.offer(V(i, i), {i}, {V(i, i)});
    rep.axioms.push_back(finish("self_nonnegative", self_nonneg, -slack));

    MarginTracker dominate;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) dominate.offer(V(i, i) - V(i, j), {i, j}, {V(i, i), V(i, j)});
    rep.axioms.push_back(finish("self_dominates", dominate, -slack));

    // s(x,y) + s(y,z) <= s(x,z) + s(y,y), indices stored as (x, y, z).
    MarginTracker tri;
    for_each_triple(n, seed, [&](std::size_t x, std::size_t y, std::size_t z) {
        tri.offer(V(x, z) + V(y, y) - V(x, y) - V(y, z), {x, y, z},
                  {V(x, y), V(y, z), V(x, z), V(y, y)});
    });
    rep.axioms.push_back(finish("similarity_triangle_chen", tri, -slack));

    // Biconditional: the backward direction (same element => all three values
    // equal) is exact; the forward direction can only be refuted by sampling,
    // so a clean run reports `consistent`, not `pass`.
    rep.axioms.push_back(biconditional_axiom(
        V, s, slack,
        [&](std::size_t i, std::size_t j) {
            return std::max(std::abs(V(i, i) - V(i, j)), std::abs(V(j, j) - V(i, j)));
        },
        [&](std::size_t i, std::size_t j) {
            return std::vector<double>{V(i, i), V(j, j), V(i, j)};
        }));
    return rep;
}

ValidationReport check_similarity_normalized(const PairwiseSample& s, double tol,
                                             std::uint64_t seed) {
    ValidationReport rep = base_report(s, tol, seed);
    const ValueTable V(s);
    const std::size_t n = V.n;
    const double slack = tol * V.scale();

    append_range_axioms(rep, V, slack);

    MarginTracker sym;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            sym.offer(-std::abs(V(i, j) - V(j, i)), {i, j}, {V(i, j), V(j, i)});
    rep.axioms.push_back(finish("symmetry", sym, -slack));

    MarginTracker self_one;
    for (std::size_t i = 0; i < n; ++i) self_one.offer(-std::abs(V(i, i) - 1.0), {i}, {V(i, i)});
    rep.axioms.push_back(finish("self_one", self_one, -slack));

    // s(x,z) + s(z,y) <= s(x,y) + 1, indices stored as (x, y, z).
    MarginTracker tri;
    for_each_triple(n, seed, [&](std::size_t x, std::size_t y, std::size_t z) {
        tri.offer(V(x, y) + 1.0 - V(x, z) - V(z, y), {x, y, z},
                  {V(x, y), V(x, z), V(z, y)});
    });
    rep.axioms.push_back(finish("similarity_triangle", tri, -slack));

    // s(x,y) = 1 iff x = y; forward direction sampled, hence `consistent`.
    rep.axioms.push_back(biconditional_axiom(
        V, s, slack,
        [&](std::size_t i, std::size_t j) { return std::abs(V(i, j) - 1.0); },
        [&](std::size_t i, std::size_t j) { return std::vector<double>{V(i, j)}; }));
    return rep;
}

ValidationReport check_pd(const PairwiseSample& k, double tol, std::uint64_t seed) {
    ValidationReport rep = base_report(k, tol, seed);
    const SymMatrix g = upper_triangle_matrix(k);
    const Spectrum spec = eigvalsh(g);
    const double scale = std::max(1.0, spec.max_abs_eigenvalue());
    const double cut = tol * scale;

    int pos = 0;
    for (double v : spec.eigenvalues)
        if (v > cut) ++pos;
    rep.spectral = SpectralSummary{spec.min_eigenvalue(), pos};

    AxiomResult psd;
    psd.name = "positive_semidefinite";
    psd.margin = spec.min_eigenvalue();
    psd.verdict = spec.min_eigenvalue() >= -cut ? Verdict::pass : Verdict::fail;
    if (psd.verdict == Verdict::fail) {
        Witness w;
        const std::size_t n = g.size();
        for (std::size_t i = 0; i < n; ++i) w.values.push_back(spec.eigenvector(i, 0, n));
        w.detail = "coefficients c with sum_ij c_i c_j k(i,j) = " + std::to_string(psd.margin);
        psd.witness = w;
    }
    rep.axioms.push_back(std::move(psd));
    return rep;
}

ValidationReport check_cnd(const PairwiseSample& d, double tol, std::uint64_t seed) {
    ValidationReport rep = base_report(d, tol, seed);
    const SymMatrix m = upper_triangle_matrix(d);
    const CndVerdict cnd = is_cnd(m, tol);
    const NegativeTypeVerdict nt = negative_type_necessary(m, tol);
    const Spectrum spec = eigvalsh(m);
    rep.spectral = SpectralSummary{spec.min_eigenvalue(), nt.positive_count};

    AxiomResult c;
    c.name = "conditionally_negative_definite";
    c.margin = cnd.reduced_min_eigenvalue;
    c.verdict = cnd.cnd ? Verdict::pass : Verdict::fail;
    if (!cnd.cnd) {
        Witness w;
        w.values = cnd.witness;
        w.detail = "sum-zero c with c^T d c = " + std::to_string(cnd.violation);
        c.witness = w;
    }
    rep.axioms.push_back(std::move(c));

    AxiomResult one;
    one.name = "one_positive_eigenvalue";
    one.margin = -std::abs(static_cast<double>(nt.positive_count) - 1.0);
    one.verdict = nt.passes ? Verdict::pass : Verdict::fail;
    if (!nt.passes) {
        Witness w;
        w.values.assign(nt.eigenvalues.begin(), nt.eigenvalues.end());
        w.detail = "eigenvalues with " + std::to_string(nt.positive_count) + " positive";
        one.witness = w;
    }
    rep.axioms.push_back(std::move(one));
    return rep;
}

double recheck_witness(const PairwiseSample& sample, const AxiomResult& axiom, double tol) {
    if (!axiom.witness) throw InputError("recheck_witness: axiom has no witness");
    const auto& idx = axiom.witness->indices;
    auto V = [&](std::size_t i, std::size_t j) { return sample.value(i, j); };

    if (axiom.name == "symmetry") return -std::abs(V(idx[0], idx[1]) - V(idx[1], idx[0]));
    if (axiom.name == "identity") return -std::abs(V(idx[0], idx[0]));
    if (axiom.name == "positivity") return V(idx[0], idx[1]);
    if (axiom.name == "triangle")
        return V(idx[0], idx[2]) + V(idx[1], idx[2]) - V(idx[0], idx[1]);
    if (axiom.name == "range_lower") return V(idx[0], idx[1]);
    if (axiom.name == "range_upper") return 1.0 - V(idx[0], idx[1]);
    if (axiom.name == "self_nonnegative") return V(idx[0], idx[0]);
    if (axiom.name == "self_dominates") return V(idx[0], idx[0]) - V(idx[0], idx[1]);
    if (axiom.name == "similarity_triangle_chen")
        return V(idx[0], idx[2]) + V(idx[1], idx[1]) - V(idx[0], idx[1]) - V(idx[1], idx[2]);
    if (axiom.name == "self_one") return -std::abs(V(idx[0], idx[0]) - 1.0);
    if (axiom.name == "similarity_triangle")
        return V(idx[0], idx[1]) + 1.0 - V(idx[0], idx[2]) - V(idx[2], idx[1]);
    if (axiom.name == "identity_biconditional") {
        if (idx.size() != 2) throw InputError("recheck_witness: malformed biconditional witness");
        const double dev =
            axiom.witness->values.size() == 3
                ? std::max(std::abs(V(idx[0], idx[0]) - V(idx[0], idx[1])),
                           std::abs(V(idx[1], idx[1]) - V(idx[0], idx[1])))
                : std::abs(V(idx[0], idx[1]) - 1.0);
        return sample.same(idx[0], idx[1]) ? -dev : dev;
    }
    if (axiom.name == "positive_semidefinite" || axiom.name == "conditionally_negative_definite") {
        const auto& c = axiom.witness->values;
        double form = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) form += c[i] * c[j] * V(i, j);
        // PSD: the form is the violated quantity itself. CND: the violation is
        // a positive form, so the margin analogue is its negation.
        return axiom.name == "positive_semidefinite" ? form : -form;
    }
    if (axiom.name == "one_positive_eigenvalue") {
        SymMatrix m = upper_triangle_matrix(sample);
        const NegativeTypeVerdict nt = negative_type_necessary(m, tol);
        return -std::abs(static_cast<double>(nt.positive_count) - 1.0);
    }
    throw InputError("recheck_witness: unknown axiom '" + axiom.name + "'");
}

bool witness_still_violates(const PairwiseSample& sample, const AxiomResult& axiom, double tol) {
    const double rechecked = recheck_witness(sample, axiom, tol);
    if (rechecked > axiom.margin + 1e-12) return false;  // weaker than reported

    const ValueTable V(sample);
    const double slack = tol * V.scale();
    if (axiom.name == "positivity") return rechecked <= 0.0;
    if (axiom.name == "identity_biconditional") return rechecked <= slack;
    if (axiom.name == "one_positive_eigenvalue") return rechecked < 0.0;
    if (axiom.name == "positive_semidefinite" || axiom.name == "conditionally_negative_definite")
        return rechecked < 0.0;  // quadratic form on the wrong side of zero
    return rechecked < -slack;
}

double SampleRng::uniform(double lo, double hi) {
    const double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

std::uint64_t SampleRng::integer(std::uint64_t bound) {
    // Bias below 2^-53 for the bounds used here; acceptable for sampling.
    return static_cast<std::uint64_t>(uniform(0.0, static_cast<double>(bound)));
}

std::vector<Point> sample_points(std::uint64_t seed, std::size_t count, std::size_t dim,
                                 bool complex_coords, double lo, double hi) {
    SampleRng rng(seed);
    std::vector<Point> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::complex<double>> c(dim);
        for (auto& z : c)
            z = {rng.uniform(lo, hi), complex_coords ? rng.uniform(lo, hi) : 0.0};
        pts.emplace_back(std::move(c));
    }
    return pts;
}

PairwiseSample metric_sample(const std::vector<Point>& points, const MetricSpec& d,
                             std::string description) {
    PairwiseSample s(points.size(),
                     [points, d](std::size_t i, std::size_t j) { return eval(d, points[i], points[j]); },
                     std::move(description));
    s.same = [points](std::size_t i, std::size_t j) { return points[i] == points[j]; };
    return s;
}

PairwiseSample kernel_sample(const std::vector<Point>& points, const KernelSpec& k,
                             std::string description) {
    PairwiseSample s(points.size(),
                     [points, k](std::size_t i, std::size_t j) { return eval(k, points[i], points[j]); },
                     std::move(description));
    s.same = [points](std::size_t i, std::size_t j) { return points[i] == points[j]; };
    return s;
}

}  // namespace simet

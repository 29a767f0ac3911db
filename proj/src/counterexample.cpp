#include "simet/counterexample.hpp"

#include <cmath>
#include <sstream>

namespace simet {

namespace {

const double kExpected[5][5] = {{0, 1, 1, 1, 2},
                                {1, 0, 2, 2, 1},
                                {1, 2, 0, 2, 1},
                                {1, 2, 2, 0, 1},
                                {2, 1, 1, 1, 0}};

std::string matrix_to_text(const SymMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.size(); ++j) {
            out << (j ? "  " : " ") << m(i, j);
        }
        out << " ]\n";
    }
    return out.str();
}

}  // namespace

bool CounterexampleReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

CounterexampleReport run_counterexample(const std::vector<double>& exp_scales) {
    CounterexampleReport rep;
    rep.exp_scales = exp_scales;

    const auto fns = counterexample_functions();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j) rep.delta.set(i, j, sup_metric(fns[i], fns[j]));

    bool delta_ok = true;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (rep.delta(i, j) != kExpected[i][j]) delta_ok = false;
    rep.checks.push_back({"distance_matrix", delta_ok,
                          "sup-metric distances of x1..x5 match the documented integer matrix"});

    const Spectrum spec = eigvalsh(rep.delta);
    rep.eigenvalues = spec.eigenvalues;
    const double r7 = std::sqrt(7.0);
    const std::vector<double> expected_eigs{-2.0, -2.0, -2.0, 3.0 - r7, 3.0 + r7};
    bool eigs_ok = spec.eigenvalues.size() == 5;
    for (std::size_t i = 0; eigs_ok && i < 5; ++i)
        if (std::abs(spec.eigenvalues[i] - expected_eigs[i]) > 1e-9) eigs_ok = false;
    rep.checks.push_back(
        {"spectrum", eigs_ok, "eigenvalues are {-2 (x3), 3-sqrt(7), 3+sqrt(7)} within 1e-9"});

    const NegativeTypeVerdict nt = negative_type_necessary(rep.delta, kDefaultTol);
    rep.positive_count = nt.positive_count;
    rep.checks.push_back({"two_positive_eigenvalues", nt.positive_count == 2 && !nt.passes,
                          "two positive eigenvalues, so the one-positive-eigenvalue necessary "
                          "condition for negative type fails"});

    rep.cnd = is_cnd(rep.delta, kDefaultTol);
    bool witness_ok = !rep.cnd.cnd && rep.cnd.violation > kDefaultTol;
    rep.checks.push_back({"not_negative_definite", witness_ok,
                          "a sum-zero vector c gives c^T d c = " +
                              std::to_string(rep.cnd.violation) + " > 0"});

    bool exp_ok = !exp_scales.empty();
    for (double t : exp_scales) {
        SymMatrix s(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i; j < 5; ++j) s.set(i, j, std::exp(-t * rep.delta(i, j)));
        const double min_eig = eigvalsh(s).min_eigenvalue();
        rep.exp_min_eigenvalues.push_back(min_eig);
        if (!(min_eig <= -1e-8)) exp_ok = false;
        if (t == 1.0 && !(min_eig < -1e-6)) exp_ok = false;
    }
    rep.checks.push_back({"exp_similarity_not_psd", exp_ok,
                          "entrywise e^{-t d} keeps a negative eigenvalue at every tested t"});

    rep.graph_delta = bfs_distances(k23_graph());
    const bool graph_ok = rep.delta.equals_exactly(rep.graph_delta);
    rep.checks.push_back(
        {"graph_restatement", graph_ok,
         "K_{2,3} hop distances (order A,B,C,D,E) equal the function-space matrix exactly"});

    rep.convexity_equality =
        sup_metric(fns[0], fns[1]) + sup_metric(fns[1], fns[4]) == sup_metric(fns[0], fns[4]);
    rep.convexity_not_multiple = !differences_proportional(fns[0], fns[1], fns[1], fns[4]);
    rep.checks.push_back({"sup_norm_not_strictly_convex",
                          rep.convexity_equality && rep.convexity_not_multiple,
                          "d(x1,x2) + d(x2,x5) = d(x1,x5) exactly while x1-x2 is not a scalar "
                          "multiple of x2-x5"});

    const bool everything = rep.all_pass();
    rep.verdict = everything
                      ? "similarity metric 1 - D is not positive definite"
                      : "inconclusive: at least one pipeline check failed";
    rep.checks.push_back({"verdict", everything, rep.verdict});

    rep.notes = {
        "x5 = -x1 (support [0,1]): the unique support choice consistent with the distance "
        "pattern d(x1,x5) = 2, d(x2,x5) = 1",
        "hub nodes A and E of K_{2,3} are non-adjacent, so d(A,E) = 2; a listing with "
        "d(A,E) = 1 would contradict the distance matrix it accompanies",
    };
    return rep;
}

std::string render_text(const CounterexampleReport& rep) {
    std::ostringstream out;
    out << "distance matrix d(x_i, x_j) from the five step functions:\n"
        << matrix_to_text(rep.delta);
    out << "eigenvalues:";
    for (double v : rep.eigenvalues) out << " " << v;
    out << "\npositive eigenvalue count: " << rep.positive_count << "\n";
    out << "sum-zero witness value c^T d c = " << rep.cnd.violation << "\n";
    for (std::size_t i = 0; i < rep.exp_scales.size(); ++i)
        out << "min eigenvalue of exp(-" << rep.exp_scales[i]
            << " d): " << rep.exp_min_eigenvalues[i] << "\n";
    out << "graph distances (K_{2,3}, order A,B,C,D,E):\n" << matrix_to_text(rep.graph_delta);
    for (const auto& c : rep.checks)
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    out << "verdict: " << rep.verdict << "\n";
    return out.str();
}

}  // namespace simet

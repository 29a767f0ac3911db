#pragma once

#include <cstddef>
#include <vector>

#include "simet/error.hpp"

namespace simet {

/// Dense real symmetric matrix, row-major storage.
///
/// Construction symmetrizes its input by averaging mirror entries and records
/// the largest asymmetry it saw; asymmetry beyond 1e-12 (relative to the
/// largest entry magnitude, floored at 1) is rejected.
class SymMatrix {
public:
    /// n-by-n zero matrix.
    explicit SymMatrix(std::size_t n);

    /// From row-major entries; `rows.size()` must equal n*n.
    SymMatrix(std::size_t n, const std::vector<double>& entries);

    /// From nested rows, each of length n.
    explicit SymMatrix(const std::vector<std::vector<double>>& rows);

    static SymMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Sets both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double v);

    double trace() const;
    double frobenius_norm() const;
    double max_abs_entry() const;

    /// Largest |a_ij - a_ji| seen in the raw input before symmetrizing.
    double max_asymmetry() const { return asymmetry_; }

    const std::vector<double>& data() const { return data_; }

    /// Entrywise map f(a_ij); f must be symmetric-preserving (it is, entrywise).
    SymMatrix map(double (*f)(double)) const;

    /// this + (-1) * other, entrywise equality helper for tests/reports.
    bool equals_exactly(const SymMatrix& other) const;

private:
    std::size_t n_;
    std::vector<double> data_;
    double asymmetry_ = 0.0;

    void symmetrize();
};

/// Full eigendecomposition of a SymMatrix.
///
/// Eigenvalues ascending; column j of `eigenvectors` (row-major n*n) pairs
/// with eigenvalues[j]. `residual` is max_j ||A v_j - lambda_j v_j||_2,
/// measured against the original matrix.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;  // row-major n*n, columns are eigenvectors
    double residual = 0.0;

    std::size_t size() const { return eigenvalues.size(); }
    double eigenvector(std::size_t row, std::size_t col, std::size_t n) const {
        return eigenvectors[row * n + col];
    }
    double min_eigenvalue() const { return eigenvalues.front(); }
    double max_abs_eigenvalue() const;
};

/// Cyclic Jacobi eigendecomposition.
///
/// Sweeps rotate away every off-diagonal pair in a fixed row order until the
/// off-diagonal Frobenius norm drops below 1e-14 * ||m||_F, with a budget of
/// 60 sweeps. Deterministic for identical input. Throws ConvergenceError
/// (carrying the residual reached) if the budget runs out.
Spectrum eigvalsh(const SymMatrix& m);

struct PsdVerdict {
    bool psd;
    double min_eigenvalue;
    double threshold;  // the applied cutoff: -tol * max(1, spectral radius)
};

/// PSD test: passes iff min eigenvalue >= -tol * max(1, |lambda|_max).
PsdVerdict is_psd(const SymMatrix& m, double tol);

struct CndVerdict {
    bool cnd;
    /// Sum-zero vector c with c^T m c > tol when the test fails; empty otherwise.
    std::vector<double> witness;
    /// c^T m c for the witness (the violation), 0 when the test passes.
    double violation;
    /// Min eigenvalue of -Q^T m Q (>= threshold exactly when cnd holds).
    double reduced_min_eigenvalue;
};

/// Conditional negative definiteness, decided on the sum-zero subspace.
///
/// Builds the n x (n-1) Helmert basis Q of {c : sum c_i = 0} and tests
/// -Q^T m Q for positive semidefiniteness at `tol`. n = 1 is vacuously true.
CndVerdict is_cnd(const SymMatrix& m, double tol);

struct NegativeTypeVerdict {
    bool passes;  // exactly one positive eigenvalue
    int positive_count;
    std::vector<double> eigenvalues;
};

/// Necessary condition for a distance matrix to be of negative type:
/// exactly one eigenvalue above tol * max(1, spectral radius). Says nothing
/// about sufficiency.
NegativeTypeVerdict negative_type_necessary(const SymMatrix& m, double tol);

/// Helmert basis of the sum-zero subspace, n x (n-1) row-major, orthonormal
/// columns. Exposed for reuse by tests and validators.
std::vector<double> helmert_basis(std::size_t n);

/// Default relative tolerance for definiteness verdicts.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace simet

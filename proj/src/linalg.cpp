#include "simet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace simet {

namespace {

constexpr double kAsymmetryGate = 1e-12;
constexpr double kOffDiagTarget = 1e-14;  // relative to ||m||_F
constexpr int kMaxSweeps = 60;

double off_diag_frobenius(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

}  // namespace

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {
    if (n == 0) throw InputError("SymMatrix: dimension must be >= 1");
}

SymMatrix::SymMatrix(std::size_t n, const std::vector<double>& entries) : n_(n), data_(entries) {
    if (n == 0) throw InputError("SymMatrix: dimension must be >= 1");
    if (entries.size() != n * n) throw InputError("SymMatrix: entry count does not match dimension");
    symmetrize();
}

SymMatrix::SymMatrix(const std::vector<std::vector<double>>& rows) : n_(rows.size()) {
    if (n_ == 0) throw InputError("SymMatrix: dimension must be >= 1");
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw InputError("SymMatrix: rows must form a square matrix");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    symmetrize();
}

void SymMatrix::symmetrize() {
    for (double v : data_)
        if (!std::isfinite(v)) throw InputError("SymMatrix: entries must be finite");
    double scale = std::max(1.0, max_abs_entry());
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            double a = data_[i * n_ + j], b = data_[j * n_ + i];
            asymmetry_ = std::max(asymmetry_, std::abs(a - b));
            double avg = 0.5 * (a + b);
            data_[i * n_ + j] = avg;
            data_[j * n_ + i] = avg;
        }
    }
    if (asymmetry_ > kAsymmetryGate * scale)
        throw InputError("SymMatrix: input asymmetry " + std::to_string(asymmetry_) +
                         " exceeds the 1e-12 gate");
}

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
    if (!std::isfinite(v)) throw InputError("SymMatrix: entries must be finite");
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i];
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

SymMatrix SymMatrix::map(double (*f)(double)) const {
    SymMatrix out(n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) out.data_[i] = f(data_[i]);
    return out;
}

bool SymMatrix::equals_exactly(const SymMatrix& other) const {
    return n_ == other.n_ && data_ == other.data_;
}

double Spectrum::max_abs_eigenvalue() const {
    double m = 0.0;
    for (double v : eigenvalues) m = std::max(m, std::abs(v));
    return m;
}

Spectrum eigvalsh(const SymMatrix& m) {
    const std::size_t n = m.size();
    std::vector<double> a = m.data();
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double norm = m.frobenius_norm();
    const double target = kOffDiagTarget * norm;

    double off = off_diag_frobenius(a, n);
    int sweep = 0;
    while (off > target && sweep < kMaxSweeps) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // Rotation angle from the stable half-angle formula.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        const double aip = a[i * n + p];
                        const double aiq = a[i * n + q];
                        a[i * n + p] = aip - s * (aiq + tau * aip);
                        a[i * n + q] = aiq + s * (aip - tau * aiq);
                        a[p * n + i] = a[i * n + p];
                        a[q * n + i] = a[i * n + q];
                    }
                    const double vip = v[i * n + p];
                    const double viq = v[i * n + q];
                    v[i * n + p] = vip - s * (viq + tau * vip);
                    v[i * n + q] = viq + s * (vip - tau * viq);
                }
            }
        }
        off = off_diag_frobenius(a, n);
        ++sweep;
    }
    if (off > target)
        throw ConvergenceError("eigvalsh: Jacobi sweeps exhausted, off-diagonal norm " +
                                   std::to_string(off),
                               off);

    // Sort ascending, carrying eigenvector columns along.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors.resize(n * n);
    for (std::size_t col = 0; col < n; ++col) {
        spec.eigenvalues[col] = a[order[col] * n + order[col]];
        for (std::size_t row = 0; row < n; ++row)
            spec.eigenvectors[row * n + col] = v[row * n + order[col]];
    }

    // Residual against the original matrix entries.
    double worst = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double av = 0.0;
            for (std::size_t j = 0; j < n; ++j) av += m(i, j) * spec.eigenvectors[j * n + col];
            const double d = av - spec.eigenvalues[col] * spec.eigenvectors[i * n + col];
            r2 += d * d;
        }
        worst = std::max(worst, std::sqrt(r2));
    }
    spec.residual = worst;
    return spec;
}

PsdVerdict is_psd(const SymMatrix& m, double tol) {
    if (tol < 0.0) throw InputError("is_psd: tolerance must be nonnegative");
    const Spectrum spec = eigvalsh(m);
    const double threshold = -tol * std::max(1.0, spec.max_abs_eigenvalue());
    return PsdVerdict{spec.min_eigenvalue() >= threshold, spec.min_eigenvalue(), threshold};
}

std::vector<double> helmert_basis(std::size_t n) {
    // Column k-1 (k = 1..n-1): first k entries 1/sqrt(k(k+1)), entry k is
    // -k/sqrt(k(k+1)), zero below. Orthonormal, every column sums to zero.
    std::vector<double> q(n * (n - 1), 0.0);
    for (std::size_t k = 1; k < n; ++k) {
        const double a = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (std::size_t i = 0; i < k; ++i) q[i * (n - 1) + (k - 1)] = a;
        q[k * (n - 1) + (k - 1)] = -static_cast<double>(k) * a;
    }
    return q;
}

CndVerdict is_cnd(const SymMatrix& m, double tol) {
    const std::size_t n = m.size();
    if (n == 1) return CndVerdict{true, {}, 0.0, 0.0};

    const std::vector<double> q = helmert_basis(n);
    const std::size_t r = n - 1;

    // reduced = -Q^T m Q, symmetric up to rounding.
    std::vector<double> mq(n * r, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double mij = m(i, j);
            for (std::size_t c = 0; c < r; ++c) mq[i * r + c] += mij * q[j * r + c];
        }
    std::vector<double> red(r * r, 0.0);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < r; ++d) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += q[i * r + c] * mq[i * r + d];
            red[c * r + d] = -s;
        }
    const SymMatrix reduced(r, red);

    const Spectrum spec = eigvalsh(reduced);
    const double threshold = -tol * std::max(1.0, spec.max_abs_eigenvalue());
    if (spec.min_eigenvalue() >= threshold)
        return CndVerdict{true, {}, 0.0, spec.min_eigenvalue()};

    // Witness: lift the offending eigenvector back to the sum-zero subspace.
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < r; ++k) c[i] += q[i * r + k] * spec.eigenvector(k, 0, r);
    double form = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form += c[i] * m(i, j) * c[j];
    return CndVerdict{false, c, form, spec.min_eigenvalue()};
}

NegativeTypeVerdict negative_type_necessary(const SymMatrix& m, double tol) {
    const Spectrum spec = eigvalsh(m);
    const double cut = tol * std::max(1.0, spec.max_abs_eigenvalue());
    int count = 0;
    for (double v : spec.eigenvalues)
        if (v > cut) ++count;
    return NegativeTypeVerdict{count == 1, count, spec.eigenvalues};
}

}  // namespace simet

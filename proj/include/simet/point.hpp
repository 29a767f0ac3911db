#pragma once

#include <complex>
#include <vector>

#include "simet/error.hpp"

namespace simet {

/// A finite coordinate vector with complex entries.
class Point {
public:
    explicit Point(std::vector<std::complex<double>> coords);

    /// Real coordinates, zero imaginary parts.
    static Point real(const std::vector<double>& coords);

    std::size_t dim() const { return coords_.size(); }
    const std::complex<double>& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<std::complex<double>>& coords() const { return coords_; }

    /// Euclidean norm sqrt(sum |z_i|^2).
    double norm() const;

    bool operator==(const Point& other) const { return coords_ == other.coords_; }

private:
    std::vector<std::complex<double>> coords_;
};

/// ||x - y||; dimensions must agree.
double distance(const Point& x, const Point& y);

}  // namespace simet

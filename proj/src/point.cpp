#include "simet/point.hpp"

#include <cmath>

namespace simet {

Point::Point(std::vector<std::complex<double>> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InputError("Point: dimension must be >= 1");
    for (const auto& z : coords_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InputError("Point: coordinates must be finite");
}

Point Point::real(const std::vector<double>& coords) {
    std::vector<std::complex<double>> c;
    c.reserve(coords.size());
    for (double v : coords) c.emplace_back(v, 0.0);
    return Point(std::move(c));
}

double Point::norm() const {
    double s = 0.0;
    for (const auto& z : coords_) s += std::norm(z);
    return std::sqrt(s);
}

double distance(const Point& x, const Point& y) {
    if (x.dim() != y.dim()) throw InputError("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += std::norm(x[i] - y[i]);
    return std::sqrt(s);
}

}  // namespace simet

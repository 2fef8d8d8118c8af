#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hypskew {

using Cx = std::complex<double>;

// Points this close to the unit sphere are rejected everywhere; the metric
// overflows past it anyway (2*atanh saturates around 1 - 1e-16).
inline constexpr double kBoundaryMargin = 1e-15;

// Runtime numeric failure discovered mid-computation (solver stall, degenerate
// image, broken equivariance, ...). Plain input validation uses
// std::domain_error / std::invalid_argument / std::range_error.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A point of the open unit disk. Construction enforces |z| < 1 - 1e-15, so a
// DiskPoint is always a valid argument for the metric and for Mobius maps.
class DiskPoint {
public:
    DiskPoint() = default;
    DiskPoint(double x, double y) : DiskPoint(Cx{x, y}) {}
    explicit DiskPoint(Cx z) : z_(z) {
        if (!(std::abs(z) < 1.0 - kBoundaryMargin))
            throw std::domain_error("DiskPoint: |z| = " + std::to_string(std::abs(z)) +
                                    " is not inside the unit disk");
    }

    double x() const { return z_.real(); }
    double y() const { return z_.imag(); }
    Cx value() const { return z_; }
    operator Cx() const { return z_; }

private:
    Cx z_{0.0, 0.0};
};

// A point of the open unit ball in dimension 2 or 3 (distance queries only;
// all constructive geometry lives in the disk).
class BallPoint {
public:
    BallPoint(double x, double y) : v_{x, y, 0.0}, dim_(2) { validate(); }
    BallPoint(double x, double y, double z) : v_{x, y, z}, dim_(3) { validate(); }
    static BallPoint from_disk(DiskPoint p) { return BallPoint(p.x(), p.y()); }

    int dim() const { return dim_; }
    double operator[](int i) const { return v_[static_cast<size_t>(i)]; }
    double norm2() const { return v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2]; }

private:
    void validate() const {
        if (!(norm2() < (1.0 - kBoundaryMargin) * (1.0 - kBoundaryMargin)))
            throw std::domain_error("BallPoint: |v| = " + std::to_string(std::sqrt(norm2())) +
                                    " is not inside the unit ball");
    }
    std::array<double, 3> v_;
    int dim_;
};

}  // namespace hypskew

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdm {

/// Closed interval [lo, hi] bounding one gene.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Axis-aligned box, possibly degenerate (lo == hi on some axis).
/// Used for sampling regions that are allowed to collapse to a point.
struct Box {
    std::vector<Interval> bounds;

    int dimension() const { return static_cast<int>(bounds.size()); }
};

/// The search box: per-gene lower/upper bounds. Immutable after construction.
/// Bounds must be finite with lo < hi on every axis, so the volume is
/// strictly positive.
class Landscape {
public:
    explicit Landscape(std::vector<Interval> bounds) : bounds_(std::move(bounds)) {
        if (bounds_.empty())
            throw std::invalid_argument("landscape must have at least one gene");
        volume_ = 1.0;
        for (std::size_t k = 0; k < bounds_.size(); ++k) {
            const auto& b = bounds_[k];
            if (!std::isfinite(b.lo) || !std::isfinite(b.hi))
                throw std::invalid_argument("landscape bounds must be finite (gene " +
                                            std::to_string(k + 1) + ")");
            if (!(b.lo < b.hi))
                throw std::invalid_argument("landscape requires lo < hi on gene " +
                                            std::to_string(k + 1));
            volume_ *= b.hi - b.lo;
        }
        if (!std::isfinite(volume_) || volume_ <= 0.0)
            throw std::invalid_argument("landscape volume must be finite and positive");
    }

    /// Cube [lo, hi]^n.
    static Landscape cube(double lo, double hi, int n) {
        return Landscape(std::vector<Interval>(static_cast<std::size_t>(n), Interval{lo, hi}));
    }

    int dimension() const { return static_cast<int>(bounds_.size()); }
    const Interval& gene(int k) const { return bounds_[static_cast<std::size_t>(k)]; }
    const std::vector<Interval>& bounds() const { return bounds_; }
    double lower(int k) const { return gene(k).lo; }
    double upper(int k) const { return gene(k).hi; }
    double width(int k) const { return gene(k).hi - gene(k).lo; }
    double volume() const { return volume_; }

    /// Closed-box membership with an absolute tolerance per axis.
    bool contains(std::span<const double> point, double tol = 1e-12) const {
        if (point.size() != bounds_.size()) return false;
        for (std::size_t k = 0; k < bounds_.size(); ++k)
            if (point[k] < bounds_[k].lo - tol || point[k] > bounds_[k].hi + tol)
                return false;
        return true;
    }

    friend bool operator==(const Landscape& a, const Landscape& b) {
        if (a.bounds_.size() != b.bounds_.size()) return false;
        for (std::size_t k = 0; k < a.bounds_.size(); ++k)
            if (a.bounds_[k].lo != b.bounds_[k].lo || a.bounds_[k].hi != b.bounds_[k].hi)
                return false;
        return true;
    }

private:
    std::vector<Interval> bounds_;
    double volume_ = 0.0;
};

} // namespace gdm

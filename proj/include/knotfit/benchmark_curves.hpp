#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"

namespace knotfit {

enum class AngleUnit { degrees, radians };

namespace detail {

inline double to_radians(double t, AngleUnit unit) noexcept {
    return unit == AngleUnit::degrees ? t * std::numbers::pi / 180.0 : t;
}

inline std::vector<double> sample_range(double t_min, double t_max, int count) {
    if (count < 2) throw std::domain_error("curve generator: need at least 2 samples");
    if (!(t_min < t_max)) throw std::domain_error("curve generator: t_min must be below t_max");
    std::vector<double> t(count);
    for (int i = 0; i < count; ++i)
        t[i] = i + 1 == count ? t_max : t_min + (t_max - t_min) * i / (count - 1);
    return t;
}

}  // namespace detail

// x = (a+b) cos t - h cos((a/b + 1) t), y likewise with sin. The t-range is
// read in degrees by convention (361 points over [-180, 180] is one per degree).
inline std::vector<Vec2> epitrochoid(double a, double b, double h, double t_min, double t_max,
                                     int count, AngleUnit unit = AngleUnit::degrees) {
    if (b == 0.0) throw std::domain_error("epitrochoid: b must be non-zero");
    std::vector<Vec2> points;
    points.reserve(count);
    const double ratio = a / b + 1.0;
    for (double t : detail::sample_range(t_min, t_max, count)) {
        const double rad = detail::to_radians(t, unit);
        points.push_back({(a + b) * std::cos(rad) - h * std::cos(ratio * rad),
                          (a + b) * std::sin(rad) - h * std::sin(ratio * rad)});
    }
    return points;
}

// r = a t, x = r cos t, y = r sin t, with t in radians.
inline std::vector<Vec2> archimedean_spiral(double a, double t_min, double t_max, int count,
                                            AngleUnit unit = AngleUnit::radians) {
    std::vector<Vec2> points;
    points.reserve(count);
    for (double t : detail::sample_range(t_min, t_max, count)) {
        const double rad = detail::to_radians(t, unit);
        const double r = a * rad;
        points.push_back({r * std::cos(rad), r * std::sin(rad)});
    }
    return points;
}

// x = a (1 + cos t), y = a sin t, z = 2 a sin(t/2); t in degrees.
inline std::vector<Vec3> vivaldi(double a, double t_min, double t_max, int count,
                                 AngleUnit unit = AngleUnit::degrees) {
    std::vector<Vec3> points;
    points.reserve(count);
    for (double t : detail::sample_range(t_min, t_max, count)) {
        const double rad = detail::to_radians(t, unit);
        points.push_back(
            {a * (1.0 + std::cos(rad)), a * std::sin(rad), 2.0 * a * std::sin(0.5 * rad)});
    }
    return points;
}

}  // namespace knotfit

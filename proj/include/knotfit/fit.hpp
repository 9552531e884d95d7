#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "knots.hpp"
#include "parameterize.hpp"

namespace knotfit {

// Distances below this floor are clamped when forming cost/fitness, so an
// exact fit keeps a finite fitness.
inline constexpr double kDistanceFloor = 1e-12;

// Relative pivot threshold below which the collocation system counts as
// rank-deficient.
inline constexpr double kRankTolerance = 1e-10;

template <std::size_t N>
struct FitReport {
    BSplineCurve<N> curve;
    double euclidean_distance = 0.0;
    double rmse = 0.0;
    int control_point_count = 0;
    double cost = 0.0;     // control points x distance (distance floored)
    double fitness = 0.0;  // 1 / cost
};

// Control points minimizing sum_i |C(i) - P(u_i)|^2, each coordinate solved
// independently. The collocation matrix has p+1 consecutive non-zeros per row,
// so a Givens QR on the banded rows does the whole solve in O(L * (p+1)^2)
// without squaring the condition number.
template <std::size_t N>
BSplineCurve<N> least_squares_fit(std::span<const Vec<N>> points,
                                  const ParameterAssignment& assignment,
                                  const KnotVector& knot_vector) {
    const std::size_t count = points.size();
    if (count != assignment.size())
        throw std::domain_error("least_squares_fit: point/parameter size mismatch");
    const int n = knot_vector.control_point_count();
    const int p = knot_vector.degree();
    const int band = p + 1;
    if (count < static_cast<std::size_t>(n))
        throw std::domain_error("least_squares_fit: fewer points than control points");
    for (double u : assignment.params)
        if (!knot_vector.contains(u))
            throw std::domain_error("least_squares_fit: parameter outside knot domain");

    // R is upper-triangular with bandwidth p+1, stored by diagonals:
    // r[row * band + m] holds entry (row, row + m).
    std::vector<double> r(static_cast<std::size_t>(n) * band, 0.0);
    std::vector<Vec<N>> rhs(n, Vec<N>{});

    std::array<double, kMaxDegree + 1> basis{};
    for (std::size_t i = 0; i < count; ++i) {
        const int span = nonzero_basis(knot_vector, assignment.params[i],
                                       std::span<double>(basis.data(), band));
        const int first_col = span - p;
        std::array<double, kMaxDegree + 1> row = basis;
        Vec<N> value = points[i];
        for (int k = 0; k < band; ++k) {
            if (row[k] == 0.0) continue;
            const int col = first_col + k;
            const double diag = r[static_cast<std::size_t>(col) * band];
            const double radius = std::hypot(diag, row[k]);
            const double c = diag / radius;
            const double s = row[k] / radius;
            r[static_cast<std::size_t>(col) * band] = radius;
            for (int m = 1; m + k < band; ++m) {
                const double rm = r[static_cast<std::size_t>(col) * band + m];
                const double bm = row[k + m];
                r[static_cast<std::size_t>(col) * band + m] = c * rm + s * bm;
                row[k + m] = c * bm - s * rm;
            }
            const Vec<N> top = rhs[col];
            rhs[col] = c * top + s * value;
            value = c * value - s * top;
        }
    }

    double max_pivot = 0.0;
    for (int i = 0; i < n; ++i)
        max_pivot = std::max(max_pivot, std::abs(r[static_cast<std::size_t>(i) * band]));
    const double tol = kRankTolerance * std::max(1.0, max_pivot);
    for (int i = 0; i < n; ++i)
        if (std::abs(r[static_cast<std::size_t>(i) * band]) <= tol)
            throw InfeasibleFitError("least_squares_fit: rank-deficient collocation matrix");

    std::vector<Vec<N>> control(n);
    for (int i = n - 1; i >= 0; --i) {
        Vec<N> acc = rhs[i];
        for (int m = 1; m < band && i + m < n; ++m) acc -= control[i + m] * r[static_cast<std::size_t>(i) * band + m];
        control[i] = acc * (1.0 / r[static_cast<std::size_t>(i) * band]);
    }
    return BSplineCurve<N>(knot_vector, std::move(control));
}

// D = sqrt(sum_i |C(i) - B(u_i)|^2): same-index correspondence at the data
// points' own parameters.
template <std::size_t N>
double euclidean_distance(std::span<const Vec<N>> original, const BSplineCurve<N>& fitted,
                          const ParameterAssignment& assignment) {
    if (original.size() != assignment.size())
        throw std::domain_error("euclidean_distance: point/parameter size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i)
        sum += squared_distance(original[i], fitted.evaluate(assignment.params[i]));
    return std::sqrt(sum);
}

// Root mean square variant of the same residual: D / sqrt(L).
template <std::size_t N>
double rmse(std::span<const Vec<N>> original, const BSplineCurve<N>& fitted,
            const ParameterAssignment& assignment) {
    return euclidean_distance(original, fitted, assignment) /
           std::sqrt(static_cast<double>(original.size()));
}

template <std::size_t N>
FitReport<N> make_fit_report(BSplineCurve<N> curve, std::span<const Vec<N>> points,
                             const ParameterAssignment& assignment) {
    FitReport<N> report{std::move(curve)};
    report.euclidean_distance = euclidean_distance(points, report.curve, assignment);
    report.rmse = report.euclidean_distance / std::sqrt(static_cast<double>(points.size()));
    report.control_point_count = static_cast<int>(report.curve.control_points().size());
    report.cost = report.control_point_count * std::max(report.euclidean_distance, kDistanceFloor);
    report.fitness = 1.0 / report.cost;
    return report;
}

}  // namespace knotfit

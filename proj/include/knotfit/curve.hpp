#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "knots.hpp"

namespace knotfit {

// B-spline curve: knot vector plus control points. Evaluation is the plain
// basis-weighted sum of control points, no smoothing or reparameterization.
template <std::size_t N>
class BSplineCurve {
  public:
    static constexpr std::size_t dim = N;

    BSplineCurve(KnotVector knot_vector, std::vector<Vec<N>> control_points)
        : knots_(std::move(knot_vector)), control_points_(std::move(control_points)) {
        if (static_cast<int>(control_points_.size()) != knots_.control_point_count())
            throw std::domain_error("curve: control point count does not match knot vector");
    }

    const KnotVector& knot_vector() const noexcept { return knots_; }
    const std::vector<Vec<N>>& control_points() const noexcept { return control_points_; }
    int degree() const noexcept { return knots_.degree(); }
    double domain_min() const noexcept { return knots_.domain_min(); }
    double domain_max() const noexcept { return knots_.domain_max(); }

    Vec<N> evaluate(double u) const {
        if (!knots_.contains(u))
            throw std::domain_error("curve: parameter outside knot domain");
        const int p = knots_.degree();
        std::array<double, kMaxDegree + 1> b{};
        const int s = nonzero_basis(knots_, u, std::span<double>(b.data(), p + 1));
        Vec<N> out{};
        for (int j = 0; j <= p; ++j) out += control_points_[s - p + j] * b[j];
        return out;
    }

    friend bool operator==(const BSplineCurve&, const BSplineCurve&) = default;

  private:
    KnotVector knots_;
    std::vector<Vec<N>> control_points_;
};

// Evaluates at `count` parameters spread evenly over the domain, both ends included.
template <std::size_t N>
std::vector<Vec<N>> sample_curve(const BSplineCurve<N>& curve, int count) {
    if (count < 2) throw std::domain_error("sample_curve: need at least 2 samples");
    std::vector<Vec<N>> out;
    out.reserve(count);
    const double lo = curve.domain_min();
    const double hi = curve.domain_max();
    for (int i = 0; i < count; ++i) {
        const double u = i + 1 == count ? hi : lo + (hi - lo) * i / (count - 1);
        out.push_back(curve.evaluate(u));
    }
    return out;
}

}  // namespace knotfit

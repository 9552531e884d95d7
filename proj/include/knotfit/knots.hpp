#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <vector>

namespace knotfit {

// Degrees above this are rejected; lets basis evaluation use stack scratch.
inline constexpr int kMaxDegree = 32;

// Clamped non-decreasing knot sequence. End knots carry multiplicity degree+1,
// so curves interpolate their end control points.
class KnotVector {
  public:
    KnotVector(std::vector<double> knots, int degree) : knots_(std::move(knots)), degree_(degree) {
        if (degree_ < 0 || degree_ > kMaxDegree)
            throw std::domain_error("knot vector: degree out of supported range");
        const std::size_t m = knots_.size();
        if (m < 2 * static_cast<std::size_t>(degree_ + 1))
            throw std::domain_error("knot vector: too few knots for degree");
        for (std::size_t i = 1; i < m; ++i)
            if (knots_[i] < knots_[i - 1])
                throw std::domain_error("knot vector: knots must be non-decreasing");
        for (int i = 0; i <= degree_; ++i)
            if (knots_[i] != knots_.front() || knots_[m - 1 - i] != knots_.back())
                throw std::domain_error("knot vector: end knots need multiplicity degree+1");
        if (!(knots_.front() < knots_.back()))
            throw std::domain_error("knot vector: empty parameter domain");
    }

    // [0 x(p+1)] ++ interior ++ [1 x(p+1)]. Interior knots strictly inside (0,1),
    // non-decreasing. Implies interior.size() + p + 1 control points.
    static KnotVector clamped(std::span<const double> interior_knots, int degree) {
        if (degree < 0 || degree > kMaxDegree)
            throw std::domain_error("knot vector: degree out of supported range");
        for (std::size_t i = 0; i < interior_knots.size(); ++i) {
            if (!(interior_knots[i] > 0.0 && interior_knots[i] < 1.0))
                throw std::domain_error("knot vector: interior knots must lie strictly in (0,1)");
            if (i > 0 && interior_knots[i] < interior_knots[i - 1])
                throw std::domain_error("knot vector: interior knots must be non-decreasing");
        }
        std::vector<double> k;
        k.reserve(interior_knots.size() + 2 * static_cast<std::size_t>(degree + 1));
        k.insert(k.end(), degree + 1, 0.0);
        k.insert(k.end(), interior_knots.begin(), interior_knots.end());
        k.insert(k.end(), degree + 1, 1.0);
        return KnotVector(std::move(k), degree);
    }

    int degree() const noexcept { return degree_; }
    const std::vector<double>& knots() const noexcept { return knots_; }
    int control_point_count() const noexcept {
        return static_cast<int>(knots_.size()) - degree_ - 1;
    }
    double domain_min() const noexcept { return knots_.front(); }
    double domain_max() const noexcept { return knots_.back(); }
    bool contains(double u) const noexcept { return u >= domain_min() && u <= domain_max(); }

    // Span index s with t_s <= u < t_{s+1}; u at the domain end lands in the
    // last non-empty span (the closed-end convention).
    int find_span(double u) const noexcept {
        const int n = control_point_count();
        if (u >= knots_.back()) {
            int s = n - 1;
            while (s > degree_ && knots_[s] == knots_[s + 1]) --s;
            return s;
        }
        const auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
        const int s = static_cast<int>(it - knots_.begin()) - 1;
        return std::clamp(s, degree_, n - 1);
    }

    friend bool operator==(const KnotVector&, const KnotVector&) = default;

  private:
    std::vector<double> knots_;
    int degree_;
};

namespace detail {

// Cox-de Boor recursion. 0/0 terms are taken as 0; the final non-empty span is
// closed at the domain end so the basis covers u = t_max.
inline double cox_de_boor(const std::vector<double>& t, int i, int p, double u, double t_max) {
    if (p == 0) {
        if (t[i] <= u && u < t[i + 1]) return 1.0;
        if (u == t_max && t[i] < t[i + 1] && t[i + 1] == t_max) return 1.0;
        return 0.0;
    }
    double value = 0.0;
    const double d_left = t[i + p] - t[i];
    if (d_left > 0.0) value += (u - t[i]) / d_left * cox_de_boor(t, i, p - 1, u, t_max);
    const double d_right = t[i + p + 1] - t[i + 1];
    if (d_right > 0.0)
        value += (t[i + p + 1] - u) / d_right * cox_de_boor(t, i + 1, p - 1, u, t_max);
    return value;
}

}  // namespace detail

// N_{i,p}(u) for the knot vector's own degree p.
inline double basis_value(const KnotVector& kv, int i, double u) {
    if (i < 0 || i >= kv.control_point_count())
        throw std::domain_error("basis_value: basis index out of range");
    if (!kv.contains(u)) throw std::domain_error("basis_value: parameter outside knot domain");
    return detail::cox_de_boor(kv.knots(), i, kv.degree(), u, kv.domain_max());
}

// All p+1 basis values that can be non-zero at u, written to out[0..p]
// (out[j] = N_{s-p+j,p}(u)). Returns the span index s.
inline int nonzero_basis(const KnotVector& kv, double u, std::span<double> out) {
    const int p = kv.degree();
    if (out.size() < static_cast<std::size_t>(p + 1))
        throw std::domain_error("nonzero_basis: output span too small");
    if (!kv.contains(u)) throw std::domain_error("nonzero_basis: parameter outside knot domain");
    const auto& t = kv.knots();
    const int s = kv.find_span(u);
    std::array<double, kMaxDegree + 1> left{};
    std::array<double, kMaxDegree + 1> right{};
    out[0] = 1.0;
    for (int j = 1; j <= p; ++j) {
        left[j] = u - t[s + 1 - j];
        right[j] = t[s + j] - u;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double denom = right[r + 1] + left[j - r];
            const double temp = denom > 0.0 ? out[r] / denom : 0.0;
            out[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        out[j] = saved;
    }
    return s;
}

}  // namespace knotfit

#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fit.hpp"
#include "knots.hpp"
#include "parameterize.hpp"

namespace knotfit {

// One bit per data point; set bits promote the point's parameter to an
// interior knot. Endpoint bits stay 0: their parameters are already the end
// knots of the clamped vector.
class KnotGenome {
  public:
    explicit KnotGenome(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.size() < 2) throw std::domain_error("genome: needs at least 2 bits");
        for (auto b : bits_)
            if (b > 1) throw std::domain_error("genome: bits must be 0 or 1");
        if (bits_.front() != 0 || bits_.back() != 0)
            throw std::domain_error("genome: endpoint bits must be 0");
    }

    static KnotGenome zeros(std::size_t size) {
        return KnotGenome(std::vector<std::uint8_t>(size, 0));
    }

    // Wraps the optimizer's free bits with the fixed endpoint zeros.
    static KnotGenome from_free_bits(std::span<const std::uint8_t> free_bits) {
        std::vector<std::uint8_t> bits;
        bits.reserve(free_bits.size() + 2);
        bits.push_back(0);
        bits.insert(bits.end(), free_bits.begin(), free_bits.end());
        bits.push_back(0);
        return KnotGenome(std::move(bits));
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool bit(std::size_t i) const noexcept { return bits_[i] != 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    int selected_count() const noexcept {
        return std::accumulate(bits_.begin(), bits_.end(), 0);
    }

    friend bool operator==(const KnotGenome&, const KnotGenome&) = default;

  private:
    std::vector<std::uint8_t> bits_;
};

// Selected bits contribute their parameter values as interior knots, in index
// order (parameters are strictly increasing, so no sorting and no coincident
// interior knots).
inline KnotVector decode(const KnotGenome& genome, const ParameterAssignment& assignment,
                         int degree) {
    if (genome.size() != assignment.size())
        throw std::domain_error("decode: genome/parameter size mismatch");
    std::vector<double> interior;
    interior.reserve(genome.selected_count());
    for (std::size_t i = 0; i < genome.size(); ++i)
        if (genome.bit(i)) interior.push_back(assignment.params[i]);
    return KnotVector::clamped(interior, degree);
}

// Schoenberg-Whitney-style guard for the least-squares solve: every basis
// support [t_i, t_{i+p+1}) must contain a data parameter, and no interior knot
// may exceed multiplicity p.
inline bool is_feasible(const KnotVector& knot_vector, const ParameterAssignment& assignment) {
    const auto& t = knot_vector.knots();
    const int p = knot_vector.degree();
    const int n = knot_vector.control_point_count();
    const auto& u = assignment.params;

    int run = 0;
    for (int i = p + 1; i < n; ++i) {
        run = (t[i] == t[i - 1]) ? run + 1 : 1;
        if (t[i] > knot_vector.domain_min() && t[i] < knot_vector.domain_max() && run > p)
            return false;
    }

    for (int i = 0; i < n; ++i) {
        const double lo = t[i];
        const double hi = t[i + p + 1];
        if (!(lo < hi)) return false;
        const auto it = std::lower_bound(u.begin(), u.end(), lo);  // first param >= lo
        if (it == u.end() || !(*it < hi)) return false;
    }
    return true;
}

template <std::size_t N>
struct EvaluationRecord {
    KnotGenome genome;
    bool feasible = false;
    std::optional<FitReport<N>> report;
    double fitness = 0.0;
    double cost = std::numeric_limits<double>::infinity();
};

// Decode -> feasibility -> least squares -> metrics. Every failure folds into
// the infeasible branch (fitness 0, cost inf); nothing throws past here.
template <std::size_t N>
EvaluationRecord<N> evaluate_genome(const KnotGenome& genome, std::span<const Vec<N>> points,
                                    const ParameterAssignment& assignment, int degree) {
    if (genome.size() != assignment.size() || points.size() != assignment.size())
        throw std::domain_error("evaluate_genome: size mismatch");
    EvaluationRecord<N> record{genome, false, std::nullopt, 0.0,
                               std::numeric_limits<double>::infinity()};
    const KnotVector knot_vector = decode(genome, assignment, degree);
    if (knot_vector.control_point_count() > static_cast<int>(points.size())) return record;
    if (!is_feasible(knot_vector, assignment)) return record;
    try {
        BSplineCurve<N> curve = least_squares_fit(points, assignment, knot_vector);
        FitReport<N> report = make_fit_report(std::move(curve), points, assignment);
        record.feasible = true;
        record.fitness = report.fitness;
        record.cost = report.cost;
        record.report = std::move(report);
    } catch (const InfeasibleFitError&) {
        // keep the infeasible defaults
    }
    return record;
}

}  // namespace knotfit

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace knotfit {

enum class ParamMethod { uniform, chord_length, centripetal };

inline const char* to_string(ParamMethod m) noexcept {
    switch (m) {
        case ParamMethod::uniform: return "uniform";
        case ParamMethod::chord_length: return "chord_length";
        case ParamMethod::centripetal: return "centripetal";
    }
    return "?";
}

// One parameter per data point, strictly increasing from 0 to 1.
struct ParameterAssignment {
    std::vector<double> params;
    ParamMethod method = ParamMethod::centripetal;

    std::size_t size() const noexcept { return params.size(); }
};

// uniform: equal spacing; chord_length: increments proportional to chord
// lengths; centripetal: proportional to their square roots. Consecutive
// duplicate points would produce a zero increment and are rejected.
template <std::size_t N>
ParameterAssignment parameterize(std::span<const Vec<N>> points, ParamMethod method) {
    const std::size_t count = points.size();
    if (count < 2) throw std::domain_error("parameterize: need at least 2 points");
    for (std::size_t i = 1; i < count; ++i)
        if (points[i] == points[i - 1])
            throw std::domain_error("parameterize: consecutive duplicate points at index " +
                                    std::to_string(i));

    ParameterAssignment out;
    out.method = method;
    out.params.resize(count);
    if (method == ParamMethod::uniform) {
        for (std::size_t i = 0; i < count; ++i)
            out.params[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    } else {
        double total = 0.0;
        for (std::size_t i = 1; i < count; ++i) {
            double step = distance(points[i], points[i - 1]);
            if (method == ParamMethod::centripetal) step = std::sqrt(step);
            total += step;
            out.params[i] = total;
        }
        for (std::size_t i = 1; i + 1 < count; ++i) out.params[i] /= total;
    }
    out.params.front() = 0.0;
    out.params.back() = 1.0;
    return out;
}

}  // namespace knotfit

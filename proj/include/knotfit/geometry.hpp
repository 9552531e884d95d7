#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace knotfit {

// Fixed-dimension point. Datasets are homogeneous in N (2-D or 3-D in practice);
// everything downstream is templated on N so both share one code path.
template <std::size_t N>
struct Vec {
    std::array<double, N> c{};

    static constexpr std::size_t dim = N;

    double& operator[](std::size_t i) noexcept { return c[i]; }
    double operator[](std::size_t i) const noexcept { return c[i]; }

    Vec& operator+=(const Vec& o) noexcept {
        for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) noexcept {
        for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) noexcept {
        for (std::size_t i = 0; i < N; ++i) c[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) noexcept { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) noexcept { return a -= b; }
    friend Vec operator*(Vec a, double s) noexcept { return a *= s; }
    friend Vec operator*(double s, Vec a) noexcept { return a *= s; }

    friend bool operator==(const Vec&, const Vec&) = default;
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

template <std::size_t N>
double squared_norm(const Vec<N>& v) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += v.c[i] * v.c[i];
    return s;
}

template <std::size_t N>
double norm(const Vec<N>& v) noexcept {
    return std::sqrt(squared_norm(v));
}

template <std::size_t N>
double squared_distance(const Vec<N>& a, const Vec<N>& b) noexcept {
    return squared_norm(a - b);
}

template <std::size_t N>
double distance(const Vec<N>& a, const Vec<N>& b) noexcept {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace knotfit

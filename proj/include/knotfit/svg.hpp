#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "curve.hpp"
#include "geometry.hpp"
#include "number_io.hpp"

namespace knotfit {

namespace detail {

struct Panel {
    std::string label;
    std::vector<Vec2> markers;   // original data points
    std::vector<Vec2> polyline;  // sampled fitted curve
};

inline constexpr double kPanelSize = 480.0;
inline constexpr double kPanelGap = 24.0;

inline void render_panel(std::ostringstream& out, const Panel& panel, double x_offset) {
    double lo_x = panel.markers[0][0], hi_x = lo_x;
    double lo_y = panel.markers[0][1], hi_y = lo_y;
    auto grow = [&](const Vec2& p) {
        lo_x = std::min(lo_x, p[0]);
        hi_x = std::max(hi_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_y = std::max(hi_y, p[1]);
    };
    for (const auto& p : panel.markers) grow(p);
    for (const auto& p : panel.polyline) grow(p);
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    const double pad = 0.05 * span;
    const double scale = kPanelSize / (span + 2 * pad);
    auto map = [&](const Vec2& p) {
        return Vec2{x_offset + (p[0] - lo_x + pad) * scale,
                    kPanelSize - (p[1] - lo_y + pad) * scale};  // y grows upward
    };

    out << "  <g>\n";
    out << "    <rect x=\"" << format_double(x_offset) << "\" y=\"0\" width=\""
        << format_double(kPanelSize) << "\" height=\"" << format_double(kPanelSize)
        << "\" fill=\"white\" stroke=\"#ccc\"/>\n";
    if (!panel.label.empty())
        out << "    <text x=\"" << format_double(x_offset + 8) << "\" y=\"18\" font-size=\"14\""
            << " font-family=\"sans-serif\" fill=\"#444\">" << panel.label << "</text>\n";
    out << "    <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : panel.polyline) {
        const Vec2 q = map(p);
        out << format_double(q[0]) << ',' << format_double(q[1]) << ' ';
    }
    out << "\"/>\n";
    for (const auto& p : panel.markers) {
        const Vec2 q = map(p);
        out << "    <circle cx=\"" << format_double(q[0]) << "\" cy=\"" << format_double(q[1])
            << "\" r=\"2.5\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n";
    }
    out << "  </g>\n";
}

inline std::string render_panels(std::span<const Panel> panels) {
    const double width = panels.size() * kPanelSize + (panels.size() - 1) * kPanelGap;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << format_double(width)
        << ' ' << format_double(kPanelSize) << "\">\n";
    for (std::size_t i = 0; i < panels.size(); ++i)
        render_panel(out, panels[i], i * (kPanelSize + kPanelGap));
    out << "</svg>\n";
    return out.str();
}

template <std::size_t N>
std::vector<Vec2> project(std::span<const Vec<N>> points, std::size_t ax, std::size_t ay) {
    std::vector<Vec2> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = {points[i][ax], points[i][ay]};
    return out;
}

}  // namespace detail

// Original points as circle markers over the fitted curve as a polyline.
// 3-D data is projected onto the xy/xz/yz planes in three side-by-side panels.
template <std::size_t N>
std::string render_overlay_svg(std::span<const Vec<N>> original, const BSplineCurve<N>& fitted,
                               int curve_samples = 512) {
    static_assert(N == 2 || N == 3, "svg overlay supports 2-D and 3-D data");
    const std::vector<Vec<N>> sampled = sample_curve(fitted, std::max(curve_samples, 500));
    std::vector<detail::Panel> panels;
    if constexpr (N == 2) {
        panels.push_back({"", detail::project(original, 0, 1),
                          detail::project<N>(sampled, 0, 1)});
    } else {
        const std::array<std::array<std::size_t, 2>, 3> axes{{{0, 1}, {0, 2}, {1, 2}}};
        const std::array<std::string, 3> labels{"xy", "xz", "yz"};
        for (std::size_t k = 0; k < 3; ++k)
            panels.push_back({labels[k], detail::project(original, axes[k][0], axes[k][1]),
                              detail::project<N>(sampled, axes[k][0], axes[k][1])});
    }
    return detail::render_panels(panels);
}

}  // namespace knotfit

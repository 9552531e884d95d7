#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "curve.hpp"
#include "errors.hpp"

namespace knotfit {

using CurveData = std::variant<BSplineCurve<2>, BSplineCurve<3>>;

// {"degree": p, "knots": [...], "control_points": [[...], ...]}
template <std::size_t N>
nlohmann::json curve_to_json(const BSplineCurve<N>& curve) {
    nlohmann::json j;
    j["degree"] = curve.degree();
    j["knots"] = curve.knot_vector().knots();
    auto& cps = j["control_points"] = nlohmann::json::array();
    for (const auto& p : curve.control_points()) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t i = 0; i < N; ++i) row.push_back(p[i]);
        cps.push_back(std::move(row));
    }
    return j;
}

inline nlohmann::json curve_to_json(const CurveData& curve) {
    return std::visit([](const auto& c) { return curve_to_json(c); }, curve);
}

inline CurveData curve_from_json(const nlohmann::json& j) {
    const int degree = j.at("degree").get<int>();
    auto knots = j.at("knots").get<std::vector<double>>();
    const auto& cps = j.at("control_points");
    if (cps.empty()) throw FormatError("curve json: empty control points");
    const std::size_t dim = cps.front().size();
    KnotVector kv(std::move(knots), degree);
    if (dim == 2) {
        std::vector<Vec2> control(cps.size());
        for (std::size_t i = 0; i < cps.size(); ++i)
            control[i] = {cps[i][0].get<double>(), cps[i][1].get<double>()};
        return BSplineCurve<2>(std::move(kv), std::move(control));
    }
    if (dim == 3) {
        std::vector<Vec3> control(cps.size());
        for (std::size_t i = 0; i < cps.size(); ++i)
            control[i] = {cps[i][0].get<double>(), cps[i][1].get<double>(),
                          cps[i][2].get<double>()};
        return BSplineCurve<3>(std::move(kv), std::move(control));
    }
    throw FormatError("curve json: control points must be 2-D or 3-D");
}

inline void save_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out.flush()) throw IoError("failed writing " + path.string());
}

inline std::string load_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

}  // namespace knotfit

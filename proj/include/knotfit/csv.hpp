#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "number_io.hpp"

namespace knotfit {

// A dataset is a homogeneous list of 2-D or 3-D points, ordered along the curve.
using PointData = std::variant<std::vector<Vec2>, std::vector<Vec3>>;

inline std::size_t point_count(const PointData& data) {
    return std::visit([](const auto& v) { return v.size(); }, data);
}

inline int dimension(const PointData& data) {
    return std::visit([](const auto& v) { return static_cast<int>(v[0].dim); }, data);
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

}  // namespace detail

// Rows of 2 or 3 comma-separated reals, one point per line. A non-numeric
// first row is taken as a header and skipped; blank lines are ignored.
inline PointData parse_points_csv(std::istream& in, const std::string& source) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    bool first_content_row = true;
    std::size_t columns = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty()) continue;
        const auto fields = detail::split_fields(stripped);

        std::vector<double> row;
        row.reserve(fields.size());
        bool numeric = true;
        for (const auto field : fields) {
            if (const auto v = parse_double(field)) {
                row.push_back(*v);
            } else {
                numeric = false;
                break;
            }
        }

        if (!numeric) {
            if (first_content_row) {  // header row
                first_content_row = false;
                continue;
            }
            throw FormatError(source, line_no, "cell is not a number");
        }
        if (row.size() != 2 && row.size() != 3)
            throw FormatError(source, line_no, "expected 2 or 3 columns, got " +
                                                   std::to_string(row.size()));
        if (rows.empty()) {
            columns = row.size();
        } else if (row.size() != columns) {
            throw FormatError(source, line_no,
                              "mixed dimensionality: expected " + std::to_string(columns) +
                                  " columns, got " + std::to_string(row.size()));
        }
        first_content_row = false;
        rows.push_back(std::move(row));
    }

    if (rows.size() < 2) throw FormatError(source, line_no, "need at least 2 data rows");

    if (columns == 2) {
        std::vector<Vec2> points(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) points[i] = {rows[i][0], rows[i][1]};
        return points;
    }
    std::vector<Vec3> points(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        points[i] = {rows[i][0], rows[i][1], rows[i][2]};
    return points;
}

inline PointData load_points_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_points_csv(in, path.string());
}

inline void write_points_csv(std::ostream& out, const PointData& data) {
    std::visit(
        [&](const auto& points) {
            for (const auto& p : points) {
                for (std::size_t i = 0; i < p.dim; ++i) {
                    if (i) out << ',';
                    out << format_double(p[i]);
                }
                out << '\n';
            }
        },
        data);
}

inline void save_points_csv(const std::filesystem::path& path, const PointData& data) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_points_csv(out, data);
    if (!out.flush()) throw IoError("failed writing " + path.string());
}

}  // namespace knotfit

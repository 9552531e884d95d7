#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "number_io.hpp"

namespace knotfit {

inline constexpr std::string_view kResultsCsvHeader =
    "iterations,method,rmse,euclidean_distance,control_points,cost,fitness,seed,wall_time_ms";

struct ResultRow {
    int iterations = 0;
    std::string method;
    double rmse = 0.0;
    double euclidean_distance = 0.0;
    int control_points = 0;
    double cost = 0.0;
    double fitness = 0.0;
    std::uint64_t seed = 0;
    double wall_time_ms = 0.0;
};

struct ResultsTable {
    std::vector<ResultRow> rows;
};

inline std::string results_to_csv(const ResultsTable& table) {
    std::ostringstream out;
    out << kResultsCsvHeader << '\n';
    for (const auto& r : table.rows) {
        out << r.iterations << ',' << r.method << ',' << format_double(r.rmse) << ','
            << format_double(r.euclidean_distance) << ',' << r.control_points << ','
            << format_double(r.cost) << ',' << format_double(r.fitness) << ',' << r.seed << ','
            << format_double(r.wall_time_ms) << '\n';
    }
    return out.str();
}

// Infinite values (infeasible rows) serialize as JSON null.
inline nlohmann::json results_to_json(const ResultsTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
        rows.push_back({{"iterations", r.iterations},
                        {"method", r.method},
                        {"rmse", r.rmse},
                        {"euclidean_distance", r.euclidean_distance},
                        {"control_points", r.control_points},
                        {"cost", r.cost},
                        {"fitness", r.fitness},
                        {"seed", r.seed},
                        {"wall_time_ms", r.wall_time_ms}});
    }
    return nlohmann::json{{"rows", std::move(rows)}};
}

// Parser for the CSV emitted above; used by tests and round-trip checks.
inline ResultsTable results_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || trim(line) != kResultsCsvHeader)
        throw FormatError("results csv: missing or wrong header");
    ResultsTable table;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::istringstream fields(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        if (cells.size() != 9) throw FormatError("results csv", line_no, "expected 9 columns");
        ResultRow r;
        r.iterations = std::stoi(cells[0]);
        r.method = cells[1];
        r.rmse = *parse_double(cells[2]);
        r.euclidean_distance = *parse_double(cells[3]);
        r.control_points = std::stoi(cells[4]);
        r.cost = *parse_double(cells[5]);
        r.fitness = *parse_double(cells[6]);
        r.seed = std::stoull(cells[7]);
        r.wall_time_ms = *parse_double(cells[8]);
        table.rows.push_back(std::move(r));
    }
    return table;
}

}  // namespace knotfit

#include "io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <unordered_set>

#include "errors.hpp"

namespace cce {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::optional<double> parse_number(const std::string& field) {
    if (field.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || errno == ERANGE) return std::nullopt;
    return value;
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    throw IoError(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::pair<int, std::string>> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path + ": cannot open file");
    std::vector<std::pair<int, std::string>> lines;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (trim(line).empty()) continue;
        lines.emplace_back(number, line);
    }
    return lines;
}

}  // namespace

PointSet load_points_csv(const std::string& path, bool leading_id_column) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw IoError(path + ": file contains no data rows");

    std::vector<double> coords;
    std::vector<std::string> ids;
    int dim = -1;
    bool first_data_row = true;

    for (std::size_t row = 0; row < lines.size(); ++row) {
        const auto& [line_no, text] = lines[row];
        auto fields = split_fields(text);
        std::size_t value_begin = leading_id_column ? 1 : 0;
        if (fields.size() <= value_begin) fail(path, line_no, "row has no coordinate fields");

        if (row == 0) {
            // Header row: any non-numeric coordinate field.
            bool numeric = true;
            for (std::size_t f = value_begin; f < fields.size(); ++f) {
                if (!parse_number(fields[f])) {
                    numeric = false;
                    break;
                }
            }
            if (!numeric) continue;  // column names; nothing else uses them
        }

        const int row_dim = static_cast<int>(fields.size() - value_begin);
        if (first_data_row) {
            dim = row_dim;
            first_data_row = false;
        } else if (row_dim != dim) {
            fail(path, line_no, "expected " + std::to_string(dim) + " coordinates, got " +
                                    std::to_string(row_dim));
        }
        if (leading_id_column) ids.push_back(fields[0]);
        for (std::size_t f = value_begin; f < fields.size(); ++f) {
            const auto value = parse_number(fields[f]);
            if (!value) fail(path, line_no, "invalid number '" + fields[f] + "'");
            coords.push_back(*value);
        }
    }
    if (first_data_row) throw IoError(path + ": file contains no data rows");

    try {
        return PointSet::create(std::move(coords), dim, std::move(ids));
    } catch (const Error& e) {
        throw IoError(path + ": " + e.what());
    }
}

Matrix load_matrix_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw IoError(path + ": file contains no data rows");
    const int n = static_cast<int>(lines.size());

    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& [line_no, text] = lines[i];
        const auto fields = split_fields(text);
        if (static_cast<int>(fields.size()) != n) {
            fail(path, line_no, "matrix of " + std::to_string(n) + " rows needs " +
                                    std::to_string(n) + " columns per row, got " +
                                    std::to_string(fields.size()));
        }
        for (int j = 0; j < n; ++j) {
            const auto value = parse_number(fields[j]);
            if (!value) fail(path, line_no, "invalid number '" + fields[j] + "'");
            m(i, j) = *value;
        }
    }
    return m;
}

SimilarityMatrix load_similarity_csv(const std::string& path) {
    Matrix m = load_matrix_csv(path);
    try {
        return SimilarityMatrix::from_matrix(std::move(m));
    } catch (const Error& e) {
        throw IoError(path + ": " + e.what());
    }
}

RouteNetwork load_routes(const std::string& path) {
    const auto lines = read_lines(path);

    std::vector<std::string> stations;
    std::unordered_set<std::string> seen;
    std::vector<std::vector<std::string>> routes;

    for (const auto& [line_no, text] : lines) {
        if (trim(text).front() == '#') continue;
        auto stops = split_fields(text);
        if (stops.size() < 2) fail(path, line_no, "a route needs at least two stations");
        std::unordered_set<std::string> in_route;
        for (const auto& stop : stops) {
            if (stop.empty()) fail(path, line_no, "empty station identifier");
            if (!in_route.insert(stop).second) {
                fail(path, line_no, "route repeats station '" + stop + "'");
            }
            if (seen.insert(stop).second) stations.push_back(stop);
        }
        routes.push_back(std::move(stops));
    }
    if (routes.empty()) throw IoError(path + ": file contains no routes");

    try {
        return RouteNetwork::create(std::move(stations), std::move(routes));
    } catch (const Error& e) {
        throw IoError(path + ": " + e.what());
    }
}

}  // namespace cce

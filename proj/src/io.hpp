#pragma once

#include <string>

#include "similarity.hpp"

namespace cce {

// Point CSV: one row per point, comma-separated decimals. A first row with
// any non-numeric field is treated as a header and skipped. With
// leading_id_column the first field of each row is the point identifier.
PointSet load_points_csv(const std::string& path, bool leading_id_column = false);

// Matrix CSV: n rows of n comma-separated decimals. Returns the raw
// entries; pass them through SimilarityMatrix::from_matrix to validate.
Matrix load_matrix_csv(const std::string& path);

// load_matrix_csv + validation, with the file named in any error.
SimilarityMatrix load_similarity_csv(const std::string& path);

// Route file: one route per line, comma-separated station identifiers in
// stop order. Blank lines and lines starting with '#' are ignored.
// Stations are numbered in order of first appearance.
RouteNetwork load_routes(const std::string& path);

}  // namespace cce

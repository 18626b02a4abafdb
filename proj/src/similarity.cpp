#include "similarity.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"

namespace cce {

namespace {

std::string index_name(int i) { return std::to_string(i); }

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = index_name(i);
    return labels;
}

}  // namespace

PointSet PointSet::create(std::vector<double> coords, int dim, std::vector<std::string> ids) {
    if (dim < 1) throw ParamError("point dimension must be >= 1, got " + std::to_string(dim));
    if (coords.empty() || coords.size() % static_cast<std::size_t>(dim) != 0) {
        throw ValidationError("coordinate buffer of size " + std::to_string(coords.size()) +
                              " is not a nonempty multiple of dimension " + std::to_string(dim));
    }
    const int n = static_cast<int>(coords.size() / dim);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!std::isfinite(coords[i])) {
            throw ValidationError("non-finite coordinate at point " +
                                  std::to_string(i / dim) + ", component " +
                                  std::to_string(i % dim));
        }
    }
    if (ids.empty()) {
        ids = default_labels(n);
    } else if (static_cast<int>(ids.size()) != n) {
        throw ValidationError("got " + std::to_string(ids.size()) + " identifiers for " +
                              std::to_string(n) + " points");
    }
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) throw ValidationError("duplicate point identifier '" + id + "'");
    }

    PointSet p;
    p.n_ = n;
    p.dim_ = dim;
    p.coords_ = std::move(coords);
    p.ids_ = std::move(ids);
    return p;
}

double PointSet::distance(int i, int j) const {
    const double* a = point(i);
    const double* b = point(j);
    double sq = 0.0;
    for (int d = 0; d < dim_; ++d) {
        const double diff = a[d] - b[d];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

SimilarityMatrix::SimilarityMatrix(Matrix m, std::vector<std::string> labels)
    : m_(std::move(m)), labels_(std::move(labels)) {
    if (labels_.empty()) labels_ = default_labels(m_.order());
}

SimilarityMatrix SimilarityMatrix::from_matrix(Matrix entries, std::vector<std::string> labels) {
    const int n = entries.order();
    if (n < 1) throw ValidationError("similarity matrix must have order >= 1");
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
        throw ValidationError("got " + std::to_string(labels.size()) + " labels for order " +
                              std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = entries(i, j);
            if (!std::isfinite(v)) {
                throw ValidationError("non-finite entry at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
            if (v < 0.0) {
                throw ValidationError("negative entry " + std::to_string(v) + " at (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double a = entries(i, j);
            const double b = entries(j, i);
            const double tol = 1e-12 * std::max(1.0, std::abs(a));
            if (std::abs(a - b) > tol) {
                throw ValidationError("asymmetric entries at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + "): " + std::to_string(a) + " vs " +
                                      std::to_string(b));
            }
        }
    }
    entries.symmetrize();
    return SimilarityMatrix(std::move(entries), std::move(labels));
}

SimilarityMatrix gaussian_kernel(const PointSet& points, double sigma) {
    if (!(sigma > 0.0)) throw ParamError("sigma must be positive, got " + std::to_string(sigma));
    const int n = points.size();
    const double inv = 1.0 / (sigma * sigma);
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double d = points.distance(i, j);
            const double s = std::exp(-d * d * inv);
            m(i, j) = s;
            m(j, i) = s;
        }
    }
    return SimilarityMatrix(std::move(m), points.ids());
}

double auto_sigma(const PointSet& points) {
    const int n = points.size();
    if (n < 2) throw ParamError("auto sigma needs at least two points");
    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dists.push_back(points.distance(i, j));

    const std::size_t mid = dists.size() / 2;
    std::nth_element(dists.begin(), dists.begin() + mid, dists.end());
    double median = dists[mid];
    if (dists.size() % 2 == 0) {
        const double lower = *std::max_element(dists.begin(), dists.begin() + mid);
        median = (lower + median) / 2.0;
    }
    if (!(median > 0.0)) throw ParamError("auto sigma failed: median pairwise distance is zero");
    return median;
}

SimilarityMatrix njw_normalize(const SimilarityMatrix& s) {
    const int n = s.order();
    std::vector<double> inv_sqrt(n);
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += s.at(i, j);
        if (!(sum > 0.0)) {
            throw ValidationError("zero row sum at point " + std::to_string(i) + " ('" +
                                  s.labels()[i] + "'): cannot normalize an isolated point");
        }
        inv_sqrt[i] = 1.0 / std::sqrt(sum);
    }
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double v = s.at(i, j) * (inv_sqrt[i] * inv_sqrt[j]);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return SimilarityMatrix(std::move(m), s.labels());
}

RouteNetwork RouteNetwork::create(std::vector<std::string> stations,
                                  std::vector<std::vector<std::string>> routes) {
    if (stations.empty()) throw ValidationError("route network needs at least one station");
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(stations.size()); ++i) {
        if (!index.emplace(stations[i], i).second) {
            throw ValidationError("duplicate station '" + stations[i] + "'");
        }
    }

    RouteNetwork net;
    net.stations_ = std::move(stations);
    net.routes_.reserve(routes.size());
    for (std::size_t r = 0; r < routes.size(); ++r) {
        const auto& stops = routes[r];
        if (stops.size() < 2) {
            throw ValidationError("route " + std::to_string(r) + " has fewer than two stops");
        }
        std::vector<int> ids;
        std::unordered_set<int> seen;
        ids.reserve(stops.size());
        for (const auto& name : stops) {
            auto it = index.find(name);
            if (it == index.end()) {
                throw ValidationError("route " + std::to_string(r) + " references unknown station '" +
                                      name + "'");
            }
            if (!seen.insert(it->second).second) {
                throw ValidationError("route " + std::to_string(r) + " repeats station '" + name + "'");
            }
            ids.push_back(it->second);
        }
        net.routes_.push_back(std::move(ids));
    }
    return net;
}

SimilarityMatrix RouteNetwork::to_similarity() const {
    const int n = station_count();
    Matrix m(n);
    for (const auto& stops : routes_) {
        const int len = static_cast<int>(stops.size());
        for (int s = 0; s + 1 < len; ++s) {
            m(stops[s], stops[s + 1]) += 1.0;
            m(stops[s + 1], stops[s]) += 1.0;
        }
        m(stops.front(), stops.front()) += static_cast<double>(len);
        m(stops.back(), stops.back()) += static_cast<double>(len);
        for (int s = 1; s + 1 < len; ++s) m(stops[s], stops[s]) += 2.0;
    }
    return SimilarityMatrix(std::move(m), stations_);
}

}  // namespace cce

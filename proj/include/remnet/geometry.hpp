#pragma once

#include <string>
#include <vector>

namespace remnet {

// 2-D point in meters.
struct Position {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

// Unordered collection of UE coordinates. Stored as a vector for locality;
// element order carries no meaning. Every operation below requires a
// non-empty set and throws std::invalid_argument otherwise.
using PositionSet = std::vector<Position>;

// The four point-set distance metrics the entry matching can run on.
enum class MetricKind {
    Hausdorff,
    Mean,
    Average,
    SumOfMinimums,
};

double euclidean(const Position& a, const Position& b) noexcept;

// max over points of `a` of the distance to their nearest neighbor in `b`.
double directed_hausdorff(const PositionSet& a, const PositionSet& b);

// Symmetric Hausdorff distance: max of the two directed distances.
double hausdorff(const PositionSet& a, const PositionSet& b);

// Distance between the two set centroids.
double mean_distance(const PositionSet& a, const PositionSet& b);

// Mean of all |a|*|b| pairwise distances. Note d(a, a) > 0 for sets with
// at least two distinct points.
double average_distance(const PositionSet& a, const PositionSet& b);

// Mean nearest-neighbor distance, averaged over both directions:
// 0.5 * (mean_a min-dist into b + mean_b min-dist into a).
double sum_of_minimums(const PositionSet& a, const PositionSet& b);

// Dispatch on `kind`.
double set_distance(MetricKind kind, const PositionSet& a, const PositionSet& b);

std::string to_string(MetricKind kind);
MetricKind metric_from_string(const std::string& name);

} // namespace remnet

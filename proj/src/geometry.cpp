#include "remnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace remnet {

namespace {

void require_non_empty(const PositionSet& s, const char* which) {
    if (s.empty()) {
        throw std::invalid_argument(std::string("empty position set: ") + which);
    }
}

double nearest_distance(const Position& p, const PositionSet& set) noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (const Position& q : set) {
        best = std::min(best, euclidean(p, q));
    }
    return best;
}

} // namespace

double euclidean(const Position& a, const Position& b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

double directed_hausdorff(const PositionSet& a, const PositionSet& b) {
    require_non_empty(a, "a");
    require_non_empty(b, "b");
    double worst = 0.0;
    for (const Position& p : a) {
        worst = std::max(worst, nearest_distance(p, b));
    }
    return worst;
}

double hausdorff(const PositionSet& a, const PositionSet& b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double mean_distance(const PositionSet& a, const PositionSet& b) {
    require_non_empty(a, "a");
    require_non_empty(b, "b");
    Position ca;
    for (const Position& p : a) {
        ca.x += p.x;
        ca.y += p.y;
    }
    ca.x /= static_cast<double>(a.size());
    ca.y /= static_cast<double>(a.size());
    Position cb;
    for (const Position& p : b) {
        cb.x += p.x;
        cb.y += p.y;
    }
    cb.x /= static_cast<double>(b.size());
    cb.y /= static_cast<double>(b.size());
    return euclidean(ca, cb);
}

double average_distance(const PositionSet& a, const PositionSet& b) {
    require_non_empty(a, "a");
    require_non_empty(b, "b");
    double sum = 0.0;
    for (const Position& p : a) {
        for (const Position& q : b) {
            sum += euclidean(p, q);
        }
    }
    return sum / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double sum_of_minimums(const PositionSet& a, const PositionSet& b) {
    require_non_empty(a, "a");
    require_non_empty(b, "b");
    double forward = 0.0;
    for (const Position& p : a) {
        forward += nearest_distance(p, b);
    }
    forward /= static_cast<double>(a.size());
    double backward = 0.0;
    for (const Position& q : b) {
        backward += nearest_distance(q, a);
    }
    backward /= static_cast<double>(b.size());
    return 0.5 * (forward + backward);
}

double set_distance(MetricKind kind, const PositionSet& a, const PositionSet& b) {
    switch (kind) {
    case MetricKind::Hausdorff:
        return hausdorff(a, b);
    case MetricKind::Mean:
        return mean_distance(a, b);
    case MetricKind::Average:
        return average_distance(a, b);
    case MetricKind::SumOfMinimums:
        return sum_of_minimums(a, b);
    }
    throw std::invalid_argument("unknown metric kind");
}

std::string to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::Hausdorff:
        return "hausdorff";
    case MetricKind::Mean:
        return "mean";
    case MetricKind::Average:
        return "average";
    case MetricKind::SumOfMinimums:
        return "som";
    }
    throw std::invalid_argument("unknown metric kind");
}

MetricKind metric_from_string(const std::string& name) {
    if (name == "hausdorff") return MetricKind::Hausdorff;
    if (name == "mean") return MetricKind::Mean;
    if (name == "average") return MetricKind::Average;
    if (name == "som" || name == "sum_of_minimums") return MetricKind::SumOfMinimums;
    throw std::invalid_argument("unknown metric name: " + name);
}

} // namespace remnet

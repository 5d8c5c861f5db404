#include "lrpdmap/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace lrpdmap {

Polyline::Polyline(std::vector<Point2> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw GeometryError("Polyline: need at least 2 points, got " +
                        std::to_string(points_.size()));
  }
  for (const Point2& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw GeometryError("Polyline: non-finite coordinate");
    }
  }
}

double Polyline::arc_length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    total += std::hypot(points_[i].x - points_[i - 1].x, points_[i].y - points_[i - 1].y);
  }
  return total;
}

Eigen::VectorXd Polyline::flatten() const {
  Eigen::VectorXd flat(2 * points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    flat(2 * i) = points_[i].x;
    flat(2 * i + 1) = points_[i].y;
  }
  return flat;
}

Polyline Polyline::unflatten(const Eigen::VectorXd& flat) {
  if (flat.size() < 4 || flat.size() % 2 != 0) {
    throw GeometryError("unflatten: flat vector must have even length >= 4, got " +
                        std::to_string(flat.size()));
  }
  std::vector<Point2> pts(static_cast<std::size_t>(flat.size() / 2));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pts[i] = {flat(2 * i), flat(2 * i + 1)};
  }
  return Polyline(std::move(pts));
}

Polyline resample(const Polyline& p, int n_target) {
  if (n_target < 2) {
    throw GeometryError("resample: n_target must be >= 2, got " + std::to_string(n_target));
  }
  const auto& pts = p.points();
  const int n = p.n_points();

  std::vector<double> cumulative(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i < n; ++i) {
    cumulative[i] = cumulative[i - 1] +
                    std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
  }
  const double total = cumulative.back();
  if (total <= 0.0) {
    throw GeometryError("resample: zero-length polyline");
  }

  std::vector<Point2> out(static_cast<std::size_t>(n_target));
  out.front() = pts.front();
  out.back() = pts.back();
  int segment = 0;
  for (int i = 1; i + 1 < n_target; ++i) {
    const double target = total * static_cast<double>(i) / (n_target - 1);
    while (segment + 2 < n && cumulative[segment + 1] < target) {
      ++segment;
    }
    const double seg_len = cumulative[segment + 1] - cumulative[segment];
    const double t = seg_len > 0.0 ? (target - cumulative[segment]) / seg_len : 0.0;
    out[static_cast<std::size_t>(i)] = {
        pts[segment].x + t * (pts[segment + 1].x - pts[segment].x),
        pts[segment].y + t * (pts[segment + 1].y - pts[segment].y)};
  }
  return Polyline(std::move(out));
}

ClassProbs::ClassProbs(Eigen::VectorXd probs) : probs_(std::move(probs)) {
  if (probs_.size() < 1) {
    throw std::invalid_argument("ClassProbs: empty vector");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    const double v = probs_(i);
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("ClassProbs: entry " + std::to_string(i) +
                                  " outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("ClassProbs: entries sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-9");
  }
}

ClassProbs ClassProbs::one_hot(int class_index, int n_classes) {
  if (class_index < 0 || class_index >= n_classes) {
    throw std::invalid_argument("ClassProbs::one_hot: index out of range");
  }
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n_classes);
  v(class_index) = 1.0;
  return ClassProbs(std::move(v));
}

int ClassProbs::argmax() const {
  Eigen::Index idx = 0;
  probs_.maxCoeff(&idx);
  return static_cast<int>(idx);
}

namespace {
constexpr const char* kClassNames[kDefaultClassCount] = {"divider", "boundary",
                                                         "crossing", "centerline"};
}

const char* class_name(int class_index) {
  if (class_index < 0 || class_index >= kDefaultClassCount) {
    throw std::invalid_argument("class_name: index out of range");
  }
  return kClassNames[class_index];
}

int class_index_from_name(const std::string& name) {
  for (int i = 0; i < kDefaultClassCount; ++i) {
    if (name == kClassNames[i]) {
      return i;
    }
  }
  throw std::invalid_argument("class_index_from_name: unknown class '" + name + "'");
}

int Scenario::n_classes() const {
  if (metadata.is_object() && metadata.contains("n_classes")) {
    return metadata.at("n_classes").get<int>();
  }
  return kDefaultClassCount;
}

void Scenario::validate() const {
  const int classes = n_classes();
  if (classes < 1) {
    throw SchemaError("Scenario: n_classes must be >= 1");
  }
  for (std::size_t i = 0; i < gt_elements.size(); ++i) {
    const int c = gt_elements[i].class_index;
    if (c < 0 || c >= classes) {
      throw SchemaError("Scenario: gt element " + std::to_string(i) + " has class " +
                        std::to_string(c) + " outside [0, " + std::to_string(classes) + ")");
    }
  }
  if (!agents.empty()) {
    const int horizon = agents.front().future_gt.n_points();
    for (std::size_t i = 1; i < agents.size(); ++i) {
      if (agents[i].future_gt.n_points() != horizon) {
        throw SchemaError("Scenario: agent " + std::to_string(i) +
                          " future horizon differs from agent 0");
      }
    }
  }
}

} // namespace lrpdmap

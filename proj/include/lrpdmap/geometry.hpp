#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrpdmap/errors.hpp"

namespace lrpdmap {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Ordered sequence of BEV points describing one map element. Immutable after
// construction; at least two points, all coordinates finite.
//
// The flattened form interleaves coordinates as (x1, y1, ..., xN, yN); every
// covariance index downstream assumes this order.
class Polyline {
public:
  explicit Polyline(std::vector<Point2> points);

  int n_points() const { return static_cast<int>(points_.size()); }
  const std::vector<Point2>& points() const { return points_; }
  const Point2& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

  /// Sum of segment lengths in meters.
  double arc_length() const;

  Eigen::VectorXd flatten() const;
  static Polyline unflatten(const Eigen::VectorXd& flat);

private:
  std::vector<Point2> points_;
};

inline Eigen::VectorXd flatten(const Polyline& p) { return p.flatten(); }

/// Resamples to n_target points at equal arc-length spacing along the
/// piecewise-linear input; endpoints are preserved exactly.
///
/// Resampled vertices generally skip the input's interior vertices, so the
/// output chord length can be shorter than the input's for curved inputs;
/// it is identical when the requested spacing lands on every input vertex
/// (straight inputs, or uniform inputs with n_target-1 a multiple of N-1).
Polyline resample(const Polyline& p, int n_target);

// Class-probability vector on the standard simplex.
class ClassProbs {
public:
  explicit ClassProbs(Eigen::VectorXd probs);
  static ClassProbs one_hot(int class_index, int n_classes);

  int n_classes() const { return static_cast<int>(probs_.size()); }
  const Eigen::VectorXd& probs() const { return probs_; }
  double prob(int i) const { return probs_(i); }
  int argmax() const;

private:
  Eigen::VectorXd probs_;
};

inline constexpr int kDefaultClassCount = 4;

/// Category names mirror the nuScenes-style map classes.
const char* class_name(int class_index);
int class_index_from_name(const std::string& name);

struct GtElement {
  int class_index = 0;
  Polyline line;
};

struct Agent {
  Polyline history;
  Polyline future_gt;
};

// Ground-truth map elements plus agent trajectories. `metadata` is a
// string-keyed free-form JSON object; generators use it to carry noise
// payloads (fitting targets and their oracle covariance) alongside the
// scenario proper.
struct Scenario {
  std::vector<GtElement> gt_elements;
  std::vector<Agent> agents;
  nlohmann::json metadata = nlohmann::json::object();

  int n_classes() const;

  /// Checks class indices against n_classes and that all agent futures share
  /// one horizon. Called at deserialization and generation boundaries.
  void validate() const;
};

} // namespace lrpdmap

#pragma once

#include <functional>
#include <string_view>

namespace tgospa {

/// Axis-aligned rectangle in image coordinates, stored as
/// (left, top, width, height) to match the MOTChallenge column layout.
/// Width and height must be strictly positive and all fields finite;
/// degenerate boxes are rejected at construction.
class BoundingBox {
 public:
  BoundingBox(double left, double top, double width, double height);

  double left() const { return left_; }
  double top() const { return top_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double right() const { return left_ + width_; }
  double bottom() const { return top_ + height_; }
  double center_x() const { return left_ + 0.5 * width_; }
  double center_y() const { return top_ + 0.5 * height_; }
  double area() const { return width_ * height_; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;

 private:
  double left_;
  double top_;
  double width_;
  double height_;
};

/// Intersection over union, in [0, 1]. 1 iff the boxes coincide, 0 iff the
/// overlap has zero area (touching edges count as no overlap).
double iou(const BoundingBox& x, const BoundingBox& y);

/// 1 - IoU. A scale-invariant metric on boxes, in [0, 1].
double iou_distance(const BoundingBox& x, const BoundingBox& y);

/// Hausdorff metric between the filled rectangles under the maximum metric
/// on the plane; reduces to per-dimension end-point differences.
double hausdorff_distance(const BoundingBox& x, const BoundingBox& y);

/// 2-Wasserstein metric between uniform distributions on the rectangles
/// with Euclidean ground metric. Equals the Euclidean distance between the
/// vectors (cx, cy, w/sqrt(12), h/sqrt(12)).
double wasserstein_distance(const BoundingBox& x, const BoundingBox& y);

/// The base metrics available on the space of boxes.
enum class BaseMetric { IoUInduced, Hausdorff, Wasserstein };

/// Any metric d(x, y) >= 0 on boxes. Custom callables let tests plug in
/// e.g. a pure center-point metric; the solvers only rely on the metric
/// axioms.
using BoxDistance = std::function<double(const BoundingBox&, const BoundingBox&)>;

BoxDistance base_metric_fn(BaseMetric m);
std::string_view to_string(BaseMetric m);
BaseMetric base_metric_from_string(std::string_view name);

}  // namespace tgospa

#include "tgospa/box.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tgospa {

BoundingBox::BoundingBox(double left, double top, double width, double height)
    : left_(left), top_(top), width_(width), height_(height) {
  if (!(std::isfinite(left) && std::isfinite(top) && std::isfinite(width) &&
        std::isfinite(height))) {
    throw std::invalid_argument("BoundingBox: fields must be finite");
  }
  if (!(width > 0.0 && height > 0.0)) {
    throw std::invalid_argument("BoundingBox: width and height must be positive");
  }
}

double iou(const BoundingBox& x, const BoundingBox& y) {
  const double iw = std::min(x.right(), y.right()) - std::max(x.left(), y.left());
  if (iw <= 0.0) return 0.0;
  const double ih = std::min(x.bottom(), y.bottom()) - std::max(x.top(), y.top());
  if (ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  // Areas from the same endpoint differences as the intersection, so that
  // identical boxes give exactly 1.
  const double area_x = (x.right() - x.left()) * (x.bottom() - x.top());
  const double area_y = (y.right() - y.left()) * (y.bottom() - y.top());
  const double uni = area_x + area_y - inter;
  return inter / uni;
}

double iou_distance(const BoundingBox& x, const BoundingBox& y) {
  return 1.0 - iou(x, y);
}

double hausdorff_distance(const BoundingBox& x, const BoundingBox& y) {
  const double dx = std::max(std::abs(x.left() - y.left()), std::abs(x.right() - y.right()));
  const double dy = std::max(std::abs(x.top() - y.top()), std::abs(x.bottom() - y.bottom()));
  return std::max(dx, dy);
}

double wasserstein_distance(const BoundingBox& x, const BoundingBox& y) {
  const double cx = x.center_x() - y.center_x();
  const double cy = x.center_y() - y.center_y();
  const double hw = 0.5 * (x.width() - y.width());
  const double hh = 0.5 * (x.height() - y.height());
  return std::sqrt(cx * cx + cy * cy + (hw * hw + hh * hh) / 3.0);
}

BoxDistance base_metric_fn(BaseMetric m) {
  switch (m) {
    case BaseMetric::IoUInduced:
      return [](const BoundingBox& a, const BoundingBox& b) { return iou_distance(a, b); };
    case BaseMetric::Hausdorff:
      return [](const BoundingBox& a, const BoundingBox& b) { return hausdorff_distance(a, b); };
    case BaseMetric::Wasserstein:
      return [](const BoundingBox& a, const BoundingBox& b) { return wasserstein_distance(a, b); };
  }
  throw std::invalid_argument("unknown base metric");
}

std::string_view to_string(BaseMetric m) {
  switch (m) {
    case BaseMetric::IoUInduced: return "iou";
    case BaseMetric::Hausdorff: return "hausdorff";
    case BaseMetric::Wasserstein: return "wasserstein";
  }
  return "?";
}

BaseMetric base_metric_from_string(std::string_view name) {
  if (name == "iou") return BaseMetric::IoUInduced;
  if (name == "hausdorff") return BaseMetric::Hausdorff;
  if (name == "wasserstein") return BaseMetric::Wasserstein;
  throw std::invalid_argument("unknown base metric: " + std::string(name));
}

}  // namespace tgospa

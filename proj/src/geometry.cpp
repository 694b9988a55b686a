#include "uiparse/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace uiparse::geometry {

namespace {

void require_valid(const BBox& box, const char* who) {
  if (!box.valid())
    throw std::invalid_argument(std::string(who) + ": degenerate box");
}

double intersection_area(const BBox& a, const BBox& b) {
  const double w = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const double h = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

}  // namespace

double iou(const BBox& a, const BBox& b) {
  require_valid(a, "iou");
  require_valid(b, "iou");
  const double inter = intersection_area(a, b);
  const double uni = a.area() + b.area() - inter;
  return inter / uni;
}

double giou(const BBox& a, const BBox& b) {
  require_valid(a, "giou");
  require_valid(b, "giou");
  const double inter = intersection_area(a, b);
  const double uni = a.area() + b.area() - inter;
  const double hull_w = std::max(a.x2, b.x2) - std::min(a.x1, b.x1);
  const double hull_h = std::max(a.y2, b.y2) - std::min(a.y1, b.y1);
  const double hull = hull_w * hull_h;
  return inter / uni - (hull - uni) / hull;
}

double giou_loss(const BBox& a, const BBox& b) { return 1.0 - giou(a, b); }

double iou_loss(const BBox& a, const BBox& b) { return 1.0 - iou(a, b); }

double l1_box(const BBox& a, const BBox& b) {
  return std::abs(a.x1 - b.x1) + std::abs(a.y1 - b.y1) +
         std::abs(a.x2 - b.x2) + std::abs(a.y2 - b.y2);
}

bool contains(const BBox& box, const Point& p) {
  return p.x >= box.x1 && p.x <= box.x2 && p.y >= box.y1 && p.y <= box.y2;
}

Point center(const BBox& box) { return Point{box.cx(), box.cy()}; }

std::vector<Element> nms(const std::vector<Element>& elements,
                         const NmsConfig& cfg) {
  if (!cfg.valid()) throw std::invalid_argument("nms: bad config");
  for (const Element& el : elements) {
    if (!el.score) throw std::invalid_argument("nms: element without score");
    require_valid(el.box, "nms");
  }

  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const Element& ea = elements[a];
                     const Element& eb = elements[b];
                     if (*ea.score != *eb.score) return *ea.score > *eb.score;
                     if (cfg.tie_break == NmsTieBreak::ByScoreThenArea &&
                         ea.box.area() != eb.box.area())
                       return ea.box.area() > eb.box.area();
                     return a < b;
                   });

  std::vector<Element> kept;
  for (std::size_t idx : order) {
    const Element& cand = elements[idx];
    bool suppressed = false;
    for (const Element& k : kept) {
      if (cfg.class_aware && k.kind != cand.kind) continue;
      if (iou(k.box, cand.box) > cfg.iou_thresh) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(cand);
  }
  return kept;
}

}  // namespace uiparse::geometry

#pragma once

#include <vector>

#include "uiparse/core.hpp"

namespace uiparse::geometry {

enum class NmsTieBreak { ByScoreThenArea, ByScoreThenIndex };

struct NmsConfig {
  double iou_thresh = 0.5;  // in (0,1]
  NmsTieBreak tie_break = NmsTieBreak::ByScoreThenArea;
  // When true, suppression runs per element kind (text vs icon pools).
  bool class_aware = false;

  bool valid() const { return iou_thresh > 0.0 && iou_thresh <= 1.0; }
};

/// Intersection over union. Symmetric, in [0,1], 1 iff the boxes coincide.
double iou(const BBox& a, const BBox& b);

/// Generalized IoU: iou minus the enclosing-hull slack, in (-1, 1].
double giou(const BBox& a, const BBox& b);

/// 1 - giou, in [0, 2]. Zero iff the boxes coincide.
double giou_loss(const BBox& a, const BBox& b);

/// 1 - iou; the plain variant behind EvalConfig::box_loss.
double iou_loss(const BBox& a, const BBox& b);

/// Sum of absolute coordinate differences over (x1, y1, x2, y2).
double l1_box(const BBox& a, const BBox& b);

/// Closed-box containment: boundary points count as inside.
bool contains(const BBox& box, const Point& p);

Point center(const BBox& box);

// Greedy non-maximum suppression in descending score order. Every element
// must carry a score. Output is a subset of the input, still in descending
// score order, with pairwise IoU <= cfg.iou_thresh.
std::vector<Element> nms(const std::vector<Element>& elements,
                         const NmsConfig& cfg);

}  // namespace uiparse::geometry

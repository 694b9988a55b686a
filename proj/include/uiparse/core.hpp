#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uiparse {

// Axis-aligned box in normalized screen coordinates, fractions of the
// screen width/height. All localization in the toolkit runs on this type;
// pixel boxes are converted on ingestion.
struct BBox {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  double cx() const { return 0.5 * (x1 + x2); }
  double cy() const { return 0.5 * (y1 + y2); }

  // 0 <= x1 < x2 <= 1 and 0 <= y1 < y2 <= 1: strictly positive area.
  bool valid() const {
    return x1 >= 0.0 && x1 < x2 && x2 <= 1.0 && y1 >= 0.0 && y1 < y2 &&
           y2 <= 1.0;
  }

  bool operator==(const BBox&) const = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool valid() const { return x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0; }

  bool operator==(const Point&) const = default;
};

enum class ElementKind { Text, Icon };

const char* to_string(ElementKind kind);
std::optional<ElementKind> element_kind_from_string(std::string_view s);

// One UI element: the unit of grounding and parsing.
struct Element {
  ElementKind kind = ElementKind::Text;
  std::string semantics;
  BBox box;
  std::optional<double> score;  // confidence in [0,1], required by nms

  bool operator==(const Element&) const = default;
};

enum class Platform { Mobile, Desktop, Web };
enum class Language { En, Zh };

const char* to_string(Platform p);
const char* to_string(Language l);
std::optional<Platform> platform_from_string(std::string_view s);
std::optional<Language> language_from_string(std::string_view s);

// An annotated interface: dimensions plus element list.
struct Screen {
  std::string id;
  int width_px = 0;
  int height_px = 0;
  Platform platform = Platform::Web;
  Language language = Language::En;
  std::vector<Element> elements;

  bool operator==(const Screen&) const = default;
};

// One grounding query. An absent target means the case tests rejection:
// the queried element does not exist on the screen.
struct GroundingCase {
  std::string screen_id;
  std::string query;
  std::optional<BBox> target;
  // Split annotations for reporting; resolved from the dataset when absent.
  std::optional<ElementKind> kind;
  std::optional<Platform> platform;
};

struct MatchPair {
  int gt_index = -1;
  int pred_index = -1;
  double cost = 0.0;
};

// Bipartite assignment between ground-truth and predicted elements.
// Each index appears in exactly one of pairs / unmatched_*.
struct MatchResult {
  std::vector<MatchPair> pairs;
  std::vector<int> unmatched_gt;
  std::vector<int> unmatched_pred;
};

enum class SemMethod { Exact, NormalizedEdit };
enum class PointRule { CenterInBox, IoUThresh };
enum class BoxLossKind { Giou, Iou };  // Iou kept as an ablation switch

struct EvalConfig {
  double mu = 0.55;                // match accept threshold on similarity
  double lambda_iou_match = 1.0;   // geometry weight in the matching cost
  double lambda_sem_match = 1.0;   // semantics weight in the matching cost
  double localize_iou_thresh = 0.5;
  SemMethod sem_method = SemMethod::NormalizedEdit;
  PointRule point_rule = PointRule::CenterInBox;
  BoxLossKind box_loss = BoxLossKind::Giou;
  // When true, localization counting keeps the semantic term in the
  // matching cost instead of the default geometry-only match.
  bool combined_cost_localization = false;

  bool valid() const {
    return mu >= 0.0 && mu <= 1.0 && lambda_iou_match >= 0.0 &&
           lambda_sem_match >= 0.0 && localize_iou_thresh > 0.0 &&
           localize_iou_thresh <= 1.0;
  }
};

struct Violation {
  std::string field;  // e.g. "elements[3].box"
  std::string rule;   // the invariant that failed, e.g. "x1 < x2"
};

// Pure invariant check; violations are data, not faults. An empty list
// means the screen satisfies every core invariant.
std::vector<Violation> validate_screen(const Screen& screen);

// Whitespace handling shared by validation and semantic comparison:
// trims ends and collapses internal runs to single spaces.
std::string trim_whitespace(std::string_view s);
std::string collapse_whitespace(std::string_view s);

}  // namespace uiparse

#include "uiparse/core.hpp"

#include <cctype>

namespace uiparse {

const char* to_string(ElementKind kind) {
  return kind == ElementKind::Text ? "text" : "icon";
}

std::optional<ElementKind> element_kind_from_string(std::string_view s) {
  if (s == "text") return ElementKind::Text;
  if (s == "icon") return ElementKind::Icon;
  return std::nullopt;
}

const char* to_string(Platform p) {
  switch (p) {
    case Platform::Mobile:
      return "mobile";
    case Platform::Desktop:
      return "desktop";
    default:
      return "web";
  }
}

const char* to_string(Language l) {
  return l == Language::En ? "en" : "zh";
}

std::optional<Platform> platform_from_string(std::string_view s) {
  if (s == "mobile") return Platform::Mobile;
  if (s == "desktop") return Platform::Desktop;
  if (s == "web") return Platform::Web;
  return std::nullopt;
}

std::optional<Language> language_from_string(std::string_view s) {
  if (s == "en") return Language::En;
  if (s == "zh") return Language::Zh;
  return std::nullopt;
}

std::string trim_whitespace(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = false;
  for (char c : trim_whitespace(s)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

namespace {

void check_box(const BBox& box, const std::string& field,
               std::vector<Violation>& out) {
  if (!(box.x1 >= 0.0)) out.push_back({field, "x1 >= 0"});
  if (!(box.x1 < box.x2)) out.push_back({field, "x1 < x2"});
  if (!(box.x2 <= 1.0)) out.push_back({field, "x2 <= 1"});
  if (!(box.y1 >= 0.0)) out.push_back({field, "y1 >= 0"});
  if (!(box.y1 < box.y2)) out.push_back({field, "y1 < y2"});
  if (!(box.y2 <= 1.0)) out.push_back({field, "y2 <= 1"});
}

}  // namespace

std::vector<Violation> validate_screen(const Screen& screen) {
  std::vector<Violation> out;
  if (screen.id.empty()) out.push_back({"id", "id non-empty"});
  if (screen.width_px <= 0) out.push_back({"width_px", "positive"});
  if (screen.height_px <= 0) out.push_back({"height_px", "positive"});
  for (std::size_t i = 0; i < screen.elements.size(); ++i) {
    const Element& el = screen.elements[i];
    const std::string prefix = "elements[" + std::to_string(i) + "]";
    if (trim_whitespace(el.semantics).empty())
      out.push_back({prefix + ".semantics", "semantics non-empty"});
    check_box(el.box, prefix + ".box", out);
    if (el.score && (*el.score < 0.0 || *el.score > 1.0))
      out.push_back({prefix + ".score", "score in [0,1]"});
  }
  return out;
}

}  // namespace uiparse

#include "uiparse/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "uiparse/geometry.hpp"

namespace uiparse::matcher {

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = s[i];
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6 && i + 1 < s.size()) {
      cp = (char32_t(c & 0x1F) << 6) | (s[i + 1] & 0x3F);
      len = 2;
    } else if ((c >> 4) == 0xE && i + 2 < s.size()) {
      cp = (char32_t(c & 0x0F) << 12) | (char32_t(s[i + 1] & 0x3F) << 6) |
           (s[i + 2] & 0x3F);
      len = 3;
    } else if ((c >> 3) == 0x1E && i + 3 < s.size()) {
      cp = (char32_t(c & 0x07) << 18) | (char32_t(s[i + 1] & 0x3F) << 12) |
           (char32_t(s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
      len = 4;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

namespace {

char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  // Latin-1 capitals, skipping the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  return cp;
}

std::vector<char32_t> normalize(std::string_view s) {
  std::vector<char32_t> cps = decode_utf8(collapse_whitespace(s));
  for (char32_t& cp : cps) cp = fold_case(cp);
  return cps;
}

// Two-row Levenshtein over code points.
std::size_t edit_distance(const std::vector<char32_t>& a,
                          const std::vector<char32_t>& b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cur[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t sub = prev[j] + (a[i] == b[j] ? 0 : 1);
      cur[j + 1] = std::min({cur[j] + 1, prev[j + 1] + 1, sub});
    }
    prev.swap(cur);
  }
  return prev[b.size()];
}

}  // namespace

double semantic_distance(std::string_view a, std::string_view b,
                         SemMethod method) {
  if (trim_whitespace(a).empty() || trim_whitespace(b).empty())
    throw std::invalid_argument("semantic_distance: empty string");
  const std::vector<char32_t> na = normalize(a);
  const std::vector<char32_t> nb = normalize(b);
  if (method == SemMethod::Exact) return na == nb ? 0.0 : 1.0;
  const std::size_t longest = std::max(na.size(), nb.size());
  return static_cast<double>(edit_distance(na, nb)) /
         static_cast<double>(longest);
}

namespace {

double box_loss(const BBox& a, const BBox& b, const EvalConfig& cfg) {
  return cfg.box_loss == BoxLossKind::Giou ? geometry::giou_loss(a, b)
                                           : geometry::iou_loss(a, b);
}

}  // namespace

CostMatrix build_cost_matrix(const std::vector<Element>& gt,
                             const std::vector<Element>& pred,
                             const EvalConfig& cfg) {
  CostMatrix cost(static_cast<int>(gt.size()), static_cast<int>(pred.size()));
  for (int i = 0; i < cost.rows; ++i) {
    for (int j = 0; j < cost.cols; ++j) {
      double c = cfg.lambda_iou_match * box_loss(gt[i].box, pred[j].box, cfg);
      if (cfg.lambda_sem_match > 0.0)
        c += cfg.lambda_sem_match *
             semantic_distance(gt[i].semantics, pred[j].semantics,
                               cfg.sem_method);
      cost.at(i, j) = c;
    }
  }
  return cost;
}

namespace {

// O(n^3) shortest augmenting path solver over a square matrix
// (Jonker-style row/column potentials).
std::vector<int> solve_square(const std::vector<double>& a, int n) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a[std::size_t(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

// Canonicalize cost ties: among equal-cost optima prefer the assignment
// where lower rows hold lower columns. Each swap strictly decreases the
// assignment vector lexicographically, so the loop terminates.
void canonicalize_ties(const CostMatrix& cost, std::vector<int>& row_to_col) {
  const int r = cost.rows;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < r; ++i) {
      if (row_to_col[i] < 0) continue;
      for (int j = i + 1; j < r; ++j) {
        if (row_to_col[j] < 0) continue;
        const int ci = row_to_col[i];
        const int cj = row_to_col[j];
        if (cj >= ci) continue;
        const double now = cost.at(i, ci) + cost.at(j, cj);
        const double swapped = cost.at(i, cj) + cost.at(j, ci);
        if (swapped == now) {
          row_to_col[i] = cj;
          row_to_col[j] = ci;
          changed = true;
        }
      }
    }
  }
}

}  // namespace

Assignment hungarian(const CostMatrix& cost) {
  for (double c : cost.data)
    if (!std::isfinite(c))
      throw std::invalid_argument("hungarian: non-finite cost entry");

  Assignment result;
  if (cost.rows == 0 || cost.cols == 0) return result;

  // Pad to square with a uniform sentinel larger than any real entry;
  // the padding cost is the same for every fake cell, so it cannot bias
  // which real pairs win.
  const int n = std::max(cost.rows, cost.cols);
  double sentinel = 1.0;
  for (double c : cost.data) sentinel = std::max(sentinel, c);
  sentinel = sentinel * n + 1.0;

  std::vector<double> padded(std::size_t(n) * n, sentinel);
  for (int i = 0; i < cost.rows; ++i)
    for (int j = 0; j < cost.cols; ++j)
      padded[std::size_t(i) * n + j] = cost.at(i, j);

  std::vector<int> row_to_col = solve_square(padded, n);
  row_to_col.resize(cost.rows);
  for (int& c : row_to_col)
    if (c >= cost.cols) c = -1;  // row landed on a padded column
  canonicalize_ties(cost, row_to_col);

  for (int i = 0; i < cost.rows; ++i) {
    if (row_to_col[i] < 0) continue;
    const double c = cost.at(i, row_to_col[i]);
    result.pairs.push_back({i, row_to_col[i], c});
    result.total_cost += c;
  }
  return result;
}

double pair_similarity(const Element& gt, const Element& pred,
                       const EvalConfig& cfg) {
  const double weight = cfg.lambda_iou_match + cfg.lambda_sem_match;
  if (weight <= 0.0) return 1.0;  // nothing to score against
  const double geom = 0.5 * (geometry::giou(gt.box, pred.box) + 1.0);
  double s = cfg.lambda_iou_match * geom;
  if (cfg.lambda_sem_match > 0.0)
    s += cfg.lambda_sem_match *
         (1.0 -
          semantic_distance(gt.semantics, pred.semantics, cfg.sem_method));
  return s / weight;
}

namespace {

MatchResult finalize(const std::vector<Element>& gt,
                     const std::vector<Element>& pred,
                     const EvalConfig& cfg,
                     const std::vector<MatchPair>& assigned) {
  MatchResult out;
  std::vector<char> gt_used(gt.size(), 0), pred_used(pred.size(), 0);
  for (const MatchPair& p : assigned) {
    if (pair_similarity(gt[p.gt_index], pred[p.pred_index], cfg) >= cfg.mu) {
      out.pairs.push_back(p);
      gt_used[p.gt_index] = 1;
      pred_used[p.pred_index] = 1;
    }
  }
  for (std::size_t i = 0; i < gt.size(); ++i)
    if (!gt_used[i]) out.unmatched_gt.push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < pred.size(); ++j)
    if (!pred_used[j]) out.unmatched_pred.push_back(static_cast<int>(j));
  return out;
}

}  // namespace

MatchResult match_elements(const std::vector<Element>& gt,
                           const std::vector<Element>& pred,
                           const EvalConfig& cfg) {
  const CostMatrix cost = build_cost_matrix(gt, pred, cfg);
  const Assignment assignment = hungarian(cost);
  return finalize(gt, pred, cfg, assignment.pairs);
}

MatchResult greedy_match(const std::vector<Element>& gt,
                         const std::vector<Element>& pred,
                         const EvalConfig& cfg) {
  const CostMatrix cost = build_cost_matrix(gt, pred, cfg);
  std::vector<char> claimed(pred.size(), 0);
  std::vector<MatchPair> assigned;
  for (int i = 0; i < cost.rows; ++i) {
    int best = -1;
    for (int j = 0; j < cost.cols; ++j) {
      if (claimed[j]) continue;
      if (best < 0 || cost.at(i, j) < cost.at(i, best)) best = j;
    }
    // The literal per-gt argmin: claim the cheapest unclaimed prediction
    // only when the pair passes the mu test, otherwise this gt stays
    // unmatched and the prediction stays available.
    if (best < 0 || pair_similarity(gt[i], pred[best], cfg) < cfg.mu)
      continue;
    claimed[best] = 1;
    assigned.push_back({i, best, cost.at(i, best)});
  }
  return finalize(gt, pred, cfg, assigned);
}

}  // namespace uiparse::matcher

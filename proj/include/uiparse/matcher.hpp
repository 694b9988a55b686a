#pragma once

#include <string_view>
#include <vector>

#include "uiparse/core.hpp"

namespace uiparse::matcher {

// Dense rows x cols matching-cost matrix, row-major. Rows index ground
// truth, columns index predictions. Entries must be finite and >= 0.
struct CostMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  CostMatrix() = default;
  CostMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0.0) {}

  double& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  double at(int r, int c) const { return data[std::size_t(r) * cols + c]; }
};

struct Assignment {
  std::vector<MatchPair> pairs;  // one per assigned row, cost from the matrix
  double total_cost = 0.0;
};

/// Distance in [0,1] between two semantics strings; 0 iff equal under the
/// method's normalization. NormalizedEdit is code-point Levenshtein over
/// case-folded, whitespace-collapsed text, divided by the longer length.
double semantic_distance(std::string_view a, std::string_view b,
                         SemMethod method);

/// Entry (i,j) = lambda_iou_match * box_loss(b_i, b_j)
///             + lambda_sem_match * semantic_distance(t_i, t_j).
CostMatrix build_cost_matrix(const std::vector<Element>& gt,
                             const std::vector<Element>& pred,
                             const EvalConfig& cfg);

// Optimal bipartite assignment minimizing total cost over min(rows, cols)
// pairs. Rectangular inputs are padded internally. Deterministic under
// cost ties: among equal-cost optima, lower row indices take lower column
// indices.
Assignment hungarian(const CostMatrix& cost);

// Similarity score in [0,1] used for the mu acceptance test:
//   S = (l_iou * (giou+1)/2 + l_sem * (1 - sem_dist)) / (l_iou + l_sem).
// A pair is retained iff S >= cfg.mu; this is the score-space reading of
// the published 0.55 threshold (see README).
double pair_similarity(const Element& gt, const Element& pred,
                       const EvalConfig& cfg);

/// Optimal assignment, then threshold-gated rejection: assigned pairs with
/// pair_similarity below cfg.mu are discarded into the unmatched sets.
MatchResult match_elements(const std::vector<Element>& gt,
                           const std::vector<Element>& pred,
                           const EvalConfig& cfg);

/// Per-ground-truth greedy argmin variant, kept for ablation against the
/// optimal matcher. Each gt element takes its cheapest unclaimed prediction
/// if the pair passes the mu test.
MatchResult greedy_match(const std::vector<Element>& gt,
                         const std::vector<Element>& pred,
                         const EvalConfig& cfg);

// Code-point decoding shared with the tests; invalid bytes decode as
// U+FFFD so distance stays total on arbitrary input.
std::vector<char32_t> decode_utf8(std::string_view s);

}  // namespace uiparse::matcher

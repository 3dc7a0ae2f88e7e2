#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "heapkit/poset.hpp"

namespace heapkit {

/// Coroot pairings: entry a is lambda(h_a).
using Weight = std::vector<std::int64_t>;

/// Letters in application order: [b_1, ..., b_k] stands for s_{b_k} ... s_{b_1}.
using WeylWord = std::vector<Color>;

/// Action on simple-root coordinates; column c is the image of alpha_c.
using WeylMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// (s_b mu)(h_c) = mu(h_c) - mu(h_b) * theta(b,c), applied b_1 first.
Weight act_on_weight(const DynkinDiagram& d, const WeylWord& word, Weight wt);

struct MinusculeVerdict {
  bool holds = true;
  /// 1-based index of the first letter b_j whose running weight has
  /// mu(h_{b_j}) != 1.
  std::optional<std::size_t> failing_step;
};
MinusculeVerdict is_lambda_minuscule(const DynkinDiagram& d, const WeylWord& word, const Weight& wt);

WeylMatrix generator_matrix(const DynkinDiagram& d, Color b);
WeylMatrix word_matrix(const DynkinDiagram& d, const WeylWord& word);
bool words_equal(const DynkinDiagram& d, const WeylWord& w1, const WeylWord& w2);

/// Length of the group element, by repeatedly stripping a right descent b
/// (w(alpha_b) has no positive coordinate).
std::size_t weyl_length(const DynkinDiagram& d, const WeylWord& word);

/// One word per linear extension, maximal elements applied first. Each word
/// is checked to be lambda-minuscule for solve_lambda(p). Throws NotAHeap.
std::vector<WeylWord> heap_to_words(const ColoredPoset& p, std::size_t cap = kDefaultCap);

/// The dominant weight for which the heap's words are lambda-minuscule.
/// Throws Infeasible when the step equations have no dominant solution.
Weight solve_lambda(const ColoredPoset& p);

struct DfsResult {
  std::size_t max_length = 0;
  bool terminated = true;
  std::size_t states = 0;
  /// Open frames when the budget ran out; 0 when terminated.
  std::size_t frontier_size = 0;
};

/// Longest lambda-minuscule word from `wt`, searching at most `budget`
/// distinct weights.
DfsResult minuscule_dfs(const DynkinDiagram& d, const Weight& wt, std::size_t budget);

}  // namespace heapkit

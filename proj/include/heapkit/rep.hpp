#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "heapkit/poset.hpp"

namespace heapkit {

/// Integer operator on the split basis; column j is the image of split j.
using IntOperator = Eigen::SparseMatrix<std::int64_t>;

/// Transfer of one minimal filter element into the ideal.
struct Move {
  std::size_t from = 0;  // larger filter
  std::size_t to = 0;    // filter minus `element`
  Color color = 0;
  Element element = 0;
};

struct SplitSpace {
  ColoredPoset poset;
  std::vector<Split> splits;  // ordered by filter bitmask
  std::vector<Move> moves;    // ordered by `from`, then element

  std::size_t size() const noexcept { return splits.size(); }
  /// Index of the split with this filter; throws NotAFilter when absent.
  std::size_t index_of(const ElementSet& filter) const;
};

SplitSpace split_space(const ColoredPoset& p, std::size_t cap = kDefaultCap);

/// X_a: each split goes to the sum of its color-a moves.
IntOperator raising_operator(const SplitSpace& s, Color a);

struct Inconsistency {
  enum class Kind { EdgeConflict, AnchorConflict, IffViolation, EigenvalueOutOfRange };
  Kind kind = Kind::EdgeConflict;
  std::size_t split = 0;
  Color color = 0;
  std::int64_t expected = 0;
  std::int64_t found = 0;

  std::string describe(const DynkinDiagram& d) const;
};

struct DiagonalSolution {
  /// eigenvalues[b][j] = h_b on split j; empty when unsolved.
  std::vector<std::vector<std::int64_t>> eigenvalues;
  std::vector<Inconsistency> problems;

  bool ok() const noexcept { return problems.empty(); }
  IntOperator diagonal(Color b) const;
};

/// Propagates h_b(F - x) - h_b(F) = theta(color(x), b) from the anchors
/// h_b(F) = -1 (F has a minimal element of color b) across the move graph,
/// then checks the anchor condition in both directions and the range >= -1.
DiagonalSolution solve_diagonals(const SplitSpace& s);

struct RelationCheck {
  std::string relation;  // XX, HH, HX, X2, RANGE, ANCHOR
  Color a = 0;
  Color b = 0;
  bool holds = true;
  std::optional<std::size_t> witness;  // basis vector exposing the failure
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_hold() const noexcept;
};

/// Throws DimensionMismatch when operator sizes disagree with the space.
RelationReport verify_relations(const SplitSpace& s, const std::vector<IntOperator>& xs,
                                const std::vector<IntOperator>& hs);

struct RepCertificate {
  bool verdict = false;
  std::size_t split_count = 0;
  DiagonalSolution diagonals;
  RelationReport relations;
  /// Verdict coincides with the axiom route's d-complete verdict.
  bool agrees_with_axioms = true;
};

RepCertificate carries_upper_minuscule(const ColoredPoset& p, std::size_t cap = kDefaultCap);

}  // namespace heapkit

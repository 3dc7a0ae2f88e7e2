#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heapkit/poset.hpp"

namespace heapkit {

enum class Property { EC, NA, AC, ICE2, UCB, LCB, S1, S2, S3, S4, G1, G2, G3, G4, G5 };

/// A property together with its bound; `k` only matters for UCB and LCB.
struct Axiom {
  Property property;
  int k = 1;

  std::string name() const;
  /// Parses "EC", "UCB1", "LCB2", ... ; nothing on unknown text.
  static std::optional<Axiom> parse(std::string_view text);
};

/// One counterexample: the elements and colors involved and, for the census
/// properties, the offending sum.
struct Witness {
  std::vector<Element> elements;
  std::vector<Color> colors;
  std::optional<int> sum;
  std::string note;
};

struct CheckReport {
  std::string property;
  bool holds = true;
  std::vector<Witness> witnesses;
};

struct CheckOptions {
  /// Stop at the first witness.
  bool first_only = false;
};

/// Decides `axiom` on a finite poset. G3 and G4 throw UnsupportedOnFinite.
CheckReport check(const ColoredPoset& p, Axiom axiom, CheckOptions opts = {});

struct ComponentVerdict {
  std::vector<Element> elements;
  std::vector<Color> colors;
  bool is_d_complete = false;
  bool is_minuscule = false;
  bool is_dominant_minuscule_heap = false;
};

struct Classification {
  bool is_d_complete = false;
  bool is_minuscule = false;
  bool is_dominant_minuscule_heap = false;
  bool is_minuscule_heap = false;
  /// d-complete and dominant-minuscule-heap verdicts coincide.
  bool routes_agree = true;
  std::vector<CheckReport> reports;  // EC NA AC ICE2 UCB1 LCB1 S1 S2 S3 S4
  std::vector<ComponentVerdict> components;

  const CheckReport* report(std::string_view property) const;
};

Classification classify(const ColoredPoset& p);

/// Cheap verdicts without witnesses or component breakdown.
bool is_d_complete(const ColoredPoset& p);
bool is_dominant_minuscule_heap(const ColoredPoset& p);

/// Upper frontier census U_b(I); nothing when I has no element of color b.
/// Throws NotAnIdeal.
std::optional<int> census_upper(const ColoredPoset& p, const ElementSet& ideal, Color b);
/// Lower frontier census L_b(F); nothing when F has no element of color b.
/// Throws NotAFilter.
std::optional<int> census_lower(const ColoredPoset& p, const ElementSet& filter, Color b);

/// Maximal element of each color. Throws NotAHeap unless `p` is a
/// connected dominant minuscule heap.
ElementSet top_tree(const ColoredPoset& p);
/// Covers inside the top tree whose upper end is alone in its color.
std::vector<Cover> slant_edges(const ColoredPoset& p);

struct SlantJoin {
  int lower_part = 0;
  Element lower = 0;  // maximal element of its part
  int upper_part = 0;
  Element upper = 0;  // its color occurs once in its part
  /// theta(color(lower), color(upper)) in the merged diagram; the opposite
  /// entry is always -1.
  int reverse_theta = -1;
};

struct SlantDecomposition {
  std::vector<SubPoset> parts;
  std::vector<SlantJoin> joins;
};

/// Removes every slant edge; parts are ordered by least element id and each
/// is slant irreducible. Throws NotAHeap.
SlantDecomposition slant_decompose(const ColoredPoset& p);

/// Glues parts along the joins. Part labels must be disjoint. Throws
/// ColorNotUnique, WouldViolateUCB1 or DisconnectedResult.
ColoredPoset slant_sum(const std::vector<ColoredPoset>& parts, const std::vector<SlantJoin>& joins);

struct EnumerateOptions {
  std::size_t cap = kDefaultCap;
  /// 0 reads HEAPKIT_THREADS (default 1).
  unsigned threads = 0;
};

/// Every dominant minuscule heap with at most `max_size` elements over an
/// induced sub-diagram of `d`, one per isomorphism class, ordered by size and
/// then canonical key. Throws CapExceeded when more than `cap` are found.
std::vector<ColoredPoset> enumerate_heaps(const DynkinDiagram& d, int max_size, EnumerateOptions opts = {});

struct AuditReport {
  bool coloring_bundle = false;  // EC NA AC ICE2
  bool g_bundle = false;         // G1 G2 G5
  bool s_bundle = false;         // S1 S2
  bool d_complete = false;
  bool dominant_minuscule_heap = false;
  bool agree = true;
  std::vector<std::string> discrepancies;
};

/// Evaluates the equivalent axiom bundles independently and records every
/// disagreement; any entry in `discrepancies` is a bug in this library.
AuditReport equivalence_audit(const ColoredPoset& p);

}  // namespace heapkit

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "heapkit/axioms.hpp"
#include "heapkit/poset.hpp"

namespace heapkit {

/// `(lower, t)` is covered by `(upper, t + shift)` for every integer t.
struct Template {
  int lower = 0;
  int upper = 0;
  int shift = 0;  // 0 or 1

  friend auto operator<=>(const Template&, const Template&) = default;
};

/// An element of the infinite heap, addressed by its cell and its height.
/// Heights increase strictly along covers; a cell's heights are
/// `base_height(cell) + t * period()`.
struct HeapElement {
  int cell = 0;
  std::int64_t height = 0;

  friend auto operator<=>(const HeapElement& a, const HeapElement& b) {
    if (auto c = a.height <=> b.height; c != 0) return c;
    return a.cell <=> b.cell;
  }
  friend bool operator==(const HeapElement&, const HeapElement&) = default;
};

/// Shift-periodic full heap given by one period of cells and the cover
/// templates between consecutive periods.
class PeriodicHeap {
 public:
  /// Re-levels the cells, then validates EC, NA, AC, ICE2 on a window of
  /// 3 x (cell count) heights and that every color chain is a copy of Z.
  /// Throws NotLocallyFinite, AxiomFailure or ColorNotZChain.
  PeriodicHeap(DynkinDiagram diagram, std::vector<Color> cell_colors, std::vector<Template> templates,
               std::vector<std::string> cell_names = {});

  const DynkinDiagram& diagram() const noexcept;
  int cell_count() const noexcept;
  Color cell_color(int cell) const;
  const std::string& cell_name(int cell) const;
  const std::vector<Template>& templates() const noexcept;
  /// Height of the cell's copy in period 0.
  std::int64_t base_height(int cell) const;
  std::int64_t period() const noexcept;

  bool contains(HeapElement e) const noexcept;
  Color color(HeapElement e) const { return cell_color(e.cell); }
  std::vector<HeapElement> upper_covers(HeapElement e) const;
  std::vector<HeapElement> lower_covers(HeapElement e) const;
  bool leq(HeapElement x, HeapElement y) const;
  bool less(HeapElement x, HeapElement y) const { return x != y && leq(x, y); }
  /// Elements with heights in [lo, hi], ordered by height then cell.
  std::vector<HeapElement> elements_between(std::int64_t lo, std::int64_t hi) const;
  /// Height window used by validation.
  std::pair<std::int64_t, std::int64_t> validation_window() const noexcept;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

inline PeriodicHeap periodic_heap(DynkinDiagram diagram, std::vector<Color> cell_colors,
                                  std::vector<Template> templates) {
  return PeriodicHeap(std::move(diagram), std::move(cell_colors), std::move(templates));
}

/// Bi-infinite chain colored 0,1,...,n-1 repeating, over the n-cycle.
/// Throws BadParameter for n < 3.
PeriodicHeap builtin_cycle(int n);
/// Alternating chain over the two-node diagram with theta = -2 both ways.
PeriodicHeap builtin_alternating_a1();

struct HeapWindow {
  ColoredPoset poset;
  std::vector<HeapElement> elements;  // window id -> heap element
  std::vector<Color> colors;          // window color -> heap color
};

/// Finite poset on the heights [lo, hi]. Throws EmptyWindow unless lo < hi
/// and some element falls inside.
HeapWindow window(const PeriodicHeap& heap, std::int64_t lo, std::int64_t hi);

/// EC, NA, AC, ICE2 on the validation window, then G3 and G4.
std::vector<CheckReport> full_heap_reports(const PeriodicHeap& heap);
/// Every element of one period has a neighbor of each adjacent color.
CheckReport check_g4(const PeriodicHeap& heap);

/// Up-closure of finitely many heap elements, or the whole heap.
class SemiInfiniteFilter {
 public:
  /// Throws BadParameter for an empty list or an element not in the heap.
  SemiInfiniteFilter(PeriodicHeap heap, std::vector<HeapElement> generators);
  static SemiInfiniteFilter whole(PeriodicHeap heap);

  const PeriodicHeap& heap() const noexcept { return heap_; }
  /// Minimal elements, ordered; empty for the whole heap.
  const std::vector<HeapElement>& generators() const noexcept { return generators_; }
  bool is_whole() const noexcept { return whole_; }
  bool contains(HeapElement e) const;
  /// Lowest generator height (undefined for the whole heap).
  std::int64_t min_height() const;
  /// Least element of color a.
  HeapElement color_minimum(Color a) const;

 private:
  SemiInfiniteFilter(PeriodicHeap heap, bool whole) : heap_(std::move(heap)), whole_(whole) {}
  PeriodicHeap heap_;
  std::vector<HeapElement> generators_;
  bool whole_ = false;
};

/// Members of F with heights in [lo, hi].
HeapWindow filter_window(const SemiInfiniteFilter& f, std::int64_t lo, std::int64_t hi);

struct InfiniteReport {
  std::vector<CheckReport> reports;  // EC NA AC ICE2 LCB1 LCB2
  bool cua = true;                   // every color unbounded above
  bool cub = false;                  // every color unbounded below
  bool cbb = true;                   // every color bounded below
  bool ucb1_vacuous = true;
  bool d_complete = false;
  bool full_heap = false;
  bool lcb1 = true;
  bool lcb2 = true;
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;

  const CheckReport* report(std::string_view property) const;
};

InfiniteReport check_infinite_axioms(const SemiInfiniteFilter& f);

struct Extension {
  SemiInfiniteFilter filter;
  HeapElement added;
  Color color = 0;
  std::vector<HeapElement> covers;  // upper covers of the new element
};

/// Adjoins a new minimal element below the least color whose minimum has
/// lower census 2. Throws NoEligibleColor.
Extension downward_extend(const SemiInfiniteFilter& f);

struct SaturationStep {
  HeapElement added;
  Color color = 0;
  bool d_complete = false;
};

struct Saturation {
  std::vector<SaturationStep> steps;
  SemiInfiniteFilter final_filter;
  /// Two full periods [band_start, band_start + 2 * period) lie below the
  /// original filter; both periods and the ambient window share this key.
  std::int64_t band_start = 0;
  std::string band_key;
};

/// Repeats downward_extend until two full periods have been rebuilt below
/// the input. Throws NoConvergenceWithinBudget, or AxiomFailure when an
/// intermediate filter is not d-complete.
Saturation saturate(const SemiInfiniteFilter& f, std::size_t max_steps);

/// Disjoint union of a finite colored poset and semi-infinite filters, each
/// over its own diagram.
struct MixedClassification {
  DynkinDiagram diagram;  // block sum of the part diagrams
  Classification finite;
  std::vector<InfiniteReport> infinite;
  std::size_t component_count = 0;
  bool is_d_complete = false;
};

/// Throws ColorNotUnique when two parts share a color label.
MixedClassification classify_mixed(const ColoredPoset& finite, const std::vector<SemiInfiniteFilter>& filters);

}  // namespace heapkit

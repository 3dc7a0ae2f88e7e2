#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heapkit/dynkin.hpp"
#include "heapkit/element_set.hpp"

namespace heapkit {

/// Elements are dense ids 0..n-1.
using Element = int;

/// `{x, y}` means x is covered by y (x -> y).
using Cover = std::pair<Element, Element>;

/// Default bound for split and linear-extension enumeration.
inline constexpr std::size_t kDefaultCap = 1'000'000;

/// A finite poset given by its Hasse diagram, colored surjectively by the
/// nodes of a Dynkin diagram.
///
/// The order structure is shared between copies, so recoloring a poset over
/// another diagram does not recompute reachability.
class ColoredPoset {
 public:
  /// Validates the covers (range, no cycle, no transitive edge) and that
  /// every color of `diagram` is used.
  ColoredPoset(DynkinDiagram diagram, std::vector<Color> colors, std::vector<Cover> covers);

  const DynkinDiagram& diagram() const noexcept { return diagram_; }
  int size() const noexcept { return static_cast<int>(colors_.size()); }
  Color color(Element x) const noexcept { return colors_[static_cast<std::size_t>(x)]; }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  /// Sorted lexicographically.
  const std::vector<Cover>& covers() const noexcept { return order_->covers; }
  const std::vector<Element>& upper_covers(Element x) const noexcept { return order_->up[static_cast<std::size_t>(x)]; }
  const std::vector<Element>& lower_covers(Element x) const noexcept { return order_->down[static_cast<std::size_t>(x)]; }

  /// Strict up-set and down-set of x.
  const ElementSet& above(Element x) const noexcept { return order_->above[static_cast<std::size_t>(x)]; }
  const ElementSet& below(Element x) const noexcept { return order_->below[static_cast<std::size_t>(x)]; }

  bool less(Element x, Element y) const noexcept { return above(x).test(static_cast<std::size_t>(y)); }
  bool leq(Element x, Element y) const noexcept { return x == y || less(x, y); }
  bool comparable(Element x, Element y) const noexcept { return leq(x, y) || less(y, x); }

  /// Length of the longest chain ending at x.
  int level(Element x) const noexcept { return order_->level[static_cast<std::size_t>(x)]; }
  /// Length of the longest chain starting at x.
  int depth(Element x) const noexcept { return order_->depth[static_cast<std::size_t>(x)]; }
  /// Elements in an order compatible with the poset (bottom first).
  const std::vector<Element>& topological_order() const noexcept { return order_->topo; }

  ElementSet empty_set() const { return ElementSet(static_cast<std::size_t>(size())); }
  ElementSet all() const { return ElementSet::full(static_cast<std::size_t>(size())); }
  ElementSet elements_of_color(Color a) const;

  bool is_filter(const ElementSet& s) const;
  bool is_ideal(const ElementSet& s) const;
  ElementSet up_closure(const ElementSet& s) const;
  ElementSet down_closure(const ElementSet& s) const;
  std::vector<Element> minimal_in(const ElementSet& s) const;
  std::vector<Element> maximal_in(const ElementSet& s) const;

  bool is_connected() const;

  /// Same elements and order, colored by `colors` over `diagram`.
  /// Only surjectivity and color range are checked.
  ColoredPoset recolored(DynkinDiagram diagram, std::vector<Color> colors) const;
  ColoredPoset with_diagram(DynkinDiagram diagram) const { return recolored(std::move(diagram), colors_); }

 private:
  struct OrderData {
    std::vector<Cover> covers;
    std::vector<std::vector<Element>> up;
    std::vector<std::vector<Element>> down;
    std::vector<ElementSet> above;
    std::vector<ElementSet> below;
    std::vector<int> level;
    std::vector<int> depth;
    std::vector<Element> topo;
  };

  ColoredPoset(DynkinDiagram diagram, std::vector<Color> colors, std::shared_ptr<const OrderData> order);
  static std::shared_ptr<const OrderData> build_order(int n, std::vector<Cover> covers);
  void check_coloring() const;

  DynkinDiagram diagram_;
  std::vector<Color> colors_;
  std::shared_ptr<const OrderData> order_;
};

inline ColoredPoset new_poset(DynkinDiagram diagram, std::vector<Color> colors, std::vector<Cover> covers) {
  return ColoredPoset(std::move(diagram), std::move(colors), std::move(covers));
}

/// Induced subposet on `subset` (covers recomputed by transitive reduction),
/// re-based onto the sub-diagram of the colors it uses.
struct SubPoset {
  ColoredPoset poset;
  std::vector<Element> elements;  // new id -> original id
  std::vector<Color> colors;      // new color -> original color
};
SubPoset induced_subposet(const ColoredPoset& p, const ElementSet& subset);

struct Interval {
  ElementSet open;
  ElementSet closed;
};
/// Requires x <= y; throws NotComparable otherwise.
Interval interval(const ColoredPoset& p, Element x, Element y);

struct ColorChain {
  std::vector<Element> elements;  // ascending when a chain, by id otherwise
  bool is_chain = true;
  std::optional<std::pair<Element, Element>> witness;  // incomparable pair
};
ColorChain color_chain(const ColoredPoset& p, Color a);

/// Connected components ordered by least element id, each over the
/// sub-diagram induced by its colors.
std::vector<SubPoset> components(const ColoredPoset& p);

ColoredPoset dual(const ColoredPoset& p);

struct Split {
  ElementSet filter;
  ElementSet ideal;
};

/// Every split, ordered by the filter read as a binary number.
/// Throws CapExceeded once more than `cap` filters are found.
std::vector<Split> splits(const ColoredPoset& p, std::size_t cap = kDefaultCap);

/// Calls `visit` on each linear extension (bottom first) in lexicographic
/// order of element ids; returns the count. Throws CapExceeded past `cap`.
std::size_t for_each_linear_extension(const ColoredPoset& p, std::size_t cap,
                                      const std::function<void(const std::vector<Element>&)>& visit);
std::vector<std::vector<Element>> linear_extensions(const ColoredPoset& p, std::size_t cap = kDefaultCap);

/// Equal keys exactly for posets isomorphic by a map preserving order and
/// color labels, over equal diagrams.
std::string canonical_key(const ColoredPoset& p);

/// Relabels elements: element x of `p` becomes `perm[x]`.
ColoredPoset permuted(const ColoredPoset& p, const std::vector<Element>& perm);

}  // namespace heapkit

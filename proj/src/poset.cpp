#include "heapkit/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "heapkit/error.hpp"

namespace heapkit {

namespace {

std::string pair_text(Element x, Element y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

}  // namespace

ColoredPoset::ColoredPoset(DynkinDiagram diagram, std::vector<Color> colors, std::vector<Cover> covers)
    : diagram_(std::move(diagram)), colors_(std::move(colors)) {
  order_ = build_order(static_cast<int>(colors_.size()), std::move(covers));
  check_coloring();
}

ColoredPoset::ColoredPoset(DynkinDiagram diagram, std::vector<Color> colors, std::shared_ptr<const OrderData> order)
    : diagram_(std::move(diagram)), colors_(std::move(colors)), order_(std::move(order)) {
  check_coloring();
}

void ColoredPoset::check_coloring() const {
  std::vector<bool> used(static_cast<std::size_t>(diagram_.size()), false);
  for (std::size_t x = 0; x < colors_.size(); ++x) {
    if (!diagram_.contains(colors_[x]))
      throw Error(ErrorKind::UnknownColor,
                  "element " + std::to_string(x) + " has color index " + std::to_string(colors_[x]));
    used[static_cast<std::size_t>(colors_[x])] = true;
  }
  for (Color a = 0; a < diagram_.size(); ++a)
    if (!used[static_cast<std::size_t>(a)])
      throw Error(ErrorKind::ColorUnused, "color '" + diagram_.label(a) + "' colors no element");
}

std::shared_ptr<const ColoredPoset::OrderData> ColoredPoset::build_order(int n, std::vector<Cover> covers) {
  auto od = std::make_shared<OrderData>();
  const auto un = static_cast<std::size_t>(n);
  for (const auto& [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error(ErrorKind::ElementOutOfRange, "cover " + pair_text(x, y) + " with " + std::to_string(n) + " elements");
    if (x == y) throw Error(ErrorKind::CoverCycle, "self cover " + pair_text(x, y));
  }
  std::sort(covers.begin(), covers.end());
  if (auto dup = std::adjacent_find(covers.begin(), covers.end()); dup != covers.end())
    throw Error(ErrorKind::BadParameter, "duplicate cover " + pair_text(dup->first, dup->second));

  od->up.assign(un, {});
  od->down.assign(un, {});
  for (const auto& [x, y] : covers) {
    od->up[static_cast<std::size_t>(x)].push_back(y);
    od->down[static_cast<std::size_t>(y)].push_back(x);
  }

  // Kahn's algorithm, least id first so the order is deterministic.
  std::vector<int> indeg(un, 0);
  for (const auto& [x, y] : covers) ++indeg[static_cast<std::size_t>(y)];
  std::set<Element> ready;
  for (Element x = 0; x < n; ++x)
    if (indeg[static_cast<std::size_t>(x)] == 0) ready.insert(x);
  while (!ready.empty()) {
    Element x = *ready.begin();
    ready.erase(ready.begin());
    od->topo.push_back(x);
    for (Element y : od->up[static_cast<std::size_t>(x)])
      if (--indeg[static_cast<std::size_t>(y)] == 0) ready.insert(y);
  }
  if (od->topo.size() != un) {
    for (Element x = 0; x < n; ++x)
      if (indeg[static_cast<std::size_t>(x)] > 0)
        throw Error(ErrorKind::CoverCycle, "element " + std::to_string(x) + " lies on a cover cycle");
  }

  od->above.assign(un, ElementSet(un));
  od->below.assign(un, ElementSet(un));
  od->level.assign(un, 0);
  od->depth.assign(un, 0);
  for (auto it = od->topo.rbegin(); it != od->topo.rend(); ++it) {
    const auto x = static_cast<std::size_t>(*it);
    for (Element y : od->up[x]) {
      od->above[x].set(static_cast<std::size_t>(y));
      od->above[x] |= od->above[static_cast<std::size_t>(y)];
      od->depth[x] = std::max(od->depth[x], od->depth[static_cast<std::size_t>(y)] + 1);
    }
  }
  for (Element xe : od->topo) {
    const auto x = static_cast<std::size_t>(xe);
    for (Element y : od->down[x]) {
      od->below[x].set(static_cast<std::size_t>(y));
      od->below[x] |= od->below[static_cast<std::size_t>(y)];
      od->level[x] = std::max(od->level[x], od->level[static_cast<std::size_t>(y)] + 1);
    }
  }
  for (const auto& [x, y] : covers) {
    for (Element z : od->up[static_cast<std::size_t>(x)]) {
      if (z != y && od->above[static_cast<std::size_t>(z)].test(static_cast<std::size_t>(y)))
        throw Error(ErrorKind::TransitiveEdge,
                    "cover " + pair_text(x, y) + " is implied by the path through " + std::to_string(z));
    }
  }
  od->covers = std::move(covers);
  return od;
}

ElementSet ColoredPoset::elements_of_color(Color a) const {
  ElementSet s = empty_set();
  for (Element x = 0; x < size(); ++x)
    if (color(x) == a) s.set(static_cast<std::size_t>(x));
  return s;
}

bool ColoredPoset::is_filter(const ElementSet& s) const {
  bool ok = true;
  s.for_each([&](int x) { ok = ok && above(x).is_subset_of(s); });
  return ok;
}

bool ColoredPoset::is_ideal(const ElementSet& s) const {
  bool ok = true;
  s.for_each([&](int x) { ok = ok && below(x).is_subset_of(s); });
  return ok;
}

ElementSet ColoredPoset::up_closure(const ElementSet& s) const {
  ElementSet out = s;
  s.for_each([&](int x) { out |= above(x); });
  return out;
}

ElementSet ColoredPoset::down_closure(const ElementSet& s) const {
  ElementSet out = s;
  s.for_each([&](int x) { out |= below(x); });
  return out;
}

std::vector<Element> ColoredPoset::minimal_in(const ElementSet& s) const {
  std::vector<Element> out;
  s.for_each([&](int x) {
    if (!below(x).intersects(s)) out.push_back(x);
  });
  return out;
}

std::vector<Element> ColoredPoset::maximal_in(const ElementSet& s) const {
  std::vector<Element> out;
  s.for_each([&](int x) {
    if (!above(x).intersects(s)) out.push_back(x);
  });
  return out;
}

bool ColoredPoset::is_connected() const {
  if (size() == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(size()), false);
  std::vector<Element> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Element x = stack.back();
    stack.pop_back();
    for (const auto* nbrs : {&upper_covers(x), &lower_covers(x)}) {
      for (Element y : *nbrs) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
  }
  return reached == size();
}

ColoredPoset ColoredPoset::recolored(DynkinDiagram diagram, std::vector<Color> colors) const {
  if (colors.size() != colors_.size())
    throw Error(ErrorKind::DimensionMismatch, "recoloring with " + std::to_string(colors.size()) + " colors for " +
                                                  std::to_string(colors_.size()) + " elements");
  return ColoredPoset(std::move(diagram), std::move(colors), order_);
}

SubPoset induced_subposet(const ColoredPoset& p, const ElementSet& subset) {
  std::vector<Element> elements = subset.members();
  std::vector<int> index(static_cast<std::size_t>(p.size()), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) index[static_cast<std::size_t>(elements[i])] = static_cast<int>(i);

  std::vector<Color> used;
  for (Element x : elements) used.push_back(p.color(x));
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> color_index(static_cast<std::size_t>(p.diagram().size()), -1);
  for (std::size_t i = 0; i < used.size(); ++i) color_index[static_cast<std::size_t>(used[i])] = static_cast<int>(i);

  std::vector<Color> colors;
  for (Element x : elements) colors.push_back(color_index[static_cast<std::size_t>(p.color(x))]);

  std::vector<Cover> covers;
  for (Element x : elements) {
    ElementSet up = p.above(x) & subset;
    up.for_each([&](int y) {
      // y covers x inside the subset unless some z in the subset sits between.
      if (!(up & p.below(y)).any()) covers.emplace_back(index[static_cast<std::size_t>(x)], index[static_cast<std::size_t>(y)]);
    });
  }
  return {ColoredPoset(p.diagram().induced(used), std::move(colors), std::move(covers)), std::move(elements),
          std::move(used)};
}

Interval interval(const ColoredPoset& p, Element x, Element y) {
  if (!p.leq(x, y))
    throw Error(ErrorKind::NotComparable, "element " + std::to_string(x) + " is not below " + std::to_string(y));
  Interval iv{p.above(x) & p.below(y), {}};
  iv.closed = iv.open;
  iv.closed.set(static_cast<std::size_t>(x));
  iv.closed.set(static_cast<std::size_t>(y));
  return iv;
}

ColorChain color_chain(const ColoredPoset& p, Color a) {
  ColorChain out;
  for (Element x = 0; x < p.size(); ++x)
    if (p.color(x) == a) out.elements.push_back(x);
  for (std::size_t i = 0; i < out.elements.size() && out.is_chain; ++i)
    for (std::size_t j = i + 1; j < out.elements.size(); ++j)
      if (!p.comparable(out.elements[i], out.elements[j])) {
        out.is_chain = false;
        out.witness = std::make_pair(out.elements[i], out.elements[j]);
        break;
      }
  if (out.is_chain)
    std::sort(out.elements.begin(), out.elements.end(), [&](Element x, Element y) { return p.less(x, y); });
  return out;
}

std::vector<SubPoset> components(const ColoredPoset& p) {
  const auto n = static_cast<std::size_t>(p.size());
  std::vector<int> comp(n, -1);
  std::vector<SubPoset> out;
  for (Element s = 0; s < p.size(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    ElementSet members = p.empty_set();
    std::vector<Element> stack{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Element x = stack.back();
      stack.pop_back();
      members.set(static_cast<std::size_t>(x));
      for (const auto* nbrs : {&p.upper_covers(x), &p.lower_covers(x)})
        for (Element y : *nbrs)
          if (comp[static_cast<std::size_t>(y)] < 0) {
            comp[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
            stack.push_back(y);
          }
    }
    out.push_back(induced_subposet(p, members));
  }
  return out;
}

ColoredPoset dual(const ColoredPoset& p) {
  std::vector<Cover> covers;
  covers.reserve(p.covers().size());
  for (const auto& [x, y] : p.covers()) covers.emplace_back(y, x);
  return ColoredPoset(p.diagram(), p.colors(), std::move(covers));
}

std::vector<Split> splits(const ColoredPoset& p, std::size_t cap) {
  // Deciding elements top-down, x may join the filter only once all of its
  // upper covers have; every filter is produced exactly once.
  const auto& topo = p.topological_order();
  std::vector<ElementSet> filters;
  ElementSet current = p.empty_set();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == topo.size()) {
      if (filters.size() >= cap)
        throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " splits (" +
                                                std::to_string(filters.size()) + " so far)");
      filters.push_back(current);
      return;
    }
    const Element x = topo[topo.size() - 1 - i];
    rec(i + 1);
    bool allowed = true;
    for (Element y : p.upper_covers(x)) allowed = allowed && current.test(static_cast<std::size_t>(y));
    if (allowed) {
      current.set(static_cast<std::size_t>(x));
      rec(i + 1);
      current.reset(static_cast<std::size_t>(x));
    }
  };
  rec(0);
  std::sort(filters.begin(), filters.end());
  std::vector<Split> out;
  out.reserve(filters.size());
  for (auto& f : filters) {
    ElementSet ideal = f.complement();
    out.push_back({std::move(f), std::move(ideal)});
  }
  return out;
}

std::size_t for_each_linear_extension(const ColoredPoset& p, std::size_t cap,
                                      const std::function<void(const std::vector<Element>&)>& visit) {
  const auto n = static_cast<std::size_t>(p.size());
  std::vector<int> pending(n);
  for (std::size_t x = 0; x < n; ++x) pending[x] = static_cast<int>(p.lower_covers(static_cast<Element>(x)).size());
  std::vector<bool> placed(n, false);
  std::vector<Element> seq;
  seq.reserve(n);
  std::size_t count = 0;
  std::function<void()> rec = [&] {
    if (seq.size() == n) {
      if (count >= cap)
        throw Error(ErrorKind::CapExceeded,
                    "more than " + std::to_string(cap) + " linear extensions (" + std::to_string(count) + " so far)");
      ++count;
      visit(seq);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x] || pending[x] != 0) continue;
      placed[x] = true;
      seq.push_back(static_cast<Element>(x));
      for (Element y : p.upper_covers(static_cast<Element>(x))) --pending[static_cast<std::size_t>(y)];
      rec();
      for (Element y : p.upper_covers(static_cast<Element>(x))) ++pending[static_cast<std::size_t>(y)];
      seq.pop_back();
      placed[x] = false;
    }
  };
  rec();
  return count;
}

std::vector<std::vector<Element>> linear_extensions(const ColoredPoset& p, std::size_t cap) {
  std::vector<std::vector<Element>> out;
  for_each_linear_extension(p, cap, [&](const std::vector<Element>& s) { out.push_back(s); });
  return out;
}

namespace {

// Canonical form by individualization-refinement: refine an ordered
// partition of the elements until stable, branch on every member of the
// first non-trivial cell, and keep the least encoding over all leaves.
class Canonizer {
 public:
  explicit Canonizer(const ColoredPoset& p) : p_(p), n_(static_cast<std::size_t>(p.size())) {
    const auto& labels = p.diagram().labels();
    std::vector<Color> by_label(labels.size());
    std::iota(by_label.begin(), by_label.end(), 0);
    std::sort(by_label.begin(), by_label.end(),
              [&](Color a, Color b) { return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)]; });
    label_rank_.assign(labels.size(), 0);
    for (std::size_t i = 0; i < by_label.size(); ++i) label_rank_[static_cast<std::size_t>(by_label[i])] = static_cast<int>(i);
    by_label_ = std::move(by_label);
  }

  std::string key() {
    std::vector<std::vector<int>> sigs(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      const auto e = static_cast<Element>(x);
      sigs[x] = {label_rank_[static_cast<std::size_t>(p_.color(e))], p_.level(e), p_.depth(e),
                 static_cast<int>(p_.lower_covers(e).size()), static_cast<int>(p_.upper_covers(e).size())};
    }
    search(rank(sigs));

    std::string out = "n" + std::to_string(n_) + "|";
    for (Color a : by_label_) {
      const auto& l = p_.diagram().label(a);
      out += std::to_string(l.size()) + ":" + l + "[";
      for (Color b : by_label_) out += std::to_string(p_.diagram().theta(a, b)) + ",";
      out += "]";
    }
    out += "|";
    for (std::size_t i = 0; i < best_.size(); ++i) {
      out += std::to_string(best_[i]);
      out += (i + 1 == n_ ? "|" : ",");
    }
    return out;
  }

 private:
  static std::vector<int> rank(const std::vector<std::vector<int>>& sigs) {
    std::vector<std::vector<int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> cells(sigs.size());
    for (std::size_t x = 0; x < sigs.size(); ++x)
      cells[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[x]) - sorted.begin());
    return cells;
  }

  static int distinct(const std::vector<int>& cells) {
    return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
  }

  std::vector<int> refine(std::vector<int> cells) const {
    int cnt = distinct(cells);
    while (true) {
      std::vector<std::vector<int>> sigs(n_);
      for (std::size_t x = 0; x < n_; ++x) {
        const auto e = static_cast<Element>(x);
        std::vector<int> up, down;
        for (Element y : p_.upper_covers(e)) up.push_back(cells[static_cast<std::size_t>(y)]);
        for (Element y : p_.lower_covers(e)) down.push_back(cells[static_cast<std::size_t>(y)]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        auto& s = sigs[x];
        s.push_back(cells[x]);
        s.insert(s.end(), up.begin(), up.end());
        s.push_back(-1);
        s.insert(s.end(), down.begin(), down.end());
      }
      auto next = rank(sigs);
      const int next_cnt = distinct(next);
      if (next_cnt == cnt) return next;
      cells = std::move(next);
      cnt = next_cnt;
    }
  }

  void search(std::vector<int> cells) {
    cells = refine(std::move(cells));
    if (static_cast<std::size_t>(distinct(cells)) == n_) {
      std::vector<int> code;
      code.reserve(n_ + 2 * p_.covers().size());
      std::vector<int> color_at(n_);
      for (std::size_t x = 0; x < n_; ++x)
        color_at[static_cast<std::size_t>(cells[x])] = label_rank_[static_cast<std::size_t>(p_.color(static_cast<Element>(x)))];
      code = color_at;
      std::vector<std::pair<int, int>> edges;
      for (const auto& [x, y] : p_.covers()) edges.emplace_back(cells[static_cast<std::size_t>(x)], cells[static_cast<std::size_t>(y)]);
      std::sort(edges.begin(), edges.end());
      for (const auto& [u, v] : edges) {
        code.push_back(u);
        code.push_back(v);
      }
      if (!have_best_ || code < best_) {
        best_ = std::move(code);
        have_best_ = true;
      }
      return;
    }
    std::vector<int> size(n_, 0);
    for (int c : cells) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;
    for (std::size_t x = 0; x < n_; ++x) {
      if (cells[x] != target) continue;
      std::vector<int> split(n_);
      for (std::size_t y = 0; y < n_; ++y) split[y] = 2 * cells[y] + ((cells[y] == target && y != x) ? 1 : 0);
      std::vector<std::vector<int>> sigs(n_);
      for (std::size_t y = 0; y < n_; ++y) sigs[y] = {split[y]};
      search(rank(sigs));
    }
  }

  const ColoredPoset& p_;
  std::size_t n_;
  std::vector<int> label_rank_;
  std::vector<Color> by_label_;
  std::vector<int> best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_key(const ColoredPoset& p) { return Canonizer(p).key(); }

ColoredPoset permuted(const ColoredPoset& p, const std::vector<Element>& perm) {
  std::vector<Color> colors(static_cast<std::size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x) colors[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = p.color(x);
  std::vector<Cover> covers;
  for (const auto& [x, y] : p.covers()) covers.emplace_back(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
  return ColoredPoset(p.diagram(), std::move(colors), std::move(covers));
}

}  // namespace heapkit

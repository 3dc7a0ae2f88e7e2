#include "heapkit/heap_periodic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <tuple>

#include "heapkit/error.hpp"

namespace heapkit {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

}  // namespace

struct PeriodicHeap::Impl {
  DynkinDiagram diagram;
  std::vector<Color> colors;
  std::vector<std::string> names;
  std::vector<Template> templates;
  std::vector<std::int64_t> base;
  std::int64_t period = 1;
  // (neighbor cell, height difference)
  std::vector<std::vector<std::pair<int, std::int64_t>>> up, down;

  mutable std::mutex mu;
  mutable std::map<std::tuple<int, int, std::int64_t>, bool> reach_cache;

  explicit Impl(DynkinDiagram d) : diagram(std::move(d)) {}
};

PeriodicHeap::PeriodicHeap(DynkinDiagram diagram, std::vector<Color> cell_colors, std::vector<Template> templates,
                           std::vector<std::string> cell_names) {
  auto impl = std::make_shared<Impl>(std::move(diagram));
  const int m = static_cast<int>(cell_colors.size());
  if (m == 0) throw Error(ErrorKind::BadParameter, "heap has no cells");
  for (int c = 0; c < m; ++c)
    if (!impl->diagram.contains(cell_colors[static_cast<std::size_t>(c)]))
      throw Error(ErrorKind::UnknownColor, "cell " + std::to_string(c) + " has an unknown color");
  if (cell_names.empty())
    for (int c = 0; c < m; ++c) cell_names.push_back(std::to_string(c));
  if (cell_names.size() != cell_colors.size())
    throw Error(ErrorKind::DimensionMismatch, "cell names and colors differ in length");
  for (const auto& t : templates) {
    if (t.lower < 0 || t.lower >= m || t.upper < 0 || t.upper >= m)
      throw Error(ErrorKind::BadParameter, "template refers to a missing cell");
    if (t.shift != 0 && t.shift != 1) throw Error(ErrorKind::BadParameter, "template shift must be 0 or 1");
    if (t.shift == 0 && t.lower == t.upper)
      throw Error(ErrorKind::NotLocallyFinite, "cell " + cell_names[static_cast<std::size_t>(t.lower)] + " covers itself");
  }
  std::sort(templates.begin(), templates.end());
  if (auto dup = std::adjacent_find(templates.begin(), templates.end()); dup != templates.end())
    throw Error(ErrorKind::BadParameter, "duplicate template");

  // Base heights: longest path in the same-period cover graph.
  std::vector<std::int64_t> base(static_cast<std::size_t>(m), 0);
  std::vector<int> indeg(static_cast<std::size_t>(m), 0);
  std::vector<std::vector<int>> same(static_cast<std::size_t>(m));
  for (const auto& t : templates)
    if (t.shift == 0) {
      same[static_cast<std::size_t>(t.lower)].push_back(t.upper);
      ++indeg[static_cast<std::size_t>(t.upper)];
    }
  std::queue<int> ready;
  for (int c = 0; c < m; ++c)
    if (indeg[static_cast<std::size_t>(c)] == 0) ready.push(c);
  int seen = 0;
  while (!ready.empty()) {
    const int c = ready.front();
    ready.pop();
    ++seen;
    for (int d : same[static_cast<std::size_t>(c)]) {
      base[static_cast<std::size_t>(d)] = std::max(base[static_cast<std::size_t>(d)], base[static_cast<std::size_t>(c)] + 1);
      if (--indeg[static_cast<std::size_t>(d)] == 0) ready.push(d);
    }
  }
  if (seen != m) throw Error(ErrorKind::NotLocallyFinite, "templates with shift 0 form a cycle");
  std::int64_t period = 1;
  for (const auto& t : templates)
    if (t.shift == 1)
      period = std::max(period, base[static_cast<std::size_t>(t.lower)] - base[static_cast<std::size_t>(t.upper)] + 1);

  impl->colors = std::move(cell_colors);
  impl->names = std::move(cell_names);
  impl->templates = std::move(templates);
  impl->base = std::move(base);
  impl->period = period;
  impl->up.resize(static_cast<std::size_t>(m));
  impl->down.resize(static_cast<std::size_t>(m));
  for (const auto& t : impl->templates) {
    const std::int64_t dh =
        impl->base[static_cast<std::size_t>(t.upper)] - impl->base[static_cast<std::size_t>(t.lower)] + t.shift * period;
    impl->up[static_cast<std::size_t>(t.lower)].emplace_back(t.upper, dh);
    impl->down[static_cast<std::size_t>(t.upper)].emplace_back(t.lower, -dh);
  }
  impl_ = std::move(impl);

  const auto& d = impl_->diagram;
  for (Color a = 0; a < d.size(); ++a)
    if (std::find(impl_->colors.begin(), impl_->colors.end(), a) == impl_->colors.end())
      throw Error(ErrorKind::ColorNotZChain, "color '" + d.label(a) + "' has no cell");
  for (const auto& r : full_heap_reports(*this)) {
    // G4 follows from the rest and is reported by check_g4 instead.
    if (r.holds || r.property == "G4") continue;
    const ErrorKind kind = r.property == "G3" ? ErrorKind::ColorNotZChain : ErrorKind::AxiomFailure;
    throw Error(kind, r.property + " fails: " + r.witnesses.front().note);
  }
}

const DynkinDiagram& PeriodicHeap::diagram() const noexcept { return impl_->diagram; }
int PeriodicHeap::cell_count() const noexcept { return static_cast<int>(impl_->colors.size()); }
Color PeriodicHeap::cell_color(int cell) const { return impl_->colors.at(static_cast<std::size_t>(cell)); }
const std::string& PeriodicHeap::cell_name(int cell) const { return impl_->names.at(static_cast<std::size_t>(cell)); }
const std::vector<Template>& PeriodicHeap::templates() const noexcept { return impl_->templates; }
std::int64_t PeriodicHeap::base_height(int cell) const { return impl_->base.at(static_cast<std::size_t>(cell)); }
std::int64_t PeriodicHeap::period() const noexcept { return impl_->period; }

bool PeriodicHeap::contains(HeapElement e) const noexcept {
  return e.cell >= 0 && e.cell < cell_count() &&
         mod(e.height - impl_->base[static_cast<std::size_t>(e.cell)], impl_->period) == 0;
}

std::vector<HeapElement> PeriodicHeap::upper_covers(HeapElement e) const {
  std::vector<HeapElement> out;
  for (const auto& [c, dh] : impl_->up.at(static_cast<std::size_t>(e.cell))) out.push_back({c, e.height + dh});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HeapElement> PeriodicHeap::lower_covers(HeapElement e) const {
  std::vector<HeapElement> out;
  for (const auto& [c, dh] : impl_->down.at(static_cast<std::size_t>(e.cell))) out.push_back({c, e.height + dh});
  std::sort(out.begin(), out.end());
  return out;
}

bool PeriodicHeap::leq(HeapElement x, HeapElement y) const {
  if (x == y) return true;
  if (x.height >= y.height) return false;
  const auto key = std::make_tuple(x.cell, y.cell, y.height - x.height);
  {
    std::lock_guard lock(impl_->mu);
    if (auto it = impl_->reach_cache.find(key); it != impl_->reach_cache.end()) return it->second;
  }
  std::set<HeapElement> visited{x};
  std::vector<HeapElement> stack{x};
  bool found = false;
  while (!stack.empty() && !found) {
    const HeapElement e = stack.back();
    stack.pop_back();
    for (const auto& [c, dh] : impl_->up[static_cast<std::size_t>(e.cell)]) {
      const HeapElement f{c, e.height + dh};
      if (f == y) {
        found = true;
        break;
      }
      if (f.height < y.height && visited.insert(f).second) stack.push_back(f);
    }
  }
  std::lock_guard lock(impl_->mu);
  impl_->reach_cache.emplace(key, found);
  return found;
}

std::vector<HeapElement> PeriodicHeap::elements_between(std::int64_t lo, std::int64_t hi) const {
  std::vector<HeapElement> out;
  const std::int64_t h = impl_->period;
  for (int c = 0; c < cell_count(); ++c) {
    const std::int64_t b = impl_->base[static_cast<std::size_t>(c)];
    for (std::int64_t t = floor_div(lo - b + h - 1, h); b + t * h <= hi; ++t) out.push_back({c, b + t * h});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::int64_t, std::int64_t> PeriodicHeap::validation_window() const noexcept {
  // The period never exceeds the cell count, so this spans three periods.
  return {0, 3 * static_cast<std::int64_t>(cell_count()) - 1};
}

namespace {

// Induced poset on `members` (sorted, convex in the heap).
HeapWindow build_window(const PeriodicHeap& heap, std::vector<HeapElement> members) {
  std::map<HeapElement, int> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], static_cast<int>(i));
  std::vector<Color> used;
  for (const auto& e : members) used.push_back(heap.color(e));
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<Color> colors;
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < members.size(); ++i) {
    colors.push_back(static_cast<Color>(std::lower_bound(used.begin(), used.end(), heap.color(members[i])) - used.begin()));
    for (const auto& u : heap.upper_covers(members[i]))
      if (auto it = index.find(u); it != index.end()) covers.emplace_back(static_cast<int>(i), it->second);
  }
  ColoredPoset p(heap.diagram().induced(used), std::move(colors), std::move(covers));
  return {std::move(p), std::move(members), std::move(used)};
}

std::string describe(const PeriodicHeap& heap, HeapElement e) {
  return heap.cell_name(e.cell) + "@" + std::to_string(e.height);
}

// Rewrites a window report in terms of heap elements and heap colors.
CheckReport lift(const HeapWindow& w, CheckReport r) {
  for (auto& wit : r.witnesses) {
    std::string where;
    for (Element x : wit.elements) {
      if (!where.empty()) where += ", ";
      // Windows are built from heap elements, so the mapping is total.
      const HeapElement e = w.elements[static_cast<std::size_t>(x)];
      where += std::to_string(e.cell) + "@" + std::to_string(e.height);
    }
    for (auto& c : wit.colors) c = w.colors[static_cast<std::size_t>(c)];
    wit.note += (wit.note.empty() ? "" : " ") + std::string("[") + where + "]";
  }
  return r;
}

}  // namespace

HeapWindow window(const PeriodicHeap& heap, std::int64_t lo, std::int64_t hi) {
  if (lo >= hi) throw Error(ErrorKind::EmptyWindow, "window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  auto members = heap.elements_between(lo, hi);
  if (members.empty()) throw Error(ErrorKind::EmptyWindow, "no element between the given heights");
  return build_window(heap, std::move(members));
}

CheckReport check_g4(const PeriodicHeap& heap) {
  CheckReport r{"G4", true, {}};
  const auto& d = heap.diagram();
  for (int c = 0; c < heap.cell_count(); ++c) {
    const HeapElement x{c, heap.base_height(c)};
    const Color a = heap.color(x);
    auto nbrs = heap.upper_covers(x);
    const auto low = heap.lower_covers(x);
    nbrs.insert(nbrs.end(), low.begin(), low.end());
    for (Color b : d.neighbors(a)) {
      const bool has = std::any_of(nbrs.begin(), nbrs.end(), [&](const HeapElement& y) { return heap.color(y) == b; });
      if (!has) r.witnesses.push_back({{}, {a, b}, std::nullopt, "no neighbor of color " + d.label(b) + " at " + describe(heap, x)});
    }
  }
  r.holds = r.witnesses.empty();
  return r;
}

std::vector<CheckReport> full_heap_reports(const PeriodicHeap& heap) {
  std::vector<CheckReport> out;
  const auto [lo, hi] = heap.validation_window();
  const HeapWindow w = window(heap, lo, hi);
  for (Axiom ax : {Axiom{Property::EC}, Axiom{Property::NA}, Axiom{Property::AC}, Axiom{Property::ICE2}})
    out.push_back(lift(w, check(w.poset, ax)));

  // G3: in height order, each color's elements over two periods form a chain.
  CheckReport g3{"G3", true, {}};
  const auto& d = heap.diagram();
  for (Color a = 0; a < d.size(); ++a) {
    std::vector<HeapElement> chain;
    for (const auto& e : heap.elements_between(0, 2 * heap.period() - 1))
      if (heap.color(e) == a) chain.push_back(e);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!heap.less(chain[i], chain[i + 1])) {
        g3.witnesses.push_back({{}, {a}, std::nullopt,
                                describe(heap, chain[i]) + " and " + describe(heap, chain[i + 1]) + " are incomparable"});
        break;
      }
  }
  g3.holds = g3.witnesses.empty();
  out.push_back(std::move(g3));
  out.push_back(check_g4(heap));
  return out;
}

SemiInfiniteFilter::SemiInfiniteFilter(PeriodicHeap heap, std::vector<HeapElement> generators)
    : heap_(std::move(heap)) {
  if (generators.empty()) throw Error(ErrorKind::BadParameter, "filter needs at least one generator");
  for (const auto& g : generators)
    if (!heap_.contains(g))
      throw Error(ErrorKind::BadParameter, "generator (" + std::to_string(g.cell) + ", " + std::to_string(g.height) +
                                               ") is not a heap element");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    const bool redundant =
        std::any_of(generators.begin(), generators.end(), [&](const HeapElement& h) { return heap_.less(h, g); });
    if (!redundant) generators_.push_back(g);
  }
}

SemiInfiniteFilter SemiInfiniteFilter::whole(PeriodicHeap heap) { return SemiInfiniteFilter(std::move(heap), true); }

bool SemiInfiniteFilter::contains(HeapElement e) const {
  if (!heap_.contains(e)) return false;
  if (whole_) return true;
  return std::any_of(generators_.begin(), generators_.end(), [&](const HeapElement& g) { return heap_.leq(g, e); });
}

std::int64_t SemiInfiniteFilter::min_height() const {
  if (whole_) throw Error(ErrorKind::BadParameter, "the whole heap has no lowest element");
  return generators_.front().height;
}

HeapElement SemiInfiniteFilter::color_minimum(Color a) const {
  if (whole_) throw Error(ErrorKind::BadParameter, "the whole heap has no color minimum");
  const std::int64_t lo = min_height();
  const std::int64_t span = (2 * heap_.cell_count() + 2) * heap_.period();
  for (const auto& e : heap_.elements_between(lo, lo + span))
    if (heap_.color(e) == a && contains(e)) return e;
  throw Error(ErrorKind::InternalError, "color '" + heap_.diagram().label(a) + "' not found above the generators");
}

HeapWindow filter_window(const SemiInfiniteFilter& f, std::int64_t lo, std::int64_t hi) {
  std::vector<HeapElement> members;
  for (const auto& e : f.heap().elements_between(lo, hi))
    if (f.contains(e)) members.push_back(e);
  if (members.empty()) throw Error(ErrorKind::EmptyWindow, "no filter element between the given heights");
  return build_window(f.heap(), std::move(members));
}

const CheckReport* InfiniteReport::report(std::string_view property) const {
  for (const auto& r : reports)
    if (r.property == property) return &r;
  return nullptr;
}

namespace {

// Lower census at the minimum y of color a: elements of F below y with an
// adjacent color.
std::vector<HeapElement> lower_set(const SemiInfiniteFilter& f, HeapElement y) {
  const auto& heap = f.heap();
  const auto& d = heap.diagram();
  std::vector<HeapElement> out;
  for (const auto& z : heap.elements_between(f.min_height(), y.height - 1))
    if (d.adjacent(heap.color(z), heap.color(y)) && f.contains(z) && heap.less(z, y)) out.push_back(z);
  return out;
}

int census(const PeriodicHeap& heap, const std::vector<HeapElement>& zs, Color a) {
  int sum = 0;
  for (const auto& z : zs) sum -= heap.diagram().theta(heap.color(z), a);
  return sum;
}

}  // namespace

InfiniteReport check_infinite_axioms(const SemiInfiniteFilter& f) {
  InfiniteReport out;
  const auto& heap = f.heap();
  const auto& d = heap.diagram();
  HeapWindow w = [&] {
    if (f.is_whole()) {
      const auto [lo, hi] = heap.validation_window();
      out.window_lo = lo;
      out.window_hi = hi;
      return window(heap, lo, hi);
    }
    std::int64_t top = f.min_height();
    for (Color a = 0; a < d.size(); ++a) top = std::max(top, f.color_minimum(a).height);
    out.window_lo = f.min_height();
    out.window_hi = top + 3 * static_cast<std::int64_t>(heap.cell_count()) + 2 * heap.period();
    return filter_window(f, out.window_lo, out.window_hi);
  }();
  bool axioms = true;
  for (Axiom ax : {Axiom{Property::EC}, Axiom{Property::NA}, Axiom{Property::AC}, Axiom{Property::ICE2}}) {
    out.reports.push_back(lift(w, check(w.poset, ax)));
    axioms = axioms && out.reports.back().holds;
  }
  CheckReport lcb1{"LCB1", true, {}}, lcb2{"LCB2", true, {}};
  if (!f.is_whole()) {
    for (Color a = 0; a < d.size(); ++a) {
      const HeapElement y = f.color_minimum(a);
      const int sum = census(heap, lower_set(f, y), a);
      const std::string note = "lower census at " + describe(heap, y);
      if (sum > 1) lcb1.witnesses.push_back({{}, {a}, sum, note});
      if (sum > 2) lcb2.witnesses.push_back({{}, {a}, sum, note});
    }
  }
  lcb1.holds = lcb1.witnesses.empty();
  lcb2.holds = lcb2.witnesses.empty();
  out.lcb1 = lcb1.holds;
  out.lcb2 = lcb2.holds;
  out.reports.push_back(std::move(lcb1));
  out.reports.push_back(std::move(lcb2));
  out.cua = true;
  out.cub = f.is_whole();
  out.cbb = !out.cub;
  out.ucb1_vacuous = true;
  out.d_complete = axioms;
  out.full_heap = axioms && out.cua && out.cub;
  return out;
}

Extension downward_extend(const SemiInfiniteFilter& f) {
  if (f.is_whole()) throw Error(ErrorKind::NoEligibleColor, "the whole heap has no color minimum to extend below");
  const auto& heap = f.heap();
  const auto& d = heap.diagram();
  for (Color a = 0; a < d.size(); ++a) {
    const HeapElement y = f.color_minimum(a);
    const auto lower = lower_set(f, y);
    if (census(heap, lower, a) != 2) continue;

    std::vector<HeapElement> covers;
    if (lower.size() == 2) {
      const auto& u = lower[0];
      const auto& v = lower[1];
      if (heap.less(u, v)) covers = {u};
      else if (heap.less(v, u)) covers = {v};
      else covers = {u, v};
    } else if (lower.size() == 1) {
      covers = lower;
    } else {
      throw Error(ErrorKind::AxiomFailure, "lower census 2 at " + describe(heap, y) + " from " +
                                               std::to_string(lower.size()) + " elements");
    }
    std::sort(covers.begin(), covers.end());

    // The new element is the ambient predecessor of y in its color chain.
    HeapElement below{-1, 0};
    for (const auto& e : heap.elements_between(y.height - heap.period(), y.height - 1))
      if (heap.color(e) == a) below = e;
    if (below.cell < 0 || !heap.less(below, y))
      throw Error(ErrorKind::InternalError, "no predecessor of " + describe(heap, y) + " in its color chain");
    if (heap.upper_covers(below) != covers)
      throw Error(ErrorKind::InternalError, "new element's covers disagree with the ambient heap at " + describe(heap, below));

    auto gens = f.generators();
    gens.push_back(below);
    return {SemiInfiniteFilter(heap, std::move(gens)), below, a, std::move(covers)};
  }
  throw Error(ErrorKind::NoEligibleColor, "no color minimum has lower census 2");
}

Saturation saturate(const SemiInfiniteFilter& f, std::size_t max_steps) {
  if (f.is_whole()) throw Error(ErrorKind::NoEligibleColor, "the whole heap cannot be extended");
  const auto& heap = f.heap();
  const std::int64_t h = heap.period();
  const std::int64_t start = f.min_height();
  std::vector<SaturationStep> steps;
  SemiInfiniteFilter current = f;
  for (std::size_t k = 0; k < max_steps; ++k) {
    Extension ext = downward_extend(current);
    current = std::move(ext.filter);
    const bool ok = check_infinite_axioms(current).d_complete;
    steps.push_back({ext.added, ext.color, ok});
    if (!ok) throw Error(ErrorKind::AxiomFailure, "filter after step " + std::to_string(k + 1) + " is not d-complete");

    // Every element with height in [low, start) is already present.
    std::int64_t low = start;
    while (start - low < 2 * h && low > current.min_height()) {
      const auto level = heap.elements_between(low - 1, low - 1);
      if (!std::all_of(level.begin(), level.end(), [&](const HeapElement& e) { return current.contains(e); })) break;
      --low;
    }
    if (start - low < 2 * h) continue;
    const std::int64_t band = start - 2 * h;
    const std::string k1 = canonical_key(filter_window(current, band, band + h - 1).poset);
    const std::string k2 = canonical_key(filter_window(current, band + h, band + 2 * h - 1).poset);
    const std::string ambient = canonical_key(build_window(heap, heap.elements_between(band, band + h - 1)).poset);
    if (k1 == k2 && k1 == ambient) return {std::move(steps), std::move(current), band, k1};
  }
  throw Error(ErrorKind::NoConvergenceWithinBudget,
              "no periodic band after " + std::to_string(max_steps) + " extension steps");
}

MixedClassification classify_mixed(const ColoredPoset& finite, const std::vector<SemiInfiniteFilter>& filters) {
  std::vector<const DynkinDiagram*> parts{&finite.diagram()};
  for (const auto& f : filters) parts.push_back(&f.heap().diagram());
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto* d : parts)
    for (const auto& l : d->labels()) {
      if (!seen.insert(l).second) throw Error(ErrorKind::ColorNotUnique, "color '" + l + "' occurs in two parts");
      labels.push_back(l);
    }
  std::vector<std::vector<int>> theta(labels.size(), std::vector<int>(labels.size(), 0));
  std::size_t offset = 0;
  for (const auto* d : parts) {
    for (Color a = 0; a < d->size(); ++a)
      for (Color b = 0; b < d->size(); ++b)
        theta[offset + static_cast<std::size_t>(a)][offset + static_cast<std::size_t>(b)] = d->theta(a, b);
    offset += static_cast<std::size_t>(d->size());
  }

  MixedClassification out{DynkinDiagram(std::move(labels), theta), classify(finite), {}, 0, false};
  out.component_count = out.finite.components.size();
  out.is_d_complete = out.finite.is_d_complete;
  for (const auto& f : filters) {
    out.infinite.push_back(check_infinite_axioms(f));
    out.is_d_complete = out.is_d_complete && out.infinite.back().d_complete;
    // Adjacent colors are comparable, so a filter splits exactly along the
    // diagram components it meets.
    const auto comps = components(f.heap().diagram());
    for (const auto& c : comps) {
      bool met = f.is_whole();
      for (const auto& g : f.generators())
        met = met || std::find(c.colors.begin(), c.colors.end(), f.heap().color(g)) != c.colors.end();
      if (met) ++out.component_count;
    }
  }
  return out;
}

PeriodicHeap builtin_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "cycle needs at least 3 colors, got " + std::to_string(n));
  std::vector<std::string> labels;
  std::vector<std::vector<int>> theta(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<Color> colors;
  std::vector<Template> templates;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    labels.push_back(std::to_string(i));
    theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    theta[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
    colors.push_back(i);
    templates.push_back({i, j, j == 0 ? 1 : 0});
  }
  return PeriodicHeap(DynkinDiagram(std::move(labels), theta), std::move(colors), std::move(templates));
}

PeriodicHeap builtin_alternating_a1() {
  DynkinDiagram d({"a", "b"}, {{2, -2}, {-2, 2}});
  return PeriodicHeap(std::move(d), {0, 1}, {{0, 1, 0}, {1, 0, 1}}, {"a", "b"});
}

}  // namespace heapkit

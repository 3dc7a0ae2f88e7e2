#include "heapkit/axioms.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include "heapkit/error.hpp"

namespace heapkit {

namespace {

constexpr const char* kPropertyNames[] = {"EC", "NA", "AC", "ICE2", "UCB", "LCB", "S1", "S2",
                                          "S3", "S4", "G1", "G2", "G3", "G4", "G5"};

class Checker {
 public:
  Checker(const ColoredPoset& p, bool first_only) : p_(p), d_(p.diagram()), first_only_(first_only) {
    by_color_.assign(static_cast<std::size_t>(d_.size()), p.empty_set());
    for (Element x = 0; x < p.size(); ++x) by_color_[static_cast<std::size_t>(p.color(x))].set(static_cast<std::size_t>(x));
  }

  CheckReport run(Axiom ax) {
    report_ = CheckReport{ax.name(), true, {}};
    switch (ax.property) {
      case Property::EC: ec(); break;
      case Property::NA: na(); break;
      case Property::AC: ac(); break;
      case Property::ICE2: consecutive_sums(false); break;
      case Property::UCB: frontier(ax.k, true); break;
      case Property::LCB: frontier(ax.k, false); break;
      case Property::S1: s1(); break;
      case Property::S2: s2(); break;
      case Property::S3: s3(); break;
      case Property::S4: s4(); break;
      case Property::G1: g1(); break;
      case Property::G2: g2(); break;
      case Property::G3:
      case Property::G4:
        throw Error(ErrorKind::UnsupportedOnFinite, ax.name() + " is only decidable on periodic heaps");
      case Property::G5: consecutive_sums(true); break;
    }
    report_.holds = report_.witnesses.empty();
    return std::move(report_);
  }

 private:
  bool done() const { return first_only_ && !report_.witnesses.empty(); }

  void fail(std::vector<Element> elements, std::optional<int> sum = std::nullopt, std::string note = {}) {
    Witness w;
    for (Element x : elements) w.colors.push_back(p_.color(x));
    w.elements = std::move(elements);
    w.sum = sum;
    w.note = std::move(note);
    report_.witnesses.push_back(std::move(w));
  }

  // Calls f(x, y) for each incomparable pair x < y (by id) until done().
  template <class F>
  void incomparable_pairs(F&& f) {
    for (Element x = 0; x < p_.size() && !done(); ++x)
      for (Element y = x + 1; y < p_.size() && !done(); ++y)
        if (!p_.comparable(x, y)) f(x, y);
  }

  void ec() {
    incomparable_pairs([&](Element x, Element y) {
      if (p_.color(x) == p_.color(y)) fail({x, y}, std::nullopt, "incomparable elements of equal color");
    });
  }

  void na() {
    for (const auto& [x, y] : p_.covers()) {
      if (done()) return;
      if (!d_.adjacent(p_.color(x), p_.color(y))) fail({x, y}, std::nullopt, "neighbors with non-adjacent colors");
    }
  }

  void ac() {
    incomparable_pairs([&](Element x, Element y) {
      if (d_.adjacent(p_.color(x), p_.color(y))) fail({x, y}, std::nullopt, "incomparable elements of adjacent colors");
    });
  }

  // Consecutive pairs x < y of one color: no element of that color strictly between.
  template <class F>
  void consecutive(F&& f) {
    for (Color a = 0; a < d_.size() && !done(); ++a) {
      const ElementSet& pa = by_color_[static_cast<std::size_t>(a)];
      pa.for_each([&](int x) {
        if (done()) return;
        (pa & p_.above(x)).for_each([&](int y) {
          if (done()) return;
          ElementSet open = p_.above(x) & p_.below(y);
          if (!open.intersects(pa)) f(a, x, y, open);
        });
      });
    }
  }

  int household(const ElementSet& s, Color a) const {
    int sum = 0;
    s.for_each([&](int z) { sum -= d_.theta(p_.color(z), a); });
    return sum;
  }

  // ICE2 sums -theta over the open interval; G5 sums theta over the closed one.
  void consecutive_sums(bool closed) {
    consecutive([&](Color a, Element x, Element y, const ElementSet& open) {
      const int census = household(open, a);
      const int sum = closed ? 4 - census : census;
      if (sum != 2) fail({x, y}, sum, closed ? "closed interval sum is not 2" : "interval census is not 2");
    });
  }

  void frontier(int k, bool upper) {
    for (Color a = 0; a < d_.size() && !done(); ++a) {
      const ElementSet& pa = by_color_[static_cast<std::size_t>(a)];
      const auto extremes = upper ? p_.maximal_in(pa) : p_.minimal_in(pa);
      for (Element x : extremes) {
        if (done()) return;
        const int sum = household(upper ? p_.above(x) : p_.below(x), a);
        if (sum > k) fail({x}, sum, upper ? "upper census exceeds bound" : "lower census exceeds bound");
      }
    }
  }

  void s1() {
    for (const auto& [x, y] : p_.covers()) {
      if (done()) return;
      if (p_.color(x) != p_.color(y) && !d_.adjacent(p_.color(x), p_.color(y)))
        fail({x, y}, std::nullopt, "neighbors with distant colors");
    }
    incomparable_pairs([&](Element x, Element y) {
      if (p_.color(x) == p_.color(y) || d_.adjacent(p_.color(x), p_.color(y)))
        fail({x, y}, std::nullopt, "incomparable elements with non-distant colors");
    });
  }

  void s2() {
    consecutive([&](Color a, Element x, Element y, const ElementSet& open) {
      std::vector<Element> adj;
      open.for_each([&](int z) {
        if (d_.adjacent(p_.color(z), a)) adj.push_back(z);
      });
      bool ok = false;
      if (adj.size() == 2)
        ok = d_.theta(p_.color(adj[0]), a) == -1 && d_.theta(p_.color(adj[1]), a) == -1;
      else if (open.count() == 1 && adj.size() == 1)
        ok = d_.theta(p_.color(adj[0]), a) == -2;
      if (!ok) fail({x, y}, household(open, a), "interval is neither two 1-adjacent nor one 2-adjacent element");
    });
  }

  void s3() {
    for (Color a = 0; a < d_.size() && !done(); ++a) {
      for (Element x : p_.maximal_in(by_color_[static_cast<std::size_t>(a)])) {
        if (done()) return;
        const auto& up = p_.upper_covers(x);
        if (up.size() > 1) {
          std::vector<Element> w{x};
          w.insert(w.end(), up.begin(), up.end());
          fail(std::move(w), std::nullopt, "color maximum covered more than once");
          continue;
        }
        if (up.empty()) continue;
        const Element y = up.front();
        const Color b = p_.color(y);
        const bool top = !p_.above(y).intersects(by_color_[static_cast<std::size_t>(b)]);
        if (!top || d_.theta(b, a) != -1)
          fail({x, y}, std::nullopt, "cover of a color maximum is not the top of a 1-adjacent color");
      }
    }
  }

  void s4() {
    if (is_acyclic(d_)) return;
    Witness w;
    w.note = "diagram has a cycle";
    // Report one edge that closes a cycle: union-find over edges in order.
    std::vector<Color> parent(static_cast<std::size_t>(d_.size()));
    for (Color a = 0; a < d_.size(); ++a) parent[static_cast<std::size_t>(a)] = a;
    auto find = [&](Color a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
      return a;
    };
    for (Color a = 0; a < d_.size() && w.colors.empty(); ++a)
      for (Color b : d_.neighbors(a)) {
        if (b < a) continue;
        const Color ra = find(a), rb = find(b);
        if (ra == rb) {
          w.colors = {a, b};
          break;
        }
        parent[static_cast<std::size_t>(ra)] = rb;
      }
    report_.witnesses.push_back(std::move(w));
  }

  void g1() {
    incomparable_pairs([&](Element x, Element y) {
      const Color a = p_.color(x), b = p_.color(y);
      if (a == b) fail({x, y}, std::nullopt, "color set is not a chain");
      else if (d_.adjacent(a, b)) fail({x, y}, std::nullopt, "union of adjacent color sets is not a chain");
    });
  }

  void g2() {
    // Closure of the order restricted to pairs of equal or adjacent colors.
    const auto n = static_cast<std::size_t>(p_.size());
    std::vector<ElementSet> reach(n, p_.empty_set());
    const auto& topo = p_.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const Element x = *it;
      auto& r = reach[static_cast<std::size_t>(x)];
      p_.above(x).for_each([&](int y) {
        const Color a = p_.color(x), b = p_.color(y);
        if (a == b || d_.adjacent(a, b)) {
          r.set(static_cast<std::size_t>(y));
          r |= reach[static_cast<std::size_t>(y)];
        }
      });
    }
    for (Element x = 0; x < p_.size() && !done(); ++x) {
      ElementSet missing = p_.above(x) - reach[static_cast<std::size_t>(x)];
      missing.for_each([&](int y) {
        if (!done()) fail({x, y}, std::nullopt, "relation not generated by the color chains");
      });
    }
  }

  const ColoredPoset& p_;
  const DynkinDiagram& d_;
  bool first_only_;
  std::vector<ElementSet> by_color_;
  CheckReport report_;
};

bool holds(const ColoredPoset& p, Axiom ax) { return Checker(p, true).run(ax).holds; }

bool dominant_minuscule_heap(const ColoredPoset& p) {
  Checker c(p, true);
  for (Property pr : {Property::S4, Property::S1, Property::S2, Property::S3})
    if (!c.run({pr}).holds) return false;
  return true;
}

void require_connected_heap(const ColoredPoset& p) {
  if (p.size() == 0 || !p.is_connected())
    throw Error(ErrorKind::NotAHeap, "poset is empty or disconnected");
  if (!dominant_minuscule_heap(p)) throw Error(ErrorKind::NotAHeap, "poset is not a dominant minuscule heap");
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HEAPKIT_THREADS")) {
    unsigned v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    if (std::from_chars(env, end, v).ec == std::errc{} && v > 0) return v;
  }
  return 1;
}

}  // namespace

std::string Axiom::name() const {
  std::string s = kPropertyNames[static_cast<int>(property)];
  if (property == Property::UCB || property == Property::LCB) s += std::to_string(k);
  return s;
}

std::optional<Axiom> Axiom::parse(std::string_view text) {
  for (int i = 0; i < static_cast<int>(std::size(kPropertyNames)); ++i) {
    const auto pr = static_cast<Property>(i);
    const std::string_view name = kPropertyNames[i];
    if (pr == Property::UCB || pr == Property::LCB) {
      if (text.size() > name.size() && text.substr(0, name.size()) == name) {
        int k = 0;
        auto rest = text.substr(name.size());
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
        if (ec == std::errc{} && ptr == rest.data() + rest.size() && k >= 1) return Axiom{pr, k};
      }
    } else if (text == name) {
      return Axiom{pr, 1};
    }
  }
  return std::nullopt;
}

CheckReport check(const ColoredPoset& p, Axiom axiom, CheckOptions opts) {
  if ((axiom.property == Property::UCB || axiom.property == Property::LCB) && axiom.k < 1)
    throw Error(ErrorKind::BadParameter, "census bound must be at least 1");
  return Checker(p, opts.first_only).run(axiom);
}

const CheckReport* Classification::report(std::string_view property) const {
  for (const auto& r : reports)
    if (r.property == property) return &r;
  return nullptr;
}

bool is_dominant_minuscule_heap(const ColoredPoset& p) { return dominant_minuscule_heap(p); }

bool is_d_complete(const ColoredPoset& p) {
  Checker c(p, true);
  for (Axiom ax : {Axiom{Property::EC}, Axiom{Property::NA}, Axiom{Property::AC}, Axiom{Property::ICE2},
                   Axiom{Property::UCB, 1}})
    if (!c.run(ax).holds) return false;
  return true;
}

Classification classify(const ColoredPoset& p) {
  Classification out;
  Checker c(p, false);
  for (Axiom ax : {Axiom{Property::EC}, Axiom{Property::NA}, Axiom{Property::AC}, Axiom{Property::ICE2},
                   Axiom{Property::UCB, 1}, Axiom{Property::LCB, 1}, Axiom{Property::S1}, Axiom{Property::S2},
                   Axiom{Property::S3}, Axiom{Property::S4}})
    out.reports.push_back(c.run(ax));
  auto ok = [&](std::size_t i) { return out.reports[i].holds; };
  out.is_d_complete = ok(0) && ok(1) && ok(2) && ok(3) && ok(4);
  out.is_minuscule = out.is_d_complete && ok(5);
  out.is_minuscule_heap = ok(6) && ok(7);
  out.is_dominant_minuscule_heap = out.is_minuscule_heap && ok(8) && ok(9);
  out.routes_agree = out.is_d_complete == out.is_dominant_minuscule_heap;
  for (const auto& comp : components(p)) {
    ComponentVerdict v;
    v.elements = comp.elements;
    v.colors = comp.colors;
    v.is_d_complete = is_d_complete(comp.poset);
    v.is_minuscule = v.is_d_complete && holds(comp.poset, {Property::LCB, 1});
    v.is_dominant_minuscule_heap = dominant_minuscule_heap(comp.poset);
    out.components.push_back(std::move(v));
  }
  return out;
}

std::optional<int> census_upper(const ColoredPoset& p, const ElementSet& ideal, Color b) {
  if (!p.is_ideal(ideal)) throw Error(ErrorKind::NotAnIdeal, "set is not down-closed");
  if (!p.diagram().contains(b)) throw Error(ErrorKind::UnknownColor, "color index " + std::to_string(b));
  const auto tops = p.maximal_in(p.elements_of_color(b) & ideal);
  if (tops.empty()) return std::nullopt;
  int sum = 0;
  (p.above(tops.front()) & ideal).for_each([&](int y) {
    if (p.diagram().adjacent(p.color(y), b)) sum -= p.diagram().theta(p.color(y), b);
  });
  return sum;
}

std::optional<int> census_lower(const ColoredPoset& p, const ElementSet& filter, Color b) {
  if (!p.is_filter(filter)) throw Error(ErrorKind::NotAFilter, "set is not up-closed");
  if (!p.diagram().contains(b)) throw Error(ErrorKind::UnknownColor, "color index " + std::to_string(b));
  const auto bottoms = p.minimal_in(p.elements_of_color(b) & filter);
  if (bottoms.empty()) return std::nullopt;
  int sum = 0;
  (p.below(bottoms.front()) & filter).for_each([&](int y) {
    if (p.diagram().adjacent(p.color(y), b)) sum -= p.diagram().theta(p.color(y), b);
  });
  return sum;
}

ElementSet top_tree(const ColoredPoset& p) {
  require_connected_heap(p);
  ElementSet t = p.empty_set();
  for (Color a = 0; a < p.diagram().size(); ++a)
    for (Element x : p.maximal_in(p.elements_of_color(a))) t.set(static_cast<std::size_t>(x));
  return t;
}

std::vector<Cover> slant_edges(const ColoredPoset& p) {
  const ElementSet t = top_tree(p);
  std::vector<Cover> out;
  for (const auto& [x, y] : p.covers())
    if (t.test(static_cast<std::size_t>(x)) && t.test(static_cast<std::size_t>(y)) &&
        p.elements_of_color(p.color(y)).count() == 1)
      out.emplace_back(x, y);
  return out;
}

SlantDecomposition slant_decompose(const ColoredPoset& p) {
  const auto edges = slant_edges(p);
  std::vector<Cover> kept;
  for (const auto& c : p.covers())
    if (!std::binary_search(edges.begin(), edges.end(), c)) kept.push_back(c);
  const ColoredPoset cut(p.diagram(), p.colors(), std::move(kept));

  SlantDecomposition out;
  out.parts = components(cut);
  std::vector<std::pair<int, Element>> where(static_cast<std::size_t>(p.size()));
  for (std::size_t i = 0; i < out.parts.size(); ++i)
    for (std::size_t j = 0; j < out.parts[i].elements.size(); ++j)
      where[static_cast<std::size_t>(out.parts[i].elements[j])] = {static_cast<int>(i), static_cast<Element>(j)};
  for (const auto& [x, y] : edges) {
    const auto [px, lx] = where[static_cast<std::size_t>(x)];
    const auto [py, ly] = where[static_cast<std::size_t>(y)];
    out.joins.push_back({px, lx, py, ly, p.diagram().theta(p.color(x), p.color(y))});
  }
  for (const auto& part : out.parts)
    if (!slant_edges(part.poset).empty())
      throw Error(ErrorKind::InternalError, "slant decomposition left a slant edge behind");
  return out;
}

ColoredPoset slant_sum(const std::vector<ColoredPoset>& parts, const std::vector<SlantJoin>& joins) {
  if (parts.empty()) throw Error(ErrorKind::BadParameter, "slant sum of no parts");
  std::vector<int> elem_offset, color_offset;
  std::vector<std::string> labels;
  std::vector<Color> colors;
  std::vector<Cover> covers;
  for (const auto& part : parts) {
    elem_offset.push_back(static_cast<int>(colors.size()));
    color_offset.push_back(static_cast<int>(labels.size()));
    for (const auto& l : part.diagram().labels()) {
      if (std::find(labels.begin(), labels.end(), l) != labels.end())
        throw Error(ErrorKind::ColorNotUnique, "color '" + l + "' labels two parts");
      labels.push_back(l);
    }
    for (Color c : part.colors()) colors.push_back(c + color_offset.back());
    for (const auto& [x, y] : part.covers()) covers.emplace_back(x + elem_offset.back(), y + elem_offset.back());
  }
  const auto m = labels.size();
  std::vector<std::vector<int>> theta(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& d = parts[i].diagram();
    const auto off = static_cast<std::size_t>(color_offset[i]);
    for (Color a = 0; a < d.size(); ++a)
      for (Color b = 0; b < d.size(); ++b)
        theta[off + static_cast<std::size_t>(a)][off + static_cast<std::size_t>(b)] = d.theta(a, b);
  }

  std::vector<bool> lower_used(colors.size(), false);
  for (const auto& j : joins) {
    const int np = static_cast<int>(parts.size());
    if (j.lower_part < 0 || j.lower_part >= np || j.upper_part < 0 || j.upper_part >= np || j.lower_part == j.upper_part)
      throw Error(ErrorKind::BadParameter, "join refers to parts " + std::to_string(j.lower_part) + " and " +
                                               std::to_string(j.upper_part));
    const auto& lp = parts[static_cast<std::size_t>(j.lower_part)];
    const auto& up = parts[static_cast<std::size_t>(j.upper_part)];
    if (j.lower < 0 || j.lower >= lp.size() || j.upper < 0 || j.upper >= up.size())
      throw Error(ErrorKind::ElementOutOfRange, "join element outside its part");
    if (!lp.upper_covers(j.lower).empty())
      throw Error(ErrorKind::BadParameter, "join element " + std::to_string(j.lower) + " is not maximal in part " +
                                               std::to_string(j.lower_part));
    if (up.elements_of_color(up.color(j.upper)).count() != 1)
      throw Error(ErrorKind::ColorNotUnique, "color '" + up.diagram().label(up.color(j.upper)) +
                                                 "' occurs more than once in part " + std::to_string(j.upper_part));
    if (j.reverse_theta >= 0) throw Error(ErrorKind::BadParameter, "reverse theta must be negative");
    const int x = j.lower + elem_offset[static_cast<std::size_t>(j.lower_part)];
    const int y = j.upper + elem_offset[static_cast<std::size_t>(j.upper_part)];
    if (lower_used[static_cast<std::size_t>(x)])
      throw Error(ErrorKind::WouldViolateUCB1, "element " + std::to_string(j.lower) + " of part " +
                                                   std::to_string(j.lower_part) + " joined twice");
    lower_used[static_cast<std::size_t>(x)] = true;
    const auto cx = static_cast<std::size_t>(colors[static_cast<std::size_t>(x)]);
    const auto cy = static_cast<std::size_t>(colors[static_cast<std::size_t>(y)]);
    theta[cy][cx] = -1;
    theta[cx][cy] = j.reverse_theta;
    covers.emplace_back(x, y);
  }

  ColoredPoset out(DynkinDiagram(std::move(labels), theta), std::move(colors), std::move(covers));
  if (!out.is_connected()) throw Error(ErrorKind::DisconnectedResult, "joins leave the poset disconnected");
  const auto ucb = check(out, {Property::UCB, 1}, {true});
  if (!ucb.holds)
    throw Error(ErrorKind::WouldViolateUCB1,
                "upper census " + std::to_string(ucb.witnesses.front().sum.value_or(0)) + " at element " +
                    std::to_string(ucb.witnesses.front().elements.front()));
  if (!dominant_minuscule_heap(out)) throw Error(ErrorKind::AxiomFailure, "slant sum is not a dominant minuscule heap");
  return out;
}

namespace {

struct Grown {
  std::vector<Color> colors;  // colors in the ambient diagram
  std::vector<Cover> covers;
};

ColoredPoset materialize(const DynkinDiagram& d, const Grown& g) {
  std::vector<Color> used = g.colors;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<Color> local;
  local.reserve(g.colors.size());
  for (Color c : g.colors)
    local.push_back(static_cast<Color>(std::lower_bound(used.begin(), used.end(), c) - used.begin()));
  return ColoredPoset(d.induced(used), std::move(local), g.covers);
}

void antichains(const ColoredPoset& p, Element from, ElementSet& current, ElementSet& blocked,
                const std::function<void(const ElementSet&)>& visit) {
  visit(current);
  for (Element x = from; x < p.size(); ++x) {
    if (blocked.test(static_cast<std::size_t>(x))) continue;
    ElementSet saved = blocked;
    current.set(static_cast<std::size_t>(x));
    blocked |= p.above(x);
    blocked |= p.below(x);
    antichains(p, x + 1, current, blocked, visit);
    current.reset(static_cast<std::size_t>(x));
    blocked = std::move(saved);
  }
}

// Every heap with one more element whose removal (as a minimal element)
// gives `g`.
void extend(const DynkinDiagram& d, const Grown& g, std::vector<std::pair<std::string, Grown>>& out) {
  const ColoredPoset p = materialize(d, g);
  const auto n = static_cast<Element>(g.colors.size());
  ElementSet current = p.empty_set(), blocked = p.empty_set();
  antichains(p, 0, current, blocked, [&](const ElementSet& a) {
    const ElementSet reach = p.up_closure(a);
    const auto members = a.members();
    for (Color c = 0; c < d.size(); ++c) {
      bool ok = true;
      for (Element y : members) ok = ok && d.adjacent(c, g.colors[static_cast<std::size_t>(y)]);
      for (Element y = 0; y < n && ok; ++y)
        if (g.colors[static_cast<std::size_t>(y)] == c && !reach.test(static_cast<std::size_t>(y))) ok = false;
      if (!ok) continue;
      Grown h = g;
      h.colors.push_back(c);
      for (Element y : members) h.covers.emplace_back(n, y);
      const ColoredPoset q = materialize(d, h);
      if (!is_d_complete(q)) continue;
      out.emplace_back(canonical_key(q), std::move(h));
    }
  });
}

}  // namespace

std::vector<ColoredPoset> enumerate_heaps(const DynkinDiagram& d, int max_size, EnumerateOptions opts) {
  if (max_size < 1) throw Error(ErrorKind::BadParameter, "max_size must be at least 1");
  const unsigned threads = thread_count(opts.threads);
  std::vector<ColoredPoset> result;
  std::map<std::string, Grown> level;
  for (Color c = 0; c < d.size(); ++c) {
    Grown g{{c}, {}};
    level.emplace(canonical_key(materialize(d, g)), g);
  }
  for (int size = 1;; ++size) {
    if (result.size() + level.size() > opts.cap)
      throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(opts.cap) + " heaps (" +
                                              std::to_string(result.size()) + " so far)");
    for (const auto& [key, g] : level) result.push_back(materialize(d, g));
    if (size == max_size) break;

    std::vector<const Grown*> work;
    for (const auto& [key, g] : level) work.push_back(&g);
    std::map<std::string, Grown> next;
    std::mutex mu;
    auto worker = [&](unsigned t) {
      std::vector<std::pair<std::string, Grown>> found;
      for (std::size_t i = t; i < work.size(); i += threads) extend(d, *work[i], found);
      std::lock_guard lock(mu);
      for (auto& [k, g] : found) next.emplace(std::move(k), std::move(g));
    };
    if (threads <= 1 || work.size() < 2) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  return result;
}

AuditReport equivalence_audit(const ColoredPoset& p) {
  AuditReport r;
  Checker c(p, true);
  auto h = [&](Axiom ax) { return c.run(ax).holds; };
  const bool ec = h({Property::EC}), na = h({Property::NA}), ac = h({Property::AC}), ice2 = h({Property::ICE2});
  const bool g1 = h({Property::G1}), g2 = h({Property::G2}), g5 = h({Property::G5});
  const bool s1 = h({Property::S1}), s2 = h({Property::S2}), s3 = h({Property::S3}), s4 = h({Property::S4});
  const bool ucb1 = h({Property::UCB, 1});
  r.coloring_bundle = ec && na && ac && ice2;
  r.g_bundle = g1 && g2 && g5;
  r.s_bundle = s1 && s2;
  r.d_complete = r.coloring_bundle && ucb1;
  r.dominant_minuscule_heap = r.s_bundle && s3 && s4;
  auto note = [&](bool cond, const char* what) {
    if (!cond) r.discrepancies.emplace_back(what);
  };
  note(r.coloring_bundle == r.g_bundle, "EC+NA+AC+ICE2 disagrees with G1+G2+G5");
  note(r.coloring_bundle == r.s_bundle, "EC+NA+AC+ICE2 disagrees with S1+S2");
  note(r.g_bundle == r.s_bundle, "G1+G2+G5 disagrees with S1+S2");
  if (na) {
    note(!(s3 && s4) || ucb1, "S3+S4 hold but UCB1 fails under NA");
    note(!(ucb1 && ac) || (s3 && s4), "UCB1+AC hold but S3+S4 fail under NA");
  }
  note(r.d_complete == r.dominant_minuscule_heap, "d-complete disagrees with dominant minuscule heap");
  r.agree = r.discrepancies.empty();
  return r;
}

}  // namespace heapkit

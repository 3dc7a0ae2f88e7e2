// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "heapkit/axioms.hpp"
#include "heapkit/error.hpp"
#include "heapkit/heap_periodic.hpp"
#include "heapkit/json_io.hpp"
#include "heapkit/rep.hpp"
#include "heapkit/weyl.hpp"
#include "support.hpp"

using namespace heapkit;
using support::diagram;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << "first failure: " << why << "; ";
    pass = false;
  }
};

bool report(int n, const std::string& title, Outcome& o, Clock::time_point start) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  (" << o.note.str()
            << secs << " s)" << std::endl;
  return o.pass;
}

std::vector<DynkinDiagram> small_diagrams() {
  std::vector<DynkinDiagram> out;
  for (int k = 1; k <= 3; ++k)
    for (const auto& d : support::all_diagrams(k)) out.push_back(d);
  return out;
}

// Finite types of rank four to six, for heaps with more than three colors.
std::vector<DynkinDiagram> named_diagrams() {
  using E = support::Edge;
  return {
      diagram(2, {E{0, 1, -1, -3}}),                                             // G2
      diagram(4, {E{0, 1, -1, -1}, E{1, 2, -1, -1}, E{2, 3, -1, -1}}),           // A4
      diagram(4, {E{0, 1, -1, -1}, E{1, 2, -1, -1}, E{2, 3, -2, -1}}),           // B4
      diagram(4, {E{0, 1, -1, -1}, E{1, 2, -1, -1}, E{2, 3, -1, -2}}),           // C4
      diagram(4, {E{0, 1, -1, -1}, E{1, 2, -2, -1}, E{2, 3, -1, -1}}),           // F4
      diagram(4, {E{0, 1, -1, -1}, E{1, 2, -1, -1}, E{1, 3, -1, -1}}),           // D4
      diagram(5, {E{0, 1, -1, -1}, E{1, 2, -1, -1}, E{2, 3, -1, -1}, E{2, 4, -1, -1}}),  // D5
      diagram(6, {E{0, 1, -1, -1}, E{1, 2, -1, -1}, E{2, 3, -1, -1}, E{3, 4, -1, -1}, E{2, 5, -1, -1}}),  // E6
  };
}

// Every enumerated heap with at most `max_size` elements over the test diagrams.
std::vector<ColoredPoset> heap_corpus(int max_size) {
  std::vector<ColoredPoset> out;
  for (const auto& d : small_diagrams())
    for (auto& p : enumerate_heaps(d, max_size)) out.push_back(std::move(p));
  for (const auto& d : named_diagrams())
    for (auto& p : enumerate_heaps(d, max_size)) out.push_back(std::move(p));
  return out;
}

std::vector<PeriodicHeap> builtin_heaps() {
  std::vector<PeriodicHeap> out{builtin_alternating_a1()};
  for (int n = 3; n <= 6; ++n) out.push_back(builtin_cycle(n));
  return out;
}

std::string heap_name(const PeriodicHeap& h) {
  return h.diagram().size() == 2 && h.diagram().theta(0, 1) == -2 ? "alternating_A1"
                                                                   : "cycle(" + std::to_string(h.diagram().size()) + ")";
}

bool has_minimal_of_color(const ColoredPoset& p, const ElementSet& f, Color b) {
  for (Element x : p.minimal_in(f))
    if (p.color(x) == b) return true;
  return false;
}

// ---------------------------------------------------------------------------

bool criterion1() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t posets = 0, d_complete = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto shapes = support::shapes(n);
    for (int k = 1; k <= std::min(n, 3); ++k) {
      const auto ds = support::all_diagrams(k);
      for (const auto& covers : shapes) {
        const auto colorings = support::colorings(n, covers, k);
        const ColoredPoset base(diagram(k, {}), colorings.front(), covers);
        for (const auto& colors : colorings)
          for (const auto& d : ds) {
            const auto p = base.recolored(d, colors);
            const auto a = equivalence_audit(p);
            ++posets;
            d_complete += a.d_complete;
            if (!a.agree) o.fail("bundles disagree on " + canonical_key(p));
            const support::Oracle oracle(p);
            const bool dc = oracle.d_complete();
            if (dc != a.d_complete) o.fail("d-complete verdict differs from the oracle on " + canonical_key(p));
            if (oracle.dominant_minuscule_heap() != dc)
              o.fail("oracle: d-complete and dominant minuscule heap differ on " + canonical_key(p));
          }
      }
    }
  }
  o.note << posets << " posets, " << d_complete << " d-complete; ";
  if (posets == 0) o.fail("nothing enumerated");
  return report(1, "equivalence suite, <=6 elements, <=3 colors", o, start);
}

bool criterion2(const std::vector<ColoredPoset>& heaps) {
  const auto start = Clock::now();
  Outcome o;
  std::size_t checks = 0;
  for (const auto& p : heaps) {
    const support::Order order(p);
    const auto& d = p.diagram();
    for (const auto& s : splits(p))
      for (Color a = 0; a < d.size(); ++a) {
        const auto u = census_upper(p, s.ideal, a);
        const auto l = census_lower(p, s.filter, a);
        if (u != support::frontier(p, order, s.ideal, a, true) || l != support::frontier(p, order, s.filter, a, false)) {
          o.fail("census differs from the oracle on " + canonical_key(p));
          continue;
        }
        ++checks;
        if (u) {
          if (*u < 0 || *u > 2) o.fail("upper census out of range on " + canonical_key(p));
          if ((*u == 2) != has_minimal_of_color(p, s.filter, a)) o.fail("biconditional fails on " + canonical_key(p));
        }
        if (u && l && *u + *l != 2) o.fail("U + L != 2 on " + canonical_key(p));
        if (!u) continue;
        // Move each minimal filter element y into the ideal.
        for (Element y : p.minimal_in(s.filter)) {
          ElementSet ideal = s.ideal;
          ideal.set(static_cast<std::size_t>(y));
          const auto after = census_upper(p, ideal, a);
          if (!after || *after != *u - d.theta(p.color(y), a)) o.fail("update rule fails on " + canonical_key(p));
        }
      }
  }
  o.note << heaps.size() << " heaps, " << checks << " (split, color) pairs; ";
  return report(2, "frontier census identities, heaps <=8", o, start);
}

bool criterion3() {
  const auto start = Clock::now();
  Outcome o;
  for (const auto& h : builtin_heaps()) {
    for (const auto& r : full_heap_reports(h))
      if (!r.holds) o.fail(heap_name(h) + " fails " + r.property);
    if (!check_g4(h).holds) o.fail(heap_name(h) + " fails G4");
    o.note << heap_name(h) << " ok; ";
  }
  return report(3, "full heap validation", o, start);
}

bool criterion4() {
  const auto start = Clock::now();
  Outcome o;
  std::mt19937 rng(2024);
  std::size_t filters = 0;
  for (const auto& h : builtin_heaps())
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<HeapElement> gens;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < count; ++i) {
        const int c = static_cast<int>(rng() % static_cast<unsigned>(h.cell_count()));
        const auto shift = static_cast<std::int64_t>(rng() % 7) - 3;
        gens.push_back({c, h.base_height(c) + shift * h.period()});
      }
      const SemiInfiniteFilter f(h, gens);
      const auto r = check_infinite_axioms(f);
      ++filters;
      const auto w = filter_window(f, r.window_lo, r.window_hi);
      const support::Oracle oracle(w.poset);
      const bool finite_axioms = oracle.ec() && oracle.na() && oracle.ac() && oracle.ice2();
      if (!r.d_complete || !finite_axioms) o.fail(heap_name(h) + ": filter not d-complete");
      if (!r.ucb1_vacuous) o.fail(heap_name(h) + ": UCB1 not reported vacuous");
      if (!r.lcb2 || !oracle.lcb(2)) o.fail(heap_name(h) + ": LCB2 fails");
      if (r.lcb1 || oracle.lcb(1)) o.fail(heap_name(h) + ": LCB1 holds on a proper filter");
    }
  o.note << filters << " filters; ";
  return report(4, "infinite classification forward", o, start);
}

bool criterion5() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t rays = 0;
  for (const auto& h : builtin_heaps())
    for (int c = 0; c < h.cell_count(); ++c)
      for (std::int64_t shift : {-2, 0, 3}) {
        const SemiInfiniteFilter f(h, {{c, h.base_height(c) + shift * h.period()}});
        const std::size_t budget = 4 * static_cast<std::size_t>(h.cell_count());
        ++rays;
        try {
          const auto s = saturate(f, budget);
          if (s.steps.size() > budget) o.fail(heap_name(h) + ": over budget");
          for (const auto& st : s.steps)
            if (!st.d_complete) o.fail(heap_name(h) + ": intermediate filter not d-complete");
          // Independent comparison with the ambient heap, one period at a time.
          for (std::int64_t k = 0; k < 2; ++k) {
            const std::int64_t lo = s.band_start + k * h.period();
            const auto rebuilt = filter_window(s.final_filter, lo, lo + h.period() - 1);
            const auto ambient = window(h, lo, lo + h.period() - 1);
            if (canonical_key(rebuilt.poset) != canonical_key(ambient.poset) || rebuilt.elements != ambient.elements)
              o.fail(heap_name(h) + ": rebuilt band differs from the ambient heap");
          }
          if (!check_infinite_axioms(s.final_filter).d_complete) o.fail(heap_name(h) + ": final filter not d-complete");
        } catch (const Error& e) {
          o.fail(heap_name(h) + ": " + e.what());
        }
      }
  o.note << rays << " ray filters; ";
  return report(5, "saturation within 4 x cells steps", o, start);
}

bool criterion6(const std::vector<ColoredPoset>& heaps) {
  const auto start = Clock::now();
  Outcome o;
  for (const auto& p : heaps) {
    const auto c = carries_upper_minuscule(p);
    if (!c.verdict || !c.diagonals.ok() || !c.relations.all_hold()) {
      o.fail("heap rejected: " + canonical_key(p));
      continue;
    }
    // Uniqueness: a +1 shift at any split breaks an edge equation there.
    const auto s = split_space(p);
    std::vector<std::size_t> degree(s.size(), 0);
    for (const auto& m : s.moves) ++degree[m.from], ++degree[m.to];
    for (std::size_t j = 0; j < s.size(); ++j)
      if (degree[j] == 0) o.fail("isolated split in " + canonical_key(p));
  }

  // Reverse direction on single mutations.
  std::mt19937 rng(77);
  std::size_t corrupted = 0, rejected = 0, attempts = 0;
  while (corrupted < 500 && attempts < 200000) {
    ++attempts;
    const auto& p = heaps[rng() % heaps.size()];
    const int n = p.size();
    const support::Order order(p);
    std::vector<std::vector<bool>> lt = order.lt;
    std::vector<Color> colors = p.colors();
    std::vector<Cover> covers = p.covers();
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0) {
      if (n < 2) continue;
      const int x = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int y = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (x == y || order.comparable(x, y)) continue;
      lt[x][y] = true;
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (lt[i][k] && lt[k][j]) lt[i][j] = true;
      covers = support::reduce(lt);
    } else if (kind == 1) {
      if (covers.empty()) continue;
      covers.erase(covers.begin() + static_cast<std::ptrdiff_t>(rng() % covers.size()));
    } else {
      if (p.diagram().size() < 2) continue;
      const int x = static_cast<int>(rng() % static_cast<unsigned>(n));
      const Color c = static_cast<Color>(rng() % static_cast<unsigned>(p.diagram().size()));
      if (c == colors[x]) continue;
      colors[x] = c;
    }
    std::optional<ColoredPoset> q;
    try {
      q.emplace(p.diagram(), colors, covers);
    } catch (const Error&) {
      continue;  // e.g. a recoloring that leaves a color unused
    }
    if (support::Oracle(*q).d_complete() || is_d_complete(*q)) continue;
    ++corrupted;
    if (!carries_upper_minuscule(*q).verdict) ++rejected;
    else o.fail("corrupted poset accepted: " + canonical_key(*q));
  }
  if (corrupted < 100) o.fail("only " + std::to_string(corrupted) + " corruptions generated");
  o.note << heaps.size() << " heaps accepted; " << rejected << "/" << corrupted << " corruptions rejected; ";
  return report(6, "representation suite, both directions", o, start);
}

bool criterion7(const std::vector<ColoredPoset>& heaps) {
  const auto start = Clock::now();
  Outcome o;
  std::size_t words = 0;
  for (const auto& p : heaps) {
    const auto& d = p.diagram();
    try {
      const Weight lam = solve_lambda(p);
      const auto ws = heap_to_words(p);
      if (ws.size() != support::permutation_count(p)) o.fail("missing linear extensions on " + canonical_key(p));
      const WeylMatrix first = word_matrix(d, ws.front());
      for (const auto& w : ws) {
        ++words;
        // Step rule applied directly.
        Weight mu = lam;
        for (Color b : w) {
          if (mu[b] != 1) {
            o.fail("word not minuscule on " + canonical_key(p));
            break;
          }
          for (Color c = 0; c < d.size(); ++c) mu[c] -= d.theta(b, c);
        }
        if (word_matrix(d, w) != first) o.fail("extensions give different group elements on " + canonical_key(p));
        if (weyl_length(d, w) != static_cast<std::size_t>(p.size())) o.fail("word not reduced on " + canonical_key(p));
      }
    } catch (const Error& e) {
      o.fail(std::string(e.what()) + " on " + canonical_key(p));
    }
  }

  std::size_t searches = 0;
  for (const auto& d : small_diagrams()) {
    Weight lam(static_cast<std::size_t>(d.size()), 0);
    std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left) {
      if (i == lam.size()) {
        ++searches;
        const auto r = minuscule_dfs(d, lam, 1000000);
        if (!r.terminated) o.fail("search did not terminate");
        return;
      }
      for (std::int64_t v = 0; v <= left; ++v) {
        lam[i] = v;
        go(i + 1, left - v);
      }
    };
    go(0, 4);
  }
  o.note << heaps.size() << " heaps, " << words << " words, " << searches << " searches; ";
  return report(7, "Weyl suite", o, start);
}

bool criterion8(const std::vector<ColoredPoset>& heaps) {
  const auto start = Clock::now();
  Outcome o;
  auto exact = [](const DynkinDiagram& d, const std::vector<Rational>& s) {
    for (Color a = 0; a < d.size(); ++a)
      for (Color b = 0; b < d.size(); ++b)
        if (s[a] * d.theta(a, b) != s[b] * d.theta(b, a)) return false;
    return true;
  };
  std::set<std::string> seen;
  for (const auto& p : heaps) {
    const auto& d = p.diagram();
    std::ostringstream key;
    key << io::to_json(d).dump();
    if (!seen.insert(key.str()).second) continue;
    const auto s = symmetrizer(d);
    if (!s || !exact(d, *s)) o.fail("not symmetrizable: " + key.str());
  }
  const auto b3 = support::b3();
  const auto s = symmetrizer(b3);
  if (!s || !exact(b3, *s) || *s != std::vector<Rational>{1, 1, 2}) o.fail("B3 symmetrizer");
  o.note << seen.size() << " distinct heap diagrams; B3 -> (1,1,2); ";
  return report(8, "symmetrizability", o, start);
}

bool criterion9() {
  const auto start = Clock::now();
  Outcome o;
  try {
    const auto j = io::load_file(support::fixture("fig2.json"));
    const auto left = io::read_poset(j);
    std::vector<SemiInfiniteFilter> filters;
    for (const auto& f : j["filters"]) filters.push_back(io::read_filter(f, io::read_heap(f)));
    const auto m = classify_mixed(left, filters);
    if (!m.is_d_complete) o.fail("not d-complete");
    if (m.component_count != 2) o.fail("component count " + std::to_string(m.component_count));
    const auto edges = slant_edges(left);
    if (edges.size() != 1) o.fail("slant edges " + std::to_string(edges.size()));
    const auto dec = slant_decompose(left);
    if (dec.parts.size() != 2) o.fail("parts " + std::to_string(dec.parts.size()));
    std::vector<ColoredPoset> parts;
    for (const auto& part : dec.parts) {
      if (!slant_edges(part.poset).empty()) o.fail("part not slant irreducible");
      parts.push_back(part.poset);
    }
    if (canonical_key(slant_sum(parts, dec.joins)) != canonical_key(left)) o.fail("slant sum does not round-trip");
    o.note << "components " << m.component_count << ", slant edges " << edges.size() << ", parts " << dec.parts.size()
           << "; ";
  } catch (const Error& e) {
    o.fail(e.what());
  }
  return report(9, "two-component fixture", o, start);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const auto heaps = heap_corpus(8);
  std::cout << "heap corpus: " << heaps.size() << " heaps (<=8 elements) in "
            << std::chrono::duration<double>(Clock::now() - start).count() << " s" << std::endl;
  bool ok = true;
  ok &= criterion1();
  ok &= criterion2(heaps);
  ok &= criterion3();
  ok &= criterion4();
  ok &= criterion5();
  ok &= criterion6(heaps);
  ok &= criterion7(heaps);
  ok &= criterion8(heaps);
  ok &= criterion9();
  std::cout << (ok ? "all criteria PASS" : "some criteria FAIL") << std::endl;
  return ok ? 0 : 1;
}

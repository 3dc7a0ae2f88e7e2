#pragma once

// Shared builders and brute-force oracles for the test binaries. The oracles
// work from covers, colors and the matrix alone and share no code with the
// library's checkers.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heapkit/dynkin.hpp"
#include "heapkit/poset.hpp"

namespace support {

using namespace heapkit;

inline std::string fixture(const std::string& name) { return std::string(HEAPKIT_FIXTURES) + "/" + name; }

inline std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

struct Edge {
  int a, b, theta_ab, theta_ba;
};

inline DynkinDiagram diagram(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) t[i][i] = 2;
  for (const auto& e : edges) {
    t[e.a][e.b] = e.theta_ab;
    t[e.b][e.a] = e.theta_ba;
  }
  return DynkinDiagram(letters(n), t);
}

inline DynkinDiagram one_node() { return diagram(1, {}); }

/// Path a-b-c-... with simple edges.
inline DynkinDiagram type_a(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, -1, -1});
  return diagram(n, e);
}

/// The three-color matrix with one double edge: b is 2-adjacent to c.
inline DynkinDiagram b3() { return DynkinDiagram({"a", "b", "c"}, {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}); }

inline DynkinDiagram affine_a1() { return diagram(2, {{0, 1, -2, -2}}); }

inline DynkinDiagram cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, -1, -1});
  return diagram(n, e);
}

/// Every matrix on `n` colors whose off-diagonal entries lie in {0,-1,-2}.
inline std::vector<DynkinDiagram> all_diagrams(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const std::vector<std::pair<int, int>> options{{0, 0}, {-1, -1}, {-1, -2}, {-2, -1}, {-2, -2}};
  std::vector<DynkinDiagram> out;
  std::vector<std::size_t> pick(pairs.size(), 0);
  while (true) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (options[pick[i]].first != 0)
        e.push_back({pairs[i].first, pairs[i].second, options[pick[i]].first, options[pick[i]].second});
    out.push_back(diagram(n, e));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

inline ColoredPoset poset(const DynkinDiagram& d, const std::vector<std::string>& colors, std::vector<Cover> covers) {
  std::vector<Color> cs;
  for (const auto& c : colors) cs.push_back(d.color(c));
  return ColoredPoset(d, cs, std::move(covers));
}

/// Chain colored bottom to top.
inline ColoredPoset chain(const DynkinDiagram& d, const std::vector<std::string>& colors) {
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < static_cast<int>(colors.size()); ++i) covers.emplace_back(i, i + 1);
  return poset(d, colors, covers);
}

/// Strict order as a boolean matrix, closed by Floyd-Warshall.
struct Order {
  int n = 0;
  std::vector<std::vector<bool>> lt;

  explicit Order(const ColoredPoset& p) : n(p.size()), lt(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n))) {
    for (const auto& [x, y] : p.covers()) lt[x][y] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  }
  bool comparable(int x, int y) const { return x == y || lt[x][y] || lt[y][x]; }
};

/// Transitive reduction of a strict order matrix.
inline std::vector<Cover> reduce(const std::vector<std::vector<bool>>& lt) {
  const int n = static_cast<int>(lt.size());
  std::vector<Cover> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!lt[x][y]) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (lt[x][z] && lt[z][y]) direct = false;
      if (direct) out.emplace_back(x, y);
    }
  return out;
}

/// Definition-level verdicts for a finite colored poset.
class Oracle {
 public:
  explicit Oracle(const ColoredPoset& p) : p_(p), d_(p.diagram()), o_(p) {}

  bool adjacent(int x, int y) const { return p_.color(x) != p_.color(y) && d_.theta(p_.color(x), p_.color(y)) < 0; }
  int weight(int y, Color a) const { return -d_.theta(p_.color(y), a); }

  bool ec() const {
    for (int x = 0; x < o_.n; ++x)
      for (int y = 0; y < o_.n; ++y)
        if (p_.color(x) == p_.color(y) && !o_.comparable(x, y)) return false;
    return true;
  }
  bool na() const {
    for (const auto& [x, y] : p_.covers())
      if (!adjacent(x, y)) return false;
    return true;
  }
  bool ac() const {
    for (int x = 0; x < o_.n; ++x)
      for (int y = 0; y < o_.n; ++y)
        if (adjacent(x, y) && !o_.comparable(x, y)) return false;
    return true;
  }
  // Consecutive pairs of one color: x < y, same color, nothing of that color between.
  std::vector<std::pair<int, int>> consecutive() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < o_.n; ++x)
      for (int y = 0; y < o_.n; ++y) {
        if (!o_.lt[x][y] || p_.color(x) != p_.color(y)) continue;
        bool gap = true;
        for (int z = 0; z < o_.n; ++z)
          if (o_.lt[x][z] && o_.lt[z][y] && p_.color(z) == p_.color(x)) gap = false;
        if (gap) out.emplace_back(x, y);
      }
    return out;
  }
  bool ice2() const {
    for (auto [x, y] : consecutive()) {
      int sum = 0;
      for (int z = 0; z < o_.n; ++z)
        if (o_.lt[x][z] && o_.lt[z][y] && adjacent(z, x)) sum += weight(z, p_.color(x));
      if (sum != 2) return false;
    }
    return true;
  }
  bool ucb(int k) const { return bound(k, true); }
  bool lcb(int k) const { return bound(k, false); }

  bool d_complete() const { return ec() && na() && ac() && ice2() && ucb(1); }
  bool minuscule() const { return d_complete() && lcb(1); }

  bool s1() const {
    for (const auto& [x, y] : p_.covers())
      if (p_.color(x) != p_.color(y) && !adjacent(x, y)) return false;
    for (int x = 0; x < o_.n; ++x)
      for (int y = 0; y < o_.n; ++y)
        if (!o_.comparable(x, y) && (p_.color(x) == p_.color(y) || adjacent(x, y))) return false;
    return true;
  }
  bool s2() const {
    for (auto [x, y] : consecutive()) {
      std::vector<int> between;
      for (int z = 0; z < o_.n; ++z)
        if (o_.lt[x][z] && o_.lt[z][y] && adjacent(z, x)) between.push_back(z);
      const Color a = p_.color(x);
      int inside = 0;
      for (int z = 0; z < o_.n; ++z) inside += (o_.lt[x][z] && o_.lt[z][y]) ? 1 : 0;
      const bool two = between.size() == 2 && weight(between[0], a) == 1 && weight(between[1], a) == 1;
      const bool one = inside == 1 && between.size() == 1 && weight(between[0], a) == 2;
      if (!two && !one) return false;
    }
    return true;
  }
  bool s3() const {
    for (int x = 0; x < o_.n; ++x) {
      if (!maximal_in_color(x)) continue;
      const auto& up = p_.upper_covers(x);
      if (up.size() > 1) return false;
      if (up.empty()) continue;
      const int y = up.front();
      if (!adjacent(x, y) || weight(y, p_.color(x)) != 1 || !maximal_in_color(y)) return false;
    }
    return true;
  }
  bool maximal_in_color(int x) const {
    for (int y = 0; y < o_.n; ++y)
      if (p_.color(y) == p_.color(x) && o_.lt[x][y]) return false;
    return true;
  }
  bool s4() const {
    // A forest has exactly (nodes - components) edges.
    int edges = 0;
    for (Color a = 0; a < d_.size(); ++a)
      for (Color b = a + 1; b < d_.size(); ++b) edges += d_.theta(a, b) < 0 ? 1 : 0;
    std::vector<int> parent(static_cast<std::size_t>(d_.size()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int comps = d_.size();
    for (Color a = 0; a < d_.size(); ++a)
      for (Color b = a + 1; b < d_.size(); ++b)
        if (d_.theta(a, b) < 0 && find(a) != find(b)) {
          parent[find(a)] = find(b);
          --comps;
        }
    return edges == d_.size() - comps;
  }
  bool dominant_minuscule_heap() const { return s1() && s2() && s3() && s4(); }

  /// Maximal (or minimal) element of color a, assuming the color is a chain.
  int top(Color a) const { return extreme(a, true); }
  int bottom(Color a) const { return extreme(a, false); }

 private:
  int extreme(Color a, bool upper) const {
    int best = -1;
    for (int x = 0; x < o_.n; ++x) {
      if (p_.color(x) != a) continue;
      if (best < 0 || (upper ? o_.lt[best][x] : o_.lt[x][best])) best = x;
    }
    return best;
  }

  bool bound(int k, bool upper) const {
    for (Color a = 0; a < d_.size(); ++a)
      for (int x = 0; x < o_.n; ++x) {
        if (p_.color(x) != a) continue;
        bool extreme = true;
        for (int y = 0; y < o_.n; ++y)
          if (p_.color(y) == a && (upper ? o_.lt[x][y] : o_.lt[y][x])) extreme = false;
        if (!extreme) continue;
        int sum = 0;
        for (int y = 0; y < o_.n; ++y)
          if ((upper ? o_.lt[x][y] : o_.lt[y][x]) && adjacent(x, y)) sum += weight(y, a);
        if (sum > k) return false;
      }
    return true;
  }

  const ColoredPoset& p_;
  const DynkinDiagram& d_;
  Order o_;
};

/// Weighted adjacent-color count above the top of color b inside an ideal
/// (upper), or below the bottom of color b inside a filter.
inline std::optional<int> frontier(const ColoredPoset& p, const Order& o, const ElementSet& part, Color b, bool upper) {
  const auto& d = p.diagram();
  int extreme = -1;
  for (int x = 0; x < p.size(); ++x) {
    if (!part.test(static_cast<std::size_t>(x)) || p.color(x) != b) continue;
    if (extreme < 0 || (upper ? o.lt[extreme][x] : o.lt[x][extreme])) extreme = x;
  }
  if (extreme < 0) return std::nullopt;
  int sum = 0;
  for (int y = 0; y < p.size(); ++y) {
    if (!part.test(static_cast<std::size_t>(y)) || p.color(y) == b || d.theta(p.color(y), b) == 0) continue;
    if (upper ? o.lt[extreme][y] : o.lt[y][extreme]) sum -= d.theta(p.color(y), b);
  }
  return sum;
}

inline std::optional<int> frontier(const ColoredPoset& p, const ElementSet& part, Color b, bool upper) {
  return frontier(p, Order(p), part, b, upper);
}

/// Unlabeled posets on n elements, one per isomorphism class, built by
/// adding a new maximal element above each order ideal.
inline std::vector<std::vector<Cover>> shapes(int n) {
  const DynkinDiagram mono = one_node();
  std::vector<std::vector<std::vector<bool>>> level{{}};
  for (int m = 1; m <= n; ++m) {
    std::map<std::string, std::vector<std::vector<bool>>> next;
    for (const auto& lt : level) {
      const int k = m - 1;
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        bool ideal = true;
        for (int x = 0; x < k && ideal; ++x)
          for (int y = 0; y < k && ideal; ++y)
            if ((mask >> y & 1u) && lt[x][y] && !(mask >> x & 1u)) ideal = false;
        if (!ideal) continue;
        std::vector<std::vector<bool>> grown(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
        for (int x = 0; x < k; ++x)
          for (int y = 0; y < k; ++y) grown[x][y] = lt[x][y];
        for (int x = 0; x < k; ++x) grown[x][k] = (mask >> x & 1u) != 0;
        ColoredPoset p(mono, std::vector<Color>(static_cast<std::size_t>(m), 0), reduce(grown));
        next.emplace(canonical_key(p), std::move(grown));
      }
    }
    level.clear();
    for (auto& [key, lt] : next) level.push_back(std::move(lt));
  }
  std::vector<std::vector<Cover>> out;
  for (const auto& lt : level) out.push_back(reduce(lt));
  return out;
}

/// Surjective colorings of a shape by k colors, one per isomorphism class.
inline std::vector<std::vector<Color>> colorings(int n, const std::vector<Cover>& covers, int k) {
  const DynkinDiagram labels = diagram(k, {});
  std::map<std::string, std::vector<Color>> seen;
  std::vector<Color> c(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    for (Color x : c) used[static_cast<std::size_t>(x)] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; }))
      seen.emplace(canonical_key(ColoredPoset(labels, c, covers)), c);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == k) c[i++] = 0;
    if (i == c.size()) break;
  }
  std::vector<std::vector<Color>> out;
  for (auto& [key, v] : seen) out.push_back(std::move(v));
  return out;
}

/// Random colored poset: a random strict order on n elements (edges only
/// from lower to higher index), surjectively colored over d when possible.
inline ColoredPoset random_poset(std::mt19937& rng, const DynkinDiagram& d, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::vector<bool>> lt(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) lt[x][y] = coin(rng);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  std::vector<Color> colors(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> pick(0, d.size() - 1);
  for (int x = 0; x < n; ++x) colors[x] = x < d.size() ? x : pick(rng);
  std::shuffle(colors.begin(), colors.end(), rng);
  return ColoredPoset(d, colors, reduce(lt));
}

/// Number of antichains, by subset enumeration.
inline std::size_t antichain_count(const ColoredPoset& p) {
  const Order o(p);
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << p.size()); ++mask) {
    bool ok = true;
    for (int x = 0; x < p.size() && ok; ++x)
      for (int y = 0; y < p.size() && ok; ++y)
        if ((mask >> x & 1u) && (mask >> y & 1u) && o.lt[x][y]) ok = false;
    count += ok ? 1 : 0;
  }
  return count;
}

/// Number of linear extensions, by filtering all permutations.
inline std::size_t permutation_count(const ColoredPoset& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    std::vector<int> pos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
    bool ok = true;
    for (const auto& [x, y] : p.covers()) ok = ok && pos[x] < pos[y];
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace support

#include "heapkit/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "heapkit/error.hpp"

namespace heapkit {

DynkinDiagram::DynkinDiagram(std::vector<std::string> labels, const std::vector<std::vector<int>>& theta) {
  const std::size_t n = labels.size();
  if (theta.size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "theta has " + std::to_string(theta.size()) + " rows for " + std::to_string(n) + " labels");
  for (std::size_t i = 0; i < n; ++i) {
    if (theta[i].size() != n)
      throw Error(ErrorKind::DimensionMismatch, "theta row " + std::to_string(i) + " has " +
                                                    std::to_string(theta[i].size()) + " entries, expected " +
                                                    std::to_string(n));
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorKind::BadParameter, "empty color label");
    if (!seen.insert(l).second) throw Error(ErrorKind::BadParameter, "duplicate color label '" + l + "'");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (theta[a][a] != 2)
      throw Error(ErrorKind::DiagonalNotTwo, "theta(" + labels[a] + "," + labels[a] + ") = " + std::to_string(theta[a][a]));
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (theta[a][b] > 0)
        throw Error(ErrorKind::PositiveOffDiagonal,
                    "theta(" + labels[a] + "," + labels[b] + ") = " + std::to_string(theta[a][b]));
      if ((theta[a][b] == 0) != (theta[b][a] == 0))
        throw Error(ErrorKind::AsymmetricZero,
                    "theta(" + labels[a] + "," + labels[b] + ") = " + std::to_string(theta[a][b]) + " but theta(" +
                        labels[b] + "," + labels[a] + ") = " + std::to_string(theta[b][a]));
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  impl->theta.reserve(n * n);
  for (const auto& row : theta) impl->theta.insert(impl->theta.end(), row.begin(), row.end());
  impl->neighbors.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && theta[a][b] < 0) impl->neighbors[a].push_back(static_cast<Color>(b));
  impl_ = std::move(impl);
}

const std::string& DynkinDiagram::label(Color a) const {
  if (!contains(a)) throw Error(ErrorKind::UnknownColor, "color index " + std::to_string(a));
  return impl_->labels[static_cast<std::size_t>(a)];
}

std::optional<Color> DynkinDiagram::find(std::string_view label) const {
  const auto& ls = impl_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<Color>(it - ls.begin());
}

Color DynkinDiagram::color(std::string_view label) const {
  if (auto c = find(label)) return *c;
  throw Error(ErrorKind::UnknownColor, "no color labelled '" + std::string(label) + "'");
}

std::vector<std::vector<int>> DynkinDiagram::matrix() const {
  const int n = size();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = theta(a, b);
  return m;
}

DynkinDiagram DynkinDiagram::induced(std::span<const Color> colors) const {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> m;
  for (Color a : colors) {
    labels.push_back(label(a));
    std::vector<int> row;
    for (Color b : colors) row.push_back(theta(a, b));
    m.push_back(std::move(row));
  }
  return DynkinDiagram(std::move(labels), m);
}

Adjacency adjacency(const DynkinDiagram& d, Color a, Color b) {
  if (!d.contains(a) || !d.contains(b))
    throw Error(ErrorKind::UnknownColor, "color pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
  if (a == b) return {AdjacencyKind::Equal, 0, 0};
  if (d.theta(a, b) == 0) return {AdjacencyKind::Distant, 0, 0};
  return {AdjacencyKind::Adjacent, -d.theta(a, b), -d.theta(b, a)};
}

namespace {

// Component id per color; ids increase with the least color of each component.
std::vector<int> component_ids(const DynkinDiagram& d, int& count) {
  const int n = d.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  count = 0;
  for (Color s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<Color> q;
    q.push(s);
    comp[static_cast<std::size_t>(s)] = count;
    while (!q.empty()) {
      Color a = q.front();
      q.pop();
      for (Color b : d.neighbors(a)) {
        if (comp[static_cast<std::size_t>(b)] < 0) {
          comp[static_cast<std::size_t>(b)] = count;
          q.push(b);
        }
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace

bool is_acyclic(const DynkinDiagram& d) {
  // A simple graph is a forest iff |E| = |V| - #components.
  int count = 0;
  component_ids(d, count);
  int edges = 0;
  for (Color a = 0; a < d.size(); ++a)
    for (Color b : d.neighbors(a))
      if (a < b) ++edges;
  return edges == d.size() - count;
}

bool is_connected(const DynkinDiagram& d) {
  int count = 0;
  component_ids(d, count);
  return count <= 1;
}

std::vector<DiagramComponent> components(const DynkinDiagram& d) {
  int count = 0;
  const auto comp = component_ids(d, count);
  std::vector<std::vector<Color>> groups(static_cast<std::size_t>(count));
  for (Color a = 0; a < d.size(); ++a) groups[static_cast<std::size_t>(comp[static_cast<std::size_t>(a)])].push_back(a);
  std::vector<DiagramComponent> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.push_back({d.induced(g), std::move(g)});
  return out;
}

std::optional<std::vector<Rational>> symmetrizer(const DynkinDiagram& d) {
  const int n = d.size();
  std::vector<Rational> value(static_cast<std::size_t>(n), Rational(0));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Color s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = true;
    value[static_cast<std::size_t>(s)] = 1;
    std::queue<Color> q;
    q.push(s);
    while (!q.empty()) {
      Color a = q.front();
      q.pop();
      for (Color b : d.neighbors(a)) {
        if (seen[static_cast<std::size_t>(b)]) continue;
        seen[static_cast<std::size_t>(b)] = true;
        // d_a * theta(a,b) = d_b * theta(b,a)
        value[static_cast<std::size_t>(b)] = value[static_cast<std::size_t>(a)] * Rational(d.theta(a, b), d.theta(b, a));
        q.push(b);
      }
    }
  }
  for (Color a = 0; a < n; ++a)
    for (Color b = 0; b < n; ++b)
      if (value[static_cast<std::size_t>(a)] * d.theta(a, b) != value[static_cast<std::size_t>(b)] * d.theta(b, a))
        return std::nullopt;
  return value;
}

}  // namespace heapkit

#include "heapkit/rep.hpp"

#include <algorithm>
#include <deque>

#include "heapkit/axioms.hpp"
#include "heapkit/error.hpp"

namespace heapkit {

namespace {

using Triplet = Eigen::Triplet<std::int64_t>;

IntOperator build(std::size_t n, const std::vector<Triplet>& entries) {
  IntOperator m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

// Least column holding a nonzero entry, if any.
std::optional<std::size_t> nonzero_column(const IntOperator& m) {
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (IntOperator::InnerIterator it(m, k); it; ++it)
      if (it.value() != 0) return static_cast<std::size_t>(it.col());
  return std::nullopt;
}

IntOperator commutator(const IntOperator& x, const IntOperator& y) {
  IntOperator xy = x * y;
  IntOperator yx = y * x;
  return xy - yx;
}

bool has_minimal_of_color(const ColoredPoset& p, const ElementSet& filter, Color b) {
  for (Element x : p.minimal_in(filter))
    if (p.color(x) == b) return true;
  return false;
}

}  // namespace

std::size_t SplitSpace::index_of(const ElementSet& filter) const {
  auto it = std::lower_bound(splits.begin(), splits.end(), filter,
                             [](const Split& s, const ElementSet& f) { return s.filter < f; });
  if (it == splits.end() || !(it->filter == filter)) throw Error(ErrorKind::NotAFilter, "no split with this filter");
  return static_cast<std::size_t>(it - splits.begin());
}

SplitSpace split_space(const ColoredPoset& p, std::size_t cap) {
  SplitSpace s{p, splits(p, cap), {}};
  for (std::size_t j = 0; j < s.splits.size(); ++j) {
    const ElementSet& f = s.splits[j].filter;
    for (Element x : p.minimal_in(f)) {
      ElementSet g = f;
      g.reset(static_cast<std::size_t>(x));
      s.moves.push_back({j, s.index_of(g), p.color(x), x});
    }
  }
  return s;
}

IntOperator raising_operator(const SplitSpace& s, Color a) {
  if (!s.poset.diagram().contains(a)) throw Error(ErrorKind::UnknownColor, "color index " + std::to_string(a));
  std::vector<Triplet> entries;
  for (const auto& m : s.moves)
    if (m.color == a)
      entries.emplace_back(static_cast<Eigen::Index>(m.to), static_cast<Eigen::Index>(m.from), 1);
  return build(s.size(), entries);
}

std::string Inconsistency::describe(const DynkinDiagram& d) const {
  std::string what;
  switch (kind) {
    case Kind::EdgeConflict: what = "edge conflict"; break;
    case Kind::AnchorConflict: what = "anchor conflict"; break;
    case Kind::IffViolation: what = "anchor condition violated"; break;
    case Kind::EigenvalueOutOfRange: what = "eigenvalue below -1"; break;
  }
  return what + " at split " + std::to_string(split) + " for h_" + d.label(color) + ": expected " +
         std::to_string(expected) + ", found " + std::to_string(found);
}

IntOperator DiagonalSolution::diagonal(Color b) const {
  const auto& row = eigenvalues.at(static_cast<std::size_t>(b));
  std::vector<Triplet> entries;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) entries.emplace_back(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j), row[j]);
  return build(row.size(), entries);
}

DiagonalSolution solve_diagonals(const SplitSpace& s) {
  const auto& p = s.poset;
  const auto& d = p.diagram();
  const std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < s.moves.size(); ++e) {
    incident[s.moves[e].from].push_back(e);
    incident[s.moves[e].to].push_back(e);
  }
  std::vector<std::vector<bool>> anchored(static_cast<std::size_t>(d.size()), std::vector<bool>(n, false));
  for (Color b = 0; b < d.size(); ++b)
    for (std::size_t j = 0; j < n; ++j)
      anchored[static_cast<std::size_t>(b)][j] = has_minimal_of_color(p, s.splits[j].filter, b);

  DiagonalSolution out;
  for (Color b = 0; b < d.size(); ++b) {
    const auto& anchor = anchored[static_cast<std::size_t>(b)];
    std::vector<std::optional<std::int64_t>> h(n);
    std::deque<std::size_t> queue;
    for (std::size_t j = 0; j < n; ++j)
      if (anchor[j]) {
        h[j] = -1;
        queue.push_back(j);
      }
    while (!queue.empty()) {
      const std::size_t j = queue.front();
      queue.pop_front();
      for (std::size_t e : incident[j]) {
        const Move& m = s.moves[e];
        const std::int64_t step = d.theta(m.color, b);
        const std::size_t other = m.from == j ? m.to : m.from;
        const std::int64_t want = m.from == j ? *h[j] + step : *h[j] - step;
        if (!h[other]) {
          h[other] = want;
          queue.push_back(other);
        } else if (*h[other] != want) {
          const auto kind = anchor[other] ? Inconsistency::Kind::AnchorConflict : Inconsistency::Kind::EdgeConflict;
          // Each conflicting edge is seen from both ends; report it once.
          if (j < other) out.problems.push_back({kind, other, b, want, *h[other]});
        }
      }
    }
    std::vector<std::int64_t> row(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (!h[j]) throw Error(ErrorKind::InternalError, "move graph is disconnected");
      row[j] = *h[j];
      if ((row[j] == -1) != anchor[j])
        out.problems.push_back({Inconsistency::Kind::IffViolation, j, b, anchor[j] ? -1 : 0, row[j]});
      if (row[j] < -1) out.problems.push_back({Inconsistency::Kind::EigenvalueOutOfRange, j, b, -1, row[j]});
    }
    out.eigenvalues.push_back(std::move(row));
  }
  return out;
}

bool RelationReport::all_hold() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

RelationReport verify_relations(const SplitSpace& s, const std::vector<IntOperator>& xs,
                                const std::vector<IntOperator>& hs) {
  const auto& p = s.poset;
  const auto& d = p.diagram();
  const auto n = static_cast<Eigen::Index>(s.size());
  if (xs.size() != static_cast<std::size_t>(d.size()) || hs.size() != static_cast<std::size_t>(d.size()))
    throw Error(ErrorKind::DimensionMismatch, "expected one raising and one diagonal operator per color");
  for (const auto* ops : {&xs, &hs})
    for (const auto& m : *ops)
      if (m.rows() != n || m.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "operator is " + std::to_string(m.rows()) + "x" +
                                                      std::to_string(m.cols()) + ", split space has " +
                                                      std::to_string(n) + " splits");
  RelationReport r;
  auto record = [&](std::string name, Color a, Color b, const IntOperator& zero_expected) {
    const auto w = nonzero_column(zero_expected);
    r.checks.push_back({std::move(name), a, b, !w.has_value(), w});
  };
  const int k = d.size();
  for (Color a = 0; a < k; ++a)
    for (Color b = 0; b < k; ++b) {
      if (a == b) continue;
      IntOperator acc = xs[static_cast<std::size_t>(b)];
      for (int t = 0; t < 1 - d.theta(b, a); ++t) acc = commutator(xs[static_cast<std::size_t>(a)], acc);
      record("XX", a, b, acc);
    }
  for (Color a = 0; a < k; ++a)
    for (Color b = 0; b < k; ++b)
      if (a < b) record("HH", a, b, commutator(hs[static_cast<std::size_t>(b)], hs[static_cast<std::size_t>(a)]));
  for (Color a = 0; a < k; ++a)
    for (Color b = 0; b < k; ++b) {
      IntOperator lhs = commutator(hs[static_cast<std::size_t>(b)], xs[static_cast<std::size_t>(a)]);
      IntOperator rhs = xs[static_cast<std::size_t>(a)] * static_cast<std::int64_t>(d.theta(a, b));
      IntOperator diff = lhs - rhs;
      record("HX", a, b, diff);
    }
  for (Color a = 0; a < k; ++a) {
    IntOperator sq = xs[static_cast<std::size_t>(a)] * xs[static_cast<std::size_t>(a)];
    record("X2", a, a, sq);
  }
  for (Color b = 0; b < k; ++b) {
    const auto& h = hs[static_cast<std::size_t>(b)];
    RelationCheck range{"RANGE", b, b, true, std::nullopt};
    RelationCheck anchor{"ANCHOR", b, b, true, std::nullopt};
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::int64_t v = h.coeff(j, j);
      if (range.holds && v < -1) range = {"RANGE", b, b, false, static_cast<std::size_t>(j)};
      const bool minimal_b = has_minimal_of_color(p, s.splits[static_cast<std::size_t>(j)].filter, b);
      if (anchor.holds && (v == -1) != minimal_b) anchor = {"ANCHOR", b, b, false, static_cast<std::size_t>(j)};
    }
    IntOperator offdiag = h;
    offdiag.prune([](Eigen::Index row, Eigen::Index col, std::int64_t) { return row != col; });
    if (auto w = nonzero_column(offdiag)) range = {"RANGE", b, b, false, w};
    r.checks.push_back(range);
    r.checks.push_back(anchor);
  }
  return r;
}

RepCertificate carries_upper_minuscule(const ColoredPoset& p, std::size_t cap) {
  RepCertificate c;
  const SplitSpace s = split_space(p, cap);
  c.split_count = s.size();
  c.diagonals = solve_diagonals(s);
  std::vector<IntOperator> xs, hs;
  for (Color a = 0; a < p.diagram().size(); ++a) {
    xs.push_back(raising_operator(s, a));
    hs.push_back(c.diagonals.diagonal(a));
  }
  c.relations = verify_relations(s, xs, hs);
  c.verdict = c.diagonals.ok() && c.relations.all_hold();
  c.agrees_with_axioms = c.verdict == is_d_complete(p);
  return c;
}

}  // namespace heapkit

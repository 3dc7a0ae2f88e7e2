#include "heapkit/weyl.hpp"

#include <map>

#include "heapkit/axioms.hpp"
#include "heapkit/error.hpp"

namespace heapkit {

namespace {

void require_size(const DynkinDiagram& d, const Weight& wt) {
  if (wt.size() != static_cast<std::size_t>(d.size()))
    throw Error(ErrorKind::DimensionMismatch,
                "weight has " + std::to_string(wt.size()) + " entries for " + std::to_string(d.size()) + " colors");
}

void require_letters(const DynkinDiagram& d, const WeylWord& word) {
  for (Color b : word)
    if (!d.contains(b)) throw Error(ErrorKind::UnknownColor, "letter " + std::to_string(b));
}

void reflect(const DynkinDiagram& d, Color b, Weight& mu) {
  const auto pair = mu[static_cast<std::size_t>(b)];
  for (Color c = 0; c < d.size(); ++c) mu[static_cast<std::size_t>(c)] -= pair * d.theta(b, c);
}

}  // namespace

Weight act_on_weight(const DynkinDiagram& d, const WeylWord& word, Weight wt) {
  require_size(d, wt);
  require_letters(d, word);
  for (Color b : word) reflect(d, b, wt);
  return wt;
}

MinusculeVerdict is_lambda_minuscule(const DynkinDiagram& d, const WeylWord& word, const Weight& wt) {
  require_size(d, wt);
  require_letters(d, word);
  Weight mu = wt;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (mu[static_cast<std::size_t>(word[j])] != 1) return {false, j + 1};
    reflect(d, word[j], mu);
  }
  return {};
}

WeylMatrix generator_matrix(const DynkinDiagram& d, Color b) {
  if (!d.contains(b)) throw Error(ErrorKind::UnknownColor, "letter " + std::to_string(b));
  const int n = d.size();
  WeylMatrix m = WeylMatrix::Identity(n, n);
  // s_b(alpha_c) = alpha_c - theta(c,b) alpha_b
  for (Color c = 0; c < n; ++c) m(b, c) -= d.theta(c, b);
  return m;
}

WeylMatrix word_matrix(const DynkinDiagram& d, const WeylWord& word) {
  const int n = d.size();
  WeylMatrix m = WeylMatrix::Identity(n, n);
  for (Color b : word) m = generator_matrix(d, b) * m;
  return m;
}

bool words_equal(const DynkinDiagram& d, const WeylWord& w1, const WeylWord& w2) {
  return word_matrix(d, w1) == word_matrix(d, w2);
}

std::size_t weyl_length(const DynkinDiagram& d, const WeylWord& word) {
  WeylMatrix w = word_matrix(d, word);
  const int n = d.size();
  std::size_t length = 0;
  while (true) {
    Color descent = -1;
    for (Color b = 0; b < n && descent < 0; ++b)
      if ((w.col(b).array() <= 0).all()) descent = b;
    if (descent < 0) break;
    w = w * generator_matrix(d, descent);
    ++length;
    if (length > word.size()) throw Error(ErrorKind::InternalError, "length exceeds word length");
  }
  return length;
}

Weight solve_lambda(const ColoredPoset& p) {
  const auto& d = p.diagram();
  const auto& order = p.topological_order();
  // With mu_i(h_{b_i}) = 1 at every earlier step, step j demands
  // lambda(h_{b_j}) = 1 + sum_{i<j} theta(b_i, b_j).
  std::vector<std::optional<std::int64_t>> lambda(static_cast<std::size_t>(d.size()));
  WeylWord word;
  for (auto it = order.rbegin(); it != order.rend(); ++it) word.push_back(p.color(*it));
  for (std::size_t j = 0; j < word.size(); ++j) {
    std::int64_t need = 1;
    for (std::size_t i = 0; i < j; ++i) need += d.theta(word[i], word[j]);
    auto& slot = lambda[static_cast<std::size_t>(word[j])];
    if (slot && *slot != need)
      throw Error(ErrorKind::Infeasible, "step " + std::to_string(j + 1) + " needs lambda(h_" + d.label(word[j]) +
                                             ") = " + std::to_string(need) + " but an earlier step fixed " +
                                             std::to_string(*slot));
    if (need < 0)
      throw Error(ErrorKind::Infeasible,
                  "step " + std::to_string(j + 1) + " needs lambda(h_" + d.label(word[j]) + ") = " + std::to_string(need));
    slot = need;
  }
  Weight out(static_cast<std::size_t>(d.size()), 0);
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = lambda[a].value_or(0);
  return out;
}

std::vector<WeylWord> heap_to_words(const ColoredPoset& p, std::size_t cap) {
  if (!is_dominant_minuscule_heap(p)) throw Error(ErrorKind::NotAHeap, "poset is not a dominant minuscule heap");
  const Weight lambda = solve_lambda(p);
  std::vector<WeylWord> out;
  for_each_linear_extension(p, cap, [&](const std::vector<Element>& ext) {
    WeylWord w;
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) w.push_back(p.color(*it));
    const auto v = is_lambda_minuscule(p.diagram(), w, lambda);
    if (!v.holds)
      throw Error(ErrorKind::InternalError,
                  "heap word is not lambda-minuscule at step " + std::to_string(v.failing_step.value_or(0)));
    out.push_back(std::move(w));
  });
  return out;
}

DfsResult minuscule_dfs(const DynkinDiagram& d, const Weight& wt, std::size_t budget) {
  require_size(d, wt);
  if (budget < 1) throw Error(ErrorKind::BadParameter, "budget must be at least 1");
  for (auto v : wt)
    if (v < 0) throw Error(ErrorKind::BadParameter, "weight is not dominant");

  // Weights along a lambda-minuscule word strictly decrease, so the search
  // space is a DAG and the longest continuation can be memoized per weight.
  std::map<Weight, std::size_t> best;
  struct Frame {
    Weight mu;
    Color next = 0;
    std::size_t longest = 0;
  };
  std::vector<Frame> stack;
  DfsResult out;
  auto enter = [&](Weight mu) {
    ++out.states;
    stack.push_back({std::move(mu), 0, 0});
  };
  enter(wt);
  while (!stack.empty()) {
    if (out.states > budget) {
      out.terminated = false;
      out.frontier_size = stack.size();
      out.max_length = stack.size() - 1;
      for (const auto& f : stack) out.max_length = std::max(out.max_length, f.longest);
      return out;
    }
    Frame& f = stack.back();
    if (f.next == d.size()) {
      const std::size_t len = f.longest;
      best.emplace(f.mu, len);
      stack.pop_back();
      if (!stack.empty()) stack.back().longest = std::max(stack.back().longest, len + 1);
      continue;
    }
    const Color b = f.next++;
    if (f.mu[static_cast<std::size_t>(b)] != 1) continue;
    Weight nu = f.mu;
    reflect(d, b, nu);
    if (auto it = best.find(nu); it != best.end()) {
      f.longest = std::max(f.longest, it->second + 1);
      continue;
    }
    enter(std::move(nu));
  }
  out.max_length = best.at(wt);
  return out;
}

}  // namespace heapkit

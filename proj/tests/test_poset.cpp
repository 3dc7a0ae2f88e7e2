#include "doctest.h"

#include "heapkit/error.hpp"
#include "heapkit/json_io.hpp"
#include "support.hpp"

using namespace heapkit;
using support::chain;
using support::poset;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalError;
}

ElementSet set_of(int n, std::initializer_list<int> xs) {
  ElementSet s(static_cast<std::size_t>(n));
  for (int x : xs) s.set(static_cast<std::size_t>(x));
  return s;
}

}  // namespace

TEST_CASE("construction and validation") {
  const auto one = support::one_node();
  CHECK(ColoredPoset(one, {0}, std::vector<Cover>{}).size() == 1);
  CHECK(poset(support::b3(), {"a", "b", "c"}, {{0, 1}, {1, 2}}).covers().size() == 2);
  CHECK(kind_of([&] { ColoredPoset(one, {0, 0}, {{0, 1}, {1, 0}}); }) == ErrorKind::CoverCycle);
  CHECK(kind_of([&] { ColoredPoset(one, {0, 0, 0}, {{0, 1}, {1, 2}, {0, 2}}); }) == ErrorKind::TransitiveEdge);
  CHECK(kind_of([&] { ColoredPoset(support::type_a(2), {0, 0}, {{0, 1}}); }) == ErrorKind::ColorUnused);
  CHECK(kind_of([&] { ColoredPoset(one, {0, 0}, {{0, 2}}); }) == ErrorKind::ElementOutOfRange);
  CHECK(kind_of([&] { ColoredPoset(one, {0}, {{0, 0}}); }) == ErrorKind::CoverCycle);
  CHECK(kind_of([&] { ColoredPoset(one, {3}, std::vector<Cover>{}); }) == ErrorKind::UnknownColor);
}

TEST_CASE("intervals") {
  const auto d = support::type_a(3);
  const auto two = chain(d, {"a", "b", "c"});
  auto iv = interval(two, 0, 1);
  CHECK(iv.closed == set_of(3, {0, 1}));
  CHECK(iv.open.none());
  CHECK(interval(two, 0, 2).open == set_of(3, {1}));
  const auto anti = poset(support::type_a(2), {"a", "b"}, std::vector<Cover>{});
  CHECK(kind_of([&] { interval(anti, 0, 1); }) == ErrorKind::NotComparable);
}

TEST_CASE("color chains") {
  const auto alt = chain(support::type_a(2), {"a", "b", "a", "b"});
  auto c = color_chain(alt, 0);
  CHECK(c.is_chain);
  CHECK(c.elements == std::vector<Element>{0, 2});
  auto anti = color_chain(ColoredPoset(support::one_node(), {0, 0}, std::vector<Cover>{}), 0);
  CHECK_FALSE(anti.is_chain);
  REQUIRE(anti.witness);
  CHECK(*anti.witness == std::pair<Element, Element>{0, 1});
}

TEST_CASE("components and duality") {
  CHECK(components(chain(support::type_a(2), {"a", "b"})).size() == 1);
  const auto two = poset(support::diagram(2, {}), {"a", "b"}, std::vector<Cover>{});
  const auto cs = components(two);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].poset.diagram().labels() == std::vector<std::string>{"a"});
  CHECK(cs[1].colors == std::vector<Color>{1});

  const auto fig = io::read_poset(io::load_file(support::fixture("fig2_left.json")));
  CHECK(components(dual(fig)).size() == components(fig).size());

  const auto c = chain(support::type_a(2), {"a", "b"});
  const auto dc = dual(c);
  CHECK(dc.covers() == std::vector<Cover>{{1, 0}});
  CHECK(dc.colors() == c.colors());
  CHECK(canonical_key(dual(dc)) == canonical_key(c));
  const auto anti = ColoredPoset(support::one_node(), {0, 0}, std::vector<Cover>{});
  CHECK(canonical_key(dual(anti)) == canonical_key(anti));
}

TEST_CASE("splits on small posets") {
  const auto one = ColoredPoset(support::one_node(), {0}, std::vector<Cover>{});
  auto s = splits(one);
  REQUIRE(s.size() == 2);
  CHECK(s[0].filter.none());
  CHECK(s[1].filter.count() == 1);
  CHECK(splits(ColoredPoset(support::one_node(), {0, 0}, std::vector<Cover>{})).size() == 4);
  CHECK(splits(chain(support::type_a(2), {"a", "b"})).size() == 3);
  CHECK(kind_of([] { splits(ColoredPoset(support::one_node(), {0, 0, 0}, std::vector<Cover>{}), 5); }) == ErrorKind::CapExceeded);
}

TEST_CASE("splits: filters, complements, order, and the antichain count") {
  std::mt19937 rng(11);
  const auto d = support::type_a(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const auto p = support::random_poset(rng, d, std::max(n, 3), 0.25);
    const auto s = splits(p);
    CHECK(s.size() == support::antichain_count(p));
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(p.is_filter(s[i].filter));
      CHECK(p.is_ideal(s[i].ideal));
      CHECK((s[i].filter | s[i].ideal) == p.all());
      CHECK_FALSE(s[i].filter.intersects(s[i].ideal));
      if (i > 0) CHECK(s[i - 1].filter < s[i].filter);
    }
  }
}

TEST_CASE("linear extensions") {
  const auto anti3 = ColoredPoset(support::one_node(), {0, 0, 0}, std::vector<Cover>{});
  CHECK(linear_extensions(chain(support::type_a(2), {"a", "b"})).size() == 1);
  CHECK(linear_extensions(ColoredPoset(support::one_node(), {0, 0}, std::vector<Cover>{})).size() == 2);
  CHECK(linear_extensions(anti3).size() == 6);
  CHECK(kind_of([&] { linear_extensions(anti3, 4); }) == ErrorKind::CapExceeded);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = support::random_poset(rng, support::type_a(2), 2 + trial % 6, 0.3);
    const auto exts = linear_extensions(p);
    CHECK(exts.size() == support::permutation_count(p));
    for (const auto& e : exts) {
      std::vector<int> pos(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) pos[e[i]] = static_cast<int>(i);
      for (const auto& [x, y] : p.covers()) CHECK(pos[x] < pos[y]);
    }
  }
}

TEST_CASE("reachability is a partial order") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = support::random_poset(rng, support::type_a(3), 9, 0.3);
    const support::Order o(p);
    for (int x = 0; x < p.size(); ++x) {
      CHECK_FALSE(p.less(x, x));
      for (int y = 0; y < p.size(); ++y) {
        CHECK(p.less(x, y) == o.lt[x][y]);
        if (p.less(x, y)) CHECK_FALSE(p.less(y, x));
      }
    }
  }
}

TEST_CASE("canonical keys") {
  const auto d = support::type_a(2);
  CHECK(canonical_key(poset(d, {"a", "b", "a"}, {{0, 1}, {1, 2}})) ==
        canonical_key(poset(d, {"a", "a", "b"}, {{0, 2}, {2, 1}})));
  const auto one = support::one_node();
  CHECK(canonical_key(ColoredPoset(one, {0, 0}, {{0, 1}})) != canonical_key(ColoredPoset(one, {0, 0}, std::vector<Cover>{})));
  CHECK(canonical_key(poset(d, {"a", "b"}, {{0, 1}})) != canonical_key(poset(d, {"b", "a"}, {{0, 1}})));
  // Same labels over different matrices.
  CHECK(canonical_key(poset(d, {"a", "b"}, std::vector<Cover>{})) != canonical_key(poset(support::diagram(2, {}), {"a", "b"}, std::vector<Cover>{})));
}

TEST_CASE("canonical key is invariant under random relabeling") {
  std::mt19937 rng(23);
  std::vector<ColoredPoset> samples{io::read_poset(io::load_file(support::fixture("fig2_left.json")))};
  for (int i = 0; i < 12; ++i) samples.push_back(support::random_poset(rng, support::type_a(3), 4 + i % 7, 0.35));
  for (const auto& p : samples) {
    const auto key = canonical_key(p);
    std::vector<Element> perm(static_cast<std::size_t>(p.size()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 100; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_key(permuted(p, perm)) == key);
    }
  }
}

TEST_CASE("canonical key separates the unlabeled posets") {
  // OEIS A000112: 1, 1, 2, 5, 16, 63 unlabeled posets.
  const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63};
  for (int n = 1; n <= 5; ++n) CHECK(support::shapes(n).size() == expected[n]);
}

TEST_CASE("filters and ideals") {
  const auto p = chain(support::type_a(3), {"a", "b", "c"});
  CHECK(p.is_filter(set_of(3, {1, 2})));
  CHECK_FALSE(p.is_filter(set_of(3, {0})));
  CHECK(p.up_closure(set_of(3, {1})) == set_of(3, {1, 2}));
  CHECK(p.down_closure(set_of(3, {1})) == set_of(3, {0, 1}));
  CHECK(p.minimal_in(set_of(3, {1, 2})) == std::vector<Element>{1});
  CHECK(p.maximal_in(p.all()) == std::vector<Element>{2});
}

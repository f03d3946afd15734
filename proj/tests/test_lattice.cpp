#include <random>
#include <set>

#include "doctest.h"
#include "divlat/lattice.hpp"
#include "oracles.hpp"

using namespace divlat;

namespace {

std::vector<Integer> values(const DivisorPoset& p, const IndexList& idx) {
  std::vector<Integer> out;
  for (Index i : idx) out.push_back(p.value(i));
  return out;
}

}  // namespace

TEST_CASE("poset sorts, deduplicates and indexes") {
  const auto p = build_poset({12, 1, 4, 2, 4, 6});
  REQUIRE(p.size() == 5);
  CHECK(p.elements() == to_integers({1, 2, 4, 6, 12}));
  CHECK(p.find(6) == 3);
  CHECK(p.find(7) == npos);
  CHECK(p.leq(1, 4));
  CHECK_FALSE(p.leq(2, 3));
  CHECK_FALSE(p.comparable(2, 3));
  CHECK(p.less(0, 0) == false);
}

TEST_CASE("rejects empty and non-positive input") {
  std::vector<Integer> none;
  CHECK_THROWS_AS(DivisorPoset{none}, Error);
  try {
    build_poset({3, 0, 1});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveElement);
  }
  try {
    build_poset(none);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
}

TEST_CASE("covers of the classical set up to 12") {
  const auto p = build_poset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(values(p, p.lower_covers(p.find(12))) == to_integers({4, 6}));
  CHECK(values(p, p.lower_covers(p.find(8))) == to_integers({4}));
  CHECK(p.lower_covers(0).empty());
  CHECK(values(p, p.upper_covers(p.find(3))) == to_integers({6, 9}));
}

TEST_CASE("singleton poset") {
  const auto p = build_poset({7});
  CHECK(p.size() == 1);
  CHECK(p.gcd_closed());
  CHECK(p.meet(0, 0) == 0);
  CHECK(p.lower_covers(0).empty());
}

TEST_CASE("meet and GCD closedness") {
  const auto closed = build_poset({1, 2, 3, 6});
  CHECK(is_gcd_closed(closed));
  CHECK(closed.meet(1, 2) == 0);
  CHECK_NOTHROW(closed.require_gcd_closed("test"));

  const auto open = build_poset({2, 15, 42});
  CHECK_FALSE(is_gcd_closed(open));
  try {
    open.meet(0, 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MeetOutsideSet);
  }
  try {
    open.require_gcd_closed("test");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGcdClosed);
  }
}

TEST_CASE("gcd_closure of a small set") {
  const auto xs = to_integers({2, 15, 42});
  CHECK(gcd_closure(xs) == to_integers({1, 2, 3, 15, 42}));
  const auto closed = to_integers({1, 2, 4});
  CHECK(gcd_closure(closed) == closed);
}

TEST_CASE("meet_closure of a subset") {
  const auto p = build_poset({1, 2, 3, 4, 6, 9, 36});
  const IndexList sub{p.find(4), p.find(6), p.find(9)};
  CHECK(values(p, meet_closure(p, sub)) == to_integers({1, 2, 3, 4, 6, 9}));
  CHECK_THROWS_AS(meet_closure(build_poset({2, 3}), IndexList{0, 1}), Error);
}

TEST_CASE("sub-poset covers are local") {
  const auto p = build_poset({1, 2, 4, 8});
  const SubPoset sub(p, {0, 3});
  CHECK(sub.covers(3, 0));
  CHECK(sub.lower_covers(3) == IndexList{0});
  CHECK(sub.maximal() == IndexList{3});
  CHECK(sub.local(3) == 1);
  CHECK(sub.local(1) == npos);
  CHECK_FALSE(sub.contains(2));
}

TEST_CASE("width via matching") {
  const auto p = build_poset({1, 2, 3, 5, 6, 10, 15, 30});
  IndexList all(p.size());
  for (Index k = 0; k < p.size(); ++k) all[k] = k;
  const SubPoset whole(p, all);
  CHECK(width(whole) == 3);
  CHECK(has_antichain_3(whole));
  const SubPoset chain(p, {0, 1, 4, 7});
  CHECK(width(chain) == 1);
  CHECK_FALSE(has_antichain_3(chain));
  CHECK(width(SubPoset(p, {})) == 0);
}

TEST_CASE("dot output lists nodes and cover edges") {
  const auto dot = to_dot(build_poset({1, 2, 3, 6}));
  CHECK(dot.find("digraph hasse {") == 0);
  CHECK(dot.find("n0 [label=\"1\"];") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n1 -> n3;") != std::string::npos);
  CHECK(dot.find("n0 -> n3;") == std::string::npos);
}

TEST_CASE("property: covers, closure and width against naive oracles") {
  std::mt19937 rng(20241016);
  const unsigned long universes[] = {210, 360, 720, 2310, 900};
  for (int trial = 0; trial < 120; ++trial) {
    const unsigned long n = universes[trial % 5];
    std::uniform_int_distribution<std::size_t> picks(1, 6);
    const auto raw = [&] {
      const auto ds = oracle::divisors(n);
      std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
      oracle::Set s;
      for (std::size_t k = picks(rng); k > 0; --k) s.push_back(ds[pick(rng)]);
      return oracle::sorted(s);
    }();

    const auto closed = gcd_closure(raw);
    CHECK(closed == oracle::meet_close(raw));
    CHECK(gcd_closure(closed) == closed);
    const auto p = build_poset(closed);
    CHECK(p.gcd_closed() == oracle::gcd_closed(closed));
    CHECK(build_poset(raw).gcd_closed() == oracle::gcd_closed(raw));

    for (Index i = 0; i < p.size(); ++i) {
      const auto cov = values(p, p.lower_covers(i));
      CHECK(cov == oracle::lower_covers(closed, p.value(i)));
      // Covers form an antichain.
      for (Index a : p.lower_covers(i))
        for (Index b : p.lower_covers(i))
          if (a != b) CHECK_FALSE(p.comparable(a, b));
      for (Index j = 0; j < p.size(); ++j) {
        CHECK(p.leq(i, j) == oracle::divides(p.value(i), p.value(j)));
        CHECK(p.value(p.meet(i, j)) == oracle::gcd(p.value(i), p.value(j)));
      }
    }

    // Transitive closure of covers equals the order.
    const Index m = p.size();
    std::vector<std::set<Index>> up(m);
    for (Index i = m; i-- > 0;) {
      up[i].insert(i);
      for (Index c : p.upper_covers(i)) up[i].insert(up[c].begin(), up[c].end());
    }
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) CHECK((up[i].count(j) == 1) == p.leq(i, j));

    if (m <= 12) {
      IndexList all(m);
      for (Index k = 0; k < m; ++k) all[k] = k;
      CHECK(width(SubPoset(p, all)) == oracle::width(closed));
      CHECK(has_antichain_3(SubPoset(p, all)) == (oracle::width(closed) >= 3));
    }
  }
}

TEST_CASE("the set 1, 2, 15, 42 is not GCD closed") {
  const auto p = build_poset({1, 2, 15, 42});
  CHECK_FALSE(is_gcd_closed(p));
  CHECK(values(p, p.lower_covers(p.find(2))) == to_integers({1}));
  CHECK(values(p, p.lower_covers(p.find(15))) == to_integers({1}));
  CHECK(values(p, p.lower_covers(p.find(42))) == to_integers({2}));
  CHECK_THROWS_AS(p.meet(p.find(15), p.find(42)), Error);
}

TEST_CASE("closure of 6, 10, 15 and meet closure of the cube's covers") {
  const auto xs = to_integers({6, 10, 15});
  CHECK(gcd_closure(xs) == oracle::meet_close(xs));
  CHECK(gcd_closure(xs) == to_integers({1, 2, 3, 5, 6, 10, 15}));
  const auto cube = build_poset({1, 2, 3, 5, 6, 10, 15, 30});
  CHECK(values(cube, meet_closure(cube, cube.lower_covers(7))) ==
        to_integers({1, 2, 3, 5, 6, 10, 15}));
  CHECK(meet_closure(cube, IndexList{4}) == IndexList{4});
  CHECK(meet_closure(cube, IndexList{0, 1, 4}) == (IndexList{0, 1, 4}));
}

#include <random>

#include "doctest.h"
#include "divlat/doublechain.hpp"
#include "divlat/families.hpp"
#include "divlat/moebius.hpp"
#include "oracles.hpp"

using namespace divlat;

namespace {

void check_against_oracle(const DivisorPoset& p) {
  const auto mu = oracle::mobius(p.elements());
  const auto rec = mobius_recursive(p);
  for (Index j = 0; j < p.size(); ++j)
    for (Index i = 0; i < p.size(); ++i) {
      const auto it = mu.find({p.value(j), p.value(i)});
      const Integer expect = it == mu.end() ? Integer(0) : it->second;
      CHECK(rec.at(j, i) == expect);
    }
}

void check_closed_form(const DivisorPoset& p) {
  const auto rec = mobius_recursive(p);
  for (Index i = 0; i < p.size(); ++i) {
    if (!generates_double_chain(p, i)) {
      CHECK_THROWS_AS(mobius_closed_form(p, i), Error);
      continue;
    }
    CHECK(mobius_closed_form(p, i) == rec.column(i));
  }
}

}  // namespace

TEST_CASE("diamond column") {
  const auto p = build_poset({1, 2, 3, 6});
  const auto col = mobius_closed_form(p, 3);
  CHECK(col.at(0) == 1);
  CHECK(col.at(1) == -1);
  CHECK(col.at(2) == -1);
  CHECK(col.at(3) == 1);
  CHECK(mobius_recursive(p).column(3) == col);
}

TEST_CASE("singleton and chains") {
  const auto one = build_poset({5});
  CHECK(mobius_via_zeta_inverse(one).at(0, 0) == 1);
  const auto chain = build_poset({1, 3, 9, 27, 81});
  const auto t = mobius_via_zeta_inverse(chain);
  for (Index j = 0; j < chain.size(); ++j)
    for (Index i = 0; i < chain.size(); ++i) {
      const long expect = i == j ? 1 : (i == j + 1 ? -1 : 0);
      CHECK(t.at(j, i) == expect);
    }
  CHECK(t == mobius_recursive(chain));
}

TEST_CASE("doubly attached case matches the recursion") {
  const auto p = build_poset({1, 2, 3, 4, 6, 9, 36});
  const auto col = mobius_closed_form(p, p.find(36));
  CHECK(col == mobius_recursive(p).column(p.find(36)));
  CHECK(col.count(p.find(1)) == 0);
  CHECK(col.at(p.find(2)) == 1);
  CHECK(col.at(p.find(3)) == 1);
}

TEST_CASE("meet of incomparable tops takes eta plus one") {
  const auto p = figure1d_instance();
  const Index top = p.size() - 1;
  const auto d = decompose_chains(p, top);
  REQUIRE(d.top_a != d.top_b);
  REQUIRE_FALSE(p.comparable(d.top_a, d.top_b));
  REQUIRE_FALSE(d.doubly_attached);
  const Index m = p.meet(d.top_a, d.top_b);
  const auto col = mobius_closed_form(p, top);
  CHECK(col.at(m) == Integer(d.eta.at(m) + 1));
  CHECK(col == mobius_recursive(p).column(top));
  check_against_oracle(p);
}

TEST_CASE("cube top has no closed form") {
  const auto p = build_poset({1, 2, 3, 5, 6, 10, 15, 30});
  CHECK_THROWS_AS(mobius_closed_form(p, 7), Error);
  // Recursion still applies: mu(1, 30) = -1 on the full divisor lattice of 30.
  CHECK(mobius_recursive(p).at(0, 7) == -1);
}

TEST_CASE("classical number-theoretic Möbius on divisor lattices") {
  for (unsigned long n : {12ul, 30ul, 36ul, 60ul, 210ul, 360ul}) {
    const auto ds = oracle::divisors(n);
    const auto p = build_poset(ds);
    const auto t = mobius_recursive(p);
    for (Index j = 0; j < p.size(); ++j)
      for (Index i = 0; i < p.size(); ++i) {
        const unsigned long a = p.value(j).get_ui(), b = p.value(i).get_ui();
        const long expect = b % a == 0 ? oracle::nt_mobius(b / a) : 0;
        CHECK(t.at(j, i) == expect);
      }
  }
}

TEST_CASE("property: recursion, zeta inverse and closed form agree") {
  std::mt19937 rng(314159);
  const unsigned long universes[] = {210, 2310, 360, 1800, 30030};
  std::uniform_int_distribution<std::size_t> picks(2, 7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = oracle::random_closed(rng, universes[trial % 5], picks(rng));
    const auto p = build_poset(s);
    check_against_oracle(p);
    const auto rec = mobius_recursive(p);
    CHECK(mobius_via_zeta_inverse(p) == rec);
    check_closed_form(p);

    // Zeta * mu = identity, from first principles.
    const Index n = p.size();
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        Integer sum = 0;
        for (Index k = 0; k < n; ++k)
          if (oracle::divides(p.value(a), p.value(k))) sum += rec.at(k, b);
        CHECK(sum == (a == b ? 1 : 0));
      }

    // Nonzero support of a closed-form column lies in meetcl(C) plus x_i.
    for (Index i = 0; i < n; ++i) {
      if (!generates_double_chain(p, i)) continue;
      const auto cl = covered_meet_closure(p, i);
      for (const auto& [j, v] : mobius_closed_form(p, i)) {
        const bool inside = j == i || std::find(cl.begin(), cl.end(), j) != cl.end();
        CHECK(inside);
      }
    }
  }
}

TEST_CASE("families agree on every generator") {
  check_closed_form(grid_family(2, 3, 4));
  check_closed_form(squarefree_pairs_family(first_primes(4)));
  check_closed_form(triple_prime_family(2));
  check_closed_form(classical_set(40));
  check_closed_form(chain_with_leaves(6));
}

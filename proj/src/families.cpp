#include "divlat/families.hpp"

#include <algorithm>
#include <set>

#include "divlat/doublechain.hpp"

namespace divlat {

namespace {

bool is_prime(const Integer& p) {
  return sgn(p) > 0 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

void require_distinct_primes(const std::vector<Integer>& ps, const char* family) {
  for (const auto& p : ps) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::BadParams, std::string(family) + ": " + p.get_str() + " is not prime");
    }
  }
  const std::set<Integer> distinct(ps.begin(), ps.end());
  if (distinct.size() != ps.size()) {
    throw Error(ErrorCode::BadParams, std::string(family) + ": primes must be distinct");
  }
}

Integer power(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

std::vector<Integer> first_primes(Index k) {
  std::vector<Integer> out;
  Integer p = 2;
  while (out.size() < k) {
    out.push_back(p);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return out;
}

DivisorPoset grid_family(const Integer& p, const Integer& q, long m) {
  require_distinct_primes({p, q}, "grid");
  if (m < 2) throw Error(ErrorCode::BadParams, "grid: m must be at least 2");
  std::vector<Integer> xs;
  for (long k = 0; k < m; ++k) {
    for (long l = 0; l < m; ++l) {
      xs.push_back(power(p, static_cast<unsigned long>(k)) * power(q, static_cast<unsigned long>(l)));
    }
  }
  return DivisorPoset(xs);
}

DivisorPoset squarefree_pairs_family(const std::vector<Integer>& primes) {
  if (primes.size() < 2) throw Error(ErrorCode::BadParams, "squarefree pairs: need at least two primes");
  require_distinct_primes(primes, "squarefree pairs");
  std::vector<Integer> xs{Integer(1)};
  for (Index a = 0; a < primes.size(); ++a) {
    xs.push_back(primes[a]);
    for (Index b = a + 1; b < primes.size(); ++b) xs.push_back(primes[a] * primes[b]);
  }
  return DivisorPoset(xs);
}

DivisorPoset triple_prime_family(const std::vector<Integer>& primes, const Integer& q,
                                 const Integer& r, long m) {
  if (m < 2) throw Error(ErrorCode::BadParams, "triple prime: m must be at least 2");
  if (primes.size() != static_cast<Index>(m)) {
    throw Error(ErrorCode::BadParams, "triple prime: expected exactly m primes p_1..p_m");
  }
  std::vector<Integer> all = primes;
  all.push_back(q);
  all.push_back(r);
  require_distinct_primes(all, "triple prime");
  std::vector<Integer> xs;
  for (long i = 1; i <= m; ++i) {
    const Integer base = power(r, static_cast<unsigned long>(i - 1));
    for (long k = 0; k < m; ++k) {
      for (long l = 0; l < m; ++l) {
        xs.push_back(base * power(q, static_cast<unsigned long>(k)) *
                     power(primes[static_cast<Index>(i - 1)], static_cast<unsigned long>(l)));
      }
    }
  }
  return DivisorPoset(xs);
}

DivisorPoset triple_prime_family(long m) {
  if (m < 2) throw Error(ErrorCode::BadParams, "triple prime: m must be at least 2");
  auto ps = first_primes(static_cast<Index>(m) + 2);
  const Integer q = ps[0], r = ps[1];
  ps.erase(ps.begin(), ps.begin() + 2);
  return triple_prime_family(ps, q, r, m);
}

std::array<DivisorPoset, 3> cube_instances() {
  return {build_poset({1, 2, 3, 5, 6, 10, 15, 30}),
          build_poset({1, 2, 3, 5, 70, 78, 255, 46410}),
          build_poset({1, 2, 3, 5, 66, 70, 255, 39270})};
}

DivisorPoset classical_set(long n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "classical set: n must be at least 1");
  std::vector<Integer> xs;
  for (long k = 1; k <= n; ++k) xs.emplace_back(k);
  return DivisorPoset(xs);
}

DivisorPoset figure1d_instance() {
  // Core {1, 2, 3, 4}: chain A = {1, 2, 4}, chain B = {3}, tops 4 and 3 with
  // meet 1. Covered elements: 20, 28 over 4; 38 over 2; 33, 39 over 3; 17 over 1.
  const Integer top = Integer(4) * 5 * 7 * 19 * 3 * 11 * 13 * 17;
  std::vector<Integer> xs = to_integers({1, 2, 3, 4, 17, 20, 28, 33, 38, 39});
  xs.push_back(top);
  return DivisorPoset(xs);
}

DivisorPoset chain_with_leaves(long trunk) {
  if (trunk < 1) throw Error(ErrorCode::BadParams, "chain with leaves: trunk must be at least 1");
  const auto leaves = first_primes(static_cast<Index>(trunk) + 1);  // leaves[0] = 2 is the trunk prime
  std::vector<Integer> xs;
  for (long k = 0; k < trunk; ++k) {
    const Integer t = power(Integer(2), static_cast<unsigned long>(k));
    xs.push_back(t);
    if (k + 1 < trunk) xs.push_back(t * leaves[static_cast<Index>(k) + 1]);
  }
  return DivisorPoset(xs);
}

std::vector<Integer> divisors(const Integer& n) {
  if (sgn(n) <= 0) throw Error(ErrorCode::BadParams, "divisors: N must be positive");
  std::vector<Integer> out{Integer(1)};
  Integer rest = n;
  Integer p = 2;
  while (p * p <= rest) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e > 0) {
      const Index base = out.size();
      Integer pk = 1;
      for (unsigned k = 1; k <= e; ++k) {
        pk *= p;
        for (Index t = 0; t < base; ++t) out.push_back(out[t] * pk);
      }
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  if (rest > 1) {
    const Index base = out.size();
    for (Index t = 0; t < base; ++t) out.push_back(out[t] * rest);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_gcd_closed(std::span<const Integer> universe, Index n,
                         const std::function<bool(const std::vector<Integer>&)>& visit) {
  std::vector<Integer> u(universe.begin(), universe.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (n == 0 || n > u.size()) return;

  // Ascending choice: a gcd with an earlier element is smaller than the new
  // element, so it must already be chosen. Every prefix stays GCD closed.
  std::vector<Integer> chosen;
  Integer g;
  bool stop = false;
  std::function<void(Index)> extend = [&](Index from) {
    if (chosen.size() == n) {
      if (!visit(chosen)) stop = true;
      return;
    }
    for (Index k = from; k < u.size() && !stop; ++k) {
      if (u.size() - k < n - chosen.size()) break;
      bool ok = true;
      for (const auto& x : chosen) {
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), u[k].get_mpz_t());
        if (!std::binary_search(chosen.begin(), chosen.end(), g)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(u[k]);
      extend(k + 1);
      chosen.pop_back();
    }
  };
  extend(0);
}

std::vector<DivisorPoset> enumerate_gcd_closed(std::span<const Integer> universe, Index n) {
  std::vector<DivisorPoset> out;
  for_each_gcd_closed(universe, n, [&](const std::vector<Integer>& xs) {
    out.emplace_back(xs);
    return true;
  });
  return out;
}

std::vector<Integer> default_universes(long max_prime) {
  std::vector<Integer> primes;
  for (const auto& p : first_primes(64)) {
    if (p > max_prime) break;
    primes.push_back(p);
  }
  std::vector<Integer> out;
  Integer prod = 1;
  for (const auto& p : primes) {
    prod *= p;
    out.push_back(prod);
  }
  if (primes.size() >= 2) {
    out.push_back(Integer(36));
    out.push_back(Integer(72));
  }
  if (primes.size() >= 3) out.push_back(Integer(60));
  return out;
}

SearchResult search_max_iplus(Index n, const std::vector<Integer>& universes) {
  SearchResult best;
  best.n = n;
  bool found = false;
  for (const auto& big_n : universes) {
    const auto u = divisors(big_n);
    for_each_gcd_closed(u, n, [&](const std::vector<Integer>& xs) {
      ++best.candidates;
      const DivisorPoset p(xs);
      const auto structural = structural_inertia(p);
      const InertiaTriple t = structural ? *structural : inertia_from_psi(p);
      const bool better = !found || t.plus > best.best_plus ||
                          (t.plus == best.best_plus && xs < best.witness);
      if (better) {
        found = true;
        best.best_plus = t.plus;
        best.witness = xs;
        best.witness_inertia = t;
      }
      return true;
    });
  }
  return best;
}

}  // namespace divlat

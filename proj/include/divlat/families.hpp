#pragma once

// Named instance families and the bounded search for large positive inertia.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "divlat/lattice.hpp"
#include "divlat/matrices.hpp"

namespace divlat {

/// The first k primes: 2, 3, 5, ...
std::vector<Integer> first_primes(Index k);

/// {p^k q^l : 0 <= k, l <= m-1}. Throws BadParams.
DivisorPoset grid_family(const Integer& p, const Integer& q, long m);

/// {1} ∪ {p_i} ∪ {p_i p_j : i < j}. Throws BadParams.
DivisorPoset squarefree_pairs_family(const std::vector<Integer>& primes);

/// ∪_{i=1..m} {r^(i-1) q^k p_i^l : 0 <= k, l <= m-1}, where primes holds
/// p_1..p_m. Throws BadParams.
DivisorPoset triple_prime_family(const std::vector<Integer>& primes, const Integer& q,
                                 const Integer& r, long m);
/// Same with the smallest primes: p_i = first m primes after q = 2, r = 3.
DivisorPoset triple_prime_family(long m);

/// The three 8-element cube-shaped sets with negative, positive, and zero
/// Psi at the top.
std::array<DivisorPoset, 3> cube_instances();

/// {1, ..., n}. Throws BadParams for n < 1.
DivisorPoset classical_set(long n);

/// A GCD closed set whose top element's core has incomparable chain tops
/// and no doubly-attached element, so the meet of the tops takes eta + 1.
DivisorPoset figure1d_instance();

/// Divisor chain 1, 2, ..., 2^(trunk-1) with a leaf 2^k q_k (q_k a fresh odd
/// prime) on every trunk element but the last: 2 trunk - 1 elements forming a
/// ∧-tree in which every element except 1 covers exactly one element.
DivisorPoset chain_with_leaves(long trunk);

/// Ascending divisors of N (N >= 1).
std::vector<Integer> divisors(const Integer& n);

/// Calls `visit` with every GCD closed size-n subset of `universe`
/// (ascending values), in lexicographic order of ascending element lists.
/// Returning false from `visit` stops the walk.
void for_each_gcd_closed(std::span<const Integer> universe, Index n,
                         const std::function<bool(const std::vector<Integer>&)>& visit);

std::vector<DivisorPoset> enumerate_gcd_closed(std::span<const Integer> universe, Index n);

/// Divisor universes used by the search: products of the first k primes
/// not exceeding max_prime, and the grids p^2 q^2, p^3 q^2, p^2 q r.
std::vector<Integer> default_universes(long max_prime);

struct SearchResult {
  Index n = 0;
  Index best_plus = 0;
  std::vector<Integer> witness;  // lexicographically least maximiser
  InertiaTriple witness_inertia;
  Index candidates = 0;          // GCD closed sets examined
};

/// Maximum i_+ over all GCD closed size-n subsets of divisors(N) for each N
/// in `universes`. A lower bound on the true maximum over all GCD closed sets.
SearchResult search_max_iplus(Index n, const std::vector<Integer>& universes);

}  // namespace divlat

#pragma once

// Double-chain generation: whether meetcl(C_S(x_i)) \ C_S(x_i) (the "core" of
// x_i) splits into two disjoint chains, and the set-level classifications
// that guarantee it.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "divlat/lattice.hpp"

namespace divlat {

/// meetcl(C_S(x_i)), ascending parent indices.
IndexList covered_meet_closure(const DivisorPoset& p, Index i);

/// meetcl(C_S(x_i)) \ C_S(x_i) as an induced sub-poset.
SubPoset core_set(const DivisorPoset& p, Index i);

bool generates_double_chain(const DivisorPoset& p, Index i);

/// Every element of S generates a double-chain set.
bool is_double_chain_set(const DivisorPoset& p);

struct ChainDecomposition {
  Index owner = npos;
  IndexList covered;   // C_S(x_owner)
  IndexList closure;   // meetcl(C_S(x_owner))
  IndexList core;      // closure \ covered
  IndexList chain_a;   // ascending, a chain
  IndexList chain_b;   // ascending, a chain, disjoint from chain_a
  /// core element -> covered elements z with x_k covered by z inside closure
  std::map<Index, IndexList> attach;
  /// core element -> |attach[x_k]|
  std::map<Index, Index> eta;
  /// Top of chain A; npos when the core is empty.
  Index top_a = npos;
  /// Top of chain B; equals top_a when chain B is empty.
  Index top_b = npos;
  /// Covered element attached to both chains, if any.
  std::optional<Index> doubly_attached;
  /// Number of covered elements attached to both chains (at most 1 by theory).
  Index doubly_attached_count = 0;
  /// For the doubly-attached element: the elements it covers in A and in B.
  Index attach_a = npos;
  Index attach_b = npos;

  bool in_a(Index k) const;
  bool in_b(Index k) const;
  bool in_core(Index k) const;
  /// Maximal in A ∪ B.
  bool is_core_maximal(const DivisorPoset& p, Index k) const;
};

/// Bottom-up chain split of the core. Throws NotDoubleChainGenerator when the
/// core has width > 2.
ChainDecomposition decompose_chains(const DivisorPoset& p, Index i);

/// Pairwise meets of distinct elements form a chain.
bool is_a_set(const DivisorPoset& p);

/// Hasse diagram of meetcl(S) is a tree.
bool is_meet_tree(const DivisorPoset& p);

/// The r smallest elements form a divisor chain R whose top divides every
/// other element, and the remaining elements are GCD closed.
/// Throws BadFoldCount unless 0 <= r <= |xs| - 1.
bool is_r_fold_gcd_closed(std::span<const Integer> xs, long r);

/// Hasse diagram isomorphic to the 8-element Boolean lattice.
bool is_cube(const DivisorPoset& p);

}  // namespace divlat

#pragma once

// Poset Möbius function of a divisor semilattice, three ways:
//   - the defining recursion,
//   - the structural closed form for double-chain generators,
//   - exact inversion of the zeta matrix.

#include <map>
#include <vector>

#include "divlat/lattice.hpp"

namespace divlat {

/// Dense table with at(j, i) = mu_S(x_j, x_i).
class MoebiusTable {
public:
  MoebiusTable() = default;
  explicit MoebiusTable(Index n) : n_(n), values_(n * n, 0) {}

  Index size() const noexcept { return n_; }
  const Integer& at(Index j, Index i) const { return values_.at(j * n_ + i); }
  Integer& at(Index j, Index i) { return values_.at(j * n_ + i); }

  /// Column i as index -> value, nonzero entries only.
  std::map<Index, Integer> column(Index i) const;

  friend bool operator==(const MoebiusTable&, const MoebiusTable&) = default;

private:
  Index n_ = 0;
  std::vector<Integer> values_;
};

/// mu(x_j, x_i) = -sum_{x_j <= x_k < x_i} mu(x_j, x_k), mu(x_i, x_i) = 1.
MoebiusTable mobius_recursive(const DivisorPoset& p);

/// Column i of mu_S from the chain decomposition of the core of x_i alone.
/// Throws NotDoubleChainGenerator.
std::map<Index, Integer> mobius_closed_form(const DivisorPoset& p, Index i);

/// Inverse of the zeta matrix by exact Gauss-Jordan elimination.
MoebiusTable mobius_via_zeta_inverse(const DivisorPoset& p);

}  // namespace divlat

#include "divlat/moebius.hpp"

#include "divlat/doublechain.hpp"
#include "divlat/exact.hpp"

namespace divlat {

std::map<Index, Integer> MoebiusTable::column(Index i) const {
  std::map<Index, Integer> out;
  for (Index j = 0; j < n_; ++j) {
    if (sgn(at(j, i)) != 0) out.emplace(j, at(j, i));
  }
  return out;
}

MoebiusTable mobius_recursive(const DivisorPoset& p) {
  const Index n = p.size();
  MoebiusTable mu(n);
  // Row recursion: fix the lower end x_j and walk x_i upward.
  for (Index j = 0; j < n; ++j) {
    mu.at(j, j) = 1;
    for (Index i = j + 1; i < n; ++i) {
      if (!p.leq(j, i)) continue;
      Integer sum = 0;
      for (Index k = j; k < i; ++k) {
        if (p.leq(j, k) && p.leq(k, i)) sum += mu.at(j, k);
      }
      mu.at(j, i) = -sum;
    }
  }
  return mu;
}

std::map<Index, Integer> mobius_closed_form(const DivisorPoset& p, Index i) {
  const ChainDecomposition d = decompose_chains(p, i);
  std::map<Index, Integer> col;
  col.emplace(i, 1);
  for (Index z : d.covered) col.emplace(z, -1);
  if (d.core.empty()) return col;

  const Index xa = d.top_a, xb = d.top_b;
  const bool tops_incomparable = !p.comparable(xa, xb);
  const Index tops_meet = p.meet(xa, xb);

  for (Index j : d.core) {
    const long eta = static_cast<long>(d.eta.at(j));
    long value;
    if (d.doubly_attached) {
      value = (j == xa || j == xb) ? eta - 1 : eta;
    } else if (d.is_core_maximal(p, j)) {
      value = eta - 1;
    } else if (j == xa || j == xb) {
      value = eta;  // lower of two comparable tops
    } else if (tops_incomparable && j == tops_meet) {
      value = eta + 1;
    } else {
      value = eta;
    }
    if (value != 0) col.emplace(j, value);
  }
  return col;
}

MoebiusTable mobius_via_zeta_inverse(const DivisorPoset& p) {
  const Index n = p.size();
  ExactMatrix zeta(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) zeta(j, i) = p.leq(j, i) ? 1 : 0;
  }
  const ExactMatrix inv = inverse(zeta);
  MoebiusTable mu(n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const Rational& q = inv(j, i);
      if (q.get_den() != 1) throw std::logic_error("zeta inverse is not integral");
      mu.at(j, i) = q.get_num();
    }
  }
  return mu;
}

}  // namespace divlat

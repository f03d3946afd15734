#include "divlat/doublechain.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace divlat {

IndexList covered_meet_closure(const DivisorPoset& p, Index i) {
  return meet_closure(p, p.lower_covers(i));
}

SubPoset core_set(const DivisorPoset& p, Index i) {
  p.require_gcd_closed("core_set");
  const auto& covered = p.lower_covers(i);
  IndexList core;
  for (Index k : covered_meet_closure(p, i)) {
    if (!std::binary_search(covered.begin(), covered.end(), k)) core.push_back(k);
  }
  return SubPoset(p, std::move(core));
}

bool generates_double_chain(const DivisorPoset& p, Index i) {
  return width(core_set(p, i)) <= 2;
}

bool is_double_chain_set(const DivisorPoset& p) {
  for (Index i = 0; i < p.size(); ++i) {
    if (!generates_double_chain(p, i)) return false;
  }
  return true;
}

bool ChainDecomposition::in_a(Index k) const {
  return std::binary_search(chain_a.begin(), chain_a.end(), k);
}

bool ChainDecomposition::in_b(Index k) const {
  return std::binary_search(chain_b.begin(), chain_b.end(), k);
}

bool ChainDecomposition::in_core(Index k) const {
  return std::binary_search(core.begin(), core.end(), k);
}

bool ChainDecomposition::is_core_maximal(const DivisorPoset& p, Index k) const {
  if (!in_core(k)) return false;
  return std::none_of(core.begin(), core.end(), [&](Index o) { return p.less(k, o); });
}

namespace {

enum Side : int { kA = 0, kB = 1, kUnset = -1 };

// Chain split as a 2-colouring of the incomparability graph of the core:
// incomparable elements must land in different chains, and elements from
// different components are pairwise comparable. Components are visited in
// ascending order of their least element, which reproduces the bottom-up
// construction; the orientation of each component follows the chain whose
// current top is covered by exactly one of its members.
bool split_chains(const DivisorPoset& p, const SubPoset& core, IndexList& chain_a,
                  IndexList& chain_b) {
  const auto& mem = core.members();
  const Index k = mem.size();
  std::vector<IndexList> incomparable(k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = a + 1; b < k; ++b) {
      if (!p.comparable(mem[a], mem[b])) {
        incomparable[a].push_back(b);
        incomparable[b].push_back(a);
      }
    }
  }

  std::vector<int> parity(k, kUnset);
  std::vector<int> side(k, kUnset);
  Index top_a = npos, top_b = npos;  // parent indices

  auto covers_top = [&](Index local, Index top) {
    return top != npos && core.covers(mem[local], top);
  };

  for (Index s = 0; s < k; ++s) {
    if (parity[s] != kUnset) continue;
    IndexList component{s};
    parity[s] = 0;
    std::deque<Index> queue{s};
    while (!queue.empty()) {
      const Index u = queue.front();
      queue.pop_front();
      for (Index v : incomparable[u]) {
        if (parity[v] == kUnset) {
          parity[v] = 1 - parity[u];
          component.push_back(v);
          queue.push_back(v);
        } else if (parity[v] == parity[u]) {
          return false;  // odd cycle: an antichain of size 3
        }
      }
    }
    std::sort(component.begin(), component.end());

    int side_of_parity0 = kA;
    for (Index m : component) {
      const bool ca = covers_top(m, top_a);
      const bool cb = covers_top(m, top_b);
      if (ca != cb) {
        const int wanted = ca ? kA : kB;
        side_of_parity0 = parity[m] == 0 ? wanted : 1 - wanted;
        break;
      }
    }
    for (Index m : component) {
      side[m] = parity[m] == 0 ? side_of_parity0 : 1 - side_of_parity0;
      // Every earlier element is below m, so the largest assigned member is the top.
      if (side[m] == kA) {
        if (top_a == npos || mem[m] > top_a) top_a = mem[m];
      } else {
        if (top_b == npos || mem[m] > top_b) top_b = mem[m];
      }
    }
  }

  chain_a.clear();
  chain_b.clear();
  for (Index l = 0; l < k; ++l) (side[l] == kA ? chain_a : chain_b).push_back(mem[l]);
  return true;
}

bool is_chain(const DivisorPoset& p, const IndexList& xs) {
  for (Index a = 0; a < xs.size(); ++a) {
    for (Index b = a + 1; b < xs.size(); ++b) {
      if (!p.comparable(xs[a], xs[b])) return false;
    }
  }
  return true;
}

}  // namespace

ChainDecomposition decompose_chains(const DivisorPoset& p, Index i) {
  p.require_gcd_closed("decompose_chains");
  ChainDecomposition d;
  d.owner = i;
  d.covered = p.lower_covers(i);
  d.closure = covered_meet_closure(p, i);
  const SubPoset core = core_set(p, i);
  d.core = core.members();

  const Index w = width(core);
  if (w > 2) {
    throw Error(ErrorCode::NotDoubleChainGenerator,
                "element " + p.value(i).get_str() + " does not generate a double-chain set (core width " +
                    std::to_string(w) + ")");
  }
  if (d.core.empty()) return d;

  if (!split_chains(p, core, d.chain_a, d.chain_b) || !is_chain(p, d.chain_a) ||
      !is_chain(p, d.chain_b)) {
    throw std::logic_error("decompose_chains: width <= 2 but no two-chain split found");
  }
  // The least core element is comparable to all others and always opens chain A.
  d.top_a = d.chain_a.back();
  d.top_b = d.chain_b.empty() ? d.top_a : d.chain_b.back();

  const SubPoset closure(p, d.closure);
  for (Index k : d.core) d.eta[k] = 0;
  for (Index z : d.covered) {
    bool to_a = false, to_b = false;
    Index via_a = npos, via_b = npos;
    for (Index k : closure.lower_covers(z)) {
      d.attach[k].push_back(z);
      ++d.eta[k];
      if (d.in_a(k)) {
        to_a = true;
        via_a = k;
      } else {
        to_b = true;
        via_b = k;
      }
    }
    if (to_a && to_b) {
      ++d.doubly_attached_count;
      if (!d.doubly_attached) {
        d.doubly_attached = z;
        d.attach_a = via_a;
        d.attach_b = via_b;
      }
    }
  }
  return d;
}

bool is_a_set(const DivisorPoset& p) {
  std::set<Integer> meets;
  Integer g;
  for (Index a = 0; a < p.size(); ++a) {
    for (Index b = a + 1; b < p.size(); ++b) {
      mpz_gcd(g.get_mpz_t(), p.value(a).get_mpz_t(), p.value(b).get_mpz_t());
      meets.insert(g);
    }
  }
  const std::vector<Integer> sorted(meets.begin(), meets.end());
  for (Index k = 1; k < sorted.size(); ++k) {
    if (!mpz_divisible_p(sorted[k].get_mpz_t(), sorted[k - 1].get_mpz_t())) return false;
  }
  return true;
}

bool is_meet_tree(const DivisorPoset& p) {
  const DivisorPoset closed(gcd_closure(p.elements()));
  // meetcl(S) has a least element, so its Hasse diagram is connected.
  Index edges = 0;
  for (Index i = 0; i < closed.size(); ++i) edges += closed.lower_covers(i).size();
  return edges + 1 == closed.size();
}

bool is_r_fold_gcd_closed(std::span<const Integer> xs, long r) {
  const DivisorPoset p(xs);
  const long n = static_cast<long>(p.size());
  if (r < 0 || r > n - 1) {
    throw Error(ErrorCode::BadFoldCount, "fold count " + std::to_string(r) +
                                             " outside [0, " + std::to_string(n - 1) + "]");
  }
  if (r == 0) return p.gcd_closed();
  const auto& e = p.elements();
  const auto ur = static_cast<Index>(r);
  // R must be the r smallest elements: max(R) divides min(T \ R) and R is a
  // divisor chain, so every element of R is below every element of T \ R.
  for (Index k = 1; k <= ur; ++k) {
    if (!mpz_divisible_p(e[k].get_mpz_t(), e[k - 1].get_mpz_t())) return false;
  }
  const std::vector<Integer> rest(e.begin() + static_cast<long>(ur), e.end());
  return DivisorPoset(rest).gcd_closed();
}

bool is_cube(const DivisorPoset& p) {
  if (p.size() != 8) return false;
  IndexList bottom, atoms, middle, top;
  for (Index i = 0; i < 8; ++i) {
    const auto& c = p.lower_covers(i);
    switch (c.size()) {
      case 0: bottom.push_back(i); break;
      case 1: atoms.push_back(i); break;
      case 2: middle.push_back(i); break;
      case 3: top.push_back(i); break;
      default: return false;
    }
  }
  if (bottom.size() != 1 || atoms.size() != 3 || middle.size() != 3 || top.size() != 1) return false;
  auto is_in = [](const IndexList& xs, Index v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
  };
  for (Index a : atoms) {
    if (p.lower_covers(a)[0] != bottom[0]) return false;
  }
  std::set<IndexList> pairs;
  for (Index m : middle) {
    for (Index c : p.lower_covers(m)) {
      if (!is_in(atoms, c)) return false;
    }
    pairs.insert(p.lower_covers(m));
  }
  if (pairs.size() != 3) return false;
  return p.lower_covers(top[0]) == middle;
}

}  // namespace divlat

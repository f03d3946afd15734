#include "divlat/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace divlat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveElement: return "NonPositiveElement";
    case ErrorCode::MeetOutsideSet: return "MeetOutsideSet";
    case ErrorCode::NotGcdClosed: return "NotGcdClosed";
    case ErrorCode::NotDoubleChainGenerator: return "NotDoubleChainGenerator";
    case ErrorCode::BadFoldCount: return "BadFoldCount";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::vector<Integer> normalized(std::span<const Integer> xs) {
  if (xs.empty()) throw Error(ErrorCode::EmptyInput, "input set is empty");
  std::vector<Integer> out(xs.begin(), xs.end());
  for (const auto& x : out) {
    if (sgn(x) <= 0) {
      throw Error(ErrorCode::NonPositiveElement,
                  "element " + x.get_str() + " is not a positive integer");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

DivisorPoset::DivisorPoset(std::span<const Integer> xs)
    : elements_(normalized(xs)) {
  const Index n = elements_.size();
  leq_.assign(n * n, 0);
  for (Index i = 0; i < n; ++i) {
    lookup_.emplace(elements_[i], i);
    leq_[i * n + i] = 1;
    for (Index j = i + 1; j < n; ++j) {
      if (mpz_divisible_p(elements_[j].get_mpz_t(), elements_[i].get_mpz_t())) {
        leq_[i * n + j] = 1;
      }
    }
  }

  lower_covers_.assign(n, {});
  upper_covers_.assign(n, {});
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      if (!leq(j, i)) continue;
      bool cover = true;
      for (Index k = j + 1; k < i && cover; ++k) {
        if (leq(j, k) && leq(k, i)) cover = false;
      }
      if (cover) {
        lower_covers_[i].push_back(j);
        upper_covers_[j].push_back(i);
      }
    }
  }

  meet_.assign(n * n, npos);
  Integer g;
  for (Index i = 0; i < n; ++i) {
    meet_[i * n + i] = i;
    for (Index j = i + 1; j < n; ++j) {
      Index m;
      if (leq(i, j)) {
        m = i;
      } else {
        mpz_gcd(g.get_mpz_t(), elements_[i].get_mpz_t(), elements_[j].get_mpz_t());
        m = find(g);
        if (m == npos) gcd_closed_ = false;
      }
      meet_[i * n + j] = m;
      meet_[j * n + i] = m;
    }
  }
}

Index DivisorPoset::find(const Integer& v) const {
  auto it = lookup_.find(v);
  return it == lookup_.end() ? npos : it->second;
}

Index DivisorPoset::meet(Index i, Index j) const {
  const Index n = size();
  if (i >= n || j >= n) throw std::out_of_range("meet: index out of range");
  const Index m = meet_[i * n + j];
  if (m == npos) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), elements_[i].get_mpz_t(), elements_[j].get_mpz_t());
    throw Error(ErrorCode::MeetOutsideSet,
                "gcd(" + elements_[i].get_str() + ", " + elements_[j].get_str() +
                    ") = " + g.get_str() + " is not in the set");
  }
  return m;
}

void DivisorPoset::require_gcd_closed(std::string_view what) const {
  if (!gcd_closed_) {
    throw Error(ErrorCode::NotGcdClosed,
                std::string(what) + " requires a GCD closed set");
  }
}

DivisorPoset build_poset(std::span<const Integer> xs) { return DivisorPoset(xs); }

std::vector<Integer> to_integers(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  out.reserve(xs.size());
  for (long x : xs) out.emplace_back(x);
  return out;
}

DivisorPoset build_poset(std::initializer_list<long> xs) {
  return DivisorPoset(to_integers(xs));
}

bool is_gcd_closed(const DivisorPoset& p) { return p.gcd_closed(); }

std::vector<Integer> gcd_closure(std::span<const Integer> xs) {
  const auto base = normalized(xs);
  std::set<Integer> closed(base.begin(), base.end());
  std::vector<Integer> frontier(base.begin(), base.end());
  Integer g;
  // Each new element only needs pairing against everything seen so far.
  while (!frontier.empty()) {
    std::vector<Integer> next;
    const std::vector<Integer> snapshot(closed.begin(), closed.end());
    for (const auto& a : frontier) {
      for (const auto& b : snapshot) {
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (closed.insert(g).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

SubPoset::SubPoset(const DivisorPoset& parent, IndexList members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Index m : members_) {
    if (m >= parent.size()) throw std::out_of_range("SubPoset: member out of range");
  }
  const Index k = members_.size();
  lower_.assign(k, {});
  upper_.assign(k, {});
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < a; ++b) {
      const Index hi = members_[a], lo = members_[b];
      if (!parent.less(lo, hi)) continue;
      bool cover = true;
      for (Index c = b + 1; c < a && cover; ++c) {
        if (parent.less(lo, members_[c]) && parent.less(members_[c], hi)) cover = false;
      }
      if (cover) {
        lower_[a].push_back(lo);
        upper_[b].push_back(hi);
      }
    }
  }
}

Index SubPoset::local(Index parent_index) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), parent_index);
  if (it == members_.end() || *it != parent_index) return npos;
  return static_cast<Index>(it - members_.begin());
}

bool SubPoset::contains(Index parent_index) const { return local(parent_index) != npos; }

const IndexList& SubPoset::lower_covers(Index parent_index) const {
  const Index l = local(parent_index);
  if (l == npos) throw std::out_of_range("SubPoset: not a member");
  return lower_[l];
}

const IndexList& SubPoset::upper_covers(Index parent_index) const {
  const Index l = local(parent_index);
  if (l == npos) throw std::out_of_range("SubPoset: not a member");
  return upper_[l];
}

bool SubPoset::covers(Index a, Index b) const {
  const auto& lc = lower_covers(a);
  return std::binary_search(lc.begin(), lc.end(), b);
}

IndexList SubPoset::maximal() const {
  IndexList out;
  for (Index l = 0; l < members_.size(); ++l) {
    if (upper_[l].empty()) out.push_back(members_[l]);
  }
  return out;
}

IndexList meet_closure(const DivisorPoset& p, std::span<const Index> subset) {
  p.require_gcd_closed("meet_closure");
  std::vector<char> in(p.size(), 0);
  IndexList members;
  for (Index s : subset) {
    if (s >= p.size()) throw std::out_of_range("meet_closure: index out of range");
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  for (Index head = 0; head < members.size(); ++head) {
    const Index a = members[head];
    for (Index t = 0; t <= head; ++t) {
      const Index m = p.meet(a, members[t]);
      if (!in[m]) {
        in[m] = 1;
        members.push_back(m);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// Kuhn's augmenting paths on the bipartite graph left=members, right=members,
// edge u->v iff u < v strictly.
bool augment(const std::vector<IndexList>& adj, Index u, std::vector<char>& seen,
             std::vector<Index>& match_right) {
  for (Index v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (match_right[v] == npos || augment(adj, match_right[v], seen, match_right)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

Index width(const SubPoset& sub) {
  const Index k = sub.size();
  if (k == 0) return 0;
  const auto& mem = sub.members();
  const auto& p = sub.parent();
  std::vector<IndexList> adj(k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = a + 1; b < k; ++b) {
      if (p.less(mem[a], mem[b])) adj[a].push_back(b);
    }
  }
  std::vector<Index> match_right(k, npos);
  Index matching = 0;
  for (Index u = 0; u < k; ++u) {
    std::vector<char> seen(k, 0);
    if (augment(adj, u, seen, match_right)) ++matching;
  }
  return k - matching;
}

bool has_antichain_3(const SubPoset& sub) {
  const auto& mem = sub.members();
  const auto& p = sub.parent();
  const Index k = mem.size();
  for (Index a = 0; a < k; ++a) {
    for (Index b = a + 1; b < k; ++b) {
      if (p.comparable(mem[a], mem[b])) continue;
      for (Index c = b + 1; c < k; ++c) {
        if (!p.comparable(mem[a], mem[c]) && !p.comparable(mem[b], mem[c])) return true;
      }
    }
  }
  return false;
}

std::string to_dot(const DivisorPoset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  for (Index i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=\"" << p.value(i).get_str() << "\"];\n";
  }
  for (Index i = 0; i < p.size(); ++i) {
    for (Index j : p.upper_covers(i)) os << "  n" << i << " -> n" << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace divlat

#pragma once

// Divisor meet-semilattices: a finite set of positive integers ordered by
// divisibility, with its cover relation and (when GCD closed) meet table.

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "divlat/error.hpp"

namespace divlat {

using Integer = mpz_class;
using Index = std::size_t;
using IndexList = std::vector<Index>;

inline constexpr Index npos = std::numeric_limits<Index>::max();

/// Immutable poset (S, |). Elements are stored strictly ascending, so
/// x_i | x_j implies i <= j and every index order is a linear extension.
class DivisorPoset {
public:
  /// Sorts and deduplicates `xs`. Throws EmptyInput / NonPositiveElement.
  explicit DivisorPoset(std::span<const Integer> xs);

  Index size() const noexcept { return elements_.size(); }
  const std::vector<Integer>& elements() const noexcept { return elements_; }
  const Integer& value(Index i) const { return elements_.at(i); }

  /// x_i divides x_j.
  bool leq(Index i, Index j) const { return leq_[i * size() + j] != 0; }
  bool less(Index i, Index j) const { return i != j && leq(i, j); }
  bool comparable(Index i, Index j) const { return leq(i, j) || leq(j, i); }

  /// C_S(x_i): indices covered by x_i, ascending.
  const IndexList& lower_covers(Index i) const { return lower_covers_.at(i); }
  /// Indices covering x_i, ascending.
  const IndexList& upper_covers(Index i) const { return upper_covers_.at(i); }

  /// Index of the element equal to v, or npos.
  Index find(const Integer& v) const;

  bool gcd_closed() const noexcept { return gcd_closed_; }

  /// Index of gcd(x_i, x_j). Throws MeetOutsideSet when the gcd is not in S.
  Index meet(Index i, Index j) const;

  /// Throws NotGcdClosed unless the set is GCD closed; `what` names the caller.
  void require_gcd_closed(std::string_view what) const;

private:
  std::vector<Integer> elements_;
  std::vector<unsigned char> leq_;
  std::vector<IndexList> lower_covers_;
  std::vector<IndexList> upper_covers_;
  std::vector<Index> meet_;  // npos where gcd falls outside S
  std::map<Integer, Index> lookup_;
  bool gcd_closed_ = true;
};

DivisorPoset build_poset(std::span<const Integer> xs);

/// Convenience for tests and literals.
std::vector<Integer> to_integers(std::initializer_list<long> xs);
DivisorPoset build_poset(std::initializer_list<long> xs);

bool is_gcd_closed(const DivisorPoset& p);

/// Smallest GCD closed superset of xs, ascending.
std::vector<Integer> gcd_closure(std::span<const Integer> xs);

/// Induced sub-poset on a subset of indices of a parent poset. The cover
/// relation is recomputed inside the subset, so a pair may cover here
/// without covering in the parent.
class SubPoset {
public:
  SubPoset(const DivisorPoset& parent, IndexList members);

  const DivisorPoset& parent() const noexcept { return *parent_; }
  /// Parent indices, ascending.
  const IndexList& members() const noexcept { return members_; }
  Index size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Index parent_index) const;

  /// Local position of a parent index, or npos.
  Index local(Index parent_index) const;

  /// Parent indices covered by `parent_index` inside the subset.
  const IndexList& lower_covers(Index parent_index) const;
  /// Parent indices covering `parent_index` inside the subset.
  const IndexList& upper_covers(Index parent_index) const;
  /// a covers b inside the subset (both parent indices).
  bool covers(Index a, Index b) const;

  /// Maximal members (parent indices, ascending).
  IndexList maximal() const;

private:
  const DivisorPoset* parent_;
  IndexList members_;
  std::vector<IndexList> lower_;
  std::vector<IndexList> upper_;
};

/// Smallest meet-closed subset of S containing `subset`. Requires S GCD closed.
IndexList meet_closure(const DivisorPoset& p, std::span<const Index> subset);

/// Size of a maximum antichain, via Dilworth: |sub| minus a maximum matching
/// in the strict-order bipartite graph.
Index width(const SubPoset& sub);

/// width(sub) >= 3, by scanning triples.
bool has_antichain_3(const SubPoset& sub);

/// Hasse diagram of the cover relation in Graphviz DOT.
std::string to_dot(const DivisorPoset& p);

}  // namespace divlat

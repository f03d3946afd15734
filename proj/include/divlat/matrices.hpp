#pragma once

// GCD and LCM matrices of divisor sets, the Psi function, the congruence
// [S] = (ΔE) Λ (ΔE)^T, and inertia with an independent characteristic
// polynomial oracle.

#include <optional>
#include <ostream>
#include <vector>

#include "divlat/exact.hpp"
#include "divlat/lattice.hpp"

namespace divlat {

ExactMatrix gcd_matrix(const DivisorPoset& p);
ExactMatrix lcm_matrix(const DivisorPoset& p);
ExactMatrix reciprocal_gcd_matrix(const DivisorPoset& p);

/// Entrywise lcm(x_i, x_j)^alpha. Only non-negative integer alpha is exact;
/// anything else throws NonIntegerExponent.
ExactMatrix power_lcm_matrix(const DivisorPoset& p, const Rational& alpha);

/// Psi values aligned with p's element order.
struct PsiVector {
  std::vector<Rational> values;
};

/// Computed by the subtraction recursion and by the Möbius sum; the two are
/// checked against each other. Throws NotGcdClosed.
PsiVector psi(const DivisorPoset& p);

struct Factorization {
  ExactMatrix delta;   // diag(x_1, ..., x_n)
  ExactMatrix e;       // e_ij = 1 iff x_j | x_i
  ExactMatrix lambda;  // diag(Psi)
};

/// Throws NotGcdClosed; throws std::logic_error if the product does not
/// reproduce the LCM matrix.
Factorization factorization(const DivisorPoset& p);

/// (prod x_i)^2 * prod Psi(x_i). Throws NotGcdClosed.
Rational determinant_via_psi(const DivisorPoset& p);

/// All Psi values nonzero. Throws NotGcdClosed.
bool is_invertible(const DivisorPoset& p);

struct InertiaTriple {
  Index plus = 0;
  Index minus = 0;
  Index zero = 0;

  Index total() const noexcept { return plus + minus + zero; }
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

std::ostream& operator<<(std::ostream& os, const InertiaTriple& t);

/// Signs of Psi. Throws NotGcdClosed.
InertiaTriple inertia_from_psi(const DivisorPoset& p);

/// (n - c, c, 0) with c = #{x_k : |C_S(x_k)| = 1}, when every element
/// generates a double-chain set; otherwise nullopt. No rational arithmetic.
std::optional<InertiaTriple> structural_inertia(const DivisorPoset& p);

/// Inertia of a symmetric matrix from its exact characteristic polynomial:
/// zero multiplicity from trailing zeros, then Descartes' rule on the
/// deflated polynomial (exact since the roots are real). Throws NonSymmetric.
InertiaTriple inertia_charpoly_oracle(const ExactMatrix& m);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Predicted sign of Psi(x_i): Positive unless x_i covers exactly one
/// element. Throws NotDoubleChainGenerator.
Sign classify_psi_sign(const DivisorPoset& p, Index i);

Sign sign_of(const Rational& q);

}  // namespace divlat

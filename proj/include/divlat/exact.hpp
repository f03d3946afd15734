#pragma once

// Dense matrices over the rationals with exact elimination routines.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "divlat/error.hpp"
#include "divlat/lattice.hpp"

namespace divlat {

using Rational = mpq_class;

/// Lowest-terms "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "num", "num/den" with optional leading '-'. Throws ParseError.
Rational parse_rational(const std::string& text);

class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(Index n);
  static ExactMatrix diagonal(const std::vector<Rational>& d);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(Index r, Index c) { return data_[r * cols_ + c]; }
  const Rational& operator()(Index r, Index c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const;
  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Rational> data_;
};

/// Fraction-free (Bareiss) determinant. Throws NonSquare.
Rational determinant_exact(const ExactMatrix& m);

/// Gauss-Jordan inverse; throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);

/// Coefficients c_0..c_n of det(t I - m), lowest degree first (c_n = 1).
/// Uses Hessenberg reduction over Q. Throws NonSquare.
std::vector<Rational> characteristic_polynomial(const ExactMatrix& m);

/// Sign changes in a coefficient sequence, zeros skipped.
Index sign_variations(const std::vector<Rational>& coeffs);

}  // namespace divlat

#include "divlat/exact.hpp"

#include <cctype>
#include <utility>

namespace divlat {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  };
  const auto slash = text.find('/');
  const auto digits_ok = [](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

ExactMatrix ExactMatrix::identity(Index n) {
  ExactMatrix m(n, n);
  for (Index k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
  ExactMatrix m(d.size(), d.size());
  for (Index k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!square()) return false;
  for (Index r = 0; r < rows_; ++r) {
    for (Index c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (Index r = 0; r < rows_; ++r) {
    for (Index c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (Index r = 0; r < a.rows_; ++r) {
    for (Index k = 0; k < a.cols_; ++k) {
      const Rational& f = a(r, k);
      if (sgn(f) == 0) continue;
      for (Index c = 0; c < b.cols_; ++c) out(r, c) += f * b(k, c);
    }
  }
  return out;
}

namespace {

void require_square(const ExactMatrix& m, const char* what) {
  if (!m.square()) {
    throw Error(ErrorCode::NonSquare, std::string(what) + ": matrix is " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
}

}  // namespace

Rational determinant_exact(const ExactMatrix& m) {
  require_square(m, "determinant");
  const Index n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row, then run integer Bareiss elimination.
  std::vector<Integer> a(n * n);
  Rational scale = 1;
  for (Index r = 0; r < n; ++r) {
    Integer row_lcm = 1;
    for (Index c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    scale *= row_lcm;
    for (Index c = 0; c < n; ++c) {
      a[r * n + c] = m(r, c).get_num() * (row_lcm / m(r, c).get_den());
    }
  }

  int sign = 1;
  Integer prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (sgn(a[k * n + k]) == 0) {
      Index swap_row = k + 1;
      while (swap_row < n && sgn(a[swap_row * n + k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (Index c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    for (Index r = k + 1; r < n; ++r) {
      for (Index c = k + 1; c < n; ++c) {
        Integer& e = a[r * n + c];
        e = e * pivot - a[r * n + k] * a[k * n + c];
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      a[r * n + k] = 0;
    }
    prev = pivot;
  }
  Rational det(a[n * n - 1] * sign);
  det /= scale;
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  require_square(m, "inverse");
  const Index n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: matrix is singular");
    if (pivot != col) {
      for (Index c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational f = 1 / a(col, col);
    for (Index c = 0; c < n; ++c) {
      a(col, c) *= f;
      inv(col, c) *= f;
    }
    for (Index r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational g = a(r, col);
      for (Index c = 0; c < n; ++c) {
        a(r, c) -= g * a(col, c);
        inv(r, c) -= g * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<Rational> characteristic_polynomial(const ExactMatrix& m) {
  require_square(m, "characteristic polynomial");
  const Index n = m.rows();
  ExactMatrix h = m;

  // Reduce to upper Hessenberg form by elimination similarities.
  for (Index j = 0; j + 2 < n; ++j) {
    Index piv = j + 1;
    while (piv < n && sgn(h(piv, j)) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (Index c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (Index r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    for (Index r = j + 2; r < n; ++r) {
      if (sgn(h(r, j)) == 0) continue;
      const Rational u = h(r, j) / h(j + 1, j);
      for (Index c = 0; c < n; ++c) h(r, c) -= u * h(j + 1, c);
      for (Index rr = 0; rr < n; ++rr) h(rr, j + 1) += u * h(rr, r);
    }
  }

  // p_k(t) = (t - h_kk) p_{k-1}(t) - sum_i h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}(t)
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (Index k = 1; k <= n; ++k) {
    std::vector<Rational> next(k + 1);
    for (Index d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Rational prod = 1;
    for (Index i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (sgn(prod) == 0) break;
      const Rational f = prod * h(i - 1, k - 1);
      if (sgn(f) != 0) {
        for (Index d = 0; d < p[i - 1].size(); ++d) next[d] -= f * p[i - 1][d];
      }
    }
    p[k] = std::move(next);
  }
  return p[n];
}

Index sign_variations(const std::vector<Rational>& coeffs) {
  Index changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace divlat

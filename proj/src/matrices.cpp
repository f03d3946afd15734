#include "divlat/matrices.hpp"

#include "divlat/doublechain.hpp"
#include "divlat/moebius.hpp"

namespace divlat {

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

template <typename F>
ExactMatrix symmetric_from(const DivisorPoset& p, F entry) {
  const Index n = p.size();
  ExactMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      m(i, j) = entry(p.value(i), p.value(j));
      m(j, i) = m(i, j);
    }
  }
  return m;
}

}  // namespace

ExactMatrix gcd_matrix(const DivisorPoset& p) {
  return symmetric_from(p, [](const Integer& a, const Integer& b) { return Rational(gcd_of(a, b)); });
}

ExactMatrix lcm_matrix(const DivisorPoset& p) {
  return symmetric_from(p, [](const Integer& a, const Integer& b) { return Rational(lcm_of(a, b)); });
}

ExactMatrix reciprocal_gcd_matrix(const DivisorPoset& p) {
  return symmetric_from(p, [](const Integer& a, const Integer& b) {
    return Rational(Integer(1), gcd_of(a, b));
  });
}

ExactMatrix power_lcm_matrix(const DivisorPoset& p, const Rational& alpha) {
  if (alpha.get_den() != 1 || sgn(alpha) < 0 || !alpha.get_num().fits_ulong_p()) {
    throw Error(ErrorCode::NonIntegerExponent,
                "power LCM exponent must be a non-negative integer, got " + to_string(alpha));
  }
  const unsigned long e = alpha.get_num().get_ui();
  return symmetric_from(p, [e](const Integer& a, const Integer& b) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), lcm_of(a, b).get_mpz_t(), e);
    return Rational(r);
  });
}

PsiVector psi(const DivisorPoset& p) {
  p.require_gcd_closed("psi");
  const Index n = p.size();
  PsiVector out;
  out.values.resize(n);
  for (Index i = 0; i < n; ++i) {
    Rational v(Integer(1), p.value(i));
    for (Index j = 0; j < i; ++j) {
      if (p.leq(j, i)) v -= out.values[j];
    }
    out.values[i] = v;
  }

  const MoebiusTable mu = mobius_recursive(p);
  for (Index i = 0; i < n; ++i) {
    Rational sum = 0;
    for (Index j = 0; j <= i; ++j) {
      if (p.leq(j, i)) sum += Rational(mu.at(j, i), p.value(j));
    }
    if (sum != out.values[i]) {
      throw std::logic_error("psi: recursion and Möbius sum disagree at " + p.value(i).get_str());
    }
  }
  return out;
}

Factorization factorization(const DivisorPoset& p) {
  const PsiVector ps = psi(p);
  const Index n = p.size();
  Factorization f;
  std::vector<Rational> xs;
  xs.reserve(n);
  for (const auto& x : p.elements()) xs.emplace_back(x);
  f.delta = ExactMatrix::diagonal(xs);
  f.e = ExactMatrix(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) f.e(i, j) = p.leq(j, i) ? 1 : 0;
  }
  f.lambda = ExactMatrix::diagonal(ps.values);

  const ExactMatrix de = f.delta * f.e;
  if (de * f.lambda * de.transpose() != lcm_matrix(p)) {
    throw std::logic_error("factorization does not reproduce the LCM matrix");
  }
  return f;
}

Rational determinant_via_psi(const DivisorPoset& p) {
  const PsiVector ps = psi(p);
  Rational det = 1;
  for (Index i = 0; i < p.size(); ++i) det *= p.value(i) * p.value(i) * ps.values[i];
  return det;
}

bool is_invertible(const DivisorPoset& p) {
  for (const auto& v : psi(p).values) {
    if (sgn(v) == 0) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const InertiaTriple& t) {
  return os << '(' << t.plus << ", " << t.minus << ", " << t.zero << ')';
}

InertiaTriple inertia_from_psi(const DivisorPoset& p) {
  InertiaTriple t;
  for (const auto& v : psi(p).values) {
    switch (sgn(v)) {
      case 1: ++t.plus; break;
      case -1: ++t.minus; break;
      default: ++t.zero; break;
    }
  }
  return t;
}

std::optional<InertiaTriple> structural_inertia(const DivisorPoset& p) {
  p.require_gcd_closed("structural_inertia");
  if (!is_double_chain_set(p)) return std::nullopt;
  InertiaTriple t;
  for (Index i = 0; i < p.size(); ++i) {
    if (p.lower_covers(i).size() == 1) ++t.minus;
  }
  t.plus = p.size() - t.minus;
  return t;
}

InertiaTriple inertia_charpoly_oracle(const ExactMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "inertia oracle needs a symmetric matrix");
  std::vector<Rational> c = characteristic_polynomial(m);
  InertiaTriple t;
  Index lead = 0;
  while (lead < c.size() && sgn(c[lead]) == 0) ++lead;
  t.zero = lead;
  c.erase(c.begin(), c.begin() + static_cast<long>(lead));
  t.plus = sign_variations(c);
  // Roots of q(-t) are the negated roots of q.
  for (Index d = 1; d < c.size(); d += 2) c[d] = -c[d];
  t.minus = sign_variations(c);
  if (t.total() != m.rows()) {
    throw std::logic_error("characteristic polynomial is not real-rooted");
  }
  return t;
}

Sign sign_of(const Rational& q) { return static_cast<Sign>(sgn(q)); }

Sign classify_psi_sign(const DivisorPoset& p, Index i) {
  if (!generates_double_chain(p, i)) {
    throw Error(ErrorCode::NotDoubleChainGenerator,
                "element " + p.value(i).get_str() + " does not generate a double-chain set");
  }
  return p.lower_covers(i).size() == 1 ? Sign::Negative : Sign::Positive;
}

}  // namespace divlat

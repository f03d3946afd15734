#pragma once

// Deliberately naive reference implementations used only to check the
// library. Nothing here calls into divlat's algorithms.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using Set = std::vector<Z>;

inline Z gcd(const Z& a, const Z& b) {
  Z g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Z lcm(const Z& a, const Z& b) {
  Z l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool divides(const Z& a, const Z& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

inline Set sorted(Set s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const Set& s, const Z& v) { return std::find(s.begin(), s.end(), v) != s.end(); }

inline bool gcd_closed(const Set& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (!contains(s, gcd(a, b))) return false;
  return true;
}

// y is covered by x within s.
inline bool covers(const Set& s, const Z& x, const Z& y) {
  if (x == y || !divides(y, x)) return false;
  for (const auto& z : s)
    if (z != x && z != y && divides(y, z) && divides(z, x)) return false;
  return true;
}

inline Set lower_covers(const Set& s, const Z& x) {
  Set out;
  for (const auto& y : s)
    if (covers(s, x, y)) out.push_back(y);
  return sorted(out);
}

// Smallest superset closed under gcd, by repeated pairwise closure.
inline Set meet_close(Set s) {
  for (bool grew = true; grew;) {
    grew = false;
    const Set cur = s;
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (!contains(s, gcd(a, b))) {
          s.push_back(gcd(a, b));
          grew = true;
        }
  }
  return sorted(s);
}

// Largest antichain by exhaustive subset search.
inline std::size_t width(const Set& s) {
  std::size_t best = 0;
  const std::size_t n = s.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::size_t cnt = static_cast<std::size_t>(__builtin_popcountl(mask));
    if (cnt <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && (divides(s[i], s[j]) || divides(s[j], s[i]))) ok = false;
    if (ok) best = cnt;
  }
  return best;
}

inline Set core(const Set& s, const Z& x) {
  const Set c = lower_covers(s, x);
  if (c.empty()) return {};
  Set out;
  for (const auto& v : meet_close(c))
    if (!contains(c, v)) out.push_back(v);
  return out;
}

// mu(a, b) on s via the defining recursion over values.
inline std::map<std::pair<Z, Z>, Z> mobius(const Set& s) {
  std::map<std::pair<Z, Z>, Z> mu;
  for (const auto& a : s)
    for (const auto& b : s) {
      if (!divides(a, b)) continue;
      if (a == b) {
        mu[{a, b}] = 1;
        continue;
      }
    }
  // s ascending is a linear extension, so fill b in order.
  for (const auto& a : s)
    for (const auto& b : s) {
      if (a == b || !divides(a, b)) continue;
      Z sum = 0;
      for (const auto& c : s)
        if (c != b && divides(a, c) && divides(c, b)) sum += mu[{a, c}];
      mu[{a, b}] = -sum;
    }
  return mu;
}

// Classical number-theoretic Möbius function of n.
inline int nt_mobius(unsigned long n) {
  int sign = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline Q psi(const Set& s, const Z& x) {
  const auto mu = mobius(s);
  Q sum = 0;
  for (const auto& z : s)
    if (divides(z, x)) sum += Q(mu.at({z, x})) / Q(z);
  sum.canonicalize();
  return sum;
}

using Mat = std::vector<std::vector<Q>>;

inline Mat lcm_matrix(const Set& s) {
  Mat m(s.size(), std::vector<Q>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = lcm(s[i], s[j]);
  return m;
}

// Plain Gaussian elimination with partial pivoting on nonzero entries.
inline Q det(Mat a) {
  const std::size_t n = a.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

struct Inertia {
  std::size_t plus = 0, minus = 0, zero = 0;
};

// Signs of the leading principal minors would fail on singular blocks, so use
// symmetric Gaussian elimination (LDL^T) with 2x2 handling through a diagonal
// shift search: congruence keeps the inertia (Sylvester).
inline Inertia inertia(Mat a) {
  Inertia out;
  std::size_t n = a.size();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t k = 0; k < n; ++k)
      if (!done[k] && a[k][k] != 0) {
        piv = k;
        break;
      }
    if (piv == n) {
      // No nonzero diagonal among the rest: find an off-diagonal a[i][j] != 0
      // and add row/column j to i, which makes a[i][i] = 2 a[i][j] + a[j][j].
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        for (std::size_t k = 0; k < n; ++k)
          if (!done[k]) ++out.zero;
        return out;
      }
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      piv = pi;
    }
    const Q d = a[piv][piv];
    (d > 0 ? out.plus : out.minus)++;
    done[piv] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || a[r][piv] == 0) continue;
      const Q f = a[r][piv] / d;
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[piv][k];
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!done[c]) a[piv][c] = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (!done[r]) a[r][piv] = 0;
  }
  return out;
}

inline Set divisors(unsigned long n) {
  Set out;
  for (unsigned long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(Z(d));
  return out;
}

// Random GCD closed set: closure of a few random divisors of n.
inline Set random_closed(std::mt19937& rng, unsigned long n, std::size_t picks) {
  const Set ds = divisors(n);
  std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
  Set s;
  for (std::size_t k = 0; k < picks; ++k) s.push_back(ds[pick(rng)]);
  return meet_close(sorted(s));
}

}  // namespace oracle

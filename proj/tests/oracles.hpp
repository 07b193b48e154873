#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the code path it is used to check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "ahdb/core.hpp"
#include "ahdb/int_matrix.hpp"

namespace oracle {

using ahdb::Code;
using Word = std::vector<Code>;

inline bool hopping(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return false;
  }
  return true;
}

/// All k^n words, filtered to the adjacency-hopping ones (lexicographic).
inline std::vector<Word> hopping_words(std::uint32_t k, std::uint32_t n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    if (hopping(w)) out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == k - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

inline Word min_rotation(const Word& s) {
  Word best = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    Word r(s.begin() + static_cast<std::ptrdiff_t>(i), s.end());
    r.insert(r.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
    best = std::min(best, r);
  }
  return best;
}

inline Word cyclic_window(const Word& s, std::size_t i, std::size_t n) {
  Word w;
  for (std::size_t t = 0; t < n; ++t) w.push_back(s[(i + t) % s.size()]);
  return w;
}

/// Every cyclic window is hopping, all windows distinct, and every
/// hopping word of length n occurs.
inline bool is_h_sequence(const Word& s, std::uint32_t k, std::uint32_t n) {
  if (s.size() > 1) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == s[(i + 1) % s.size()]) return false;
    }
  }
  std::vector<Word> windows;
  for (std::size_t i = 0; i < s.size(); ++i) windows.push_back(cyclic_window(s, i, n));
  std::sort(windows.begin(), windows.end());
  return windows == hopping_words(k, n);
}

/// Adjacency by pairwise comparison of all (n-1)-words: u -> v iff the
/// words overlap in n-2 codes and the joined n-word is hopping.
inline std::vector<std::vector<int>> adjacency_by_pairs(std::uint32_t k, std::uint32_t n) {
  const auto vertices = hopping_words(k, n - 1);
  const std::size_t l = vertices.size();
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const Word& u = vertices[i];
      const Word& v = vertices[j];
      if (!std::equal(u.begin() + 1, u.end(), v.begin())) continue;
      Word joined = u;
      joined.push_back(v.back());
      if (hopping(joined)) a[i][j] = 1;
    }
  }
  return a;
}

inline std::vector<std::vector<long long>> multiply(const std::vector<std::vector<long long>>& a,
                                                    const std::vector<std::vector<long long>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

/// Leibniz expansion over all permutations; only for tiny matrices.
inline mpz_class leibniz_det(const ahdb::IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(xI - A) sampled at x = 0..dim and interpolated (Newton form over
/// the rationals), with `det` supplied by the caller.
template <typename Det>
std::vector<mpz_class> charpoly_by_interpolation(const ahdb::IntMatrix& a, Det det) {
  const std::size_t n = a.dim();
  std::vector<mpq_class> xs(n + 1), coef(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    ahdb::IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? mpz_class(t) : mpz_class(0)) - a(i, j);
    xs[t] = t;
    coef[t] = det(m);
  }
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t t = n; t >= level; --t)
      coef[t] = (coef[t] - coef[t - 1]) / (xs[t] - xs[t - level]);
  // Expand Newton form into monomial coefficients.
  std::vector<mpq_class> poly{coef[n]};
  for (std::size_t t = n; t-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[t];
    }
    next[0] += coef[t];
    poly = std::move(next);
  }
  std::vector<mpz_class> out;
  for (auto& c : poly) {
    c.canonicalize();
    out.push_back(c.get_num());
  }
  return out;
}

/// Linear-scan matcher over cyclic or linear windows.
inline std::optional<std::size_t> scan(const Word& s, const Word& w, bool cyclic) {
  const std::size_t starts = cyclic ? s.size() : (s.size() >= w.size() ? s.size() - w.size() + 1 : 0);
  for (std::size_t i = 0; i < starts; ++i) {
    bool match = true;
    for (std::size_t t = 0; t < w.size() && match; ++t) match = s[(i + t) % s.size()] == w[t];
    if (match) return i;
  }
  return std::nullopt;
}

}  // namespace oracle

#include "ahdb/enumerate.hpp"

#include <cmath>
#include <climits>
#include <cstdint>

#include "ahdb/error.hpp"

namespace ahdb {

namespace {

constexpr double kMaxCountBits = 1e8;

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class power(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

unsigned long checked_vertex_count(Parameters params) {
  const std::uint64_t ell = params.vertex_count();
  const double bits = static_cast<double>(ell) * std::lgamma(params.k()) / std::log(2.0);
  if (bits > kMaxCountBits || ell > ULONG_MAX) {
    throw Error(ErrorKind::SizeLimit, "count for k=" + std::to_string(params.k()) +
                                          ", n=" + std::to_string(params.n()) +
                                          " is too large to evaluate exactly");
  }
  return static_cast<unsigned long>(ell);
}

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(ErrorKind::IntegralityViolation, "closed-form count is not an integer");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

mpz_class count_closed_form(Parameters params) {
  params.require_feasible();
  const unsigned long k = params.k();
  if (params.n() == 1) return factorial(k - 1);
  const unsigned long ell = checked_vertex_count(params);
  const mpz_class num = power(k, k - 2) * power(factorial(k - 1), ell);
  const mpz_class den = power(k - 1, k - 2 + params.n());
  return exact_quotient(num, den);
}

mpz_class count_closed_form_unsimplified(Parameters params) {
  if (params.k() < 2 || params.n() < 2) {
    throw Error(ErrorKind::InfeasibleParameters, "unsimplified form needs k >= 2 and n >= 2");
  }
  const unsigned long k = params.k();
  const unsigned long ell = checked_vertex_count(params);
  const mpz_class num = power(k, k - 1) * power(factorial(k - 1), ell);
  const mpz_class den = mpz_class(ell) * power(k - 1, k);
  return exact_quotient(num, den);
}

IntMatrix laplacian(const CorrespondingGraph& g) {
  IntMatrix l(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.from == e.to) continue;
    l(e.from, e.from) += 1;
    l(e.from, e.to) -= 1;
  }
  return l;
}

mpz_class count_best_theorem(const CorrespondingGraph& g) {
  const IntMatrix l = laplacian(g);
  const std::size_t last = l.dim() - 1;
  mpz_class count = bareiss_determinant(l.minor_matrix(last, last));
  std::vector<unsigned long> out_degree(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) ++out_degree[e.from];
  for (unsigned long d : out_degree) count *= factorial(d == 0 ? 0 : d - 1);
  return count;
}

// ------------------------------------------------------ characteristic poly

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

u64 add_mod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

// Deterministic Miller-Rabin; these bases are exact for n < 3.3e24.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> charpoly_mod(const IntMatrix& a, u64 p) {
  const std::size_t n = a.dim();
  std::vector<u64> h(n * n);
  mpz_class residue;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_fdiv_r_ui(residue.get_mpz_t(), a(i, j).get_mpz_t(), p);
      h[i * n + j] = residue.get_ui();
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && at(pivot, m - 1) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, pivot), at(i, m));
    }
    const u64 inv = pow_mod(at(m, m - 1), p - 2, p);
    for (std::size_t r = m + 1; r < n; ++r) {
      const u64 u = mul_mod(at(r, m - 1), inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) at(r, j) = sub_mod(at(r, j), mul_mod(u, at(m, j), p), p);
      for (std::size_t i = 0; i < n; ++i) at(i, m) = add_mod(at(i, m), mul_mod(u, at(i, r), p), p);
    }
  }

  // polys[m] = characteristic polynomial of the leading m x m block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> next(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 diag = at(m - 1, m - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = add_mod(next[d + 1], prev[d], p);
      next[d] = sub_mod(next[d], mul_mod(diag, prev[d], p), p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, at(m - i, m - i - 1), p);
      const u64 factor = mul_mod(t, at(m - i - 1, m - 1), p);
      if (factor == 0) continue;
      const auto& lower = polys[m - i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) {
        next[d] = sub_mod(next[d], mul_mod(factor, lower[d], p), p);
      }
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

}  // namespace

IntPolynomial characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.dim();
  if (n > kCharPolyLimit) {
    throw Error(ErrorKind::SizeLimit, "characteristic polynomial limited to dimension " +
                                          std::to_string(kCharPolyLimit));
  }
  if (n == 0) return {1};

  // Each coefficient is a signed sum of principal minors; Hadamard bounds a
  // minor by the product of its row norms, so |c| <= prod(1 + |row_i|).
  mpz_class bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class norm_sq = 0;
    for (std::size_t j = 0; j < n; ++j) norm_sq += a(i, j) * a(i, j);
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
    bound *= norm + 2;  // ceil(sqrt) + 1
  }
  const mpz_class needed = 2 * bound + 1;

  IntPolynomial result(n + 1, 0);
  mpz_class modulus = 1;
  u64 candidate = (u64{1} << 62) - 1;
  while (modulus < needed) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    const u64 p = candidate;
    candidate -= 2;
    const std::vector<u64> residues = charpoly_mod(a, p);
    // Garner step: x = x + M * ((r - x) * M^{-1} mod p).
    mpz_class m_mod_p;
    mpz_fdiv_r_ui(m_mod_p.get_mpz_t(), modulus.get_mpz_t(), p);
    const u64 m_inv = pow_mod(m_mod_p.get_ui(), p - 2, p);
    mpz_class x_mod_p;
    for (std::size_t d = 0; d <= n; ++d) {
      mpz_fdiv_r_ui(x_mod_p.get_mpz_t(), result[d].get_mpz_t(), p);
      const u64 delta = mul_mod(sub_mod(residues[d], x_mod_p.get_ui(), p), m_inv, p);
      mpz_class step = modulus;
      step *= static_cast<unsigned long>(delta);
      result[d] += step;
    }
    modulus *= static_cast<unsigned long>(p);
  }
  const mpz_class half = modulus / 2;
  for (auto& c : result) {
    if (c > half) c -= modulus;
  }
  return result;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPolynomial expected_spectrum_polynomial(Parameters params) {
  if (params.k() < 2 || params.n() < 2) {
    throw Error(ErrorKind::InfeasibleParameters, "spectrum is defined for k >= 2 and n >= 2");
  }
  const std::uint32_t k = params.k();
  const std::uint64_t ell = params.vertex_count();
  IntPolynomial p(ell - k + 1, 0);
  p.back() = 1;
  for (std::uint32_t i = 0; i + 1 < k; ++i) p = multiply(p, {1, 1});
  return multiply(p, {-mpz_class(k - 1), 1});
}

CountReport count_all_methods(Parameters params, bool enable_brute, CountLimits limits) {
  CountReport report;
  report.closed_form = count_closed_form(params);
  if (params.k() >= 2 && params.n() >= 2) {
    const std::uint64_t vertices = params.vertex_count();
    const std::uint64_t edges = params.sequence_length();
    const bool best_ok = vertices <= limits.best_vertex_limit;
    const bool brute_ok = enable_brute && edges <= limits.brute_force_edge_limit;
    if (best_ok || brute_ok) {
      const CorrespondingGraph g(params);
      if (best_ok) report.best_theorem = count_best_theorem(g);
      if (brute_ok) report.brute_force = enumerate_tours(g, 0, limits.brute_force_edge_limit);
    }
  }
  report.methods_agree = (!report.best_theorem || *report.best_theorem == report.closed_form) &&
                         (!report.brute_force || *report.brute_force == report.closed_form);
  return report;
}

}  // namespace ahdb

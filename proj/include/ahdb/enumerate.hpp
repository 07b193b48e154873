#pragma once

// Exact counts of adjacency-hopping de Bruijn sequences.
//
// Three independent routes are provided: the closed form, the BEST theorem
// evaluated through a Matrix-Tree cofactor of the Laplacian, and brute-force
// tour enumeration (see euler.hpp). The spectrum of the adjacency matrix is
// checked separately through its exact characteristic polynomial.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "ahdb/core.hpp"
#include "ahdb/euler.hpp"
#include "ahdb/graph.hpp"
#include "ahdb/int_matrix.hpp"

namespace ahdb {

/// Integer polynomial, coefficient of x^i at index i.
using IntPolynomial = std::vector<mpz_class>;

/// Largest matrix accepted by characteristic_polynomial.
inline constexpr std::size_t kCharPolyLimit = 200;

/// Number of H(k, n) up to rotation. (k-1)! for n = 1, otherwise
/// k^{k-2} [(k-1)!]^l / (k-1)^{k-2+n} with l = k(k-1)^{n-2}.
///
/// Throws NonexistentSequence for k = 1, n > 1, IntegralityViolation if the
/// division is not exact, and SizeLimit if the result would be unreasonably
/// large (over ~10^8 bits).
mpz_class count_closed_form(Parameters params);

/// The same count evaluated in the unsimplified form
/// k^{k-1} [(k-1)!]^l / (l (k-1)^k). Requires k >= 2, n >= 2.
mpz_class count_closed_form_unsimplified(Parameters params);

/// L(u,u) = outdeg(u) - loops(u), L(u,v) = -(edges u->v). For G_k^n this
/// is (k-1)I - A.
IntMatrix laplacian(const CorrespondingGraph& g);

/// Eulerian tours with a fixed first edge: a principal cofactor of the
/// Laplacian times the product of (outdeg(u) - 1)! over all vertices.
/// Throws SizeLimit above kDenseMatrixLimit vertices.
mpz_class count_best_theorem(const CorrespondingGraph& g);

/// Exact det(xI - A). Computed modulo enough 62-bit primes to exceed twice
/// the Hadamard-type coefficient bound prod(1 + |row_i|), then recombined
/// by CRT. Throws SizeLimit above kCharPolyLimit.
IntPolynomial characteristic_polynomial(const IntMatrix& a);

/// x^{l-k} (x+1)^{k-1} (x-(k-1)) expanded, l = k(k-1)^{n-2}.
IntPolynomial expected_spectrum_polynomial(Parameters params);

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

struct CountReport {
  mpz_class closed_form;
  std::optional<mpz_class> best_theorem;
  std::optional<mpz_class> brute_force;
  bool methods_agree = false;
};

struct CountLimits {
  std::size_t best_vertex_limit = kDenseMatrixLimit;
  std::size_t brute_force_edge_limit = kDefaultBruteForceEdgeLimit;
};

/// Closed form always; BEST when k, n >= 2 and the vertex count is within
/// limits; brute force when enabled and the edge count is within limits.
CountReport count_all_methods(Parameters params, bool enable_brute,
                              CountLimits limits = {});

}  // namespace ahdb

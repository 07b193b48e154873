#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ahdb/core.hpp"
#include "ahdb/euler.hpp"
#include "ahdb/graph.hpp"

namespace ahdb {

/// Emitted codes along `tour`, in tour order (not rotated).
CyclicSequence tour_to_sequence(const EulerianTour& tour, const CorrespondingGraph& g);

/// An H(k, n) in canonical rotation.
///
/// n >= 2, k >= 2: Hierholzer tour on G_k^n (seeded if `seed` is given).
/// n == 1: the identity permutation, or with a seed a shuffle that keeps
/// code 0 first. Throws NonexistentSequence for k == 1, n > 1.
CyclicSequence generate(Parameters params, std::optional<std::uint64_t> seed = std::nullopt);

struct WindowCoverage {
  std::uint64_t covered = 0;   // distinct valid words seen
  std::uint64_t expected = 0;  // k(k-1)^{n-1}
  std::vector<std::vector<Code>> duplicates;
  std::vector<std::vector<Code>> missing;
};

struct ValidationReport {
  bool is_adjacency_hopping = false;
  WindowCoverage window_coverage;
  bool length_ok = false;
  bool verdict = false;
};

/// Checks cyclic adjacency hopping, exact once-only coverage of every
/// adjacency-hopping length-n word, and the length k(k-1)^{n-1}. All three
/// are evaluated independently.
///
/// Throws CodeOutOfRange if a code is >= k and NonexistentSequence for
/// infeasible parameters.
ValidationReport validate(const CyclicSequence& s, Parameters params);

/// The first `length` codes of `s` as a linear sequence. Throws
/// InvalidLength unless n <= length <= |s|.
LinearSequence truncate(const CyclicSequence& s, std::size_t length, Parameters params);

}  // namespace ahdb

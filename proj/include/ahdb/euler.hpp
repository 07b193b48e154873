#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "ahdb/graph.hpp"

namespace ahdb {

/// SplitMix64 (Steele, Lea and Flood, 2014). Pinned so that seeded tours
/// are identical on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound), bound > 0, by rejection of the biased
  /// low range.
  std::uint64_t bounded(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

struct EulerianTour {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  friend bool operator==(const EulerianTour&, const EulerianTour&) = default;
};

/// Closed Eulerian tour from vertex 0 by Hierholzer's algorithm. Sub-tours
/// are spliced in at the earliest tour position whose vertex still has
/// unused outgoing edges.
///
/// Without a seed the smallest emitted code is taken first. With a seed each
/// step picks uniformly among the unused outgoing edges using SplitMix64.
EulerianTour hierholzer_tour(const CorrespondingGraph& g,
                             std::optional<std::uint64_t> seed = std::nullopt);

/// Checks every EulerianTour invariant against `g`.
bool is_eulerian_tour(const CorrespondingGraph& g, const EulerianTour& tour);

inline constexpr std::size_t kDefaultBruteForceEdgeLimit = 16;

/// Exact number of Eulerian tours whose first edge is `first_edge`, by
/// exhaustive backtracking. Throws SizeLimit if the graph has more than
/// `edge_limit` edges.
mpz_class enumerate_tours(const CorrespondingGraph& g, EdgeId first_edge,
                          std::size_t edge_limit = kDefaultBruteForceEdgeLimit);

}  // namespace ahdb

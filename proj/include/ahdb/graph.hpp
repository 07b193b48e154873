#pragma once

// The corresponding graph G_k^n: vertices are the adjacency-hopping words of
// length n-1, and an edge joins u to v when the last n-2 codes of u are the
// first n-2 codes of v (and the joined length-n word is adjacency-hopping).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ahdb/core.hpp"
#include "ahdb/int_matrix.hpp"

namespace ahdb {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Graphs with more edges than this are refused with SizeLimit.
inline constexpr std::uint64_t kGraphEdgeLimit = std::uint64_t{1} << 24;

struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  /// Last code of `to`; the symbol this edge contributes to a sequence.
  Code emitted = 0;
};

class CorrespondingGraph {
 public:
  /// Throws InfeasibleParameters unless k >= 2 and n >= 2, SizeLimit above
  /// kGraphEdgeLimit.
  explicit CorrespondingGraph(Parameters params);

  const Parameters& params() const noexcept { return params_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Vertex word, length n-1. Vertices are in lexicographic word order.
  std::span<const Code> vertex(VertexId v) const {
    return {words_.data() + v * word_length_, word_length_};
  }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Outgoing edges of `v`, ordered by emitted code. Their ordinals are
  /// v*(k-1) .. v*(k-1) + k-2.
  std::span<const Edge> out_edges(VertexId v) const {
    return {edges_.data() + v * out_degree_, out_degree_};
  }
  EdgeId first_out_edge(VertexId v) const noexcept { return v * out_degree_; }
  std::size_t out_degree() const noexcept { return out_degree_; }

  /// Ordinal of the vertex with word `word`, computed by lexicographic rank.
  std::optional<VertexId> index_of(std::span<const Code> word) const;

  /// Ordinal of the edge u -> v, if any.
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

 private:
  Parameters params_;
  std::size_t word_length_;
  std::size_t vertex_count_;
  std::size_t out_degree_;
  std::vector<Code> words_;
  std::vector<Edge> edges_;
};

/// Builds G_k^n. Same contract as the CorrespondingGraph constructor.
CorrespondingGraph build_graph(Parameters params);

/// 0/1 adjacency matrix indexed by vertex ordinal. SizeLimit above
/// kDenseMatrixLimit vertices.
IntMatrix adjacency_matrix(const CorrespondingGraph& g);

/// Checks A^{n-1} + A^{n-2} == J (all ones) in exact integer arithmetic.
bool verify_power_identity(const CorrespondingGraph& g);

struct GraphReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t min_in_degree = 0;
  std::size_t max_in_degree = 0;
  std::size_t min_out_degree = 0;
  std::size_t max_out_degree = 0;
  std::size_t loops = 0;
  std::size_t parallel_edges = 0;
  bool strongly_connected = false;
  /// Absent when the graph is too large for the dense check.
  std::optional<bool> power_identity;
};

/// Structural report. Degrees, loops and connectivity are measured on the
/// constructed graph, not derived from formulas.
GraphReport graph_report(const CorrespondingGraph& g);

}  // namespace ahdb

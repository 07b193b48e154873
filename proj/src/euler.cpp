#include "ahdb/euler.hpp"

#include <list>

#include "ahdb/error.hpp"

namespace ahdb {

namespace {

// Hands out the unused outgoing edges of each vertex.
class EdgeSupply {
 public:
  EdgeSupply(const CorrespondingGraph& g, std::optional<std::uint64_t> seed)
      : g_(g), taken_(g.vertex_count(), 0) {
    if (seed) {
      rng_.emplace(*seed);
      remaining_.resize(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t j = 0; j < g.out_degree(); ++j) {
          remaining_[v].push_back(g.first_out_edge(v) + j);
        }
      }
    }
  }

  bool has_unused(VertexId v) const { return taken_[v] < g_.out_degree(); }

  EdgeId take(VertexId v) {
    if (!rng_) return g_.first_out_edge(v) + taken_[v]++;
    auto& pool = remaining_[v];
    const auto pick = static_cast<std::size_t>(rng_->bounded(pool.size()));
    const EdgeId e = pool[pick];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    ++taken_[v];
    return e;
  }

 private:
  const CorrespondingGraph& g_;
  std::vector<std::size_t> taken_;
  std::optional<SplitMix64> rng_;
  std::vector<std::vector<EdgeId>> remaining_;
};

std::list<EdgeId> greedy_walk(const CorrespondingGraph& g, EdgeSupply& supply, VertexId v) {
  std::list<EdgeId> walk;
  while (supply.has_unused(v)) {
    const EdgeId e = supply.take(v);
    walk.push_back(e);
    v = g.edge(e).to;
  }
  return walk;
}

}  // namespace

EulerianTour hierholzer_tour(const CorrespondingGraph& g, std::optional<std::uint64_t> seed) {
  EdgeSupply supply(g, seed);
  std::list<EdgeId> tour = greedy_walk(g, supply, 0);
  for (auto it = tour.begin(); it != tour.end(); ++it) {
    const VertexId v = g.edge(*it).from;
    if (!supply.has_unused(v)) continue;
    std::list<EdgeId> sub = greedy_walk(g, supply, v);
    const auto first = sub.begin();
    tour.splice(it, sub);
    it = first;
  }
  return EulerianTour{0, std::vector<EdgeId>(tour.begin(), tour.end())};
}

bool is_eulerian_tour(const CorrespondingGraph& g, const EulerianTour& tour) {
  const auto& edges = tour.edges;
  if (edges.size() != g.edge_count() || edges.empty()) return false;
  std::vector<bool> seen(g.edge_count(), false);
  for (EdgeId e : edges) {
    if (e >= g.edge_count() || seen[e]) return false;
    seen[e] = true;
  }
  if (g.edge(edges.front()).from != tour.start) return false;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.edge(edges[i]).to != g.edge(edges[i + 1]).from) return false;
  }
  return g.edge(edges.back()).to == tour.start;
}

namespace {

class TourCounter {
 public:
  TourCounter(const CorrespondingGraph& g, VertexId home)
      : g_(g), home_(home), used_(g.edge_count(), false) {}

  void use(EdgeId e) { used_[e] = true; }

  std::uint64_t count(VertexId at, std::size_t remaining) {
    if (remaining == 0) return at == home_ ? 1 : 0;
    std::uint64_t total = 0;
    const EdgeId base = g_.first_out_edge(at);
    for (std::size_t j = 0; j < g_.out_degree(); ++j) {
      const EdgeId e = base + j;
      if (used_[e]) continue;
      used_[e] = true;
      total += count(g_.edge(e).to, remaining - 1);
      used_[e] = false;
    }
    return total;
  }

 private:
  const CorrespondingGraph& g_;
  VertexId home_;
  std::vector<bool> used_;
};

}  // namespace

mpz_class enumerate_tours(const CorrespondingGraph& g, EdgeId first_edge,
                          std::size_t edge_limit) {
  if (g.edge_count() > edge_limit) {
    throw Error(ErrorKind::SizeLimit,
                "brute-force enumeration over " + std::to_string(g.edge_count()) +
                    " edges exceeds the cap of " + std::to_string(edge_limit));
  }
  if (first_edge >= g.edge_count()) {
    throw Error(ErrorKind::InvalidParameters, "first edge ordinal out of range");
  }
  const Edge& first = g.edge(first_edge);
  TourCounter counter(g, first.from);
  counter.use(first_edge);
  const std::uint64_t n = counter.count(first.to, g.edge_count() - 1);
  return mpz_class(static_cast<unsigned long>(n));
}

}  // namespace ahdb

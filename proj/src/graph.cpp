#include "ahdb/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ahdb/error.hpp"

namespace ahdb {

namespace {

void unrank_word(std::uint64_t rank, std::uint32_t k, std::span<Code> out) {
  // Mixed radix: first digit base k, the rest base k-1 relative to the
  // previous code (a code equal to or above the previous one is shifted up).
  const std::size_t m = out.size();
  std::vector<std::uint32_t> digits(m);
  for (std::size_t i = m; i-- > 1;) {
    digits[i] = static_cast<std::uint32_t>(rank % (k - 1));
    rank /= k - 1;
  }
  digits[0] = static_cast<std::uint32_t>(rank);
  out[0] = digits[0];
  for (std::size_t i = 1; i < m; ++i) {
    out[i] = digits[i] >= out[i - 1] ? digits[i] + 1 : digits[i];
  }
}

}  // namespace

CorrespondingGraph::CorrespondingGraph(Parameters params)
    : params_(params),
      word_length_(params.n() - 1),
      vertex_count_(0),
      out_degree_(params.k() - 1) {
  if (params.k() < 2 || params.n() < 2) {
    std::ostringstream msg;
    msg << "the corresponding graph needs k >= 2 and n >= 2 (got k=" << params.k()
        << ", n=" << params.n() << ")";
    throw Error(ErrorKind::InfeasibleParameters, msg.str());
  }
  const std::uint64_t edge_total = params.sequence_length();
  if (edge_total > kGraphEdgeLimit) {
    throw Error(ErrorKind::SizeLimit, "graph with " + std::to_string(edge_total) +
                                          " edges exceeds the limit of " +
                                          std::to_string(kGraphEdgeLimit));
  }
  vertex_count_ = params.vertex_count();
  const std::uint32_t k = params.k();

  words_.resize(vertex_count_ * word_length_);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    unrank_word(v, k, {words_.data() + v * word_length_, word_length_});
  }

  edges_.reserve(edge_total);
  std::vector<Code> next(word_length_);
  for (VertexId u = 0; u < vertex_count_; ++u) {
    const auto word = vertex(u);
    std::copy(word.begin() + 1, word.end(), next.begin());
    for (Code c = 0; c < k; ++c) {
      if (c == word.back()) continue;
      next.back() = c;
      edges_.push_back(Edge{u, *index_of(next), c});
    }
  }
}

std::optional<VertexId> CorrespondingGraph::index_of(std::span<const Code> word) const {
  if (word.size() != word_length_) return std::nullopt;
  const std::uint32_t k = params_.k();
  if (word[0] >= k) return std::nullopt;
  std::uint64_t rank = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] >= k || word[i] == word[i - 1]) return std::nullopt;
    const std::uint32_t digit = word[i] > word[i - 1] ? word[i] - 1 : word[i];
    rank = rank * (k - 1) + digit;
  }
  return static_cast<VertexId>(rank);
}

std::optional<EdgeId> CorrespondingGraph::edge_between(VertexId u, VertexId v) const {
  const auto out = out_edges(u);
  auto it = std::find_if(out.begin(), out.end(), [v](const Edge& e) { return e.to == v; });
  if (it == out.end()) return std::nullopt;
  return first_out_edge(u) + static_cast<EdgeId>(it - out.begin());
}

CorrespondingGraph build_graph(Parameters params) { return CorrespondingGraph(params); }

IntMatrix adjacency_matrix(const CorrespondingGraph& g) {
  IntMatrix a(g.vertex_count());
  for (const Edge& e : g.edges()) a(e.from, e.to) += 1;
  return a;
}

bool verify_power_identity(const CorrespondingGraph& g) {
  const IntMatrix a = adjacency_matrix(g);
  const std::size_t dim = a.dim();
  // power = A^{n-2}, starting from A^0 = I.
  IntMatrix power = IntMatrix::identity(dim);
  for (std::uint32_t i = 0; i + 2 < g.params().n(); ++i) power = a * power;
  const IntMatrix sum = a * power + power;
  return sum == IntMatrix::all_ones(dim);
}

namespace {

std::size_t reachable_count(std::size_t vertices,
                            const std::vector<std::vector<VertexId>>& adjacency) {
  std::vector<bool> seen(vertices, false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

GraphReport graph_report(const CorrespondingGraph& g) {
  GraphReport r;
  const std::size_t nv = g.vertex_count();
  r.vertices = nv;
  r.edges = g.edge_count();

  std::vector<std::size_t> in(nv, 0), out(nv, 0);
  std::vector<std::vector<VertexId>> forward(nv), reverse(nv);
  for (const Edge& e : g.edges()) {
    ++out[e.from];
    ++in[e.to];
    if (e.from == e.to) ++r.loops;
    forward[e.from].push_back(e.to);
    reverse[e.to].push_back(e.from);
  }
  for (auto& targets : forward) {
    std::sort(targets.begin(), targets.end());
    const auto last = std::unique(targets.begin(), targets.end());
    r.parallel_edges += static_cast<std::size_t>(targets.end() - last);
    targets.erase(last, targets.end());
  }
  const auto [min_in, max_in] = std::minmax_element(in.begin(), in.end());
  const auto [min_out, max_out] = std::minmax_element(out.begin(), out.end());
  r.min_in_degree = *min_in;
  r.max_in_degree = *max_in;
  r.min_out_degree = *min_out;
  r.max_out_degree = *max_out;
  r.strongly_connected =
      reachable_count(nv, forward) == nv && reachable_count(nv, reverse) == nv;
  if (nv <= kDenseMatrixLimit) r.power_identity = verify_power_identity(g);
  return r;
}

}  // namespace ahdb

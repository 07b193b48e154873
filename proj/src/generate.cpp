#include "ahdb/generate.hpp"

#include <map>
#include <numeric>

#include "ahdb/error.hpp"

namespace ahdb {

CyclicSequence tour_to_sequence(const EulerianTour& tour, const CorrespondingGraph& g) {
  std::vector<Code> codes;
  codes.reserve(tour.edges.size());
  for (EdgeId e : tour.edges) codes.push_back(g.edge(e).emitted);
  return CyclicSequence(std::move(codes));
}

CyclicSequence generate(Parameters params, std::optional<std::uint64_t> seed) {
  params.require_feasible();
  if (params.n() == 1) {
    std::vector<Code> codes(params.k());
    std::iota(codes.begin(), codes.end(), Code{0});
    if (seed) {
      // Fisher-Yates over positions 1..k-1; code 0 stays first.
      SplitMix64 rng(*seed);
      for (std::size_t i = codes.size(); i-- > 2;) {
        const auto j = 1 + static_cast<std::size_t>(rng.bounded(i));
        std::swap(codes[i], codes[j]);
      }
    }
    return CyclicSequence(std::move(codes));
  }
  const CorrespondingGraph g(params);
  return canonical_rotation(tour_to_sequence(hierholzer_tour(g, seed), g));
}

namespace {

// Every adjacency-hopping word of length n in lexicographic order.
std::vector<std::vector<Code>> all_hopping_words(std::uint32_t k, std::uint32_t n) {
  std::vector<std::vector<Code>> out;
  std::vector<Code> word;
  auto extend = [&](auto&& self) -> void {
    if (word.size() == n) {
      out.push_back(word);
      return;
    }
    for (Code c = 0; c < k; ++c) {
      if (!word.empty() && word.back() == c) continue;
      word.push_back(c);
      self(self);
      word.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace

ValidationReport validate(const CyclicSequence& s, Parameters params) {
  params.require_feasible();
  const std::uint32_t k = params.k();
  const std::uint32_t n = params.n();
  for (Code c : s.codes()) {
    if (c >= k) {
      throw Error(ErrorKind::CodeOutOfRange,
                  "code " + std::to_string(c) + " is not below k=" + std::to_string(k));
    }
  }

  ValidationReport report;
  const std::size_t q = s.size();
  report.is_adjacency_hopping = true;
  if (q > 1) {
    for (std::size_t i = 0; i < q; ++i) {
      if (s[i] == s[i + 1]) {
        report.is_adjacency_hopping = false;
        break;
      }
    }
  }

  const std::uint64_t expected = params.sequence_length();
  report.length_ok = q == expected;

  std::map<std::vector<Code>, std::size_t> seen;
  for (std::size_t i = 0; i < q; ++i) ++seen[window(s, i, n)];

  auto& cov = report.window_coverage;
  cov.expected = expected;
  for (const auto& [word, count] : seen) {
    if (!is_adjacency_hopping_word(word)) continue;
    ++cov.covered;
    if (count > 1) cov.duplicates.push_back(word);
  }
  if (cov.covered < expected) {
    for (auto& word : all_hopping_words(k, n)) {
      if (!seen.contains(word)) cov.missing.push_back(std::move(word));
    }
  }

  report.verdict = report.is_adjacency_hopping && cov.duplicates.empty() &&
                   cov.missing.empty() && report.length_ok;
  return report;
}

LinearSequence truncate(const CyclicSequence& s, std::size_t length, Parameters params) {
  if (length < params.n() || length > s.size()) {
    throw Error(ErrorKind::InvalidLength,
                "truncation length " + std::to_string(length) + " must lie in [" +
                    std::to_string(params.n()) + ", " + std::to_string(s.size()) + "]");
  }
  const auto codes = s.codes();
  return LinearSequence(std::vector<Code>(codes.begin(), codes.begin() +
                                                             static_cast<std::ptrdiff_t>(length)));
}

}  // namespace ahdb

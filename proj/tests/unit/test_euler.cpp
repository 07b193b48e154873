#include <doctest.h>

#include <set>

#include "ahdb/error.hpp"
#include "ahdb/euler.hpp"

using namespace ahdb;

namespace {

// Counts closed tours with fixed first edge by trying every ordering of the
// remaining edges. Only for graphs with a handful of edges.
std::uint64_t count_by_permutation(const CorrespondingGraph& g, EdgeId first) {
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != first) rest.push_back(e);
  std::uint64_t count = 0;
  do {
    EulerianTour t{g.edge(first).from, {first}};
    t.edges.insert(t.edges.end(), rest.begin(), rest.end());
    if (is_eulerian_tour(g, t)) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

}  // namespace

TEST_SUITE("euler") {

TEST_CASE("splitmix64 reference stream") {
  // First outputs for seed 0 of the reference SplitMix64 implementation.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  SplitMix64 bounded(7);
  for (int i = 0; i < 1000; ++i) CHECK(bounded.bounded(5) < 5);
}

TEST_CASE("deterministic tours") {
  const CorrespondingGraph g22(Parameters(2, 2));
  const EulerianTour t22 = hierholzer_tour(g22);
  CHECK(t22.edges == std::vector<EdgeId>{0, 1});
  CHECK(is_eulerian_tour(g22, t22));

  const CorrespondingGraph g32(Parameters(3, 2));
  const EulerianTour t32 = hierholzer_tour(g32);
  CHECK(t32.edges.size() == 6);
  CHECK(is_eulerian_tour(g32, t32));
  CHECK(hierholzer_tour(g32) == t32);

  const CorrespondingGraph g33(Parameters(3, 3));
  const EulerianTour t33 = hierholzer_tour(g33);
  CHECK(t33.edges.size() == 12);
  CHECK(is_eulerian_tour(g33, t33));
}

TEST_CASE("tours are valid across the grid, seeded and unseeded") {
  for (std::uint32_t k = 2; k <= 7; ++k) {
    for (std::uint32_t n = 2; n <= 5; ++n) {
      const Parameters p(k, n);
      if (p.sequence_length() > 20000) continue;
      const CorrespondingGraph g(p);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(is_eulerian_tour(g, hierholzer_tour(g)));
      for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        const EulerianTour t = hierholzer_tour(g, seed);
        CHECK(is_eulerian_tour(g, t));
        CHECK(hierholzer_tour(g, seed) == t);
      }
    }
  }
}

TEST_CASE("seeds produce distinct tours when several exist") {
  const CorrespondingGraph g(Parameters(3, 3));
  std::set<std::vector<EdgeId>> distinct;
  for (std::uint64_t seed = 0; seed < 64; ++seed) distinct.insert(hierholzer_tour(g, seed).edges);
  CHECK(distinct.size() >= 2);

  const CorrespondingGraph g2(Parameters(2, 4));
  std::set<std::vector<EdgeId>> only;
  for (std::uint64_t seed = 0; seed < 16; ++seed) only.insert(hierholzer_tour(g2, seed).edges);
  CHECK(only.size() == 1);
}

TEST_CASE("tour validator rejects broken tours") {
  const CorrespondingGraph g(Parameters(3, 2));
  EulerianTour t = hierholzer_tour(g);
  EulerianTour shorter = t;
  shorter.edges.pop_back();
  CHECK_FALSE(is_eulerian_tour(g, shorter));
  EulerianTour repeated = t;
  repeated.edges[1] = repeated.edges[0];
  CHECK_FALSE(is_eulerian_tour(g, repeated));
  EulerianTour swapped = t;
  std::swap(swapped.edges[0], swapped.edges[1]);
  CHECK_FALSE(is_eulerian_tour(g, swapped));
}

TEST_CASE("brute-force enumeration examples") {
  CHECK(enumerate_tours(CorrespondingGraph(Parameters(2, 2)), 0) == 1);
  const CorrespondingGraph g32(Parameters(3, 2));
  const CorrespondingGraph g33(Parameters(3, 3));
  for (EdgeId e = 0; e < g32.edge_count(); ++e) CHECK(enumerate_tours(g32, e) == 3);
  for (EdgeId e = 0; e < g33.edge_count(); ++e) CHECK(enumerate_tours(g33, e) == 12);
  CHECK(enumerate_tours(CorrespondingGraph(Parameters(4, 2)), 5) == 256);
}

TEST_CASE("brute force agrees with edge permutations") {
  for (auto [k, n] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    const CorrespondingGraph g(Parameters(k, n));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(enumerate_tours(g, e) == count_by_permutation(g, e));
    }
  }
}

TEST_CASE("brute-force cap") {
  const CorrespondingGraph g52(Parameters(5, 2));
  try {
    enumerate_tours(g52, 0);
    FAIL("expected SizeLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
  // Value frozen from an independent brute-force count.
  CHECK(enumerate_tours(g52, 0, 20) == 972000);
}

}  // TEST_SUITE

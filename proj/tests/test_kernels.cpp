#include <doctest.h>

#include "linclon/kernels.hpp"
#include "oracles.hpp"

using namespace linclon;

TEST_CASE("substitution tuples are enumerated once each") {
  const ProductRing K = prime_ring({2, 3});
  const std::uint64_t count = kernels::substitution_count(K, 1, 2);
  CHECK(count == 4 * 9);
  std::set<std::vector<std::vector<std::uint32_t>>> seen;
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<std::vector<std::uint32_t>> key;
    for (const auto& m : kernels::substitution_at(K, 1, 2, t)) key.push_back(m.entries);
    seen.insert(key);
  }
  CHECK(seen.size() == count);
}

TEST_CASE("serial and OpenMP kernels return identical results") {
  std::mt19937_64 rng(5);
  const ProductRing K = prime_ring({3}), F = prime_ring({2, 5});
  for (int t = 0; t < 5; ++t) {
    const std::vector<FiniteFunction> gens{oracle::random_function(K, F, 2, rng)};
    for (unsigned k = 1; k <= 3; ++k)
      CHECK(kernels::substitution_span_serial(K, F, gens, k) == kernels::substitution_span_omp(K, F, gens, k));
  }
  for (const auto& [p, K2] : {std::pair{2u, prime_ring({3})}, {2u, prime_ring({5})}, {3u, prime_ring({5})},
                              {3u, prime_ring({2, 5})}, {5u, prime_ring({2, 3})}}) {
    CHECK(kernels::cyclic_spans_serial(K2, p) == kernels::cyclic_spans_omp(K2, p));
    if (oracle::ipow(p, static_cast<unsigned>(K2.order())) <= 4096)
      CHECK(kernels::invariant_subspaces_serial(K2, p) == kernels::invariant_subspaces_omp(K2, p));
  }
}

TEST_CASE("invariant subspaces match the set-based search") {
  for (const auto& [p, q] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 5u}, {5u, 3u}}) {
    const ProductRing K = prime_ring({q});
    const auto expect = oracle::invariant_subspaces(K, p);
    std::set<oracle::MemberSet> got;
    for (const auto& b : kernels::invariant_subspaces_serial(K, p)) {
      CHECK(kernels::is_invariant(K, b));
      got.insert(oracle::members(b));
    }
    CHECK(got == expect);
    CHECK(got.size() == oracle::submodule_counts().at({p, q}));
  }
}

TEST_CASE("orbit span is the smallest invariant subspace holding v") {
  const ProductRing K = prime_ring({5});
  const std::uint32_t p = 2;
  const auto invariant = oracle::invariant_subspaces(K, p);
  for (oracle::VecIndex v = 1; v < 32; ++v) {
    const auto vec = oracle::vec_at(v, p, 5);
    const auto span = oracle::members(kernels::orbit_span(K, p, vec));
    const oracle::MemberSet* best = nullptr;
    for (const auto& S : invariant)
      if (std::binary_search(S.begin(), S.end(), v) && (!best || S.size() < best->size())) best = &S;
    REQUIRE(best != nullptr);
    CHECK(span == *best);
  }
}

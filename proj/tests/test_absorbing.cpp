#include <doctest.h>

#include <map>

#include "oracles.hpp"

using namespace linclon;

namespace {

std::vector<FiniteFunction> all_functions(const ProductRing& K, const ProductRing& F, unsigned n) {
  const std::uint32_t q = F.factor(0).q();
  const std::uint64_t N = oracle::ipow(K.order(), n);
  std::vector<FiniteFunction> out;
  for (std::uint64_t code = 0; code < oracle::ipow(q, static_cast<unsigned>(N)); ++code) {
    FiniteFunction f(K, F, n);
    std::uint64_t c = code;
    for (auto& v : f.component(0)) v = static_cast<std::uint32_t>(c % q), c /= q;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST_CASE("reconstruction, absorption and the two formulas") {
  std::mt19937_64 rng(11);
  for (const auto& [K, F] : {std::pair{prime_ring({3}), prime_ring({2})}, {prime_ring({2, 3}), prime_ring({5})},
                             {prime_ring({2, 3, 5}), prime_ring({7, 11})}}) {
    for (unsigned n = 1; n <= 2; ++n)
      for (int t = 0; t < 5; ++t) {
        const auto f = oracle::random_function(K, F, n, rng);
        const auto parts = decompose(f);
        CHECK(parts.size() == (std::size_t{1} << K.factor_count()));
        FiniteFunction sum(K, F, n);
        for (const auto& c : parts) {
          CHECK(is_absorbing(c.function, c.subset));
          CHECK(oracle::absorbing(c.function, c.subset));
          CHECK(dep_set(c.function).subset_of(c.subset));
          sum = f_plus(sum, c.function);
        }
        CHECK(sum == f);
        const auto rec = decompose_recursive(f);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          CHECK(rec[i].subset == parts[i].subset);
          CHECK(rec[i].function == parts[i].function);
        }
      }
  }
}

TEST_CASE("is_absorbing agrees with the definition on every small function") {
  const ProductRing K = prime_ring({2, 3}), F = prime_ring({2});
  for (const auto& f : all_functions(K, F, 1))
    for (std::uint32_t bits = 0; bits < 4; ++bits) CHECK(is_absorbing(f, FactorSet(bits)) == oracle::absorbing(f, FactorSet(bits)));
}

TEST_CASE("decomposition is unique") {
  // Every tuple (g_I) of I-absorbing functions is tried; exactly the
  // computed components sum to f.
  for (const auto& [K, n] : {std::pair{prime_ring({2, 3}), 1u}, {prime_ring({3}), 2u}}) {
    const ProductRing F = prime_ring({2});
    const auto fs = all_functions(K, F, n);
    const std::size_t subsets = std::size_t{1} << K.factor_count();
    std::vector<std::vector<const FiniteFunction*>> candidates(subsets);
    for (std::size_t I = 0; I < subsets; ++I)
      for (const auto& g : fs)
        if (oracle::absorbing(g, FactorSet(static_cast<std::uint32_t>(I)))) candidates[I].push_back(&g);

    std::map<std::vector<std::uint32_t>, int> hits;  // table of the sum -> number of tuples
    std::vector<std::size_t> pick(subsets, 0);
    while (true) {
      FiniteFunction sum(K, F, n);
      for (std::size_t I = 0; I < subsets; ++I) sum = f_plus(sum, *candidates[I][pick[I]]);
      const auto table = std::vector<std::uint32_t>(sum.component(0).begin(), sum.component(0).end());
      ++hits[table];
      if (hits[table] == 1) {
        const auto parts = decompose(sum);
        for (std::size_t I = 0; I < subsets; ++I) CHECK(parts[I].function == *candidates[I][pick[I]]);
      }
      std::size_t i = 0;
      while (i < subsets && ++pick[i] == candidates[i].size()) pick[i++] = 0;
      if (i == subsets) break;
    }
    CHECK(hits.size() == fs.size());
    for (const auto& [table, count] : hits) CHECK(count == 1);
  }
}

TEST_CASE("constants live in the empty component") {
  const ProductRing K = prime_ring({2, 3}), F = prime_ring({5});
  const auto c = constant_function(K, F, 2, RingElement{{FieldElement{3}}});
  const auto parts = decompose(c);
  CHECK(parts[0].function == c);
  for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i].function.is_zero());
  CHECK(masked(c, FactorSet(0)) == c);
}

// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "linclon/absorbing.hpp"
#include "linclon/cli.hpp"
#include "linclon/clonoid.hpp"
#include "linclon/modlattice.hpp"
#include "oracles.hpp"

using namespace linclon;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

// Shared between criteria 4 and 5.
std::size_t g_fingerprints_c4 = 0;

FiniteFunction absorbing_part(const FiniteFunction& f) { return component(f, FactorSet::all(f.domain().factor_count())); }

Outcome decomposition_suite() {
  std::mt19937_64 rng(1);
  const std::pair<ProductRing, ProductRing> settings[] = {{prime_ring({3}), prime_ring({2})},
                                                          {prime_ring({2, 3}), prime_ring({5})}};
  for (int t = 0; t < 200; ++t) {
    const auto& [K, F] = settings[t % 2];
    const unsigned n = 1 + (t / 2) % 2;
    const auto f = oracle::random_function(K, F, n, rng);
    const auto parts = decompose(f);
    const auto rec = decompose_recursive(f);
    FiniteFunction sum(K, F, n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!is_absorbing(parts[i].function, parts[i].subset)) return {false, "component not absorbing, sample " + std::to_string(t)};
      if (!(rec[i].function == parts[i].function)) return {false, "formulas differ, sample " + std::to_string(t)};
      sum = f_plus(sum, parts[i].function);
    }
    if (!(sum == f)) return {false, "reconstruction failed, sample " + std::to_string(t)};
  }
  return {true, "200 functions reconstruct, components absorbing, formulas agree"};
}

bool r_equals_scaled_t(const FiniteFunction& g, unsigned k) {
  const ProductRing& K = g.domain();
  const ProductRing& F = g.codomain();
  const auto t = build_t_k(g, k), r = build_r_k(g, k);
  for (std::size_t i = 0; i < F.factor_count(); ++i) {
    std::uint32_t c = 1;
    for (const auto& q : K.factors()) c = F.factor(i).mul(c, q.q() % F.factor(i).p());
    for (PointIndex x = 0; x < t.size(); ++x)
      if (r.component(i)[x] != F.factor(i).mul(c, t.component(i)[x])) return false;
  }
  return true;
}

Outcome rk_identity() {
  const ProductRing K = prime_ring({3}), F = prime_ring({2});
  int checked = 0;
  // 0-absorbing unary g over F_3 -> F_2: g(0) = 0, g(1), g(2) free
  for (std::uint32_t code = 0; code < 4; ++code) {
    FiniteFunction g(K, F, 1);
    g.component(0)[1] = code & 1u;
    g.component(0)[2] = code >> 1 & 1u;
    for (unsigned k : {2u, 3u}) {
      if (!r_equals_scaled_t(g, k)) return {false, "F_3 -> F_2 fails at k = " + std::to_string(k)};
      ++checked;
    }
  }
  std::mt19937_64 rng(2);
  const auto g = absorbing_part(oracle::random_function(prime_ring({2, 3}), prime_ring({5}), 1, rng));
  if (!r_equals_scaled_t(g, 2)) return {false, "F_2 x F_3 -> F_5 fails"};
  return {true, std::to_string(checked) + " checks over F_3 -> F_2 plus F_2 x F_3 -> F_5 at k = 2"};
}

Outcome line_interpolation() {
  std::mt19937_64 rng(3);
  const ProductRing K = prime_ring({3}), F = prime_ring({2});
  const auto lines = lines_enumerate(K, 2);
  if (lines.size() != 4) return {false, "|lines| = " + std::to_string(lines.size()) + " over F_3"};
  for (int t = 0; t < 100; ++t) {
    const auto f = absorbing_part(oracle::random_function(K, F, 2, rng));
    FiniteFunction sum(K, F, 2);
    for (const auto& L : lines) sum = f_plus(sum, line_component(f, L));
    if (!(sum == f)) return {false, "sum of line components differs, sample " + std::to_string(t)};
  }
  const auto lines6 = lines_enumerate(prime_ring({2, 3}), 2);
  if (lines6.size() != 12) return {false, "|lines| = " + std::to_string(lines6.size()) + " over F_2 x F_3"};
  return {true, "100 samples reconstruct; 4 lines over F_3, 12 over F_2 x F_3"};
}

Outcome unary_generation() {
  const ProductRing K = prime_ring({3}), F = prime_ring({2});
  std::map<std::vector<Vector>, FiniteFunction> by_fingerprint;
  for (std::uint32_t code = 0; code < 512; ++code) {
    FiniteFunction g(K, F, 2);
    for (PointIndex x = 0; x < 9; ++x) g.component(0)[x] = code >> x & 1u;
    const std::vector<FiniteFunction> gens{g};
    by_fingerprint.emplace(closure_slice(K, F, gens, 1).part(0).rows(), g);
  }
  for (const auto& [fp, g] : by_fingerprint) {
    const std::vector<FiniteFunction> gens{g};
    for (const auto& v : unary_generation_check(K, F, gens, 2))
      if (!v.equal) return {false, "slice at k = " + std::to_string(v.k) + " differs from its unary part"};
  }
  g_fingerprints_c4 = by_fingerprint.size();
  return {true, "512 binary g, " + std::to_string(by_fingerprint.size()) + " distinct unary parts, k = 1,2 equal"};
}

Outcome enumeration_cross_check() {
  const ProductRing K = prime_ring({3});
  EnumerationOptions a, b;
  a.strategy = EnumerationStrategy::JoinClosure;
  b.strategy = EnumerationStrategy::BruteForce;
  const auto la = enumerate_submodules(2, K, a), lb = enumerate_submodules(2, K, b);
  if (la.elements != lb.elements) return {false, "strategies disagree"};
  const BigInt bound = clonoid_count_bound(prime_ring({2}), K);
  if (bound != 15) return {false, "bound is " + bound.str()};
  if (BigInt(la.size()) > bound) return {false, "count exceeds bound"};
  if (la.size() != g_fingerprints_c4)
    return {false, std::to_string(la.size()) + " submodules vs " + std::to_string(g_fingerprints_c4) + " fingerprints"};
  return {true, std::to_string(la.size()) + " submodules, both strategies, bound 15, matches fingerprints"};
}

Outcome direct_product() {
  const ProductRing K = prime_ring({3});
  const auto l2 = enumerate_submodules(2, K), l5 = enumerate_submodules(5, K);
  const std::size_t expect = l2.size() * l5.size();
  const ProductLattice P = lattice_assemble({l2, l5});
  if (P.size() != expect) return {false, "size " + std::to_string(P.size()) + " vs " + std::to_string(expect)};
  for (std::uint64_t i = 0; i < P.size(); ++i) {
    const auto t = P.tuple_at(i);
    if (P.rho(P.psi(t)) != t) return {false, "rho(psi(t)) != t at index " + std::to_string(i)};
  }
  return {true, "size " + std::to_string(P.size()) + " = " + std::to_string(l2.size()) + " * " + std::to_string(l5.size()) +
                    ", rho o psi = id"};
}

Outcome gaussian_binomials() {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto all = oracle::all_subspaces(q, n);
      for (unsigned k = 0; k <= n; ++k) {
        std::uint64_t count = 0;
        for (const auto& S : all) count += oracle::rank_of(S, q) == k;
        if (gaussian_binomial(n, k, q).value != count) return {false, "count mismatch"};
      }
    }
  for (std::uint64_t q : {2u, 3u, 5u})
    for (std::uint64_t n = 1; n <= 6; ++n)
      for (std::uint64_t k = 0; k <= n; ++k) {
        if (gaussian_binomial(n, k, q).value != gaussian_binomial(n, n - k, q).value) return {false, "symmetry"};
        if (k == 0 || k == n) continue;
        BigInt qk = 1;
        for (std::uint64_t i = 0; i < k; ++i) qk *= q;
        if (gaussian_binomial(n, k, q).value !=
            gaussian_binomial(n - 1, k - 1, q).value + qk * gaussian_binomial(n - 1, k, q).value)
          return {false, "recurrence"};
      }
  return {true, "brute-force counts n <= 4, symmetry and recurrence n <= 6"};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "linclon_acceptance";
  fs::create_directories(dir);
  std::string json_text[2], dot_text[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path out = dir / ("enum" + std::to_string(run) + ".json"), dot = dir / ("enum" + std::to_string(run) + ".dot");
    std::ostringstream sink, err;
    const int code = cli::run({"enumerate", "--p", "2", "--K", R"({"p":3})", "--strategy", "both", "--out", out.string(),
                               "--dot", dot.string()},
                              sink, err);
    if (code != cli::kSuccess) return {false, "exit code " + std::to_string(code) + ": " + err.str()};
    std::ifstream j(out), d(dot);
    std::ostringstream js, ds;
    js << j.rdbuf();
    ds << d.rdbuf();
    json_text[run] = js.str();
    dot_text[run] = ds.str();
  }
  if (json_text[0].empty() || json_text[0] != json_text[1]) return {false, "JSON differs"};
  if (dot_text[0].empty() || dot_text[0] != dot_text[1]) return {false, "DOT differs"};
  return {true, "JSON and DOT byte-identical across runs"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
    double limit_s;  // 0 for none
  };
  const Criterion criteria[] = {
      {1, "decomposition suite", decomposition_suite, 10},
      {2, "r_k identity", rk_identity, 30},
      {3, "line interpolation", line_interpolation, 0},
      {4, "unary generation", unary_generation, 300},
      {5, "enumeration cross-check", enumeration_cross_check, 0},
      {6, "direct product", direct_product, 0},
      {7, "Gaussian binomials", gaussian_binomials, 5},
      {8, "determinism", determinism, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_s > 0 && secs > c.limit_s) o = {false, o.detail + "; over the time limit"};
    std::printf("criterion %d %-24s %s  %s (%.2fs)\n", c.id, c.name, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}

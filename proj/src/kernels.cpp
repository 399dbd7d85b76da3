#include "linclon/kernels.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

#include "linclon/error.hpp"

namespace linclon::kernels {

std::uint64_t substitution_count(const ProductRing& K, unsigned n, unsigned k) {
  std::uint64_t count = 1;
  for (const auto& field : K.factors())
    for (unsigned e = 0; e < n * k; ++e) {
      if (count > (std::uint64_t{1} << 62) / field.q())
        throw Error(ErrorKind::BudgetExceeded, "too many substitution tuples");
      count *= field.q();
    }
  return count;
}

std::vector<BlockMatrix> substitution_at(const ProductRing& K, unsigned n, unsigned k, std::uint64_t t) {
  std::vector<BlockMatrix> mats;
  mats.reserve(K.factor_count());
  for (std::size_t j = 0; j < K.factor_count(); ++j) mats.push_back(BlockMatrix::zero(n, k));
  for (std::size_t j = K.factor_count(); j-- > 0;) {
    const std::uint32_t q = K.factor(j).q();
    auto& entries = mats[j].entries;
    for (std::size_t e = entries.size(); e-- > 0;) {
      entries[e] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
  }
  return mats;
}

namespace {

std::vector<SubspaceBasis> empty_parts(const ProductRing& F, std::uint64_t dim) {
  std::vector<SubspaceBasis> parts;
  for (const auto& field : F.factors()) parts.emplace_back(field.p(), dim);
  return parts;
}

bool all_full(const std::vector<SubspaceBasis>& parts) {
  return std::all_of(parts.begin(), parts.end(), [](const SubspaceBasis& b) { return b.is_full(); });
}

void insert_instance(std::vector<SubspaceBasis>& parts, const FiniteFunction& h) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!parts[i].is_full()) parts[i].insert(h.component(i));
}

}  // namespace

std::vector<SubspaceBasis> substitution_span_serial(const ProductRing& K, const ProductRing& F,
                                                    std::span<const FiniteFunction> generators, unsigned k) {
  auto parts = empty_parts(F, table_size(K, k));
  for (const auto& g : generators) {
    const std::uint64_t count = substitution_count(K, g.arity(), k);
    for (std::uint64_t t = 0; t < count; ++t) {
      if (all_full(parts)) return parts;
      const auto mats = substitution_at(K, g.arity(), k, t);
      insert_instance(parts, substitute(g, mats));
    }
  }
  return parts;
}

std::vector<SubspaceBasis> substitution_span_omp(const ProductRing& K, const ProductRing& F,
                                                 std::span<const FiniteFunction> generators, unsigned k) {
  const std::uint64_t dim = table_size(K, k);
  std::vector<std::uint64_t> offsets{0};
  for (const auto& g : generators) offsets.push_back(offsets.back() + substitution_count(K, g.arity(), k));
  const auto total = static_cast<std::int64_t>(offsets.back());

  auto parts = empty_parts(F, dim);
#pragma omp parallel
  {
    auto local = empty_parts(F, dim);
#pragma omp for schedule(dynamic, 32)
    for (std::int64_t w = 0; w < total; ++w) {
      if (all_full(local)) continue;
      const auto gi = static_cast<std::size_t>(
          std::upper_bound(offsets.begin(), offsets.end(), static_cast<std::uint64_t>(w)) - offsets.begin() - 1);
      const FiniteFunction& g = generators[gi];
      const auto mats = substitution_at(K, g.arity(), k, static_cast<std::uint64_t>(w) - offsets[gi]);
      insert_instance(local, substitute(g, mats));
    }
#pragma omp critical(linclon_span_merge)
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i].absorb(local[i]);
  }
  return parts;
}

SubspaceBasis orbit_span(const ProductRing& K, std::uint32_t p, std::span<const std::uint32_t> v) {
  const std::uint64_t d = K.order();
  if (v.size() != d) throw Error(ErrorKind::ShapeMismatch, "vector length must be |K|");
  SubspaceBasis b(p, d);
  Vector w(d);
  for (std::uint64_t a = 0; a < d && !b.is_full(); ++a) {
    for (std::uint64_t x = 0; x < d; ++x) w[x] = v[K.mul_index(a, x)];
    b.insert(w);
  }
  return b;
}

namespace {

std::uint64_t vector_count(std::uint32_t p, std::uint64_t d) {
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    if (n > (std::uint64_t{1} << 40) / p) throw Error(ErrorKind::BudgetExceeded, "p^|K| too large");
    n *= p;
  }
  return n;
}

// v from its index with v[0] most significant; empty when v is zero or not
// projectively normalized
bool projective_vector(std::uint64_t index, std::uint32_t p, std::uint64_t d, Vector& v) {
  for (std::uint64_t i = d; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  return it != v.end() && *it == 1;
}

void sort_unique(std::vector<SubspaceBasis>& spans) {
  std::sort(spans.begin(), spans.end());
  spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
}

}  // namespace

std::vector<SubspaceBasis> cyclic_spans_serial(const ProductRing& K, std::uint32_t p) {
  const std::uint64_t d = K.order();
  const std::uint64_t count = vector_count(p, d);
  std::set<SubspaceBasis> seen;
  Vector v(d);
  for (std::uint64_t u = 1; u < count; ++u)
    if (projective_vector(u, p, d, v)) seen.insert(orbit_span(K, p, v));
  return {seen.begin(), seen.end()};
}

std::vector<SubspaceBasis> cyclic_spans_omp(const ProductRing& K, std::uint32_t p) {
  const std::uint64_t d = K.order();
  const auto count = static_cast<std::int64_t>(vector_count(p, d));
  std::vector<SubspaceBasis> all;
#pragma omp parallel
  {
    std::set<SubspaceBasis> local;
    Vector v(d);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t u = 1; u < count; ++u)
      if (projective_vector(static_cast<std::uint64_t>(u), p, d, v)) local.insert(orbit_span(K, p, v));
#pragma omp critical(linclon_cyclic_merge)
    all.insert(all.end(), local.begin(), local.end());
  }
  sort_unique(all);
  return all;
}

bool is_invariant(const ProductRing& K, const SubspaceBasis& basis) {
  const std::uint64_t d = K.order();
  if (basis.dim() != d) throw Error(ErrorKind::ShapeMismatch, "submodule must live in F_p^|K|");
  Vector w(d);
  for (std::uint64_t a = 0; a < d; ++a)
    for (const auto& row : basis.rows()) {
      for (std::uint64_t x = 0; x < d; ++x) w[x] = row[K.mul_index(a, x)];
      if (!basis.contains(w)) return false;
    }
  return true;
}

namespace {

// All reduced echelon forms with the given pivot columns, filtered by invariance.
void echelon_forms_with_pivots(const ProductRing& K, std::uint32_t p, std::uint64_t d, std::uint64_t pivot_mask,
                               std::vector<SubspaceBasis>& out) {
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < d; ++c)
    if (pivot_mask >> c & 1u) pivots.push_back(c);
  // free slots: (row, column) right of the row's pivot and not a pivot column
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = pivots[r] + 1; c < d; ++c)
      if (!(pivot_mask >> c & 1u)) slots.emplace_back(r, c);
  const std::uint64_t fillings = vector_count(p, slots.size());
  std::vector<Vector> rows(pivots.size(), Vector(d, 0));
  for (std::uint64_t f = 0; f < fillings; ++f) {
    for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) rows[r][pivots[r]] = 1;
    std::uint64_t rest = f;
    for (const auto& [r, c] : slots) {
      rows[r][c] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    SubspaceBasis b = SubspaceBasis::span(p, d, rows);
    if (is_invariant(K, b)) out.push_back(std::move(b));
  }
}

}  // namespace

std::vector<SubspaceBasis> invariant_subspaces_serial(const ProductRing& K, std::uint32_t p) {
  const std::uint64_t d = K.order();
  if (d > 30) throw Error(ErrorKind::BudgetExceeded, "too many pivot patterns");
  std::vector<SubspaceBasis> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) echelon_forms_with_pivots(K, p, d, mask, out);
  sort_unique(out);
  return out;
}

std::vector<SubspaceBasis> invariant_subspaces_omp(const ProductRing& K, std::uint32_t p) {
  const std::uint64_t d = K.order();
  if (d > 30) throw Error(ErrorKind::BudgetExceeded, "too many pivot patterns");
  const auto masks = static_cast<std::int64_t>(std::uint64_t{1} << d);
  std::vector<SubspaceBasis> out;
#pragma omp parallel
  {
    std::vector<SubspaceBasis> local;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t mask = 0; mask < masks; ++mask)
      echelon_forms_with_pivots(K, p, d, static_cast<std::uint64_t>(mask), local);
#pragma omp critical(linclon_invariant_merge)
    out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  sort_unique(out);
  return out;
}

}  // namespace linclon::kernels

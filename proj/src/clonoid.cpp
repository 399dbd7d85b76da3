#include "linclon/clonoid.hpp"

#include <algorithm>
#include <string>

#include "linclon/absorbing.hpp"
#include "linclon/error.hpp"
#include "linclon/kernels.hpp"

namespace linclon {

ClonoidSlice::ClonoidSlice(ProductRing K, ProductRing F, unsigned arity, std::vector<SubspaceBasis> parts)
    : K_(std::move(K)), F_(std::move(F)), arity_(arity), parts_(std::move(parts)) {
  if (parts_.size() != F_.factor_count()) throw Error(ErrorKind::ShapeMismatch, "one part per factor of F");
  const std::uint64_t dim = table_size(K_, arity_);
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].p() != F_.factor(i).p() || !F_.factor(i).is_prime() || parts_[i].dim() != dim)
      throw Error(ErrorKind::ShapeMismatch, "part does not match its codomain factor");
}

ClonoidSlice ClonoidSlice::zero(const ProductRing& K, const ProductRing& F, unsigned arity) {
  std::vector<SubspaceBasis> parts;
  for (const auto& field : F.factors()) parts.emplace_back(field.p(), table_size(K, arity));
  return ClonoidSlice(K, F, arity, std::move(parts));
}

std::vector<std::size_t> ClonoidSlice::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& b : parts_) r.push_back(b.rank());
  return r;
}

namespace {

void require_prime_codomain(const ProductRing& F) {
  for (const auto& field : F.factors())
    if (!field.is_prime()) throw Error(ErrorKind::ShapeMismatch, "codomain factors must be prime fields");
}

void require_shape(const FiniteFunction& f, const ProductRing& K, const ProductRing& F) {
  if (!(f.domain() == K) || !(f.codomain() == F))
    throw Error(ErrorKind::ShapeMismatch, "function does not map K^n to F");
}

}  // namespace

ClonoidSlice closure_slice(const ProductRing& K, const ProductRing& F, std::span<const FiniteFunction> generators,
                           unsigned k, const ClosureOptions& options) {
  require_coprime(K, F);
  require_prime_codomain(F);
  if (k == 0) throw Error(ErrorKind::BadArity, "arity must be at least 1");
  for (const auto& g : generators) require_shape(g, K, F);
  table_size(K, k, options.budget);

  // One pass over the substitution instances is enough. Substitutions
  // compose (substituting B after A is substituting the blockwise product
  // A B) and commute with F-linear combinations, so the span of all
  // instances is already closed under both closure conditions at arity k.
  auto parts = options.parallel ? kernels::substitution_span_omp(K, F, generators, k)
                                : kernels::substitution_span_serial(K, F, generators, k);
  return ClonoidSlice(K, F, k, std::move(parts));
}

bool member(const FiniteFunction& f, const ClonoidSlice& slice) {
  require_shape(f, slice.domain(), slice.codomain());
  if (f.arity() != slice.arity()) throw Error(ErrorKind::ShapeMismatch, "arity differs from slice");
  for (std::size_t i = 0; i < slice.parts().size(); ++i)
    if (!slice.part(i).contains(f.component(i))) return false;
  return true;
}

std::vector<FiniteFunction> basis_functions(const ClonoidSlice& slice) {
  std::vector<FiniteFunction> out;
  for (std::size_t i = 0; i < slice.parts().size(); ++i)
    for (const auto& row : slice.part(i).rows()) {
      FiniteFunction f(slice.domain(), slice.codomain(), slice.arity());
      std::copy(row.begin(), row.end(), f.component(i).begin());
      out.push_back(std::move(f));
    }
  return out;
}

// ---------------------------------------------------------------------------
// lines

std::vector<PointIndex> line_points(const ProductRing& K, unsigned n, const LineProduct& L) {
  const std::size_t m = K.factor_count();
  if (L.generators.size() != m) throw Error(ErrorKind::ShapeMismatch, "one line generator per factor of K");
  for (std::size_t j = 0; j < m; ++j) {
    if (L.generators[j].size() != n) throw Error(ErrorKind::ShapeMismatch, "line generator has wrong length");
    for (auto v : L.generators[j])
      if (!K.factor(j).contains(v)) throw Error(ErrorKind::InvalidElement, "line generator entry outside field");
  }
  std::vector<PointIndex> points(K.order());
  for (std::uint64_t lambda = 0; lambda < K.order(); ++lambda) {
    PointIndex idx = 0;
    for (unsigned t = 0; t < n; ++t) {
      std::uint64_t elem = 0;
      for (std::size_t j = 0; j < m; ++j)
        elem += K.factor(j).mul(K.coord(lambda, j), L.generators[j][t]) * K.stride(j);
      idx = idx * K.order() + elem;
    }
    points[lambda] = idx;
  }
  return points;
}

std::vector<LineProduct> lines_enumerate(const ProductRing& K, unsigned n) {
  if (n == 0) throw Error(ErrorKind::BadArity, "arity must be at least 1");
  // normalized nonzero vectors per factor, first coordinate most significant
  std::vector<std::vector<std::vector<std::uint32_t>>> per_factor;
  for (const auto& field : K.factors()) {
    std::vector<std::vector<std::uint32_t>> reps;
    std::uint64_t count = 1;
    for (unsigned t = 0; t < n; ++t) count *= field.q();
    for (std::uint64_t u = 1; u < count; ++u) {
      std::vector<std::uint32_t> v(n);
      std::uint64_t rest = u;
      for (unsigned t = n; t-- > 0;) {
        v[t] = static_cast<std::uint32_t>(rest % field.q());
        rest /= field.q();
      }
      const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
      if (*it == 1) reps.push_back(std::move(v));
    }
    per_factor.push_back(std::move(reps));
  }
  std::vector<LineProduct> out;
  std::vector<std::size_t> odometer(per_factor.size(), 0);
  while (true) {
    LineProduct L;
    for (std::size_t j = 0; j < per_factor.size(); ++j) L.generators.push_back(per_factor[j][odometer[j]]);
    out.push_back(std::move(L));
    std::size_t j = per_factor.size();
    while (j-- > 0) {
      if (++odometer[j] < per_factor[j].size()) break;
      odometer[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

FiniteFunction line_component(const FiniteFunction& f, const LineProduct& L) {
  FiniteFunction out(f.domain(), f.codomain(), f.arity());
  for (PointIndex x : line_points(f.domain(), f.arity(), L))
    for (std::size_t i = 0; i < f.codomain().factor_count(); ++i) out.component(i)[x] = f.component(i)[x];
  return out;
}

namespace {

LineProduct first_basis_lines(const ProductRing& K, unsigned n) {
  LineProduct L;
  for (std::size_t j = 0; j < K.factor_count(); ++j) {
    std::vector<std::uint32_t> e(n, 0);
    e[0] = 1;
    L.generators.push_back(std::move(e));
  }
  return L;
}

// Gauss-Jordan inverse over one field; the matrix is known to be invertible.
BlockMatrix invert(const BlockMatrix& M, const FieldSpec& field) {
  const std::size_t n = M.rows;
  BlockMatrix a = M;
  BlockMatrix inv = BlockMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a(r, c) == 0) ++r;
    if (r == n) throw Error(ErrorKind::NotInvariant, "singular matrix in line transport");
    for (std::size_t t = 0; t < n; ++t) {
      std::swap(a(r, t), a(c, t));
      std::swap(inv(r, t), inv(c, t));
    }
    const std::uint32_t s = field.inv(a(c, c));
    for (std::size_t t = 0; t < n; ++t) {
      a(c, t) = field.mul(a(c, t), s);
      inv(c, t) = field.mul(inv(c, t), s);
    }
    for (std::size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == c || a(r2, c) == 0) continue;
      const std::uint32_t coef = a(r2, c);
      for (std::size_t t = 0; t < n; ++t) {
        a(r2, t) = field.sub(a(r2, t), field.mul(coef, a(c, t)));
        inv(r2, t) = field.sub(inv(r2, t), field.mul(coef, inv(c, t)));
      }
    }
  }
  return inv;
}

std::size_t column_rank(const std::vector<std::vector<std::uint32_t>>& cols, const FieldSpec& field) {
  std::vector<std::vector<std::uint32_t>> rows = cols;
  std::size_t rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    const std::uint32_t s = field.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = field.mul(x, s);
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 == rank || rows[r2][c] == 0) continue;
      const std::uint32_t coef = rows[r2][c];
      for (std::size_t t = 0; t < n; ++t) rows[r2][t] = field.sub(rows[r2][t], field.mul(coef, rows[rank][t]));
    }
    ++rank;
  }
  return rank;
}

// M with first column b, completed greedily by standard basis vectors.
BlockMatrix basis_through(const std::vector<std::uint32_t>& b, const FieldSpec& field) {
  const std::size_t n = b.size();
  std::vector<std::vector<std::uint32_t>> cols{b};
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    cols.push_back(e);
    if (column_rank(cols, field) < cols.size()) cols.pop_back();
  }
  BlockMatrix M = BlockMatrix::zero(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) M(r, c) = cols[c][r];
  return M;
}

}  // namespace

std::vector<BlockMatrix> line_transport(const FiniteFunction& f, const FiniteFunction& g, const LineProduct& lines) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()) || f.arity() != g.arity())
    throw Error(ErrorKind::ShapeMismatch, "f and g must have the same shape");
  const ProductRing& K = f.domain();
  const unsigned n = f.arity();
  for (const auto& b : lines.generators)
    if (std::all_of(b.begin(), b.end(), [](std::uint32_t x) { return x == 0; }))
      throw Error(ErrorKind::NotSupportedOnLines, "line generators must be nonzero");

  const auto on_b = line_points(K, n, lines);
  const auto on_e = line_points(K, n, first_basis_lines(K, n));
  std::vector<char> in_b(f.size(), 0), in_e(f.size(), 0);
  for (auto x : on_b) in_b[x] = 1;
  for (auto x : on_e) in_e[x] = 1;
  for (PointIndex x = 0; x < f.size(); ++x) {
    if (!in_b[x] && !f.is_zero_at(x)) throw Error(ErrorKind::NotSupportedOnLines, "f is nonzero off its lines");
    if (!in_e[x] && !g.is_zero_at(x)) throw Error(ErrorKind::NotSupportedOnLines, "g is nonzero off the e_1 lines");
  }
  for (std::uint64_t lambda = 0; lambda < K.order(); ++lambda)
    if (f.at(on_b[lambda]) != g.at(on_e[lambda]))
      throw Error(ErrorKind::ValueMismatch, "f(lambda b) differs from g(lambda e_1)");

  std::vector<BlockMatrix> mats;
  for (std::size_t j = 0; j < K.factor_count(); ++j)
    mats.push_back(invert(basis_through(lines.generators[j], K.factor(j)), K.factor(j)));
  if (!(substitute(g, mats) == f)) throw Error(ErrorKind::NotInvariant, "line transport witness failed");
  return mats;
}

// ---------------------------------------------------------------------------
// t_k and r_k

namespace {

void require_absorbing_unary(const FiniteFunction& g) {
  if (g.arity() != 1) throw Error(ErrorKind::BadArity, "g must be unary");
  if (!is_absorbing(g, FactorSet::all(g.domain().factor_count())))
    throw Error(ErrorKind::NotAbsorbing, "g must be 0-absorbing in [m]");
}

}  // namespace

FiniteFunction build_t_k(const FiniteFunction& g, unsigned k) {
  require_absorbing_unary(g);
  if (k == 0) throw Error(ErrorKind::BadArity, "arity must be at least 1");
  const ProductRing& K = g.domain();
  FiniteFunction t(K, g.codomain(), k);
  const std::uint64_t first_weight = t.size() / K.order();
  for (std::uint64_t e = 0; e < K.order(); ++e) t.set(e * first_weight, g.at(e));
  return t;
}

std::vector<std::pair<BlockMatrix, bool>> shear_maps(const FieldSpec& field, unsigned k) {
  if (k < 2) throw Error(ErrorKind::BadArity, "shear maps need k >= 2");
  std::vector<std::pair<BlockMatrix, bool>> maps;
  auto base = [&] {
    BlockMatrix A = BlockMatrix::zero(k - 1, k);
    for (unsigned r = 1; r + 1 < k; ++r) A(r, r + 1) = 1;
    return A;
  };
  for (std::uint32_t a = 0; a < field.q(); ++a) {
    BlockMatrix A = base();
    A(0, 0) = 1;
    A(0, 1) = field.neg(a);
    maps.emplace_back(std::move(A), false);
  }
  for (std::uint32_t a = 1; a < field.q(); ++a) {
    BlockMatrix A = base();
    A(0, 1) = a;
    maps.emplace_back(std::move(A), true);
  }
  return maps;
}

FiniteFunction build_r_k(const FiniteFunction& g, unsigned k) {
  require_absorbing_unary(g);
  if (k < 2) throw Error(ErrorKind::BadArity, "r_k needs k >= 2");
  const ProductRing& K = g.domain();
  const ProductRing& F = g.codomain();
  const FiniteFunction prev = build_t_k(g, k - 1);

  std::vector<std::vector<std::pair<BlockMatrix, bool>>> maps;
  for (const auto& field : K.factors()) maps.push_back(shear_maps(field, k));

  FiniteFunction r(K, F, k);
  std::vector<std::size_t> odometer(maps.size(), 0);
  std::vector<BlockMatrix> mats(maps.size());
  while (true) {
    bool negative = false;
    for (std::size_t j = 0; j < maps.size(); ++j) {
      mats[j] = maps[j][odometer[j]].first;
      negative ^= maps[j][odometer[j]].second;
    }
    const FiniteFunction term = substitute(prev, mats);
    for (std::size_t i = 0; i < F.factor_count(); ++i) {
      const FieldSpec& field = F.factor(i);
      auto dst = r.component(i);
      auto src = term.component(i);
      for (std::size_t x = 0; x < dst.size(); ++x)
        dst[x] = negative ? field.sub(dst[x], src[x]) : field.add(dst[x], src[x]);
    }
    std::size_t j = maps.size();
    while (j-- > 0) {
      if (++odometer[j] < maps[j].size()) break;
      odometer[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<GenerationVerdict> unary_generation_check(const ProductRing& K, const ProductRing& F,
                                                      std::span<const FiniteFunction> generators, unsigned k_max,
                                                      const ClosureOptions& options) {
  require_coprime(K, F);
  if (k_max == 0) throw Error(ErrorKind::BadArity, "k_max must be at least 1");
  table_size(K, k_max, options.budget);

  const ClonoidSlice unary = closure_slice(K, F, generators, 1, options);
  const std::vector<FiniteFunction> unary_gens = basis_functions(unary);

  std::vector<GenerationVerdict> verdicts;
  for (unsigned k = 1; k <= k_max; ++k) {
    const ClonoidSlice c = k == 1 ? unary : closure_slice(K, F, generators, k, options);
    const ClonoidSlice u = closure_slice(K, F, unary_gens, k, options);
    verdicts.push_back({k, c.ranks(), u.ranks(), c == u});
  }
  return verdicts;
}

}  // namespace linclon

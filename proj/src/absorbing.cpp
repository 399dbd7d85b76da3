#include "linclon/absorbing.hpp"

#include "linclon/error.hpp"

namespace linclon {

namespace {

// true iff block j is zero in every argument of x
bool block_zero(const ProductRing& K, unsigned n, PointIndex x, std::size_t j) {
  for (unsigned i = 0; i < n; ++i) {
    if (K.coord(x % K.order(), j) != 0) return false;
    x /= K.order();
  }
  return true;
}

void check_subset(const FiniteFunction& f, FactorSet I) {
  if (!I.subset_of(FactorSet::all(f.domain().factor_count())))
    throw Error(ErrorKind::BadFactorCount, "subset refers to a factor outside [m]");
}

}  // namespace

bool is_absorbing(const FiniteFunction& f, FactorSet I) {
  check_subset(f, I);
  if (!dep_set(f).subset_of(I)) return false;
  const ProductRing& K = f.domain();
  for (PointIndex x = 0; x < f.size(); ++x) {
    if (f.is_zero_at(x)) continue;
    for (std::size_t j = 0; j < K.factor_count(); ++j)
      if (I.contains(j) && block_zero(K, f.arity(), x, j)) return false;
  }
  return true;
}

FiniteFunction masked(const FiniteFunction& f, FactorSet J) {
  FiniteFunction out(f.domain(), f.codomain(), f.arity());
  for (PointIndex x = 0; x < f.size(); ++x) {
    const PointIndex y = zero_mask_index(f.domain(), f.arity(), x, J);
    for (std::size_t i = 0; i < f.codomain().factor_count(); ++i) out.component(i)[x] = f.component(i)[y];
  }
  return out;
}

FiniteFunction component(const FiniteFunction& f, FactorSet I) {
  check_subset(f, I);
  const ProductRing& F = f.codomain();
  FiniteFunction out(f.domain(), F, f.arity());
  // iterate J over the subsets of I
  std::uint32_t J = I.bits();
  while (true) {
    const bool negative = ((I.size() + FactorSet(J).size()) & 1) != 0;
    for (PointIndex x = 0; x < f.size(); ++x) {
      const PointIndex y = zero_mask_index(f.domain(), f.arity(), x, FactorSet(J));
      for (std::size_t i = 0; i < F.factor_count(); ++i) {
        const FieldSpec& field = F.factor(i);
        const std::uint32_t v = f.component(i)[y];
        auto dst = out.component(i);
        dst[x] = field.add(dst[x], negative ? field.neg(v) : v);
      }
    }
    if (J == 0) break;
    J = (J - 1) & I.bits();
  }
  return out;
}

std::vector<AbsorbingComponent> decompose(const FiniteFunction& f) {
  const std::uint32_t count = std::uint32_t{1} << f.domain().factor_count();
  std::vector<AbsorbingComponent> out;
  out.reserve(count);
  for (std::uint32_t I = 0; I < count; ++I) out.push_back({FactorSet(I), component(f, FactorSet(I))});
  return out;
}

std::vector<AbsorbingComponent> decompose_recursive(const FiniteFunction& f) {
  const std::uint32_t count = std::uint32_t{1} << f.domain().factor_count();
  std::vector<FiniteFunction> parts;
  parts.reserve(count);
  // increasing bitmask visits every proper subset of I before I
  for (std::uint32_t I = 0; I < count; ++I) {
    FiniteFunction fi = masked(f, FactorSet(I));
    if (I != 0) {
      const ProductRing& F = f.codomain();
      for (std::uint32_t J = (I - 1) & I;; J = (J - 1) & I) {
        for (std::size_t i = 0; i < F.factor_count(); ++i) {
          const FieldSpec& field = F.factor(i);
          auto dst = fi.component(i);
          auto sub = parts[J].component(i);
          for (std::size_t x = 0; x < dst.size(); ++x) dst[x] = field.sub(dst[x], sub[x]);
        }
        if (J == 0) break;
      }
    }
    parts.push_back(std::move(fi));
  }
  std::vector<AbsorbingComponent> out;
  out.reserve(count);
  for (std::uint32_t I = 0; I < count; ++I) out.push_back({FactorSet(I), std::move(parts[I])});
  return out;
}

}  // namespace linclon

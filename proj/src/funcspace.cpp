#include "linclon/funcspace.hpp"

#include <string>

#include "linclon/error.hpp"

namespace linclon {

std::uint64_t table_size(const ProductRing& K, unsigned n, std::uint64_t limit) {
  std::uint64_t s = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (s > limit / K.order())
      throw Error(ErrorKind::BudgetExceeded,
                  "|K|^" + std::to_string(n) + " exceeds " + std::to_string(limit) + " entries");
    s *= K.order();
  }
  return s;
}

FiniteFunction::FiniteFunction(ProductRing domain, ProductRing codomain, unsigned arity)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), arity_(arity) {
  if (arity_ == 0) throw Error(ErrorKind::BadArity, "arity must be at least 1");
  size_ = table_size(domain_, arity_);
  components_.assign(codomain_.factor_count(), std::vector<std::uint32_t>(size_, 0));
}

RingElement FiniteFunction::at(PointIndex x) const {
  if (x >= size_) throw Error(ErrorKind::InvalidElement, "point index out of range");
  RingElement r;
  r.coords.resize(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) r.coords[i].value = components_[i][x];
  return r;
}

void FiniteFunction::set(PointIndex x, const RingElement& value) {
  if (x >= size_) throw Error(ErrorKind::InvalidElement, "point index out of range");
  if (!codomain_.contains(value)) throw Error(ErrorKind::InvalidElement, "value outside codomain");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i][x] = value.coords[i].value;
}

bool FiniteFunction::is_zero_at(PointIndex x) const noexcept {
  for (const auto& c : components_)
    if (c[x] != 0) return false;
  return true;
}

bool FiniteFunction::is_zero() const noexcept {
  for (const auto& c : components_)
    for (auto v : c)
      if (v != 0) return false;
  return true;
}

PointIndex encode_point(const ProductRing& K, std::span<const RingElement> x) {
  if (x.empty()) throw Error(ErrorKind::WrongLength, "a point needs at least one argument");
  PointIndex idx = 0;
  for (const auto& e : x) idx = idx * K.order() + K.encode(e);
  return idx;
}

Point decode_point(const ProductRing& K, unsigned n, PointIndex index) {
  if (index >= table_size(K, n)) throw Error(ErrorKind::InvalidElement, "point index out of range");
  Point x(n);
  for (unsigned i = n; i-- > 0;) {
    x[i] = K.decode(index % K.order());
    index /= K.order();
  }
  return x;
}

RingElement eval(const FiniteFunction& f, std::span<const RingElement> x) {
  if (x.size() != f.arity()) throw Error(ErrorKind::WrongLength, "point has wrong arity");
  return f.at(encode_point(f.domain(), x));
}

FiniteFunction constant_function(const ProductRing& K, const ProductRing& F, unsigned n, const RingElement& c) {
  FiniteFunction f(K, F, n);
  if (!F.contains(c)) throw Error(ErrorKind::InvalidElement, "constant outside codomain");
  for (std::size_t i = 0; i < F.factor_count(); ++i) {
    auto comp = f.component(i);
    std::fill(comp.begin(), comp.end(), c.coords[i].value);
  }
  return f;
}

FiniteFunction f_scale(const RingElement& a, const FiniteFunction& f) {
  const ProductRing& F = f.codomain();
  if (!F.contains(a)) throw Error(ErrorKind::ShapeMismatch, "scalar not in codomain");
  FiniteFunction out(f.domain(), F, f.arity());
  for (std::size_t i = 0; i < F.factor_count(); ++i) {
    const FieldSpec& field = F.factor(i);
    auto src = f.component(i);
    auto dst = out.component(i);
    for (std::size_t x = 0; x < src.size(); ++x) dst[x] = field.mul(a.coords[i].value, src[x]);
  }
  return out;
}

FiniteFunction f_plus(const FiniteFunction& f, const FiniteFunction& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()) || f.arity() != g.arity())
    throw Error(ErrorKind::ShapeMismatch, "f_plus needs matching domain, codomain and arity");
  FiniteFunction out(f.domain(), f.codomain(), f.arity());
  for (std::size_t i = 0; i < f.codomain().factor_count(); ++i) {
    const FieldSpec& field = f.codomain().factor(i);
    auto a = f.component(i);
    auto b = g.component(i);
    auto dst = out.component(i);
    for (std::size_t x = 0; x < a.size(); ++x) dst[x] = field.add(a[x], b[x]);
  }
  return out;
}

FiniteFunction substitute(const FiniteFunction& f, std::span<const BlockMatrix> mats) {
  const ProductRing& K = f.domain();
  const std::size_t m = K.factor_count();
  const unsigned n = f.arity();
  if (mats.size() != m) throw Error(ErrorKind::ShapeMismatch, "need one matrix per factor of K");
  const std::size_t l = mats[0].cols;
  for (std::size_t j = 0; j < m; ++j) {
    const BlockMatrix& A = mats[j];
    if (A.rows != n || A.cols != l || A.entries.size() != n * l)
      throw Error(ErrorKind::ShapeMismatch, "matrix shape must be arity x new arity");
    for (auto v : A.entries)
      if (!K.factor(j).contains(v)) throw Error(ErrorKind::InvalidElement, "matrix entry outside field");
  }
  if (l == 0) throw Error(ErrorKind::BadArity, "new arity must be at least 1");

  FiniteFunction g(K, f.codomain(), static_cast<unsigned>(l));
  const std::uint64_t order = K.order();
  const std::int64_t total = static_cast<std::int64_t>(g.size());
  const std::size_t s = f.codomain().factor_count();

  std::vector<std::uint32_t*> dst(s);
  std::vector<const std::uint32_t*> src(s);
  for (std::size_t i = 0; i < s; ++i) {
    dst[i] = g.component(i).data();
    src[i] = f.component(i).data();
  }

#pragma omp parallel for schedule(static) if (total > 16384)
  for (std::int64_t y = 0; y < total; ++y) {
    std::vector<std::uint64_t> args(l);
    std::uint64_t rest = static_cast<std::uint64_t>(y);
    for (std::size_t t = l; t-- > 0;) {
      args[t] = rest % order;
      rest /= order;
    }
    std::vector<std::uint64_t> image(n, 0);
    for (std::size_t j = 0; j < m; ++j) {
      const FieldSpec& field = K.factor(j);
      const BlockMatrix& A = mats[j];
      for (unsigned r = 0; r < n; ++r) {
        std::uint32_t acc = 0;
        for (std::size_t t = 0; t < l; ++t) {
          const std::uint32_t a = A.entries[r * l + t];
          if (a != 0) acc = field.add(acc, field.mul(a, K.coord(args[t], j)));
        }
        image[r] += acc * K.stride(j);
      }
    }
    std::uint64_t idx = 0;
    for (unsigned r = 0; r < n; ++r) idx = idx * order + image[r];
    for (std::size_t i = 0; i < s; ++i) dst[i][y] = src[i][idx];
  }
  return g;
}

PointIndex zero_mask_index(const ProductRing& K, unsigned n, PointIndex x, FactorSet J) {
  const std::uint64_t order = K.order();
  PointIndex out = 0, weight = 1;
  for (unsigned i = 0; i < n; ++i) {
    out += K.mask_index(x % order, J.bits()) * weight;
    x /= order;
    weight *= order;
  }
  return out;
}

Point zero_mask(const ProductRing& K, std::span<const RingElement> x, FactorSet J) {
  Point out(x.begin(), x.end());
  for (auto& e : out) {
    if (e.coords.size() != K.factor_count()) throw Error(ErrorKind::WrongLength, "element has wrong length");
    for (std::size_t j = 0; j < e.coords.size(); ++j)
      if (!J.contains(j)) e.coords[j].value = 0;
  }
  return out;
}

FactorSet dep_set(const FiniteFunction& f) {
  const ProductRing& K = f.domain();
  const std::size_t m = K.factor_count();
  FactorSet dep;
  for (std::size_t j = 0; j < m; ++j) {
    // f depends on block j iff some point differs from its block-j-zeroed copy
    const FactorSet keep(FactorSet::all(m).bits() & ~FactorSet::single(j).bits());
    bool depends = false;
    for (PointIndex x = 0; x < f.size() && !depends; ++x) {
      const PointIndex y = zero_mask_index(K, f.arity(), x, keep);
      for (std::size_t i = 0; i < f.codomain().factor_count() && !depends; ++i)
        depends = f.component(i)[x] != f.component(i)[y];
    }
    if (depends) dep = dep.with(j);
  }
  return dep;
}

ProductRing leading_factors(const ProductRing& K, std::size_t h) {
  if (h == 0 || h > K.factor_count()) throw Error(ErrorKind::BadFactorCount, "restriction needs 1 <= h <= m");
  return ProductRing::make(std::vector<FieldSpec>(K.factors().begin(), K.factors().begin() + h));
}

FiniteFunction restrict(const FiniteFunction& f, std::size_t h) {
  const ProductRing& K = f.domain();
  ProductRing K1 = leading_factors(K, h);
  FiniteFunction out(K1, f.codomain(), f.arity());
  // element e of K1 embeds into K as e * (|K| / |K1|): the trailing digits are zero
  const std::uint64_t scale = K.order() / K1.order();
  for (PointIndex y = 0; y < out.size(); ++y) {
    PointIndex rest = y, x = 0, weight = 1;
    for (unsigned i = 0; i < f.arity(); ++i) {
      x += (rest % K1.order()) * scale * weight;
      rest /= K1.order();
      weight *= K.order();
    }
    for (std::size_t i = 0; i < f.codomain().factor_count(); ++i) out.component(i)[y] = f.component(i)[x];
  }
  return out;
}

}  // namespace linclon

#include "linclon/subspace.hpp"

#include <algorithm>

#include "linclon/error.hpp"
#include "linclon/ffield.hpp"

namespace linclon {

SubspaceBasis::SubspaceBasis(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "subspaces are over prime fields");
  inverses_.assign(p, 0);
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b)
      if (mul(a, b) == 1) {
        inverses_[a] = b;
        break;
      }
}

SubspaceBasis SubspaceBasis::span(std::uint32_t p, std::size_t dim, std::span<const Vector> vectors) {
  SubspaceBasis b(p, dim);
  for (const auto& v : vectors) {
    if (b.is_full()) break;
    b.insert(v);
  }
  return b;
}

SubspaceBasis SubspaceBasis::full(std::uint32_t p, std::size_t dim) {
  SubspaceBasis b(p, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e(dim, 0);
    e[i] = 1;
    b.rows_.push_back(std::move(e));
    b.pivots_.push_back(i);
  }
  return b;
}

void SubspaceBasis::axpy(Vector& v, std::uint32_t coef, const Vector& row) const {
  // v -= coef * row
  const std::uint32_t c = p_ - coef;
  for (std::size_t i = 0; i < dim_; ++i)
    if (row[i] != 0) v[i] = static_cast<std::uint32_t>((v[i] + std::uint64_t{c} * row[i]) % p_);
}

Vector SubspaceBasis::reduce(std::span<const std::uint32_t> v) const {
  if (v.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "vector length differs from ambient dimension");
  Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t coef = r[pivots_[k]];
    if (coef != 0) axpy(r, coef, rows_[k]);
  }
  return r;
}

bool SubspaceBasis::contains(std::span<const std::uint32_t> v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.p_ != p_ || other.dim_ != dim_) throw Error(ErrorKind::ShapeMismatch, "different ambient spaces");
  if (other.rank() > rank()) return false;
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

bool SubspaceBasis::insert(std::span<const std::uint32_t> v) {
  Vector r = reduce(v);
  const auto it = std::find_if(r.begin(), r.end(), [](std::uint32_t x) { return x != 0; });
  if (it == r.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
  const std::uint32_t scale = inverses_[*it];
  for (auto& x : r) x = mul(x, scale);
  for (auto& row : rows_) {
    const std::uint32_t coef = row[pivot];
    if (coef != 0) axpy(row, coef, r);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

void SubspaceBasis::absorb(const SubspaceBasis& other) {
  if (other.p_ != p_ || other.dim_ != dim_) throw Error(ErrorKind::ShapeMismatch, "different ambient spaces");
  for (const auto& row : other.rows_) {
    if (is_full()) return;
    insert(row);
  }
}

bool operator<(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return a.rows_ < b.rows_;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.p() != b.p() || a.dim() != b.dim()) throw Error(ErrorKind::ShapeMismatch, "different ambient spaces");
  const std::size_t d = a.dim();
  // rows (u | u) for u in a and (v | 0) for v in b; echelon rows with zero
  // left half carry the intersection in their right half
  SubspaceBasis z(a.p(), 2 * d);
  for (const auto& u : a.rows()) {
    Vector w(2 * d);
    std::copy(u.begin(), u.end(), w.begin());
    std::copy(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(d));
    z.insert(w);
  }
  for (const auto& v : b.rows()) {
    Vector w(2 * d, 0);
    std::copy(v.begin(), v.end(), w.begin());
    z.insert(w);
  }
  SubspaceBasis out(a.p(), d);
  for (std::size_t k = 0; k < z.rank(); ++k) {
    if (z.pivots()[k] < d) continue;
    const Vector& w = z.rows()[k];
    out.insert(std::span<const std::uint32_t>(w).subspan(d));
  }
  return out;
}

SubspaceBasis join(const SubspaceBasis& a, const SubspaceBasis& b) {
  SubspaceBasis out = a;
  out.absorb(b);
  return out;
}

}  // namespace linclon

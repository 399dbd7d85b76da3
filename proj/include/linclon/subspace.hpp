#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace linclon {

using Vector = std::vector<std::uint32_t>;

/// A subspace of F_p^d held as its reduced row-echelon basis.
///
/// Rows are sorted by pivot column, every pivot is 1 and is the only nonzero
/// entry of its column, so two bases are equal iff the subspaces are equal.
class SubspaceBasis {
 public:
  SubspaceBasis(std::uint32_t p, std::size_t dim);

  static SubspaceBasis span(std::uint32_t p, std::size_t dim, std::span<const Vector> vectors);
  static SubspaceBasis full(std::uint32_t p, std::size_t dim);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_full() const noexcept { return rows_.size() == dim_; }
  bool is_zero() const noexcept { return rows_.empty(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Residual of v after elimination against the basis.
  Vector reduce(std::span<const std::uint32_t> v) const;
  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const SubspaceBasis& other) const;

  /// Adds v to the span; returns false when v was already a member.
  bool insert(std::span<const std::uint32_t> v);
  /// Inserts every row of other.
  void absorb(const SubspaceBasis& other);

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.p_ == b.p_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }
  /// Canonical order: rank first, then rows lexicographically.
  friend bool operator<(const SubspaceBasis& a, const SubspaceBasis& b);

 private:
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  void axpy(Vector& v, std::uint32_t coef, const Vector& row) const;

  std::uint32_t p_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> inverses_;
};

/// Subspace intersection (Zassenhaus).
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
/// Span of the union.
SubspaceBasis join(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace linclon

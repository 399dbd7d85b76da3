#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linclon/ffield.hpp"

namespace linclon {

/// Subset of the factor positions [m] of K, bit j for factor j (0-based).
class FactorSet {
 public:
  constexpr FactorSet() = default;
  constexpr explicit FactorSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr FactorSet all(std::size_t m) { return FactorSet((std::uint32_t{1} << m) - 1); }
  static constexpr FactorSet single(std::size_t j) { return FactorSet(std::uint32_t{1} << j); }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool contains(std::size_t j) const noexcept { return (bits_ >> j & 1u) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept { return __builtin_popcount(bits_); }
  constexpr bool subset_of(FactorSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  constexpr FactorSet with(std::size_t j) const noexcept { return FactorSet(bits_ | std::uint32_t{1} << j); }

  friend constexpr bool operator==(FactorSet, FactorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

using PointIndex = std::uint64_t;
/// A point of K^n: n ring elements, argument 1 first.
using Point = std::vector<RingElement>;

/// Row-major matrix over one factor field of K.
struct BlockMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

  static BlockMatrix zero(std::size_t rows, std::size_t cols) {
    return BlockMatrix{rows, cols, std::vector<std::uint32_t>(rows * cols, 0)};
  }
  static BlockMatrix identity(std::size_t n) {
    BlockMatrix m = zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;
};

/// |K|^n, throwing BudgetExceeded past `limit`.
std::uint64_t table_size(const ProductRing& K, unsigned n, std::uint64_t limit = std::uint64_t{1} << 32);

/// Dense table of f: K^n -> F. Values are stored per factor of F, each a
/// vector of length |K|^n indexed by PointIndex.
class FiniteFunction {
 public:
  /// The zero function.
  FiniteFunction(ProductRing domain, ProductRing codomain, unsigned arity);

  const ProductRing& domain() const noexcept { return domain_; }
  const ProductRing& codomain() const noexcept { return codomain_; }
  unsigned arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return size_; }

  std::span<const std::uint32_t> component(std::size_t i) const { return components_.at(i); }
  std::span<std::uint32_t> component(std::size_t i) { return components_.at(i); }

  RingElement at(PointIndex x) const;
  void set(PointIndex x, const RingElement& value);
  bool is_zero_at(PointIndex x) const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) {
    return a.arity_ == b.arity_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.components_ == b.components_;
  }

 private:
  ProductRing domain_;
  ProductRing codomain_;
  unsigned arity_;
  std::uint64_t size_;
  std::vector<std::vector<std::uint32_t>> components_;
};

PointIndex encode_point(const ProductRing& K, std::span<const RingElement> x);
Point decode_point(const ProductRing& K, unsigned n, PointIndex index);

RingElement eval(const FiniteFunction& f, std::span<const RingElement> x);

FiniteFunction constant_function(const ProductRing& K, const ProductRing& F, unsigned n, const RingElement& c);

/// Hadamard product a*f.
FiniteFunction f_scale(const RingElement& a, const FiniteFunction& f);
FiniteFunction f_plus(const FiniteFunction& f, const FiniteFunction& g);

/// g(x_1,...,x_m) = f(A_1 x_1^t, ..., A_m x_m^t), where x_j in K_j^l collects
/// the j-th coordinates of the l arguments and A_j is n x l over K_j.
FiniteFunction substitute(const FiniteFunction& f, std::span<const BlockMatrix> mats);

/// Factors i such that f changes when only the i-th coordinate block moves.
FactorSet dep_set(const FiniteFunction& f);

/// x^(J): keeps K_i coordinates for i in J in every argument, zeroes the rest.
Point zero_mask(const ProductRing& K, std::span<const RingElement> x, FactorSet J);
PointIndex zero_mask_index(const ProductRing& K, unsigned n, PointIndex x, FactorSet J);

/// f restricted to the first h factors, trailing blocks fixed to zero.
FiniteFunction restrict(const FiniteFunction& f, std::size_t h);

/// The ring made of the first h factors of K.
ProductRing leading_factors(const ProductRing& K, std::size_t h);

}  // namespace linclon

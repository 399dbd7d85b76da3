#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linclon/funcspace.hpp"
#include "linclon/subspace.hpp"

namespace linclon {

inline constexpr std::uint64_t kDefaultBudget = 100000;

struct ClosureOptions {
  /// Maximum table entries |K|^k per function.
  std::uint64_t budget = kDefaultBudget;
  bool parallel = true;
};

/// The arity-k part C^[k] of a clonoid: one subspace of F_{p_i}^{|K|^k} per
/// factor of F. As a set C^[k] is the product of the parts, because scaling
/// by the idempotents of F separates the components.
class ClonoidSlice {
 public:
  ClonoidSlice(ProductRing K, ProductRing F, unsigned arity, std::vector<SubspaceBasis> parts);

  /// The bottom slice (only the zero function).
  static ClonoidSlice zero(const ProductRing& K, const ProductRing& F, unsigned arity);

  const ProductRing& domain() const noexcept { return K_; }
  const ProductRing& codomain() const noexcept { return F_; }
  unsigned arity() const noexcept { return arity_; }
  const std::vector<SubspaceBasis>& parts() const noexcept { return parts_; }
  const SubspaceBasis& part(std::size_t i) const { return parts_.at(i); }
  std::vector<std::size_t> ranks() const;

  friend bool operator==(const ClonoidSlice& a, const ClonoidSlice& b) {
    return a.arity_ == b.arity_ && a.K_ == b.K_ && a.F_ == b.F_ && a.parts_ == b.parts_;
  }

 private:
  ProductRing K_;
  ProductRing F_;
  unsigned arity_;
  std::vector<SubspaceBasis> parts_;
};

/// C^[k] of Clg(generators): per factor of F, the span of every substitution
/// instance g(A_1 x_1^t, ..., A_m x_m^t) with A_j in K_j^{n x k}.
ClonoidSlice closure_slice(const ProductRing& K, const ProductRing& F, std::span<const FiniteFunction> generators,
                           unsigned k, const ClosureOptions& options = {});

bool member(const FiniteFunction& f, const ClonoidSlice& slice);

/// Functions that generate the slice as an F-module: each basis row of part
/// i placed in component i, zero elsewhere.
std::vector<FiniteFunction> basis_functions(const ClonoidSlice& slice);

/// Normalized generators l_1..l_m (l_j in K_j^n, first nonzero coordinate 1)
/// of the product of lines {(lambda_1 l_1, ..., lambda_m l_m)}.
struct LineProduct {
  std::vector<std::vector<std::uint32_t>> generators;

  friend bool operator==(const LineProduct&, const LineProduct&) = default;
};

/// Invertible A_j with A_j b_j = e_1 and substitute(g, A) = f.
std::vector<BlockMatrix> line_transport(const FiniteFunction& f, const FiniteFunction& g, const LineProduct& lines);

/// k-ary function equal to g on the e_1 lines, i.e. t_k(x, 0, ..., 0) = g(x),
/// and zero elsewhere. g must be unary and 0-absorbing in [m].
FiniteFunction build_t_k(const FiniteFunction& g, unsigned k);

/// Alternating sum over the maps (x_1,..,x_k) -> (x_1 - a x_2, x_3, ..) and
/// (x_1,..,x_k) -> (a x_2, x_3, ..) applied blockwise to t_{k-1}; equals
/// (prod q_i) * t_k.
FiniteFunction build_r_k(const FiniteFunction& g, unsigned k);

/// The (k-1) x k matrices of the two map families for one field, in the
/// summation order of build_r_k: first the a-shears (sign +), then the
/// a-scalings with a != 0 (sign -).
std::vector<std::pair<BlockMatrix, bool>> shear_maps(const FieldSpec& field, unsigned k);

/// All prod_i (q_i^n - 1)/(q_i - 1) products of lines, each listed once.
std::vector<LineProduct> lines_enumerate(const ProductRing& K, unsigned n);

/// f on the scalar grid of L, zero elsewhere.
FiniteFunction line_component(const FiniteFunction& f, const LineProduct& L);

/// Points (lambda_1 l_1, ..., lambda_m l_m) indexed by lambda in K.
std::vector<PointIndex> line_points(const ProductRing& K, unsigned n, const LineProduct& L);

struct GenerationVerdict {
  unsigned k = 0;
  std::vector<std::size_t> rank_C;
  std::vector<std::size_t> rank_unary;
  bool equal = false;
};

/// Compares Clg(generators)^[k] with Clg(C^[1])^[k] for k = 1..k_max.
std::vector<GenerationVerdict> unary_generation_check(const ProductRing& K, const ProductRing& F,
                                                      std::span<const FiniteFunction> generators, unsigned k_max,
                                                      const ClosureOptions& options = {});

}  // namespace linclon

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linclon/funcspace.hpp"
#include "linclon/subspace.hpp"

/// Hot loops, each as a serial reference and an OpenMP version. The two must
/// return identical results; the canonical echelon form makes the merge order
/// irrelevant.
namespace linclon::kernels {

/// Number of matrix tuples (A_1..A_m), A_j in K_j^{n x k}.
std::uint64_t substitution_count(const ProductRing& K, unsigned n, unsigned k);

/// The t-th matrix tuple in mixed-radix order (factor 1, row 1, column 1
/// most significant).
std::vector<BlockMatrix> substitution_at(const ProductRing& K, unsigned n, unsigned k, std::uint64_t t);

/// Per factor of F, the span of all substitution instances of the generators at arity k.
std::vector<SubspaceBasis> substitution_span_serial(const ProductRing& K, const ProductRing& F,
                                                    std::span<const FiniteFunction> generators, unsigned k);
std::vector<SubspaceBasis> substitution_span_omp(const ProductRing& K, const ProductRing& F,
                                                 std::span<const FiniteFunction> generators, unsigned k);

/// Span of the orbit {tau_a * v : a in K} in F_p^{|K|}.
SubspaceBasis orbit_span(const ProductRing& K, std::uint32_t p, std::span<const std::uint32_t> v);

/// Orbit spans of every projective representative of F_p^{|K|} (first
/// nonzero entry 1), deduplicated and sorted canonically.
std::vector<SubspaceBasis> cyclic_spans_serial(const ProductRing& K, std::uint32_t p);
std::vector<SubspaceBasis> cyclic_spans_omp(const ProductRing& K, std::uint32_t p);

/// Every subspace of F_p^d invariant under the action of K, by walking all
/// reduced echelon forms; sorted canonically.
std::vector<SubspaceBasis> invariant_subspaces_serial(const ProductRing& K, std::uint32_t p);
std::vector<SubspaceBasis> invariant_subspaces_omp(const ProductRing& K, std::uint32_t p);

bool is_invariant(const ProductRing& K, const SubspaceBasis& basis);

}  // namespace linclon::kernels

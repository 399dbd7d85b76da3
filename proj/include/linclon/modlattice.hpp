#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linclon/clonoid.hpp"
#include "linclon/ffield.hpp"
#include "linclon/subspace.hpp"

namespace linclon {

using BigInt = boost::multiprecision::cpp_int;

/// f -> (x -> f(a x)) on F_p^{|K|}. Row x has its single 1 in column a x.
class ActionMatrix {
 public:
  ActionMatrix(const ProductRing& K, const RingElement& a, std::uint32_t p);

  const RingElement& element() const noexcept { return a_; }
  std::uint32_t p() const noexcept { return p_; }
  /// image()[x] = index of a x.
  const std::vector<std::uint64_t>& image() const noexcept { return image_; }

  std::vector<std::vector<std::uint32_t>> dense() const;
  Vector apply(std::span<const std::uint32_t> f) const;

 private:
  RingElement a_;
  std::uint32_t p_;
  std::vector<std::uint64_t> image_;
};

ActionMatrix action_matrix(const ProductRing& K, const RingElement& a, std::uint32_t p);

/// An F_p[K^x]-submodule of F_p^{|K|}.
struct Submodule {
  SubspaceBasis basis;

  std::size_t rank() const noexcept { return basis.rank(); }
  friend bool operator==(const Submodule&, const Submodule&) = default;
};

Submodule cyclic_submodule(const ProductRing& K, std::uint32_t p, std::span<const std::uint32_t> v);

/// Meet is intersection. Join is the plain sum: if U and V are invariant,
/// tau_a(u + v) = tau_a u + tau_a v lies in U + V.
Submodule sub_meet(const Submodule& a, const Submodule& b);
Submodule sub_join(const Submodule& a, const Submodule& b);

enum class EnumerationStrategy { JoinClosure, BruteForce, Both };

std::optional<EnumerationStrategy> parse_strategy(const std::string& name);
std::string to_string(EnumerationStrategy s);

struct EnumerationOptions {
  EnumerationStrategy strategy = EnumerationStrategy::JoinClosure;
  /// Max seed vectors p^{|K|} for join-closure.
  std::uint64_t seed_budget = std::uint64_t{1} << 24;
  /// Max number of subspaces of F_p^{|K|} walked by brute force.
  std::uint64_t subspace_budget = 2'000'000;
  bool parallel = true;
};

/// All submodules, sorted canonically (rank, then basis rows), with the
/// covering relation as index pairs (lower, upper).
struct SubmoduleLattice {
  std::uint32_t p;
  ProductRing K;
  std::vector<Submodule> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const SubspaceBasis& basis) const;
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elements.size() - 1; }
};

SubmoduleLattice enumerate_submodules(std::uint32_t p, const ProductRing& K, const EnumerationOptions& options = {});

/// Covering pairs of a family ordered by inclusion.
std::vector<std::pair<std::size_t, std::size_t>> covering_relation(const std::vector<Submodule>& elements);

struct GaussianBinomial {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t q = 2;
  BigInt value;
};

GaussianBinomial gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

/// prod_i sum_{1 <= r <= n} [n choose r]_{p_i} with n = |K|.
BigInt clonoid_count_bound(const ProductRing& F, const ProductRing& K);

/// The lattice of clonoids with codomain F = prod F_{p_i}, as the direct
/// product of one submodule lattice per factor. Elements are index tuples,
/// flattened big-endian (part 1 most significant).
class ProductLattice {
 public:
  explicit ProductLattice(std::vector<SubmoduleLattice> parts);

  const std::vector<SubmoduleLattice>& parts() const noexcept { return parts_; }
  const ProductRing& domain() const noexcept { return K_; }
  const ProductRing& codomain() const noexcept { return F_; }
  std::uint64_t size() const noexcept { return size_; }

  std::vector<std::size_t> tuple_at(std::uint64_t index) const;
  std::uint64_t index_of(std::span<const std::size_t> tuple) const;
  bool leq(std::span<const std::size_t> a, std::span<const std::size_t> b) const;
  std::vector<std::size_t> meet(std::span<const std::size_t> a, std::span<const std::size_t> b) const;
  std::vector<std::size_t> join(std::span<const std::size_t> a, std::span<const std::size_t> b) const;
  /// Covers in flattened indices: one coordinate covers, the rest equal.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> covers() const;

  /// Projection of a unary clonoid part onto its per-factor submodules.
  std::vector<std::size_t> rho(const ClonoidSlice& unary) const;
  /// The unary part of the clonoid assembled from one submodule per factor.
  ClonoidSlice psi(std::span<const std::size_t> tuple) const;

 private:
  std::vector<SubmoduleLattice> parts_;
  ProductRing K_;
  ProductRing F_;
  std::uint64_t size_ = 1;
};

ProductLattice lattice_assemble(std::vector<SubmoduleLattice> parts);

/// Per factor of F, the unary part as a submodule. Throws NotInvariant if a
/// part fails invariance.
std::vector<Submodule> unary_fingerprint(const ClonoidSlice& slice);

std::string to_dot(const SubmoduleLattice& lattice);
std::string to_dot(const ProductLattice& lattice);

}  // namespace linclon

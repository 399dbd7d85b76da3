#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace linclon {

/// An element of GF(p^k): base-p digits of `value`, least significant first,
/// are the coefficients of the representing polynomial.
struct FieldElement {
  std::uint32_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^k) given by a monic irreducible polynomial over F_p.
///
/// Prime fields (k = 1) compute directly mod p; extension fields use
/// addition/multiplication tables built once at construction and shared
/// between copies.
class FieldSpec {
 public:
  /// Validates p and the polynomial. Without `poly` and with k > 1 the
  /// lexicographically least monic irreducible of degree k is chosen, with
  /// coefficients compared constant term first.
  static FieldSpec make(std::uint32_t p, std::uint32_t k = 1,
                        std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime() const noexcept { return k_ == 1; }
  const std::vector<std::uint32_t>& poly() const noexcept { return poly_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (k_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return tables_->add[a * q_ + b];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    return tables_->mul[a * q_ + b];
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return tables_->neg[a];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  /// Throws DivisionByZero for 0.
  std::uint32_t inv(std::uint32_t a) const;

  bool contains(std::uint32_t a) const noexcept { return a < q_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.poly_ == b.poly_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> add, mul, neg, inv;
  };

  FieldSpec() = default;

  std::uint32_t p_ = 2;
  std::uint32_t k_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> poly_{0, 1};
  std::shared_ptr<const Tables> tables_;
};

FieldSpec field_make(std::uint32_t p, std::uint32_t k = 1,
                     std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

FieldElement f_add(FieldElement a, FieldElement b, const FieldSpec& spec);
FieldElement f_mul(FieldElement a, FieldElement b, const FieldSpec& spec);
FieldElement f_neg(FieldElement a, const FieldSpec& spec);
FieldElement f_inv(FieldElement a, const FieldSpec& spec);

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility over F_p by trial division against every monic polynomial
/// of degree 1..deg/2. Coefficients constant term first.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

struct RingElement {
  std::vector<FieldElement> coords;

  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// K = F_{q_1} x ... x F_{q_m}. Elements are indexed big-endian over the
/// factors: index = sum_j value(a_j) * prod_{j' > j} q_{j'}.
class ProductRing {
 public:
  static ProductRing make(std::vector<FieldSpec> factors);

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const FieldSpec& factor(std::size_t j) const { return factors_.at(j); }
  const std::vector<FieldSpec>& factors() const noexcept { return factors_; }
  std::uint64_t order() const noexcept { return order_; }
  /// Weight of factor j in the element index.
  std::uint64_t stride(std::size_t j) const noexcept { return strides_[j]; }

  /// Coordinate j of the element with index `e`.
  std::uint32_t coord(std::uint64_t e, std::size_t j) const noexcept {
    return static_cast<std::uint32_t>(e / strides_[j] % factors_[j].q());
  }

  std::uint64_t encode(const RingElement& e) const;
  RingElement decode(std::uint64_t index) const;
  bool contains(const RingElement& e) const noexcept;

  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const noexcept;
  /// Index of the element keeping only the coordinates whose bit is set in `mask`.
  std::uint64_t mask_index(std::uint64_t e, std::uint32_t mask) const noexcept;

  RingElement zero() const;
  RingElement one() const;

  friend bool operator==(const ProductRing& a, const ProductRing& b) noexcept {
    return a.factors_ == b.factors_;
  }

 private:
  ProductRing() = default;

  std::vector<FieldSpec> factors_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

ProductRing ring_make(std::vector<FieldSpec> factors);
RingElement ring_add(const RingElement& a, const RingElement& b, const ProductRing& spec);
RingElement ring_mul(const RingElement& a, const RingElement& b, const ProductRing& spec);
/// All elements in index order.
std::vector<RingElement> ring_elements(const ProductRing& spec);
/// Elements with every coordinate nonzero, in index order.
std::vector<RingElement> ring_units(const ProductRing& spec);

bool coprimality_check(const ProductRing& K, const ProductRing& F) noexcept;
/// Throws NotCoprime unless gcd(|K|, |F|) = 1.
void require_coprime(const ProductRing& K, const ProductRing& F);

/// Shorthand for F_{p_1} x ... x F_{p_s} over prime fields.
ProductRing prime_ring(std::initializer_list<std::uint32_t> primes);

}  // namespace linclon

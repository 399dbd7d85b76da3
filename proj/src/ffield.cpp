#include "linclon/ffield.hpp"

#include <numeric>
#include <string>

#include "linclon/error.hpp"

namespace linclon {

namespace {

constexpr std::uint32_t kMaxPrime = 65521;
constexpr std::uint32_t kMaxExtensionOrder = 1024;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, coefficients in F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t t = std::uint64_t{lead} * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint32_t value, std::uint32_t p, std::uint32_t k) {
  Poly d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // every monic divisor candidate of degree d
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1);
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t k,
                          std::optional<std::vector<std::uint32_t>> poly) {
  if (!linclon::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw Error(ErrorKind::BadDegree, "characteristic too large");
  if (k == 0) throw Error(ErrorKind::BadDegree, "extension degree must be positive");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (k > 1 && q > kMaxExtensionOrder)
      throw Error(ErrorKind::BadDegree, "extension fields are limited to order <= 1024");
  }

  FieldSpec spec;
  spec.p_ = p;
  spec.k_ = k;
  spec.q_ = static_cast<std::uint32_t>(q);

  if (poly) {
    if (poly->size() != k + 1 || poly->back() != 1)
      throw Error(ErrorKind::BadDegree, "polynomial must be monic of degree k");
    for (auto c : *poly)
      if (c >= p) throw Error(ErrorKind::BadDegree, "polynomial coefficient out of range");
    if (!is_irreducible(*poly, p)) throw Error(ErrorKind::Reducible, "supplied polynomial factors");
    spec.poly_ = *poly;
  } else if (k == 1) {
    spec.poly_ = {0, 1};
  } else {
    // constant term is the most significant key, so it is the slowest digit
    bool found = false;
    const std::uint64_t count = q;
    for (std::uint64_t c = 0; c < count && !found; ++c) {
      Poly cand(k + 1);
      std::uint64_t rest = c;
      for (std::size_t i = k; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      cand[k] = 1;
      if (is_irreducible(cand, p)) {
        spec.poly_ = cand;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::Reducible, "no irreducible polynomial found");
  }

  if (k > 1) {
    auto t = std::make_shared<Tables>();
    const std::uint32_t qq = spec.q_;
    t->add.resize(std::size_t{qq} * qq);
    t->mul.resize(std::size_t{qq} * qq);
    t->neg.resize(qq);
    t->inv.assign(qq, 0);
    for (std::uint32_t a = 0; a < qq; ++a) {
      const Poly da = digits(a, p, k);
      Poly na(k);
      for (std::uint32_t i = 0; i < k; ++i) na[i] = (p - da[i]) % p;
      t->neg[a] = undigits(na, p);
      for (std::uint32_t b = 0; b < qq; ++b) {
        const Poly db = digits(b, p, k);
        Poly s(k);
        for (std::uint32_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
        t->add[std::size_t{a} * qq + b] = undigits(s, p);
        Poly prod(2 * k - 1, 0);
        for (std::uint32_t i = 0; i < k; ++i)
          for (std::uint32_t j = 0; j < k; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
        Poly r = poly_mod(prod, spec.poly_, p);
        r.resize(k, 0);
        const std::uint32_t m = undigits(r, p);
        t->mul[std::size_t{a} * qq + b] = m;
        if (m == 1) t->inv[a] = b;
      }
    }
    spec.tables_ = std::move(t);
  }
  return spec;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (k_ == 1) return pow_mod(a, p_ - 2, p_);
  return tables_->inv[a];
}

FieldSpec field_make(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> poly) {
  return FieldSpec::make(p, k, std::move(poly));
}

namespace {
void check_element(FieldElement a, const FieldSpec& spec) {
  if (!spec.contains(a.value)) throw Error(ErrorKind::InvalidElement, "element outside field");
}
}  // namespace

FieldElement f_add(FieldElement a, FieldElement b, const FieldSpec& spec) {
  check_element(a, spec);
  check_element(b, spec);
  return {spec.add(a.value, b.value)};
}

FieldElement f_mul(FieldElement a, FieldElement b, const FieldSpec& spec) {
  check_element(a, spec);
  check_element(b, spec);
  return {spec.mul(a.value, b.value)};
}

FieldElement f_neg(FieldElement a, const FieldSpec& spec) {
  check_element(a, spec);
  return {spec.neg(a.value)};
}

FieldElement f_inv(FieldElement a, const FieldSpec& spec) {
  check_element(a, spec);
  return {spec.inv(a.value)};
}

// ---------------------------------------------------------------------------

ProductRing ProductRing::make(std::vector<FieldSpec> factors) {
  if (factors.empty()) throw Error(ErrorKind::EmptyProduct, "product ring needs at least one factor");
  if (factors.size() > 16) throw Error(ErrorKind::BadFactorCount, "at most 16 factors are supported");
  ProductRing r;
  r.factors_ = std::move(factors);
  r.strides_.assign(r.factors_.size(), 1);
  std::uint64_t s = 1;
  for (std::size_t j = r.factors_.size(); j-- > 0;) {
    r.strides_[j] = s;
    s *= r.factors_[j].q();
    if (s > (std::uint64_t{1} << 40)) throw Error(ErrorKind::BudgetExceeded, "product ring too large");
  }
  r.order_ = s;
  return r;
}

std::uint64_t ProductRing::encode(const RingElement& e) const {
  if (e.coords.size() != factors_.size())
    throw Error(ErrorKind::WrongLength, "ring element has wrong number of coordinates");
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (!factors_[j].contains(e.coords[j].value))
      throw Error(ErrorKind::InvalidElement, "coordinate outside its field");
    idx += e.coords[j].value * strides_[j];
  }
  return idx;
}

RingElement ProductRing::decode(std::uint64_t index) const {
  if (index >= order_) throw Error(ErrorKind::InvalidElement, "element index out of range");
  RingElement e;
  e.coords.resize(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) e.coords[j].value = coord(index, j);
  return e;
}

bool ProductRing::contains(const RingElement& e) const noexcept {
  if (e.coords.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    if (!factors_[j].contains(e.coords[j].value)) return false;
  return true;
}

std::uint64_t ProductRing::add_index(std::uint64_t a, std::uint64_t b) const noexcept {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    idx += factors_[j].add(coord(a, j), coord(b, j)) * strides_[j];
  return idx;
}

std::uint64_t ProductRing::mul_index(std::uint64_t a, std::uint64_t b) const noexcept {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    idx += factors_[j].mul(coord(a, j), coord(b, j)) * strides_[j];
  return idx;
}

std::uint64_t ProductRing::mask_index(std::uint64_t e, std::uint32_t mask) const noexcept {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    if (mask >> j & 1u) idx += coord(e, j) * strides_[j];
  return idx;
}

RingElement ProductRing::zero() const {
  return RingElement{std::vector<FieldElement>(factors_.size())};
}

RingElement ProductRing::one() const {
  return RingElement{std::vector<FieldElement>(factors_.size(), FieldElement{1})};
}

ProductRing ring_make(std::vector<FieldSpec> factors) { return ProductRing::make(std::move(factors)); }

RingElement ring_add(const RingElement& a, const RingElement& b, const ProductRing& spec) {
  return spec.decode(spec.add_index(spec.encode(a), spec.encode(b)));
}

RingElement ring_mul(const RingElement& a, const RingElement& b, const ProductRing& spec) {
  return spec.decode(spec.mul_index(spec.encode(a), spec.encode(b)));
}

std::vector<RingElement> ring_elements(const ProductRing& spec) {
  std::vector<RingElement> out;
  out.reserve(spec.order());
  for (std::uint64_t e = 0; e < spec.order(); ++e) out.push_back(spec.decode(e));
  return out;
}

std::vector<RingElement> ring_units(const ProductRing& spec) {
  std::vector<RingElement> out;
  for (std::uint64_t e = 0; e < spec.order(); ++e) {
    RingElement r = spec.decode(e);
    bool unit = true;
    for (auto c : r.coords) unit = unit && c.value != 0;
    if (unit) out.push_back(std::move(r));
  }
  return out;
}

bool coprimality_check(const ProductRing& K, const ProductRing& F) noexcept {
  return std::gcd(K.order(), F.order()) == 1;
}

void require_coprime(const ProductRing& K, const ProductRing& F) {
  if (!coprimality_check(K, F))
    throw Error(ErrorKind::NotCoprime,
                "|K| = " + std::to_string(K.order()) + " and |F| = " + std::to_string(F.order()) +
                    " are not coprime");
}

ProductRing prime_ring(std::initializer_list<std::uint32_t> primes) {
  std::vector<FieldSpec> f;
  for (auto p : primes) f.push_back(FieldSpec::make(p));
  return ProductRing::make(std::move(f));
}

}  // namespace linclon

#include <doctest.h>

#include <cmath>

#include "linclon/error.hpp"
#include "linclon/ffield.hpp"

using namespace linclon;

namespace {

// polynomial product mod (poly, p), constant term first, by schoolbook
std::vector<std::uint32_t> poly_mulmod(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                                       const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  std::vector<std::uint32_t> r(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = r[d];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= k; ++t) r[d - k + t] = (r[d - k + t] + (p - c) * m[t]) % p;
  }
  r.resize(k);
  return r;
}

std::vector<std::uint32_t> digits(std::uint32_t v, std::uint32_t p, std::size_t k) {
  std::vector<std::uint32_t> d(k);
  for (auto& x : d) x = v % p, v /= p;
  return d;
}

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    const FieldSpec f = FieldSpec::make(p);
    CHECK(f.q() == p);
    for (std::uint32_t a = 0; a < p; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == (a + b) % p);
        CHECK(f.mul(a, b) == a * b % p);
      }
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FieldSpec::make(4), Error);
  try {
    FieldSpec::make(9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  try {
    FieldSpec::make(2, 2, std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1 = (x+1)^2
    FAIL("reducible accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Reducible);
  }
  try {
    FieldSpec::make(3).inv(0);
    FAIL("inverse of zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  try {
    ProductRing::make({});
    FAIL("empty product");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyProduct);
  }
}

TEST_CASE("irreducibility") {
  const std::vector<std::uint32_t> x2x1{1, 1, 1};
  CHECK(is_irreducible(x2x1, 2));
  const std::vector<std::uint32_t> x2p1{1, 0, 1};
  CHECK(!is_irreducible(x2p1, 2));
  CHECK(is_irreducible(x2p1, 3));
  // x^3 + x + 1 irreducible over F_2, x^3 + x^2 + x + 1 = (x+1)^3 is not
  CHECK(is_irreducible(std::vector<std::uint32_t>{1, 1, 0, 1}, 2));
  CHECK(!is_irreducible(std::vector<std::uint32_t>{1, 1, 1, 1}, 2));
}

TEST_CASE("default polynomial is the least irreducible, constant term first") {
  CHECK(FieldSpec::make(2, 2).poly() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(FieldSpec::make(3, 2).poly() == std::vector<std::uint32_t>{1, 0, 1});
  // x^3 + x^2 + 1 precedes x^3 + x + 1 when read from the constant term
  CHECK(FieldSpec::make(2, 3).poly() == std::vector<std::uint32_t>{1, 0, 1, 1});
}

TEST_CASE("extension field tables agree with polynomial arithmetic") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}}) {
    const FieldSpec f = FieldSpec::make(p, k);
    CHECK(f.q() == static_cast<std::uint32_t>(std::pow(p, k)));
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        const auto prod = poly_mulmod(digits(a, p, k), digits(b, p, k), f.poly(), p);
        std::uint32_t expect = 0;
        for (std::size_t i = k; i-- > 0;) expect = expect * p + prod[i];
        CHECK(f.mul(a, b) == expect);
        const auto da = digits(a, p, k), db = digits(b, p, k);
        std::uint32_t sum = 0;
        for (std::size_t i = k; i-- > 0;) sum = sum * p + (da[i] + db[i]) % p;
        CHECK(f.add(a, b) == sum);
      }
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("product ring indexing is big-endian over factors") {
  const ProductRing K = prime_ring({2, 3});
  CHECK(K.order() == 6);
  CHECK(K.stride(0) == 3);
  CHECK(K.stride(1) == 1);
  const auto elems = ring_elements(K);
  REQUIRE(elems.size() == 6);
  for (std::uint64_t e = 0; e < 6; ++e) {
    CHECK(K.encode(elems[e]) == e);
    CHECK(K.coord(e, 0) == e / 3);
    CHECK(K.coord(e, 1) == e % 3);
  }
  CHECK(K.encode(K.one()) == 4);
  CHECK(ring_units(K).size() == 2);
  for (std::uint64_t a = 0; a < 6; ++a)
    for (std::uint64_t b = 0; b < 6; ++b) {
      CHECK(K.add_index(a, b) == K.encode(ring_add(elems[a], elems[b], K)));
      CHECK(K.mul_index(a, b) == (a / 3 * (b / 3) % 2) * 3 + a % 3 * (b % 3) % 3);
    }
  CHECK(K.mask_index(5, 0b10) == 2);  // keep factor 1 (bit 1 is factor 1): (1,2) -> (0,2)
}

TEST_CASE("coprimality") {
  CHECK(coprimality_check(prime_ring({3}), prime_ring({2})));
  CHECK(coprimality_check(prime_ring({2, 3}), prime_ring({5})));
  CHECK(!coprimality_check(prime_ring({2, 3}), prime_ring({3, 5})));
  CHECK(!coprimality_check(ProductRing::make({FieldSpec::make(2, 2)}), prime_ring({2})));
  try {
    require_coprime(prime_ring({2}), prime_ring({2}));
    FAIL("coprimality ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCoprime);
  }
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prmhull/field.hpp"

using namespace prmhull;

TEST_CASE("field construction rejects non prime powers") {
  for (std::uint32_t q : {0u, 1u, 6u, 10u, 12u, 100u, 65537u, 1u << 17}) {
    CHECK_THROWS_AS(Field::make(q), NotPrimePower);
  }
  const Field f = Field::make(1u << 16);
  CHECK(f.p() == 2);
  CHECK(f.e() == 16);
  CHECK(!f.table_driven());
}

TEST_CASE("prime field is integer arithmetic mod p") {
  const Field f = Field::make(5);
  CHECK(f.p() == 5);
  CHECK(f.e() == 1);
  CHECK(f.mul(3, 4) == 2);
  for (elem_t a = 0; a < 5; ++a) {
    for (elem_t b = 0; b < 5; ++b) {
      CHECK(f.add(a, b) == (a + b) % 5);
      CHECK(f.sub(a, b) == (a + 5 - b) % 5);
      CHECK(f.mul(a, b) == (a * b) % 5);
    }
  }
}

TEST_CASE("F_4 multiplication by polynomial reduction") {
  const Field f = Field::make(4);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  // x has index 2; x * x = x + 1 has index 3.
  CHECK(f.mul(2, 2) == 3);
  for (elem_t a = 0; a < 4; ++a)
    for (elem_t b = 0; b < 4; ++b) CHECK(f.mul(a, b) == oracle::poly_mul(a, b, 2, {1, 1, 1}));
}

TEST_CASE("canonical modulus is the smallest irreducible, constant term first") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 125u}) {
    CAPTURE(q);
    const Field f = Field::make(q);
    const auto want = oracle::smallest_irreducible(f.p(), f.e());
    CHECK(f.modulus() == want);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; b += 1 + q / 16)
        CHECK(f.mul(static_cast<elem_t>(a), static_cast<elem_t>(b)) == oracle::poly_mul(a, b, f.p(), want));
  }
  CHECK(Field::make(8).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(Field::make(9).modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("field axioms over full tables") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    CAPTURE(q);
    const Field f = Field::make(q);
    bool ok = true;
    for (elem_t a = 0; a < q; ++a) {
      ok = ok && f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
      for (elem_t b = 0; b < q; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (elem_t c = 0; c < q; ++c) {
          ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
          ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("sampled axioms above the table limit") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {257u, 343u, 729u, 1024u, 59049u, 65536u}) {
    CAPTURE(q);
    const Field f = Field::make(q);
    CHECK(!f.table_driven());
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int i = 0; i < 300; ++i) {
      const auto a = static_cast<elem_t>(pick(rng)), b = static_cast<elem_t>(pick(rng)),
                 c = static_cast<elem_t>(pick(rng));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q) == a);
    }
  }
  const Field f = Field::make(1024);
  CHECK(f.mul(513, 77) == oracle::poly_mul(513, 77, 2, f.modulus()));
  CHECK(oracle::irreducible_by_zero_divisors(2, Field::make(256).modulus()));
}

TEST_CASE("Fermat and the empty product") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const Field f = Field::make(q);
    CHECK(f.pow(0, 0) == 1);
    for (elem_t a = 0; a < q; ++a) {
      CHECK(f.pow(a, q) == a);
      if (a != 0) CHECK(f.pow(a, q - 1) == 1);
    }
  }
  const Field f = Field::make(5);
  CHECK(pow(f.zero(), 0) == f.one());
}

TEST_CASE("multiplicative group is cyclic") {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 16u, 27u}) {
    const Field f = Field::make(q);
    bool found = false;
    for (elem_t g = 1; g < q && !found; ++g) {
      std::uint32_t order = 1;
      for (elem_t x = g; x != 1; x = f.mul(x, g)) ++order;
      found = order == q - 1;
    }
    CHECK(found);
  }
}

TEST_CASE("power sums") {
  CHECK(power_sum(Field::make(5), 4).index() == 4);
  CHECK(power_sum(Field::make(5), 2).index() == 0);
  CHECK(power_sum(Field::make(3), 0).index() == 0);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = Field::make(q);
    for (std::uint64_t r = 0; r <= 2 * q; ++r) {
      const elem_t want = (r > 0 && r % (q - 1) == 0) ? f.neg(1) : 0;
      CHECK(power_sum(f, r).index() == want);
    }
  }
}

TEST_CASE("field elements") {
  const Field f5 = Field::make(5), f7 = Field::make(7);
  CHECK((f5.element(3) * f5.element(4)).index() == 2);
  CHECK((f5.element(3) + f5.element(4)).index() == 2);
  CHECK((f5.element(3) - f5.element(4)).index() == 4);
  CHECK(inv(f5.element(2)).index() == 3);
  CHECK_THROWS_AS(inv(f5.zero()), DivisionByZero);
  CHECK_THROWS_AS(f5.inv(0), DivisionByZero);
  CHECK_THROWS_AS(f5.element(3) + f7.element(3), FieldMismatch);
  CHECK_THROWS_AS(f5.element(5), OutOfRange);
  CHECK(f5.from_int(-1) == 4);
  CHECK(Field::make(9).from_int(4) == 1);
}

TEST_CASE("vector kernels match scalar arithmetic") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 7u, 9u, 16u, 343u}) {
    const Field f = Field::make(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    std::vector<elem_t> a(37), b(37);
    for (auto& x : a) x = static_cast<elem_t>(pick(rng));
    for (auto& x : b) x = static_cast<elem_t>(pick(rng));
    elem_t dot = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dot = f.add(dot, f.mul(a[i], b[i]));
    CHECK(f.dot(a, b) == dot);
    const auto s = static_cast<elem_t>(pick(rng));
    std::vector<elem_t> y = a;
    f.axpy(y, s, b);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(y[i] == f.add(a[i], f.mul(s, b[i])));
  }
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prmhull/code.hpp"
#include "prmhull/prm.hpp"

using namespace prmhull;

namespace {

LinearCode random_code(const Field& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix g = oracle::random_matrix(f, k, n, rng);
    if (rank(g) == k) return LinearCode(std::move(g), "random");
  }
}

bool subset(const SubspaceBasis& a, const SubspaceBasis& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.matrix().row(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("generator must have full rank") {
  const Field f = Field::make(3);
  CHECK_THROWS_AS(LinearCode(Matrix::from_rows(f, 2, {{1, 1}, {2, 2}}), "x"), Error);
  const LinearCode c = LinearCode::from_spanning(Matrix::from_rows(f, 2, {{1, 1}, {2, 2}}), "x");
  CHECK(c.dimension() == 1);
}

TEST_CASE("dual examples") {
  const Field f = Field::make(5);
  const LinearCode full(Matrix::identity(f, 4), "full");
  CHECK(dual(full).dimension() == 0);
  const LinearCode tetra = prm_code(PrmParams{1, 1, 3});
  CHECK(equal_codes(dual(tetra), tetra));
}

TEST_CASE("dual is an involution and has dimension N - K") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Field f = Field::make(std::vector<std::uint32_t>{2, 3, 4, 5, 7, 8, 9}[trial % 7]);
    const std::size_t n = 3 + trial % 6, k = 1 + trial % n;
    const LinearCode c = random_code(f, std::min(k, n), n, rng);
    const LinearCode d = dual(c);
    CHECK(d.dimension() == n - c.dimension());
    CHECK(equal_codes(dual(d), c));
  }
}

TEST_CASE("hull examples") {
  const LinearCode tetra = prm_code(PrmParams{1, 1, 3});
  CHECK(hull(tetra).hull_dim == 2);
  CHECK(hull(prm_code(PrmParams{2, 4, 3})).hull_dim == 0);
  CHECK(hull(prm_code(PrmParams{3, 6, 2})).hull_dim == 0);
  const LinearCode c215 = prm_code(PrmParams{2, 1, 5});
  CHECK(hull(c215).hull_dim == oracle::brute_hull_dim(c215));
  CHECK(hull(c215).hull_dim == 2);
}

TEST_CASE("hull agrees with brute force on random codes") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Field f = Field::make(std::vector<std::uint32_t>{2, 3, 4, 5}[trial % 4]);
    const std::size_t n = 4 + trial % 4, k = 1 + trial % 3;
    const LinearCode c = random_code(f, k, n, rng);
    const HullReport h = hull(c);
    CHECK(h.hull_dim == oracle::brute_hull_dim(c));
    CHECK(h.hull_dim + h.gram_rank == c.dimension());
    CHECK(h.hull_dim == hull(dual(c)).hull_dim);
  }
}

TEST_CASE("predicates") {
  const LinearCode tetra = prm_code(PrmParams{1, 1, 3});
  CHECK(is_self_dual(tetra));
  CHECK(is_self_orthogonal(tetra));
  CHECK(!is_lcd(tetra));

  const LinearCode c213 = prm_code(PrmParams{2, 1, 3});
  CHECK(is_self_orthogonal(c213));
  CHECK(!is_self_dual(c213));

  CHECK(is_self_dual(prm_code(PrmParams{1, 2, 5})));
  CHECK(is_lcd(prm_code(PrmParams{2, 4, 3})));
}

TEST_CASE("predicates match their subspace definitions") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Field f = Field::make(std::vector<std::uint32_t>{2, 3, 5}[trial % 3]);
    const std::size_t n = 2 + trial % 5;
    const LinearCode c = random_code(f, 1 + trial % n, n, rng);
    const SubspaceBasis cs = SubspaceBasis::span_of(c.generator());
    const SubspaceBasis ds = SubspaceBasis::span_of(dual(c).generator());
    const HullReport h = hull(c);
    CHECK(is_self_orthogonal(c) == subset(cs, ds));
    CHECK(is_self_orthogonal(c) == (h.hull_dim == c.dimension()));
    CHECK(is_self_dual(c) == (cs == ds));
    CHECK(is_lcd(c) == (intersect_rowspaces(c.generator(), dual(c).generator()).dim() == 0));
    CHECK(is_lcd(c) == (h.hull_dim == 0));
    if (is_self_dual(c)) CHECK(c.length() % 2 == 0);
  }
}

TEST_CASE("vector membership") {
  const LinearCode c = prm_code(PrmParams{2, 2, 4});
  for (std::size_t r = 0; r < c.dimension(); ++r) CHECK(contains_vector(c, c.generator().row(r)));
  const std::vector<elem_t> ones(c.length(), 1);
  CHECK(!contains_vector(prm_code(PrmParams{2, 3, 4}), ones));
  CHECK(!contains_vector(prm_code(PrmParams{2, 6, 4}), ones));
  CHECK(!contains_vector(prm_code(PrmParams{2, 2, 3}), std::vector<elem_t>(13, 1)));
  CHECK_THROWS_AS(contains_vector(c, std::vector<elem_t>(3, 0)), DimensionMismatch);
}

TEST_CASE("code equality") {
  const LinearCode c = prm_code(PrmParams{2, 1, 3});
  CHECK(equal_codes(c, c));
  CHECK(!equal_codes(c, prm_code(PrmParams{2, 2, 3})));
  CHECK_THROWS_AS(equal_codes(c, prm_code(PrmParams{1, 1, 3})), DimensionMismatch);
  CHECK_THROWS_AS(equal_codes(c, prm_code(PrmParams{1, 1, 4})), Error);
}

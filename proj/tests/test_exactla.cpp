#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "prmhull/exactla.hpp"
#include "prmhull/prm.hpp"

using namespace prmhull;

namespace {

std::set<std::vector<elem_t>> set_intersection(const std::set<std::vector<elem_t>>& a,
                                               const std::set<std::vector<elem_t>>& b) {
  std::set<std::vector<elem_t>> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

}  // namespace

TEST_CASE("rref examples") {
  const Field f3 = Field::make(3), f5 = Field::make(5);
  const auto id = rref(Matrix::identity(f3, 3));
  CHECK(id.reduced == Matrix::identity(f3, 3));
  CHECK(id.rank == 3);

  const auto z = rref(Matrix(f3, 2, 3));
  CHECK(z.rank == 0);
  CHECK(z.reduced.is_zero());

  const auto r = rref(Matrix::from_rows(f5, 2, {{1, 2}, {2, 4}}));
  CHECK(r.reduced == Matrix::from_rows(f5, 2, {{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is reduced and row equivalent") {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const Field f = Field::make(q);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix m = oracle::random_matrix(f, 1 + trial % 5, 6, rng);
      const auto r = rref(m);
      for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t c = r.pivots[i];
        CHECK(r.reduced(i, c) == 1);
        for (std::size_t j = 0; j < m.rows(); ++j)
          if (j != i) CHECK(r.reduced(j, c) == 0);
        for (std::size_t cc = 0; cc < c; ++cc) CHECK(r.reduced(i, cc) == 0);
      }
      if (q <= 5) CHECK(oracle::span_set(m) == oracle::span_set(r.reduced));
    }
  }
}

TEST_CASE("nullspace examples") {
  const Field f3 = Field::make(3);
  CHECK(nullspace(Matrix::from_rows(f3, 4, {{1, 1, 1, 1}})).dim() == 3);
  CHECK(nullspace(Matrix::identity(f3, 4)).dim() == 0);
  const LinearCode tetra = prm_code(PrmParams{1, 1, 3});
  CHECK(nullspace(tetra.generator()) == SubspaceBasis::span_of(tetra.generator()));
}

TEST_CASE("nullspace vectors annihilate and rank-nullity holds") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 7u, 8u}) {
    const Field f = Field::make(q);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix m = oracle::random_matrix(f, 1 + trial % 6, 7, rng);
      const SubspaceBasis ns = nullspace(m);
      CHECK(ns.dim() + rank(m) == m.cols());
      CHECK(mat_mul(m, transpose(ns.matrix())).is_zero());
    }
  }
}

TEST_CASE("intersection examples") {
  const Field f = Field::make(3);
  const Matrix a = Matrix::from_rows(f, 3, {{1, 2, 0}, {0, 1, 1}});
  CHECK(intersect_rowspaces(a, a) == SubspaceBasis::span_of(a));
  const Matrix e1 = Matrix::from_rows(f, 3, {{1, 0, 0}});
  const Matrix e2 = Matrix::from_rows(f, 3, {{0, 1, 0}});
  CHECK(intersect_rowspaces(e1, e2).dim() == 0);
  CHECK_THROWS_AS(intersect_rowspaces(e1, Matrix(f, 1, 4)), DimensionMismatch);
  CHECK_THROWS_AS(intersect_rowspaces(e1, Matrix(Field::make(5), 1, 3)), FieldMismatch);
}

TEST_CASE("intersection matches set-level brute force") {
  std::mt19937_64 rng(17);
  struct Case {
    std::uint32_t q;
    std::size_t n;
  };
  for (const Case c : {Case{2, 5}, Case{3, 4}, Case{4, 4}, Case{5, 3}, Case{2, 8}, Case{7, 3}}) {
    const Field f = Field::make(c.q);
    for (int trial = 0; trial < 25; ++trial) {
      const Matrix a = oracle::random_matrix(f, 1 + trial % 3, c.n, rng);
      const Matrix b = oracle::random_matrix(f, 1 + (trial / 3) % 3, c.n, rng);
      const SubspaceBasis meet = intersect_rowspaces(a, b);
      const auto want = set_intersection(oracle::span_set(a), oracle::span_set(b));
      CHECK(oracle::span_set(meet.matrix()) == want);
      CHECK(meet.dim() + rank(vstack(a, b)) == rank(a) + rank(b));
    }
  }
}

TEST_CASE("matrix products and transposes") {
  std::mt19937_64 rng(23);
  for (std::uint32_t q : {2u, 5u, 9u, 16u}) {
    const Field f = Field::make(q);
    const Matrix a = oracle::random_matrix(f, 4, 6, rng);
    const Matrix b = oracle::random_matrix(f, 6, 3, rng);
    CHECK(mat_mul(a, Matrix::identity(f, 6)) == a);
    CHECK(transpose(transpose(a)) == a);
    CHECK(rank(a) == rank(transpose(a)));
    const Matrix c = mat_mul(a, b);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        elem_t s = 0;
        for (std::size_t t = 0; t < 6; ++t) s = f.add(s, f.mul(a(i, t), b(t, j)));
        CHECK(c(i, j) == s);
      }
    CHECK_THROWS_AS(mat_mul(a, a), DimensionMismatch);
  }
}

TEST_CASE("gram rank of C_{2,1}^5 is K minus the brute-force hull dimension") {
  const LinearCode c = prm_code(PrmParams{2, 1, 5});
  const std::size_t hull_dim = oracle::brute_hull_dim(c);
  CHECK(hull_dim == 2);
  CHECK(rank(mat_mul(c.generator(), transpose(c.generator()))) == c.dimension() - hull_dim);
  CHECK(rank(mat_mul(c.generator(), transpose(c.generator()))) == 1);
}

TEST_CASE("subspace membership and canonical form") {
  const Field f = Field::make(5);
  const Matrix a = Matrix::from_rows(f, 3, {{1, 2, 3}, {0, 1, 1}});
  const Matrix b = Matrix::from_rows(f, 3, {{1, 3, 4}, {0, 0, 0}, {0, 2, 2}});
  CHECK(SubspaceBasis::span_of(a) == SubspaceBasis::span_of(b));
  CHECK(SubspaceBasis::span_of(a).dim() == 2);
  CHECK(SubspaceBasis::span_of(a).contains(std::vector<elem_t>{3, 1, 4}));
  CHECK(!SubspaceBasis::span_of(a).contains(std::vector<elem_t>{0, 0, 1}));
  CHECK(SubspaceBasis::zero(f, 3).dim() == 0);
}

TEST_CASE("matrix text format round trip") {
  std::mt19937_64 rng(29);
  const Field f = Field::make(9);
  const Matrix m = oracle::random_matrix(f, 3, 5, rng);
  std::stringstream ss;
  write_matrix(ss, m);
  CHECK(ss.str().rfind("9 3 5\n", 0) == 0);
  CHECK(read_matrix(ss) == m);

  std::stringstream bad("3 1 2\n1 5\n");
  CHECK_THROWS_AS(read_matrix(bad), Error);
  std::stringstream short_input("3 2 2\n1 1\n");
  CHECK_THROWS_AS(read_matrix(short_input), Error);
  std::stringstream not_field("6 1 1\n0\n");
  CHECK_THROWS_AS(read_matrix(not_field), NotPrimePower);
}

TEST_CASE("matrix construction validates entries") {
  const Field f = Field::make(3);
  CHECK_THROWS_AS(Matrix(f, 1, 2, {0, 3}), OutOfRange);
  CHECK_THROWS_AS(Matrix(f, 2, 2, {0, 1}), DimensionMismatch);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlfact/intmat.hpp"

#include <random>

using namespace mlfact;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                        int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

void check_snf_contract(const IntMatrix& m) {
  SmithResult r = smith_normal_form(m);
  CHECK(r.U * m * r.V == r.S);
  CHECK(r.U * r.Uinv == IntMatrix::identity(m.rows()));
  CHECK(r.V * r.Vinv == IntMatrix::identity(m.cols()));
  Int du = determinant(r.U);
  Int dv = determinant(r.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // diagonal, non-negative, divisibility chain
  for (std::size_t i = 0; i < r.S.rows(); ++i)
    for (std::size_t j = 0; j < r.S.cols(); ++j)
      if (i != j) CHECK(r.S.at(i, j) == 0);
  std::size_t bound = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i + 1 < bound; ++i) {
    CHECK(r.S.at(i, i) >= 0);
    if (r.S.at(i + 1, i + 1) != 0)
      CHECK(r.S.at(i + 1, i + 1) % (r.S.at(i, i) == 0 ? Int(1) : r.S.at(i, i)) ==
            0);
    if (r.S.at(i, i) == 0) CHECK(r.S.at(i + 1, i + 1) == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form: identity") {
  IntMatrix m = IntMatrix::identity(2);
  SmithResult r = smith_normal_form(m);
  CHECK(r.S == IntMatrix::identity(2));
  CHECK(r.U == IntMatrix::identity(2));
  CHECK(r.V == IntMatrix::identity(2));
}

TEST_CASE("smith normal form: diag(2,3) -> diag(1,6)") {
  IntMatrix m{{2, 0}, {0, 3}};
  SmithResult r = smith_normal_form(m);
  IntMatrix expect{{1, 0}, {0, 6}};
  CHECK(r.S == expect);
  CHECK(r.U * m * r.V == r.S);
}

TEST_CASE("smith normal form: zero 2x3") {
  IntMatrix m(2, 3);
  SmithResult r = smith_normal_form(m);
  CHECK(r.S.is_zero());
  CHECK(r.U == IntMatrix::identity(2));
  CHECK(r.V == IntMatrix::identity(3));
  CHECK(r.rank == 0);
}

TEST_CASE("smith normal form: reconstruction property on random matrices") {
  std::mt19937 rng(20240817);
  for (int it = 0; it < 60; ++it) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    check_snf_contract(random_matrix(rng, r, c, -9, 9));
  }
  // a few with larger entries to stress the exact arithmetic
  for (int it = 0; it < 10; ++it)
    check_snf_contract(random_matrix(rng, 4, 4, -4000, 4000));
}

TEST_CASE("kernel lattice") {
  IntMatrix m{{1, 2, 3}};
  IntMatrix k = kernel_lattice(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());

  IntMatrix full = IntMatrix::identity(3);
  CHECK(kernel_lattice(full).cols() == 0);
}

TEST_CASE("integer solve") {
  IntMatrix m{{2, 0}, {0, 3}};
  auto x = solve(m, {4, 9});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == std::vector<Int>{4, 9});
  CHECK_FALSE(solve(m, {1, 0}).has_value());
  CHECK(lattice_contains(m, {2, 3}));
  CHECK_FALSE(lattice_contains(m, {1, 1}));
}

TEST_CASE("solve_mod") {
  // x*2 ≡ 4 mod 6 has solution; x*2 ≡ 1 mod 6 does not
  IntMatrix m{{2}};
  IntMatrix rel{{6}};
  CHECK(solve_mod(m, rel, {4}).has_value());
  CHECK_FALSE(solve_mod(m, rel, {1}).has_value());
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{3, 1}, {4, 2}}) == 2);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{2, 0, 1}, {1, 1, 0}, {0, 3, 1}}) == 5);
}

TEST_CASE("kron shape and values") {
  IntMatrix a{{1, 2}};
  IntMatrix b{{0, 1}, {1, 0}};
  IntMatrix k = kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
  CHECK(k == IntMatrix{{0, 1, 0, 2}, {1, 0, 2, 0}});
}

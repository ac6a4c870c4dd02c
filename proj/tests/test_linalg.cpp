#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonomtt/linalg.hpp"

using namespace zonomtt;

namespace {

RatMat random_rat_square(std::mt19937_64& rng, std::size_t n, int lo = -5,
                         int hi = 5) {
  RatMat m(n, n);
  std::uniform_int_distribution<int> d(lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(d(rng));
  return m;
}

}  // namespace

TEST_CASE("det agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng() % 5;
    RatMat a = random_rat_square(rng, n);
    CHECK(det(a) == oracles::det_cofactor(a));
    CHECK(det(to_int(a)) == num(oracles::det_cofactor(a)));
  }
}

TEST_CASE("det is multiplicative") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng() % 4;
    RatMat a = random_rat_square(rng, n);
    RatMat b = random_rat_square(rng, n);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("char_poly evaluates to det(xI - A) at integer points") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 15; ++t) {
    std::size_t n = 1 + rng() % 4;
    RatMat a = random_rat_square(rng, n, -3, 3);
    Poly p = char_poly(a);
    REQUIRE(p.coefficients.size() == n + 1);
    CHECK(p.coefficients[n] == 1);  // monic
    for (int x = -2; x <= 3; ++x) {
      RatMat shifted(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          shifted(i, j) = (i == j ? Rat(x) : Rat(0)) - a(i, j);
      CHECK(p.eval(Rat(x)) == oracles::det_cofactor(shifted));
    }
  }
}

TEST_CASE("char_poly of a symmetric integer matrix has integer coefficients") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 10; ++t) {
    std::size_t n = 2 + rng() % 4;
    RatMat a = random_rat_square(rng, n, -4, 4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
    for (const Rat& c : char_poly(a).coefficients) CHECK(is_integer(c));
  }
}

TEST_CASE("gram_det of a square matrix is det squared") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + rng() % 4;
    RatMat b = random_rat_square(rng, n);
    CHECK(gram_det(b) == det(b) * det(b));
  }
}

TEST_CASE("kernel_basis spans the exact kernel") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
    RatMat a(r, c);
    std::uniform_int_distribution<int> d(-3, 3);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = Rat(d(rng));
    RatMat k = kernel_basis(a);
    CHECK(rank(a) + k.cols() == c);
    for (std::size_t j = 0; j < k.cols(); ++j) {
      std::vector<Rat> img = a.apply(k.column(j));
      for (const Rat& v : img) CHECK(v == 0);
    }
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + rng() % 4;
    RatMat a = random_rat_square(rng, n);
    std::vector<Rat> x(n);
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto& v : x) v = Rat(d(rng));
    std::vector<Rat> b = a.apply(x);
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
  // inconsistent system: [1;1] x = (0,1)
  RatMat a{{1}, {1}};
  CHECK_FALSE(solve(a, std::vector<Rat>{Rat(0), Rat(1)}).has_value());
}

TEST_CASE("product_nonzero_eigenvalues reads the char-poly coefficient") {
  // K4 Laplacian: eigenvalues 0, 4, 4, 4
  RatMat l{{3, -1, -1, -1}, {-1, 3, -1, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}};
  CHECK(product_nonzero_eigenvalues(l) == 64);
  CHECK(product_nonzero_eigenvalues(RatMat::identity(3)) == 1);
  RatMat nonsym{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(product_nonzero_eigenvalues(nonsym), std::invalid_argument);
}

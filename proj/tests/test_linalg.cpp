#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pqhopf/linalg.hpp"

using namespace pqhopf;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.size() - 1);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Elem{dist(rng)};
  return m;
}

bool is_zero_vec(const Vec& v) {
  for (Elem e : v)
    if (e.code != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("trace of a product is symmetric") {
  std::mt19937 rng(7);
  for (auto f : {make_field(3, 1), make_field(2, 2), make_field(5, 1)}) {
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_matrix(*f, 5, 5, rng), b = random_matrix(*f, 5, 5, rng);
      CHECK(trace_of_product(*f, a, b) == trace_of_product(*f, b, a));
      CHECK(trace_of_product(*f, a, b) == trace(*f, matmul(*f, a, b)));
    }
  }
}

TEST_CASE("nullspace vectors are annihilated and rank-nullity holds") {
  std::mt19937 rng(11);
  auto f = make_field(3, 2);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_matrix(*f, 4, 7, rng);
    if (t % 3 == 0)
      for (std::size_t c = 0; c < 7; ++c) a(3, c) = a(0, c);  // force a dependent row
    const auto basis = nullspace(*f, a);
    Matrix reduced = a;
    const auto pivots = rref(*f, reduced);
    CHECK(basis.size() + pivots.size() == 7);
    for (const auto& v : basis) {
      CHECK_FALSE(is_zero_vec(v));
      CHECK(is_zero_vec(apply(*f, a, v)));
    }
  }
}

TEST_CASE("solve") {
  auto f = make_field(5, 1);
  Matrix a = Matrix::identity(*f, 3);
  a(0, 1) = f->from_int(2);
  const Vec b{f->from_int(1), f->from_int(2), f->from_int(3)};
  const auto r = solve(*f, a, b);
  REQUIRE(r.solution);
  CHECK(r.nullity == 0);
  CHECK(apply(*f, a, *r.solution) == b);

  Matrix singular(2, 2);
  singular(0, 0) = f->one();
  singular(1, 0) = f->one();
  const auto bad = solve(*f, singular, Vec{f->one(), f->from_int(2)});
  CHECK_FALSE(bad.solution.has_value());
}

TEST_CASE("transpose and identity") {
  auto f = make_field(7, 1);
  std::mt19937 rng(3);
  const Matrix a = random_matrix(*f, 3, 4, rng);
  CHECK(transpose(transpose(a)) == a);
  CHECK(matmul(*f, a, Matrix::identity(*f, 4)) == a);
}

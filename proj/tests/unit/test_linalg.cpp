#include "helpers.hpp"

#include "lieco/linalg.hpp"
#include "lieco/sampling.hpp"

using namespace lieco;

TEST_CASE("rref and nullspace") {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  const Echelon e = rref(m);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  const auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == Vec{-1, -1, 1});
  CHECK(is_zero(m.apply(ker[0])));
}

TEST_CASE("solve_in_span") {
  const std::vector<Vec> rows{{1, 0, 1}, {0, 1, 1}};
  CHECK(*solve_in_span(rows, {2, 3, 5}) == Vec{2, 3});
  CHECK_FALSE(solve_in_span(rows, {0, 0, 1}).has_value());
  CHECK_THROWS_AS(solve_in_span({{1, 1}, {2, 2}}, {1, 1}), std::invalid_argument);
}

TEST_CASE("extend_basis keeps candidate order") {
  const auto added = extend_basis({{1, 0, 0}}, {{2, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 3}});
  REQUIRE(added.size() == 2);
  CHECK(added[0] == Vec{0, 1, 0});
  CHECK(added[1] == Vec{0, 0, 3});
}

TEST_CASE("property: Bareiss rank equals rref rank; rank-nullity") {
  Sampler s(5);
  for (int k = 0; k < 200; ++k) {
    const std::size_t r = static_cast<std::size_t>(s.uniform(1, 5));
    const std::size_t c = static_cast<std::size_t>(s.uniform(1, 5));
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(s.vec(c));
    // Force some dependence.
    if (r > 1 && k % 3 == 0) rows[r - 1] = rows[0] + Rational(2) * rows[r - 2];
    const Matrix m = Matrix::from_rows(rows, c);
    const std::size_t rank = rref(m).rank();
    CHECK(bareiss_rank(m) == rank);
    CHECK(nullspace(m).size() + rank == c);
    for (const auto& v : nullspace(m)) CHECK(is_zero(m.apply(v)));
  }
}

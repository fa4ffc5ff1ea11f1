#include <random>

#include "doctest.h"
#include "hyperbetti/error.hpp"
#include "hyperbetti/homology.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace hyperbetti;
namespace fx = hyperbetti::testing;

namespace {

std::vector<std::size_t> betti(const Hypergraph& h, std::size_t kmax = 2) {
  return betti_numbers(h, kmax).betti;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hyperbetti::Error");
  return ErrorCode::SchemaViolation;
}

/// Reference rank over GF(2) on a vector<vector<bool>> copy.
std::size_t naive_rank(const GF2Matrix& m) {
  std::vector<std::vector<bool>> a(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !a[pivot][c]) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = a[r][k] != a[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("betti numbers of small complexes") {
  CHECK(betti(fx::hollow_triangle()) == std::vector<std::size_t>{1, 1, 0});
  CHECK(betti(fx::filled_triangle()) == std::vector<std::size_t>{1, 0, 0});
  CHECK(betti(fx::tetrahedron_boundary()) == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti(fx::two_hollow_triangles()) == std::vector<std::size_t>{2, 2, 0});

  auto p = betti_numbers(fx::h0(), 2);
  CHECK(p.betti == std::vector<std::size_t>{2, 0, 0});
  CHECK(p.face_counts == std::vector<std::size_t>{6, 6, 2});
  CHECK(p.euler_characteristic == 2);
  CHECK_FALSE(p.truncated);
}

TEST_CASE("isolated nodes and empty hypergraphs") {
  auto iso = Hypergraph::build({}, {{"a", Entity{}}, {"b", Entity{}}}, {{"e", Entity{}}});
  CHECK(betti(iso, 1) == std::vector<std::size_t>{2, 0});
  CHECK(betti(Hypergraph{}, 0) == std::vector<std::size_t>{0});
  CHECK(betti(fx::from_pairs({{"e", "x"}}), 0) == std::vector<std::size_t>{1});
}

TEST_CASE("truncation keeps the top boundary rank") {
  // A solid tetrahedron capped at dimension 1 must not report loops.
  auto solid = fx::from_edges({{"t", {"1", "2", "3", "4"}}});
  auto p = betti_numbers(solid, 1);
  CHECK(p.truncated);
  CHECK(p.betti == std::vector<std::size_t>{1, 0});
  CHECK(p.face_counts == std::vector<std::size_t>{4, 6});
  CHECK(betti(solid, 3) == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("closure counts faces") {
  auto c = downward_closure(fx::from_edges({{"t", {"1", "2", "3", "4"}}}), 3);
  CHECK(c.count(0) == 4);
  CHECK(c.count(1) == 6);
  CHECK(c.count(2) == 4);
  CHECK(c.count(3) == 1);
  CHECK(c.find({0, 1}).has_value());
  CHECK_FALSE(c.find({1, 0}).has_value());
}

TEST_CASE("limits") {
  CHECK(code_of([] { betti_numbers(fx::h0(), 11); }) == ErrorCode::DimensionOutOfRange);
  std::vector<std::string> many;
  for (int i = 0; i < 26; ++i) many.push_back("n" + std::to_string(i));
  auto huge = fx::from_edges({{"big", many}});
  CHECK(code_of([&] { betti_numbers(huge, 2); }) == ErrorCode::EdgeTooLarge);
  auto c = downward_closure(fx::h0(), 2);
  CHECK(code_of([&] { boundary_matrix(c, 0); }) == ErrorCode::DimensionOutOfRange);
  CHECK(code_of([&] { boundary_matrix(c, 3); }) == ErrorCode::DimensionOutOfRange);
}

TEST_CASE("gf2 matrices") {
  auto id = GF2Matrix::identity(70);
  CHECK(gf2_rank(id) == 70);
  CHECK(id * id == id);
  GF2Matrix m(3, 3);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(1, 2);
  m.set(2, 0);
  m.set(2, 2);  // rows sum to zero over GF(2)
  CHECK(gf2_rank(m) == 2);
  CHECK(m.column_weight(1) == 2);
  CHECK(GF2Matrix(4, 5).is_zero());
  CHECK(gf2_rank(GF2Matrix(0, 0)) == 0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto rows = fx::pick(rng, 1, 90);
    auto cols = fx::pick(rng, 1, 90);
    GF2Matrix r(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (fx::pick(rng, 0, 3) == 0) r.set(i, j);
    CHECK(gf2_rank(r) == naive_rank(r));
  }
}

TEST_CASE("boundary of a boundary vanishes and euler matches") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = fx::random_hypergraph(rng, {8, 6, 5, 0.2});
    const auto kmax = fx::pick(rng, 1, 3);
    CAPTURE(trial);
    auto c = downward_closure(h, kmax);
    for (std::size_t k = 2; k <= kmax; ++k) {
      CHECK((boundary_matrix(c, k - 1) * boundary_matrix(c, k)).is_zero());
    }
    for (std::size_t k = 1; k <= kmax; ++k) {
      auto d = boundary_matrix(c, k);
      for (std::size_t col = 0; col < d.cols(); ++col) CHECK(d.column_weight(col) == k + 1);
    }
    auto p = betti_numbers(h, kmax);
    if (!p.truncated) {
      long long alt = 0;
      for (std::size_t k = 0; k < p.betti.size(); ++k) {
        alt += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(p.betti[k]);
      }
      CHECK(alt == p.euler_characteristic);
    }
  }
}

TEST_CASE("profile json") {
  CHECK(to_json(betti_numbers(fx::hollow_triangle(), 2)).dump() ==
        R"j({"betti":[1,1,0],"face_counts":[3,3,0],"euler":0,"coefficients":"GF(2)","reduced":false})j");
}

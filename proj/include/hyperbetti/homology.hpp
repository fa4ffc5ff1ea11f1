#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperbetti/core.hpp"

namespace hyperbetti {

/// Largest dimension cap accepted from callers.
inline constexpr std::size_t max_kmax = 10;
/// Edges with more members than this are rejected before closure.
inline constexpr std::size_t max_closure_edge_size = 25;

/// Strictly increasing vertex indices.
using Simplex = std::vector<std::uint32_t>;

struct SimplicialComplex {
  std::size_t kmax = 0;
  /// Vertex index -> node id; every registered node is a 0-simplex.
  std::vector<std::string> vertex_labels;
  /// simplices[k] holds the k-simplices in lexicographic order.
  std::vector<std::vector<Simplex>> simplices;

  std::size_t count(std::size_t k) const { return k < simplices.size() ? simplices[k].size() : 0; }
  std::optional<std::size_t> find(const Simplex& simplex) const;
};

/// Inserts every non-empty subset of each edge with at most kmax+1
/// vertices. Throws DimensionOutOfRange above max_kmax and EdgeTooLarge for
/// edges beyond max_closure_edge_size members.
SimplicialComplex downward_closure(const Hypergraph& h, std::size_t kmax);

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  static GF2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);

  bool is_zero() const;
  std::size_t column_weight(std::size_t c) const;

  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  friend std::size_t gf2_rank(const GF2Matrix& m);

  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank by Gaussian elimination on a private copy.
std::size_t gf2_rank(const GF2Matrix& m);

/// Boundary operator from k-simplices (columns) to (k-1)-simplices (rows).
/// Throws DimensionOutOfRange unless 1 <= k <= c.kmax.
GF2Matrix boundary_matrix(const SimplicialComplex& c, std::size_t k);

struct BettiProfile {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> face_counts;
  long long euler_characteristic = 0;
  /// Some edge had more than kmax+1 members, so the closure was capped.
  bool truncated = false;
};

/// Non-reduced Betti numbers b_0..b_kmax over GF(2). When the cap truncates
/// the closure, the (kmax+1)-skeleton still supplies the boundary rank for
/// b_kmax.
BettiProfile betti_numbers(const Hypergraph& h, std::size_t kmax);

nlohmann::ordered_json to_json(const BettiProfile& p);

}  // namespace hyperbetti

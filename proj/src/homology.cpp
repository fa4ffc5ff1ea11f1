#include "hyperbetti/homology.hpp"

#include <algorithm>

#include "hyperbetti/error.hpp"

namespace hyperbetti {

std::optional<std::size_t> SimplicialComplex::find(const Simplex& simplex) const {
  if (simplex.empty() || simplex.size() > simplices.size()) return std::nullopt;
  const auto& layer = simplices[simplex.size() - 1];
  auto it = std::lower_bound(layer.begin(), layer.end(), simplex);
  if (it == layer.end() || *it != simplex) return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

namespace {

void check_kmax(std::size_t kmax) {
  if (kmax > max_kmax) {
    throw Error(ErrorCode::DimensionOutOfRange,
                "kmax " + std::to_string(kmax) + " exceeds the limit of " +
                    std::to_string(max_kmax));
  }
}

SimplicialComplex closure(const Hypergraph& h, std::size_t kmax) {
  SimplicialComplex c;
  c.kmax = kmax;
  c.vertex_labels = h.nodes();
  c.simplices.resize(kmax + 1);

  for (std::uint32_t v = 0; v < h.num_nodes(); ++v) c.simplices[0].push_back({v});

  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto& members = h.members(e);
    if (members.size() > max_closure_edge_size) {
      throw Error(ErrorCode::EdgeTooLarge,
                  "edge '" + h.edges()[e] + "' has " + std::to_string(members.size()) +
                      " nodes; closure supports at most " +
                      std::to_string(max_closure_edge_size));
    }
    const auto top = std::min(members.size(), kmax + 1);
    // Walk all index combinations of each size, lexicographically.
    for (std::size_t size = 2; size <= top; ++size) {
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        Simplex simplex(size);
        for (std::size_t i = 0; i < size; ++i) {
          simplex[i] = static_cast<std::uint32_t>(members[pick[i]]);
        }
        c.simplices[size - 1].push_back(std::move(simplex));

        std::size_t i = size;
        while (i > 0 && pick[i - 1] == members.size() - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  for (auto& layer : c.simplices) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  return c;
}

}  // namespace

SimplicialComplex downward_closure(const Hypergraph& h, std::size_t kmax) {
  check_kmax(kmax);
  return closure(h, kmax);
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const auto mask = std::uint64_t{1} << (c % 64);
  if (value) {
    row(r)[c / 64] |= mask;
  } else {
    row(r)[c / 64] &= ~mask;
  }
}

bool GF2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t GF2Matrix::column_weight(std::size_t c) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r) n += get(r, c) ? 1 : 0;
  return n;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionOutOfRange, "GF(2) product with mismatched shapes");
  }
  GF2Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    auto* dst = out.row(r);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a.get(r, k)) continue;
      const auto* src = b.row(k);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

std::size_t gf2_rank(const GF2Matrix& m) {
  GF2Matrix work = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < work.cols_ && rank < work.rows_; ++col) {
    const auto word = col / 64;
    const auto mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < work.rows_ && !(work.row(pivot)[word] & mask)) ++pivot;
    if (pivot == work.rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(work.row(pivot), work.row(pivot) + work.words_, work.row(rank));
    }
    const auto* p = work.row(rank);
    for (std::size_t r = rank + 1; r < work.rows_; ++r) {
      auto* target = work.row(r);
      if (!(target[word] & mask)) continue;
      for (std::size_t w = word; w < work.words_; ++w) target[w] ^= p[w];
    }
    ++rank;
  }
  return rank;
}

GF2Matrix boundary_matrix(const SimplicialComplex& c, std::size_t k) {
  if (k < 1 || k > c.kmax) {
    throw Error(ErrorCode::DimensionOutOfRange,
                "boundary dimension " + std::to_string(k) + " outside 1.." +
                    std::to_string(c.kmax));
  }
  const auto& faces = c.simplices[k - 1];
  const auto& cells = c.simplices[k];
  GF2Matrix m(faces.size(), cells.size());
  Simplex face(k);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& cell = cells[j];
    for (std::size_t drop = 0; drop <= k; ++drop) {
      std::size_t out = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        if (i != drop) face[out++] = cell[i];
      }
      auto it = std::lower_bound(faces.begin(), faces.end(), face);
      // Downward closure guarantees every face is present.
      m.set(static_cast<std::size_t>(it - faces.begin()), j);
    }
  }
  return m;
}

BettiProfile betti_numbers(const Hypergraph& h, std::size_t kmax) {
  check_kmax(kmax);
  BettiProfile p;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (h.members(e).size() > kmax + 1) p.truncated = true;
  }
  const auto complex = closure(h, p.truncated ? kmax + 1 : kmax);

  // ranks[k] = rank of the boundary from dimension k; ranks[0] = 0.
  std::vector<std::size_t> ranks(kmax + 2, 0);
  for (std::size_t k = 1; k <= complex.kmax; ++k) {
    ranks[k] = gf2_rank(boundary_matrix(complex, k));
  }
  for (std::size_t k = 0; k <= kmax; ++k) {
    const auto n = complex.count(k);
    p.face_counts.push_back(n);
    p.betti.push_back(n - ranks[k] - ranks[k + 1]);
    const auto signed_n = static_cast<long long>(n);
    p.euler_characteristic += (k % 2 == 0) ? signed_n : -signed_n;
  }
  return p;
}

nlohmann::ordered_json to_json(const BettiProfile& p) {
  nlohmann::ordered_json j;
  j["betti"] = p.betti;
  j["face_counts"] = p.face_counts;
  j["euler"] = p.euler_characteristic;
  j["coefficients"] = "GF(2)";
  j["reduced"] = false;
  return j;
}

}  // namespace hyperbetti

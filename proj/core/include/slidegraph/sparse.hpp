#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "slidegraph/dense.hpp"

namespace sg {

// CSR adjacency over graph nodes. Construction validates the invariants
// every consumer relies on: column indices sorted within each row, no
// duplicate entries, and structural symmetry ((i,j) present iff (j,i)
// present). Diagonal entries are allowed; graph builders control whether
// they exist.
class SparseAdjacency {
 public:
  SparseAdjacency() = default;

  // Entries are (row, col, weight); they may arrive in any order but must
  // already contain both directions of every off-diagonal edge.
  static SparseAdjacency from_entries(
      std::size_t n, std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> entries);

  static SparseAdjacency identity(std::size_t n);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t entry_count() const noexcept { return col_indices_.size(); }

  std::span<const std::size_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const std::uint32_t> row_cols(std::size_t i) const {
    return {col_indices_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
  }
  std::span<const double> row_values(std::size_t i) const {
    return {values_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
  }
  std::span<const std::uint32_t> col_indices() const noexcept { return col_indices_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double row_sum(std::size_t i) const;
  bool has_entry(std::size_t i, std::size_t j) const;
  bool has_any_diagonal() const;

  // Number of off-diagonal entries divided by two.
  std::size_t undirected_edge_count() const;

 private:
  void validate() const;

  std::size_t n_ = 0;
  std::vector<std::size_t> row_offsets_;      // n + 1
  std::vector<std::uint32_t> col_indices_;
  std::vector<double> values_;
};

// result row i = sum_j adj(i,j) * h(j,:). Throws ShapeError when
// adj.node_count() != h.rows().
DenseMatrix spmm(const SparseAdjacency& adj, const DenseMatrix& h);

}  // namespace sg

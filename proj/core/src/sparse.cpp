#include "slidegraph/sparse.hpp"

#include <algorithm>
#include <string>

#include "slidegraph/error.hpp"

namespace sg {

SparseAdjacency SparseAdjacency::from_entries(
    std::size_t n, std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> entries) {
  if (n == 0) throw DomainError("SparseAdjacency: node count must be >= 1");
  SparseAdjacency adj;
  adj.n_ = n;
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  adj.row_offsets_.assign(n + 1, 0);
  adj.col_indices_.reserve(entries.size());
  adj.values_.reserve(entries.size());
  for (const auto& [r, c, w] : entries) {
    if (r >= n || c >= n) {
      throw ValidationError("SparseAdjacency: entry (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside node range " + std::to_string(n));
    }
    adj.row_offsets_[r + 1]++;
    adj.col_indices_.push_back(c);
    adj.values_.push_back(w);
  }
  for (std::size_t i = 0; i < n; ++i) adj.row_offsets_[i + 1] += adj.row_offsets_[i];
  adj.validate();
  return adj;
}

SparseAdjacency SparseAdjacency::identity(std::size_t n) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> entries;
  entries.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) entries.emplace_back(i, i, 1.0);
  return from_entries(n, std::move(entries));
}

void SparseAdjacency::validate() const {
  for (std::size_t i = 0; i < n_; ++i) {
    auto cols = row_cols(i);
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
      if (cols[k] >= cols[k + 1]) {
        throw ValidationError("SparseAdjacency: row " + std::to_string(i) +
                              " has unsorted or duplicate columns");
      }
    }
    for (std::uint32_t j : cols) {
      if (j != i && !has_entry(j, i)) {
        throw ValidationError("SparseAdjacency: entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") lacks its symmetric partner");
      }
    }
  }
}

double SparseAdjacency::row_sum(std::size_t i) const {
  double s = 0.0;
  for (double v : row_values(i)) s += v;
  return s;
}

bool SparseAdjacency::has_entry(std::size_t i, std::size_t j) const {
  auto cols = row_cols(i);
  return std::binary_search(cols.begin(), cols.end(), static_cast<std::uint32_t>(j));
}

bool SparseAdjacency::has_any_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (has_entry(i, i)) return true;
  }
  return false;
}

std::size_t SparseAdjacency::undirected_edge_count() const {
  std::size_t diag = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (has_entry(i, i)) ++diag;
  }
  return (entry_count() - diag) / 2;
}

DenseMatrix spmm(const SparseAdjacency& adj, const DenseMatrix& h) {
  if (adj.node_count() != h.rows()) {
    throw ShapeError("spmm: adjacency over " + std::to_string(adj.node_count()) +
                     " nodes vs feature matrix with " + std::to_string(h.rows()) + " rows");
  }
  DenseMatrix out(h.rows(), h.cols());
  for (std::size_t i = 0; i < adj.node_count(); ++i) {
    auto cols = adj.row_cols(i);
    auto vals = adj.row_values(i);
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const double w = vals[k];
      auto h_row = h.row(cols[k]);
      for (std::size_t j = 0; j < h.cols(); ++j) out_row[j] += w * h_row[j];
    }
  }
  return out;
}

}  // namespace sg

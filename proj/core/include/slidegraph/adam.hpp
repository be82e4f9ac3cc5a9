#pragma once

#include <cstdint>
#include <vector>

#include "slidegraph/dense.hpp"

namespace sg {

// Per-parameter Adam buffers. Weight decay is the coupled form: the L2
// term is added to the gradient before the moment updates.
struct AdamState {
  std::vector<double> m;  // first moment
  std::vector<double> v;  // second moment
  std::uint64_t t = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  explicit AdamState(std::size_t size) : m(size, 0.0), v(size, 0.0) {}
};

void adam_step(std::span<double> param, std::span<const double> grad, AdamState& state,
               double lr, double weight_decay);

void adam_step(DenseMatrix& param, const DenseMatrix& grad, AdamState& state, double lr,
               double weight_decay);

}  // namespace sg

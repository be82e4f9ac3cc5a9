#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slidegraph/dense.hpp"

namespace sg {

enum class ActivationKind { identity, relu, leaky_relu, sigmoid };

// slope applies to leaky_relu only; 0.2 is the conventional attention slope.
struct Activation {
  ActivationKind kind = ActivationKind::identity;
  double slope = 0.2;

  double operator()(double x) const;
  // Derivative evaluated at the pre-activation value.
  double derivative(double x) const;
};

double sigmoid(double x);

DenseMatrix apply_activation(const Activation& act, const DenseMatrix& x);

// Element-wise act'(pre) * grad, the reverse-mode step through an activation.
DenseMatrix activation_backward(const Activation& act, const DenseMatrix& pre,
                                const DenseMatrix& grad);

// Numerically stable softmax (max-subtraction) over a contiguous score span.
// Throws DomainError on an empty span. Weights are positive and sum to 1.
std::vector<double> stable_softmax(std::span<const double> scores);

// Softmax restricted to scores[j] for j in the neighborhood, in the order
// the neighborhood lists them. Throws DomainError on an empty neighborhood
// and ValidationError on out-of-range ids.
std::vector<double> masked_softmax(std::span<const double> scores,
                                   std::span<const std::uint32_t> neighborhood);

}  // namespace sg

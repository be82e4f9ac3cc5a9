#include "slidegraph/adam.hpp"

#include <cmath>
#include <string>

#include "slidegraph/error.hpp"

namespace sg {

void adam_step(std::span<double> param, std::span<const double> grad, AdamState& state,
               double lr, double weight_decay) {
  if (param.size() != grad.size() || param.size() != state.m.size()) {
    throw ShapeError("adam_step: param length " + std::to_string(param.size()) +
                     ", grad length " + std::to_string(grad.size()) + ", state length " +
                     std::to_string(state.m.size()));
  }
  if (lr <= 0.0) throw DomainError("adam_step: learning rate must be positive");

  state.t += 1;
  const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.t));
  const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.t));
  for (std::size_t i = 0; i < param.size(); ++i) {
    const double g = grad[i] + weight_decay * param[i];
    state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * g;
    state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * g * g;
    const double m_hat = state.m[i] / bc1;
    const double v_hat = state.v[i] / bc2;
    param[i] -= lr * m_hat / (std::sqrt(v_hat) + state.eps);
  }
}

void adam_step(DenseMatrix& param, const DenseMatrix& grad, AdamState& state, double lr,
               double weight_decay) {
  if (!param.same_shape(grad)) {
    throw ShapeError("adam_step: param " + std::to_string(param.rows()) + "x" +
                     std::to_string(param.cols()) + " vs grad " + std::to_string(grad.rows()) +
                     "x" + std::to_string(grad.cols()));
  }
  adam_step(param.values(), grad.values(), state, lr, weight_decay);
}

}  // namespace sg

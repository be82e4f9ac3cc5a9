#include "slidegraph/activation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slidegraph/error.hpp"

namespace sg {

double sigmoid(double x) {
  // Split on sign so exp never overflows.
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double Activation::operator()(double x) const {
  switch (kind) {
    case ActivationKind::identity: return x;
    case ActivationKind::relu: return x > 0.0 ? x : 0.0;
    case ActivationKind::leaky_relu: return x >= 0.0 ? x : slope * x;
    case ActivationKind::sigmoid: return sigmoid(x);
  }
  return x;
}

double Activation::derivative(double x) const {
  switch (kind) {
    case ActivationKind::identity: return 1.0;
    case ActivationKind::relu: return x > 0.0 ? 1.0 : 0.0;
    case ActivationKind::leaky_relu: return x >= 0.0 ? 1.0 : slope;
    case ActivationKind::sigmoid: {
      const double s = sigmoid(x);
      return s * (1.0 - s);
    }
  }
  return 1.0;
}

DenseMatrix apply_activation(const Activation& act, const DenseMatrix& x) {
  DenseMatrix out(x.rows(), x.cols());
  auto ov = out.values();
  auto xv = x.values();
  for (std::size_t i = 0; i < xv.size(); ++i) ov[i] = act(xv[i]);
  return out;
}

DenseMatrix activation_backward(const Activation& act, const DenseMatrix& pre,
                                const DenseMatrix& grad) {
  if (!pre.same_shape(grad)) {
    throw ShapeError("activation_backward: pre-activation and gradient shapes differ");
  }
  DenseMatrix out(pre.rows(), pre.cols());
  auto ov = out.values();
  auto pv = pre.values();
  auto gv = grad.values();
  for (std::size_t i = 0; i < pv.size(); ++i) ov[i] = act.derivative(pv[i]) * gv[i];
  return out;
}

std::vector<double> stable_softmax(std::span<const double> scores) {
  if (scores.empty()) throw DomainError("softmax over an empty neighborhood");
  double m = scores[0];
  for (double s : scores) {
    if (!std::isfinite(s)) throw NumericError("softmax: non-finite score");
    m = std::max(m, s);
  }
  std::vector<double> w(scores.size());
  double z = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    w[i] = std::exp(scores[i] - m);
    z += w[i];
  }
  const double inv = 1.0 / z;
  for (double& v : w) v *= inv;
  return w;
}

std::vector<double> masked_softmax(std::span<const double> scores,
                                   std::span<const std::uint32_t> neighborhood) {
  if (neighborhood.empty()) throw DomainError("masked_softmax: empty neighborhood");
  std::vector<double> selected(neighborhood.size());
  for (std::size_t k = 0; k < neighborhood.size(); ++k) {
    const std::uint32_t j = neighborhood[k];
    if (j >= scores.size()) {
      throw ValidationError("masked_softmax: node id " + std::to_string(j) +
                            " outside score list of length " + std::to_string(scores.size()));
    }
    selected[k] = scores[j];
  }
  return stable_softmax(selected);
}

}  // namespace sg

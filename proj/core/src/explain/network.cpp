#include "onokg/explain/network.h"

#include <cmath>
#include <random>

#include "onokg/common/error.h"

namespace onokg::explain {

std::string_view activationName(Activation a) {
  switch (a) {
    case Activation::Identity: return "identity";
    case Activation::Relu: return "relu";
  }
  return "identity";
}

namespace {

Eigen::VectorXd apply(Activation a, const Eigen::VectorXd& z) {
  switch (a) {
    case Activation::Identity: return z;
    case Activation::Relu: return z.cwiseMax(0.0);
  }
  return z;
}

Eigen::VectorXd derivative(Activation a, const Eigen::VectorXd& z) {
  switch (a) {
    case Activation::Identity: return Eigen::VectorXd::Ones(z.size());
    case Activation::Relu: return (z.array() > 0.0).cast<double>().matrix();
  }
  return Eigen::VectorXd::Ones(z.size());
}

}  // namespace

FeedForwardNet::FeedForwardNet(std::vector<DenseLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw ValidationError("network", "at least one layer is required");
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const auto& L = layers_[l];
    if (L.weights.rows() == 0 || L.weights.cols() == 0) throw ValidationError("layer " + std::to_string(l), "empty weight matrix");
    if (static_cast<std::size_t>(L.bias.size()) != L.outputs()) throw DimensionError(L.outputs(), static_cast<std::size_t>(L.bias.size()), "bias of layer " + std::to_string(l));
    if (l > 0 && layers_[l - 1].outputs() != L.inputs()) throw DimensionError(layers_[l - 1].outputs(), L.inputs(), "input width of layer " + std::to_string(l));
  }
}

FeedForwardNet FeedForwardNet::random(const std::vector<std::size_t>& sizes, Activation hidden, std::uint64_t seed, bool withBias) {
  if (sizes.size() < 2) throw ValidationError("sizes", "need an input and an output size");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<DenseLayer> layers;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const auto in = static_cast<Eigen::Index>(sizes[l]);
    const auto out = static_cast<Eigen::Index>(sizes[l + 1]);
    const double scale = 1.0 / std::sqrt(static_cast<double>(in));
    DenseLayer L;
    L.weights = Eigen::MatrixXd::NullaryExpr(out, in, [&] { return scale * n(rng); });
    L.bias = withBias ? Eigen::VectorXd(Eigen::VectorXd::NullaryExpr(out, [&] { return 0.1 * n(rng); })) : Eigen::VectorXd::Zero(out);
    L.activation = l + 2 == sizes.size() ? Activation::Identity : hidden;
    layers.push_back(std::move(L));
  }
  return FeedForwardNet(std::move(layers));
}

void FeedForwardNet::checkInput(const Eigen::VectorXd& x) const {
  if (static_cast<std::size_t>(x.size()) != inputSize()) throw DimensionError(inputSize(), static_cast<std::size_t>(x.size()), "network input");
}

void FeedForwardNet::checkOutput(std::size_t output) const {
  if (output >= outputSize()) throw DimensionError(outputSize(), output, "output index");
}

Eigen::VectorXd FeedForwardNet::forward(const Eigen::VectorXd& x) const { return trace(x).activations.back(); }

FeedForwardNet::Trace FeedForwardNet::trace(const Eigen::VectorXd& x) const {
  checkInput(x);
  Trace t;
  t.activations.push_back(x);
  for (const auto& L : layers_) {
    Eigen::VectorXd z = L.weights * t.activations.back() + L.bias;
    if (!z.allFinite()) throw NumericError("non-finite activation at layer " + std::to_string(t.preActivations.size() + 1));
    t.activations.push_back(apply(L.activation, z));
    t.preActivations.push_back(std::move(z));
  }
  return t;
}

Eigen::VectorXd FeedForwardNet::gradient(const Eigen::VectorXd& x, std::size_t output) const {
  checkOutput(output);
  const auto t = trace(x);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(outputSize()));
  g(static_cast<Eigen::Index>(output)) = 1.0;
  for (std::size_t l = layers_.size(); l-- > 0;) {
    g = layers_[l].weights.transpose() * g.cwiseProduct(derivative(layers_[l].activation, t.preActivations[l]));
  }
  return g;
}

}  // namespace onokg::explain

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string_view>
#include <vector>

namespace onokg::explain {

enum class Activation { Identity, Relu };
std::string_view activationName(Activation a);

struct DenseLayer {
  Eigen::MatrixXd weights;  // out x in
  Eigen::VectorXd bias;     // out
  Activation activation = Activation::Identity;

  std::size_t inputs() const { return static_cast<std::size_t>(weights.cols()); }
  std::size_t outputs() const { return static_cast<std::size_t>(weights.rows()); }
};

// Fully connected network a_{l+1} = act_l(W_l a_l + b_l).
class FeedForwardNet {
 public:
  // Throws DimensionError when consecutive layers do not compose.
  explicit FeedForwardNet(std::vector<DenseLayer> layers);

  // Gaussian weights scaled by 1/sqrt(fan-in); biases zero unless withBias.
  // The last layer is linear.
  static FeedForwardNet random(const std::vector<std::size_t>& sizes, Activation hidden, std::uint64_t seed,
                               bool withBias = true);

  std::size_t inputSize() const { return layers_.front().inputs(); }
  std::size_t outputSize() const { return layers_.back().outputs(); }
  const std::vector<DenseLayer>& layers() const { return layers_; }

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;

  struct Trace {
    std::vector<Eigen::VectorXd> activations;     // a_0 = x, ..., a_L
    std::vector<Eigen::VectorXd> preActivations;  // z_1 ... z_L
  };
  // Throws NumericError naming the layer on a non-finite pre-activation.
  Trace trace(const Eigen::VectorXd& x) const;

  // d f_c / d x by backpropagation. ReLU uses derivative 0 at 0.
  Eigen::VectorXd gradient(const Eigen::VectorXd& x, std::size_t output) const;

 private:
  void checkInput(const Eigen::VectorXd& x) const;
  void checkOutput(std::size_t output) const;
  std::vector<DenseLayer> layers_;
};

}  // namespace onokg::explain

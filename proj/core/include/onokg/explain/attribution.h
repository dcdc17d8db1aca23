#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string_view>
#include <vector>

#include "onokg/explain/network.h"

namespace onokg::explain {

enum class Method { Sensitivity, Lrp };
std::string_view methodName(Method m);

inline constexpr double kDefaultEpsilon = 0.01;
inline constexpr double kDefaultDelta = 1.0;

struct RelevanceMap {
  Eigen::VectorXd scores;  // one per input dimension
  std::size_t target = 0;
  Method method = Method::Lrp;
  double epsilon = 0, delta = 0;  // LRP parameters; zero for sensitivity
  double total = 0;               // sum of scores
};

// R_d = (d f_c / d x_d)^2 by backpropagation; total = |grad f_c(x)|^2.
RelevanceMap sensitivity(const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t output);

// Relevance at every layer, output first, input last. The output layer holds
// `outputRelevance` (default f_c(x)) on unit c and 0 elsewhere. Per layer,
// with z_j the pre-activation of upper unit j, s_j = z_j + eps * sign(z_j)
// (sign(0) = +1) and N the fan-in:
//   R_{i<-j} = (a_i w_ji + (eps * sign(z_j) + delta * b_j) / N) / s_j * R_j
// With delta = 1 each layer's relevances sum to the output relevance.
// Relevance passes through activations unchanged. Throws ValidationError for
// eps < 0 and NumericError naming the unit when some s_j is zero.
std::vector<Eigen::VectorXd> lrpLayers(const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t output,
                                       double eps = kDefaultEpsilon, double delta = kDefaultDelta,
                                       std::optional<double> outputRelevance = std::nullopt);

RelevanceMap lrp(const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t output, double eps = kDefaultEpsilon,
                 double delta = kDefaultDelta, std::optional<double> outputRelevance = std::nullopt);

RelevanceMap attribute(Method m, const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t output,
                       double eps = kDefaultEpsilon, double delta = kDefaultDelta);

}  // namespace onokg::explain

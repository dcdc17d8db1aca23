#include "onokg/explain/attribution.h"

#include <cmath>

#include "onokg/common/error.h"

namespace onokg::explain {

std::string_view methodName(Method m) { return m == Method::Sensitivity ? "sensitivity" : "lrp"; }

RelevanceMap sensitivity(const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t output) {
  RelevanceMap m;
  m.scores = net.gradient(x, output).array().square().matrix();
  m.target = output;
  m.method = Method::Sensitivity;
  m.total = m.scores.sum();
  return m;
}

std::vector<Eigen::VectorXd> lrpLayers(const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t output, double eps,
                                       double delta, std::optional<double> outputRelevance) {
  if (!(eps >= 0) || !std::isfinite(eps)) throw ValidationError("epsilon", "must be a finite nonnegative number");
  if (!std::isfinite(delta)) throw ValidationError("delta", "must be finite");
  if (output >= net.outputSize()) throw DimensionError(net.outputSize(), output, "output index");
  const auto t = net.trace(x);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(net.outputSize()));
  r(static_cast<Eigen::Index>(output)) = outputRelevance.value_or(t.activations.back()(static_cast<Eigen::Index>(output)));
  std::vector<Eigen::VectorXd> out{r};
  const auto& layers = net.layers();
  for (std::size_t l = layers.size(); l-- > 0;) {
    const auto& L = layers[l];
    const Eigen::VectorXd& a = t.activations[l];
    const Eigen::VectorXd& z = t.preActivations[l];
    Eigen::VectorXd q(z.size()), stab(z.size());
    for (Eigen::Index j = 0; j < z.size(); ++j) {
      stab(j) = eps * (z(j) >= 0 ? 1.0 : -1.0);
      const double s = z(j) + stab(j);
      if (s == 0.0) {
        throw NumericError("singular relevance denominator at layer " + std::to_string(l + 1) + ", unit " + std::to_string(j));
      }
      q(j) = r(j) / s;
    }
    const double shared = (stab + delta * L.bias).dot(q) / static_cast<double>(L.inputs());
    r = (a.cwiseProduct(L.weights.transpose() * q)).array() + shared;
    if (!r.allFinite()) throw NumericError("non-finite relevance at layer " + std::to_string(l + 1));
    out.push_back(r);
  }
  return out;
}

RelevanceMap lrp(const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t output, double eps, double delta,
                 std::optional<double> outputRelevance) {
  RelevanceMap m;
  m.scores = lrpLayers(net, x, output, eps, delta, outputRelevance).back();
  m.target = output;
  m.method = Method::Lrp;
  m.epsilon = eps;
  m.delta = delta;
  m.total = m.scores.sum();
  return m;
}

RelevanceMap attribute(Method m, const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t output, double eps,
                       double delta) {
  return m == Method::Sensitivity ? sensitivity(net, x, output) : lrp(net, x, output, eps, delta);
}

}  // namespace onokg::explain

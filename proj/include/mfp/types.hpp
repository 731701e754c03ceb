#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mfp {

/// Flat parameter vector of a network, layer by layer: weight matrix
/// (row-major), then biases. See MlpSpec for the exact layout.
using ParamSet = Eigen::VectorXd;

/// Gradient with respect to a ParamSet; same length and layout.
using ParamGradient = Eigen::VectorXd;

/// Bad dimensions, malformed configs, invalid option values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN/Inf encountered where a finite value is required. When the failure
/// is tied to a specific parameter slot, param_index holds it (else -1).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, long param_index = -1)
      : std::runtime_error(what), param_index(param_index) {}
  long param_index;
};

}  // namespace mfp

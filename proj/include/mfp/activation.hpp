#pragma once

#include <string>
#include <string_view>

namespace mfp {

enum class Activation { Tanh, Mish, Sin };

/// Activation value with first and second derivative at a point.
struct ActivationJet {
  double value;
  double d1;
  double d2;
};

/// Same plus the third derivative, which the parameter-gradient of a
/// Laplacian-bearing loss needs.
struct ActivationDerivs {
  double value;
  double d1;
  double d2;
  double d3;
};

/// Analytic sigma, sigma', sigma'' of the activation. `scale` is the `a`
/// in sin(a z); it is ignored for tanh and mish.
ActivationJet activation_jet(Activation kind, double scale, double z);

/// Analytic derivatives through third order.
ActivationDerivs activation_derivs(Activation kind, double scale, double z);

/// Value only (cheaper for plain forward evaluation).
double activation_value(Activation kind, double scale, double z);

Activation activation_from_string(std::string_view name);
std::string to_string(Activation kind);

}  // namespace mfp

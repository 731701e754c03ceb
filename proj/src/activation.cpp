#include "mfp/activation.hpp"

#include <cmath>

#include "mfp/types.hpp"

namespace mfp {
namespace {

// ln(1 + e^z); for large z computed as z + ln(1 + e^-z) to avoid overflow.
double softplus(double z) {
  if (z > 20.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

ActivationDerivs tanh_derivs(double z) {
  double v = std::tanh(z);
  double s1 = 1.0 - v * v;
  double s2 = -2.0 * v * s1;
  double s3 = -2.0 * s1 * (1.0 - 3.0 * v * v);
  return {v, s1, s2, s3};
}

ActivationDerivs sin_derivs(double a, double z) {
  double s = std::sin(a * z);
  double c = std::cos(a * z);
  return {s, a * c, -a * a * s, -a * a * a * c};
}

// mish(z) = z * tanh(softplus(z)). With s = softplus(z), t = tanh(s),
// u = 1 - t^2 and p = dt/dz = u * s', the chain collapses to
//   m   = z t
//   m'  = t + z p
//   m'' = 2 p + z p'
//   m''' = 3 p' + z p''
ActivationDerivs mish_derivs(double z) {
  double s1 = sigmoid(z);        // softplus'
  double s2 = s1 * (1.0 - s1);   // softplus''
  double s3 = s2 * (1.0 - 2.0 * s1);
  double t = std::tanh(softplus(z));
  double u = 1.0 - t * t;
  double p = u * s1;
  double up = -2.0 * t * p;
  double pp = up * s1 + u * s2;
  double upp = -2.0 * (p * p + t * pp);
  double ppp = upp * s1 + 2.0 * up * s2 + u * s3;
  return {z * t, t + z * p, 2.0 * p + z * pp, 3.0 * pp + z * ppp};
}

}  // namespace

ActivationDerivs activation_derivs(Activation kind, double scale, double z) {
  switch (kind) {
    case Activation::Tanh:
      return tanh_derivs(z);
    case Activation::Mish:
      return mish_derivs(z);
    case Activation::Sin:
      return sin_derivs(scale, z);
  }
  throw ConfigError("unknown activation kind");
}

ActivationJet activation_jet(Activation kind, double scale, double z) {
  ActivationDerivs d = activation_derivs(kind, scale, z);
  return {d.value, d.d1, d.d2};
}

double activation_value(Activation kind, double scale, double z) {
  switch (kind) {
    case Activation::Tanh:
      return std::tanh(z);
    case Activation::Mish:
      return z * std::tanh(softplus(z));
    case Activation::Sin:
      return std::sin(scale * z);
  }
  throw ConfigError("unknown activation kind");
}

Activation activation_from_string(std::string_view name) {
  if (name == "tanh") return Activation::Tanh;
  if (name == "mish") return Activation::Mish;
  if (name == "sin") return Activation::Sin;
  throw ConfigError("unknown activation: " + std::string(name));
}

std::string to_string(Activation kind) {
  switch (kind) {
    case Activation::Tanh:
      return "tanh";
    case Activation::Mish:
      return "mish";
    case Activation::Sin:
      return "sin";
  }
  return "?";
}

}  // namespace mfp

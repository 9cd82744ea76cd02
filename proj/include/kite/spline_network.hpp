#pragma once

#include <vector>

#include "kite/types.hpp"

namespace kite {

/// Clamped uniform B-spline network mapping a steering input to one unitless
/// control derivative: C(u) = w · b(u). Basis functions are a partition of
/// unity with local support (at most degree+1 active at any u).
class SplineNetwork {
 public:
  /// `basis_count` weights over a clamped uniform knot grid spanning
  /// [u_min, u_max]; the distinct grid has basis_count − degree segments.
  SplineNetwork(int basis_count, int degree, double u_min, double u_max);

  struct BasisEval {
    VecX values;          // one entry per weight, nonnegative, sums to 1
    bool clamped = false;  // u fell outside the domain and was clamped
  };

  /// Evaluates the basis at u. Out-of-domain u is clamped to the nearest
  /// boundary and flagged (actuator saturation makes boundary evaluation
  /// routine, so this is not an error).
  BasisEval basis(double u) const;

  double output(double u) const;
  double output(const BasisEval& b) const { return weights_.dot(b.values); }

  int basis_count() const { return static_cast<int>(weights_.size()); }
  int degree() const { return degree_; }
  double u_min() const { return u_min_; }
  double u_max() const { return u_max_; }

  /// Full clamped knot vector (degree-fold repeated endpoints).
  const std::vector<double>& knots() const { return knots_; }

  const VecX& weights() const { return weights_; }
  void set_weights(const VecX& w);
  void fill_weights(double value) { weights_.setConstant(value); }
  void add_to_weights(const VecX& dw) { weights_ += dw; }

 private:
  int degree_;
  double u_min_, u_max_;
  std::vector<double> knots_;
  VecX weights_;
};

}  // namespace kite

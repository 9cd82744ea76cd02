#include "kite/spline_network.hpp"

#include <algorithm>
#include <cmath>

#include "kite/error.hpp"

namespace kite {

SplineNetwork::SplineNetwork(int basis_count, int degree, double u_min, double u_max)
    : degree_(degree), u_min_(u_min), u_max_(u_max) {
  if (degree < 0) throw DomainError("spline degree must be nonnegative");
  if (basis_count <= degree) {
    throw DomainError("spline needs more weights than its degree");
  }
  if (!(u_min < u_max)) throw DomainError("spline domain is empty");

  const int segments = basis_count - degree;
  knots_.reserve(static_cast<size_t>(basis_count + degree + 1));
  for (int i = 0; i < degree; ++i) knots_.push_back(u_min);
  for (int i = 0; i <= segments; ++i) {
    knots_.push_back(u_min + (u_max - u_min) * static_cast<double>(i) / segments);
  }
  for (int i = 0; i < degree; ++i) knots_.push_back(u_max);

  weights_ = VecX::Zero(basis_count);
}

SplineNetwork::BasisEval SplineNetwork::basis(double u) const {
  BasisEval out;
  if (u < u_min_ || u > u_max_) {
    out.clamped = true;
    u = std::clamp(u, u_min_, u_max_);
  }

  const int n = basis_count();
  const int p = degree_;
  out.values = VecX::Zero(n);

  // Knot span index such that knots[k] <= u < knots[k+1] (last span at u_max).
  int k;
  if (u >= u_max_) {
    k = n - 1;
  } else {
    k = static_cast<int>(std::upper_bound(knots_.begin(), knots_.end(), u) -
                         knots_.begin()) - 1;
    k = std::clamp(k, p, n - 1);
  }

  // Cox-de Boor triangular scheme over the p+1 active functions.
  std::vector<double> nd(static_cast<size_t>(p) + 1, 0.0);
  std::vector<double> left(static_cast<size_t>(p) + 1, 0.0);
  std::vector<double> right(static_cast<size_t>(p) + 1, 0.0);
  nd[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = u - knots_[static_cast<size_t>(k + 1 - j)];
    right[j] = knots_[static_cast<size_t>(k + j)] - u;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double den = right[r + 1] + left[j - r];
      const double tmp = den != 0.0 ? nd[r] / den : 0.0;
      nd[r] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    nd[j] = saved;
  }
  for (int j = 0; j <= p; ++j) {
    out.values[k - p + j] = nd[j];
  }
  return out;
}

double SplineNetwork::output(double u) const { return output(basis(u)); }

void SplineNetwork::set_weights(const VecX& w) {
  if (w.size() != weights_.size()) {
    throw DomainError("weight vector size does not match basis count");
  }
  weights_ = w;
}

}  // namespace kite

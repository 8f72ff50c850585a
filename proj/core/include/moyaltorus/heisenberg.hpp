#pragma once

#include <Eigen/Dense>

#include "params.hpp"

namespace moyaltorus {

// Element of h_n = H_n in exponential coordinates (exp = id): v + zE with
// v = (q, p) in V and bracket [v, v'] = Omega(v, v') E.
struct GroupElement {
  Eigen::VectorXd q;
  Eigen::VectorXd p;
  double z = 0.0;

  GroupElement() : q(Eigen::VectorXd::Zero(1)), p(Eigen::VectorXd::Zero(1)) {}
  GroupElement(Eigen::VectorXd q_, Eigen::VectorXd p_, double z_)
      : q(std::move(q_)), p(std::move(p_)), z(z_) {
    if (q.size() != p.size())
      throw std::invalid_argument("GroupElement: q and p dimension mismatch");
  }
  // n = 1 convenience
  GroupElement(double q_, double p_, double z_)
      : q(Eigen::VectorXd::Constant(1, q_)), p(Eigen::VectorXd::Constant(1, p_)), z(z_) {}

  int n() const { return static_cast<int>(q.size()); }
  static GroupElement identity(int n = 1) {
    return GroupElement(Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), 0.0);
  }
  static GroupElement e_q(int n = 1, int j = 0) {
    GroupElement g = identity(n);
    g.q[j] = 1.0;
    return g;
  }
  static GroupElement e_p(int n = 1, int j = 0) {
    GroupElement g = identity(n);
    g.p[j] = 1.0;
    return g;
  }
  static GroupElement central(double z, int n = 1) {
    GroupElement g = identity(n);
    g.z = z;
    return g;
  }
};

// Omega(v, v') = sum_j (q_j p'_j - p_j q'_j); Omega(e_q, e_p) = +1.
double omega(const GroupElement& g, const GroupElement& h);

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// Point flat(v0) + mu * flat(E) of the dual, stored through v0 itself.
struct CoadjointPoint {
  Eigen::VectorXd w_q;  // q-part of v0
  Eigen::VectorXd w_p;  // p-part of v0
  double mu = 0.0;

  CoadjointPoint() : w_q(Eigen::VectorXd::Zero(1)), w_p(Eigen::VectorXd::Zero(1)) {}
  CoadjointPoint(Eigen::VectorXd wq, Eigen::VectorXd wp, double mu_)
      : w_q(std::move(wq)), w_p(std::move(wp)), mu(mu_) {}
  static CoadjointPoint base_point(double mu, int n = 1) {
    return CoadjointPoint(Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), mu);
  }
  int n() const { return static_cast<int>(w_q.size()); }
};

// <flat(v0) + mu flat(E), X> = Omega(v0, v_X) + mu * z_X
double pairing(const CoadjointPoint& xi, const GroupElement& X);

// Eq. (3): Adflat_{v+zE}(flat(v0) + mu flat(E)) = flat(v0 - mu v) + mu flat(E)
CoadjointPoint coadjoint(const GroupElement& g, const CoadjointPoint& xi);

// Classical linear moment lambda_X(v) = <Adflat_v xi0, X>, xi0 = mu flat(E).
double moment(const GroupElement& X, const QuantizationParams& params,
              const Eigen::VectorXd& vq, const Eigen::VectorXd& vp);
double moment(const GroupElement& X, const QuantizationParams& params, double vq, double vp);

}  // namespace moyaltorus

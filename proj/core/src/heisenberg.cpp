#include "moyaltorus/heisenberg.hpp"

namespace moyaltorus {

double omega(const GroupElement& g, const GroupElement& h) {
  if (g.n() != h.n()) throw std::invalid_argument("omega: dimension mismatch");
  return g.q.dot(h.p) - g.p.dot(h.q);
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (g.n() != h.n()) throw std::invalid_argument("multiply: dimension mismatch");
  return GroupElement(g.q + h.q, g.p + h.p, g.z + h.z + 0.5 * omega(g, h));
}

GroupElement inverse(const GroupElement& g) { return GroupElement(-g.q, -g.p, -g.z); }

double pairing(const CoadjointPoint& xi, const GroupElement& X) {
  if (xi.n() != X.n()) throw std::invalid_argument("pairing: dimension mismatch");
  return xi.w_q.dot(X.p) - xi.w_p.dot(X.q) + xi.mu * X.z;
}

CoadjointPoint coadjoint(const GroupElement& g, const CoadjointPoint& xi) {
  if (g.n() != xi.n()) throw std::invalid_argument("coadjoint: dimension mismatch");
  return CoadjointPoint(xi.w_q - xi.mu * g.q, xi.w_p - xi.mu * g.p, xi.mu);
}

double moment(const GroupElement& X, const QuantizationParams& params,
              const Eigen::VectorXd& vq, const Eigen::VectorXd& vp) {
  GroupElement v(vq, vp, 0.0);
  CoadjointPoint xi = coadjoint(v, CoadjointPoint::base_point(params.mu, X.n()));
  return pairing(xi, X);
}

double moment(const GroupElement& X, const QuantizationParams& params, double vq, double vp) {
  return moment(X, params, Eigen::VectorXd::Constant(1, vq), Eigen::VectorXd::Constant(1, vp));
}

}  // namespace moyaltorus

#include "moyaltorus/moyal.hpp"

#include <algorithm>
#include <cmath>

namespace moyaltorus {

namespace {

bool same_frequency(const PlaneWave& a, const PlaneWave& b) {
  return std::abs(a.a_q - b.a_q) <= kFrequencyMergeTol &&
         std::abs(a.a_p - b.a_p) <= kFrequencyMergeTol;
}

}  // namespace

void SymbolSum::canonicalize() {
  std::vector<PlaneWave> merged;
  for (const PlaneWave& t : terms) {
    if (!std::isfinite(t.amp.real()) || !std::isfinite(t.amp.imag()) || !std::isfinite(t.a_q) ||
        !std::isfinite(t.a_p))
      throw std::invalid_argument("SymbolSum: non-finite term");
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const PlaneWave& m) { return same_frequency(m, t); });
    if (it == merged.end())
      merged.push_back(t);
    else
      it->amp += t.amp;
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const PlaneWave& m) { return std::abs(m.amp) == 0.0; }),
               merged.end());
  std::sort(merged.begin(), merged.end(), [](const PlaneWave& a, const PlaneWave& b) {
    if (a.a_q != b.a_q) return a.a_q < b.a_q;
    return a.a_p < b.a_p;
  });
  terms = std::move(merged);
}

std::complex<double> SymbolSum::value(double q, double p) const {
  std::complex<double> s{};
  for (const PlaneWave& t : terms) s += t.value(q, p);
  return s;
}

SymbolSum star_planewave(const SymbolSum& F, const SymbolSum& G,
                         const QuantizationParams& params) {
  std::vector<PlaneWave> out;
  out.reserve(F.terms.size() * G.terms.size());
  for (const PlaneWave& f : F.terms) {
    for (const PlaneWave& g : G.terms) {
      const double omega_ab = f.a_q * g.a_p - f.a_p * g.a_q;
      const double phase = 0.5 * params.theta * kStarSign * omega_ab;
      const std::complex<double> amp =
          f.amp * g.amp * std::complex<double>(std::cos(phase), std::sin(phase));
      out.push_back(PlaneWave{amp, f.a_q + g.a_q, f.a_p + g.a_p});
    }
  }
  return SymbolSum(std::move(out));
}

SymbolSum operator+(const SymbolSum& F, const SymbolSum& G) {
  std::vector<PlaneWave> t = F.terms;
  t.insert(t.end(), G.terms.begin(), G.terms.end());
  return SymbolSum(std::move(t));
}

SymbolSum operator*(std::complex<double> c, const SymbolSum& F) {
  std::vector<PlaneWave> t = F.terms;
  for (PlaneWave& w : t) w.amp *= c;
  return SymbolSum(std::move(t));
}

SymbolSum conj(const SymbolSum& F) {
  std::vector<PlaneWave> t;
  t.reserve(F.terms.size());
  for (const PlaneWave& w : F.terms)
    t.push_back(PlaneWave{std::conj(w.amp), -w.a_q, -w.a_p});
  return SymbolSum(std::move(t));
}

double symbol_distance(const SymbolSum& F, const SymbolSum& G) {
  SymbolSum diff = F + (std::complex<double>(-1.0) * G);
  double d = 0.0;
  for (const PlaneWave& t : diff.terms) d = std::max(d, std::abs(t.amp));
  return d;
}

void PolynomialSymbol::prune(double tol) {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = (std::abs(it->second) <= tol) ? coeffs.erase(it) : std::next(it);
}

int PolynomialSymbol::total_degree() const {
  int d = -1;
  for (const auto& [key, c] : coeffs)
    if (std::abs(c) != 0.0) d = std::max(d, key.first + key.second);
  return d;
}

std::complex<double> PolynomialSymbol::value(double q, double p) const {
  std::complex<double> s{};
  for (const auto& [key, c] : coeffs)
    s += c * std::pow(q, key.first) * std::pow(p, key.second);
  return s;
}

PolynomialSymbol PolynomialSymbol::derivative_q() const {
  PolynomialSymbol out;
  for (const auto& [key, c] : coeffs)
    if (key.first > 0) out.coeffs[{key.first - 1, key.second}] += double(key.first) * c;
  return out;
}

PolynomialSymbol PolynomialSymbol::derivative_p() const {
  PolynomialSymbol out;
  for (const auto& [key, c] : coeffs)
    if (key.second > 0) out.coeffs[{key.first, key.second - 1}] += double(key.second) * c;
  return out;
}

PolynomialSymbol operator+(const PolynomialSymbol& P, const PolynomialSymbol& Q) {
  PolynomialSymbol out = P;
  for (const auto& [key, c] : Q.coeffs) out.coeffs[key] += c;
  out.prune();
  return out;
}

PolynomialSymbol operator-(const PolynomialSymbol& P, const PolynomialSymbol& Q) {
  return P + (std::complex<double>(-1.0) * Q);
}

PolynomialSymbol operator*(std::complex<double> c, const PolynomialSymbol& P) {
  PolynomialSymbol out;
  for (const auto& [key, v] : P.coeffs) out.coeffs[key] = c * v;
  out.prune();
  return out;
}

PolynomialSymbol operator*(const PolynomialSymbol& P, const PolynomialSymbol& Q) {
  PolynomialSymbol out;
  for (const auto& [kp, cp] : P.coeffs)
    for (const auto& [kq, cq] : Q.coeffs)
      out.coeffs[{kp.first + kq.first, kp.second + kq.second}] += cp * cq;
  out.prune();
  return out;
}

PolynomialSymbol star_poly(const PolynomialSymbol& P, const PolynomialSymbol& Q,
                           const QuantizationParams& params) {
  const int dP = P.total_degree();
  const int dQ = Q.total_degree();
  if (dP < 0 || dQ < 0) return PolynomialSymbol{};
  const int kmax = std::min(dP, dQ);

  // (theta / 2i)^k = (-i theta / 2)^k
  const std::complex<double> factor(0.0, -0.5 * params.theta * kStarSign);

  PolynomialSymbol result;
  std::complex<double> coeff = 1.0;  // factor^k / k!
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) coeff *= factor / double(k);
    // P_k(P,Q) = sum_j C(k,j)(-1)^j (d_q^{k-j} d_p^j P)(d_p^{k-j} d_q^j Q)
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
      if (j > 0) binom *= double(k - j + 1) / double(j);
      PolynomialSymbol dP_term = P;
      for (int r = 0; r < k - j; ++r) dP_term = dP_term.derivative_q();
      for (int r = 0; r < j; ++r) dP_term = dP_term.derivative_p();
      PolynomialSymbol dQ_term = Q;
      for (int r = 0; r < k - j; ++r) dQ_term = dQ_term.derivative_p();
      for (int r = 0; r < j; ++r) dQ_term = dQ_term.derivative_q();
      const std::complex<double> sgn = (j % 2 == 0) ? 1.0 : -1.0;
      result = result + (coeff * binom * sgn) * (dP_term * dQ_term);
    }
  }
  result.prune();
  return result;
}

}  // namespace moyaltorus

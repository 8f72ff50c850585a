#include "moyaltorus/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace moyaltorus {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

void write_wavefunction_csv(std::ostream& os, const PositionWavefunction& psi) {
  os << "q,re,im\n";
  for (int k = 0; k < psi.grid.count; ++k)
    os << fmt(psi.grid.point(k)) << ',' << fmt(psi.samples[k].real()) << ','
       << fmt(psi.samples[k].imag()) << '\n';
}

void write_wavefunction_csv(const std::string& path, const PositionWavefunction& psi) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_wavefunction_csv(os, psi);
}

PositionWavefunction read_wavefunction_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("q,re,im", 0) != 0)
    throw std::runtime_error("wavefunction CSV: missing 'q,re,im' header");
  std::vector<double> qs;
  std::vector<cplx> vals;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    double f[3];
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(row, cell, ',')) throw std::runtime_error("wavefunction CSV: short row");
      f[i] = std::stod(cell);
    }
    qs.push_back(f[0]);
    vals.push_back(cplx(f[1], f[2]));
  }
  const int N = static_cast<int>(qs.size());
  if (N < 8) throw std::runtime_error("wavefunction CSV: too few rows");
  const double h = qs[1] - qs[0];
  for (int k = 1; k < N; ++k)
    if (std::abs(qs[k] - qs[0] - k * h) > 1e-9)
      throw std::invalid_argument("wavefunction CSV: non-uniform grid");
  const double L = 0.5 * N * h;
  Grid1D grid(qs[0] + L, L, N);
  Vec s(N);
  for (int k = 0; k < N; ++k) s[k] = vals[k];
  return PositionWavefunction(std::move(s), grid);
}

PositionWavefunction read_wavefunction_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_wavefunction_csv(is);
}

void write_operator_csv(std::ostream& os, const GridOperator& A) {
  const int N = A.grid.count;
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      if (k) os << ',';
      os << fmt(A.entries(j, k).real()) << ',' << fmt(A.entries(j, k).imag());
    }
    os << '\n';
  }
}

std::string to_json(const GroupElement& g) {
  json j;
  j["q"] = std::vector<double>(g.q.data(), g.q.data() + g.q.size());
  j["p"] = std::vector<double>(g.p.data(), g.p.data() + g.p.size());
  j["z"] = g.z;
  return j.dump();
}

GroupElement group_element_from_json(const std::string& text) {
  const json j = json::parse(text);
  const auto qv = j.at("q").get<std::vector<double>>();
  const auto pv = j.at("p").get<std::vector<double>>();
  Eigen::VectorXd q = Eigen::Map<const Eigen::VectorXd>(qv.data(), qv.size());
  Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(pv.data(), pv.size());
  return GroupElement(std::move(q), std::move(p), j.at("z").get<double>());
}

std::string to_json(const SymbolSum& F) {
  json terms = json::array();
  for (const PlaneWave& t : F.terms)
    terms.push_back({{"amp_re", t.amp.real()},
                     {"amp_im", t.amp.imag()},
                     {"a_q", t.a_q},
                     {"a_p", t.a_p}});
  return json{{"terms", terms}}.dump();
}

SymbolSum symbol_sum_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<PlaneWave> terms;
  for (const json& t : j.at("terms"))
    terms.push_back(PlaneWave{cplx(t.at("amp_re").get<double>(), t.at("amp_im").get<double>()),
                              t.at("a_q").get<double>(), t.at("a_p").get<double>()});
  return SymbolSum(std::move(terms));
}

std::string to_json(const TorusElement& A) {
  json terms = json::array();
  for (const auto& [k, c] : A.coeffs)
    terms.push_back(
        {{"m", k.first}, {"n", k.second}, {"re", c.real()}, {"im", c.imag()}});
  return json{{"theta", A.theta}, {"terms", terms}}.dump();
}

TorusElement torus_element_from_json(const std::string& text) {
  const json j = json::parse(text);
  TorusElement A(j.at("theta").get<double>());
  for (const json& t : j.at("terms"))
    A.coeffs[{t.at("m").get<int>(), t.at("n").get<int>()}] +=
        cplx(t.at("re").get<double>(), t.at("im").get<double>());
  A.prune();
  return A;
}

std::string to_json(const FockVector& phi) {
  json coeffs = json::array();
  for (int k = 0; k <= phi.degree(); ++k)
    coeffs.push_back({phi.coeffs[k].real(), phi.coeffs[k].imag()});
  return json{{"mu", phi.mu}, {"coeffs", coeffs}}.dump();
}

FockVector fock_vector_from_json(const std::string& text) {
  const json j = json::parse(text);
  const json& cj = j.at("coeffs");
  Vec c(cj.size());
  for (size_t k = 0; k < cj.size(); ++k)
    c[k] = cplx(cj[k].at(0).get<double>(), cj[k].at(1).get<double>());
  return FockVector(j.at("mu").get<double>(), std::move(c));
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
}

}  // namespace moyaltorus

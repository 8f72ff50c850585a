#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "acceptance.hpp"
#include "moyaltorus/bargmann.hpp"
#include "moyaltorus/io.hpp"
#include "moyaltorus/nctorus.hpp"
#include "moyaltorus/starexp.hpp"

using namespace moyaltorus;

namespace {

struct CommonOpts {
  double mu = 0.0;
  double theta = 0.0;
  int grid_n = 256;
  double window = 12.0;
  double tol = 0.0;
  std::vector<std::string> inputs;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  auto* mu = cmd->add_option("--mu", opts.mu, "orbit parameter mu (theta = 1/mu)");
  auto* theta = cmd->add_option("--theta", opts.theta, "deformation parameter theta (mu = 1/theta)");
  mu->excludes(theta);
  theta->excludes(mu);
  cmd->add_option("--grid-n", opts.grid_n, "grid point count (2^a or 3*2^a)");
  cmd->add_option("--window", opts.window, "grid half-width L");
  cmd->add_option("--tol", opts.tol, "tolerance override");
  cmd->add_option("--input", opts.inputs, "input file(s)");
  cmd->add_option("--out", opts.out, "output file (default: stdout)");
}

QuantizationParams resolve_params(const CommonOpts& opts, double default_theta) {
  if (opts.mu != 0.0) return QuantizationParams::from_mu(opts.mu);
  if (opts.theta != 0.0) return QuantizationParams::from_theta(opts.theta);
  return QuantizationParams::from_theta(default_theta);
}

void emit(const CommonOpts& opts, const std::string& content) {
  if (opts.out.empty()) {
    std::cout << content;
  } else {
    write_text_file(opts.out, content);
  }
}

std::string f17(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

int run_torus_commutator(const CommonOpts& opts) {
  const QuantizationParams params = resolve_params(opts, 0.5);
  const double theta = params.theta;
  TorusElement U = generator(TorusGenerator::U, theta);
  TorusElement V = generator(TorusGenerator::V, theta);
  const cplx ratio = multiply(U, V).coeffs.at({1, 1}) / multiply(V, U).coeffs.at({1, 1});
  const double dev = std::abs(ratio - std::exp(cplx(0.0, theta)));
  std::ostringstream os;
  os << "theta " << f17(theta) << "\n"
     << "UV/VU " << f17(ratio.real()) << " " << f17(ratio.imag()) << "\n"
     << "deviation-from-exp(i*theta) " << f17(dev) << "\n";
  emit(opts, os.str());
  const double tol = opts.tol > 0.0 ? opts.tol : 1e-12;
  if (dev > tol) {
    std::cerr << "torus-commutator: deviation " << dev << " exceeds tolerance " << tol << "\n";
    return 1;
  }
  return 0;
}

int run_starexp_table(const CommonOpts& opts) {
  const QuantizationParams params = resolve_params(opts, 1.0);
  const GroupElement ref(1.0, 1.0, 0.0);
  std::ostringstream os;
  os << "g_q,g_p,g_z,freq_q,freq_p,central_re,central_im,defect_re,defect_im\n";
  os << std::setprecision(17);
  for (double gq = -1.0; gq <= 1.0; gq += 0.5)
    for (double gp = -1.0; gp <= 1.0; gp += 0.5)
      for (double gz : {0.0, 0.5}) {
        const GroupElement g(gq, gp, gz);
        StarExpResult e = star_exp(g, params);
        const cplx defect = homomorphism_defect(g, ref, params);
        os << gq << "," << gp << "," << gz << "," << e.symbol.terms[0].a_q << ","
           << e.symbol.terms[0].a_p << "," << e.central_phase.real() << ","
           << e.central_phase.imag() << "," << defect.real() << "," << defect.imag() << "\n";
      }
  emit(opts, os.str());
  return 0;
}

int run_bargmann(const CommonOpts& opts, double alpha, bool check_intertwining) {
  BargmannConfig cfg;
  cfg.mu = (opts.mu != 0.0) ? opts.mu : cfg.mu;
  if (alpha > 0.0) cfg.alpha = alpha;
  cfg.validate();
  const QuantizationParams params = QuantizationParams::from_mu(cfg.mu);

  PositionWavefunction u = [&]() {
    if (!opts.inputs.empty()) return read_wavefunction_csv(opts.inputs.front());
    Grid1D g(0.0, opts.window, opts.grid_n);
    return PositionWavefunction::from_function(
        [&](double q) { return cplx(std::exp(-0.5 * cfg.mu * q * q), 0.0); }, g);
  }();

  if (check_intertwining) {
    std::ostringstream os;
    os << "w_q,w_p,w_z,residual\n" << std::setprecision(17);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> R(-1.5, 1.5);
    for (int i = 0; i < 8; ++i) {
      GroupElement w(R(rng), R(rng), 0.3 * R(rng));
      FockVector lhs = intertwiner_apply(u_kw(w, u, params), cfg);
      FockVector rhs =
          u_bf_truncated(w, intertwiner_apply(u, cfg), params, FockVector::kMaxDegree);
      const double res = norm(lhs + cplx(-1.0, 0.0) * rhs) / norm(rhs);
      os << w.q[0] << "," << w.p[0] << "," << w.z << "," << res << "\n";
    }
    emit(opts, os.str());
    return 0;
  }
  emit(opts, to_json(intertwiner_apply(u, cfg)) + "\n");
  return 0;
}

int run_bf_action(const CommonOpts& opts) {
  if (opts.inputs.size() != 2) {
    std::cerr << "bf-action: expects --input torus.json --input fock.json\n";
    return 2;
  }
  const QuantizationParams params = resolve_params(opts, 1.0);
  TorusElement A = torus_element_from_json(read_text_file(opts.inputs[0]));
  FockVector phi = fock_vector_from_json(read_text_file(opts.inputs[1]));
  emit(opts, to_json(torus_action(A, phi, params)) + "\n");
  return 0;
}

int run_norm_estimate(const CommonOpts& opts) {
  const QuantizationParams params = resolve_params(opts, 0.5);
  TorusElement A = [&]() {
    if (!opts.inputs.empty()) return torus_element_from_json(read_text_file(opts.inputs.front()));
    const double theta = params.theta;
    TorusElement U = generator(TorusGenerator::U, theta);
    TorusElement V = generator(TorusGenerator::V, theta);
    return U + adjoint(U) + V + adjoint(V);
  }();
  Grid1D grid(0.0, opts.window, opts.grid_n);
  NormEstimate e = norm_estimate(A, params, grid);
  std::ostringstream os;
  os << "norm " << f17(e.value) << "\n"
     << "refinement-delta " << f17(e.refinement_delta) << "\n";
  emit(opts, os.str());
  if (opts.tol > 0.0 && e.refinement_delta > opts.tol) {
    std::cerr << "norm-estimate: refinement delta exceeds tolerance\n";
    return 1;
  }
  return 0;
}

int run_verify_all(const CommonOpts& opts) {
  std::ostringstream os;
  bool all = true;
  for (const CriterionResult& r : run_all()) {
    os << format_result(r) << "\n";
    all = all && r.pass;
  }
  os << (all ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  emit(opts, os.str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("MOYAL_TORUS_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) Eigen::setNbThreads(n);
  }

  CLI::App app{"deformation-quantization toolkit: Weyl/Moyal calculus, "
               "noncommutative torus, Bargmann-Fock transforms"};
  app.require_subcommand(1);

  CommonOpts torus_opts, starexp_opts, bargmann_opts, bf_opts, norm_opts, verify_opts;
  double alpha = 0.0;
  bool check_intertwining = false;

  auto* torus = app.add_subcommand("torus-commutator", "print the UV/VU reordering ratio");
  add_common(torus, torus_opts);
  auto* starexp = app.add_subcommand("starexp-table",
                                     "CSV table of star-exponential data over group elements");
  add_common(starexp, starexp_opts);
  auto* bargmann = app.add_subcommand("bargmann", "position state -> Fock coefficients");
  add_common(bargmann, bargmann_opts);
  bargmann->add_option("--alpha", alpha, "mother-state Gaussian width");
  bargmann->add_flag("--check-intertwining", check_intertwining,
                     "emit intertwining residual table instead of the transform");
  auto* bf = app.add_subcommand("bf-action", "apply a torus element to a Fock vector");
  add_common(bf, bf_opts);
  auto* nrm = app.add_subcommand("norm-estimate", "operator norm of a quantized torus element");
  add_common(nrm, norm_opts);
  auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
  add_common(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (torus->parsed()) return run_torus_commutator(torus_opts);
    if (starexp->parsed()) return run_starexp_table(starexp_opts);
    if (bargmann->parsed()) return run_bargmann(bargmann_opts, alpha, check_intertwining);
    if (bf->parsed()) return run_bf_action(bf_opts);
    if (nrm->parsed()) return run_norm_estimate(norm_opts);
    if (verify->parsed()) return run_verify_all(verify_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include "hinfsyn/hinf_norm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lapack_support.hpp"

namespace hinfsyn {

namespace {

constexpr int kProbeCount = 32;
constexpr double kProbeLow = 1e-4;
constexpr double kProbeHigh = 1e4;
constexpr int kMaxDoublings = 60;
constexpr int kMaxBisections = 200;

double spectral_radius(const Eigen::MatrixXd& M) {
  const Eigen::VectorXcd eigs = detail::spectrum(M);
  double rho = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    rho = std::max(rho, std::abs(eigs(i)));
  }
  return rho;
}

}  // namespace

Eigen::MatrixXd hamiltonian(const ClosedLoop& cl, double beta) {
  if (!(beta > 0) || !std::isfinite(beta)) {
    throw InvalidArgumentError("beta must be positive and finite");
  }
  const Eigen::Index n = cl.Ac.rows();
  Eigen::MatrixXd H(2 * n, 2 * n);
  H.topLeftCorner(n, n) = cl.Ac;
  H.topRightCorner(n, n) =
      cl.plant.B1() * cl.plant.B1().transpose() / beta;
  H.bottomLeftCorner(n, n) = -cl.C1.transpose() * cl.C1;
  H.bottomRightCorner(n, n) = -cl.Ac.transpose();
  return H;
}

double imaginary_axis_tolerance(const Eigen::Ref<const Eigen::MatrixXd>& H) {
  return 1e-8 * (1.0 + H.norm());
}

bool has_imaginary_axis_eig(const Eigen::Ref<const Eigen::MatrixXd>& H,
                            double tol_im) {
  if (H.rows() == 0 || H.rows() != H.cols()) {
    throw DimensionError("has_imaginary_axis_eig needs a square nonempty matrix");
  }
  if (!std::isfinite(tol_im) || tol_im < 0) {
    throw InvalidArgumentError("imaginary-axis tolerance must be finite and nonnegative");
  }
  const Eigen::VectorXcd eigs = detail::spectrum(H);
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    if (std::abs(eigs(i).real()) <= tol_im * (1.0 + std::abs(eigs(i)))) {
      return true;
    }
  }
  return false;
}

bool has_imaginary_axis_eig(const Eigen::Ref<const Eigen::MatrixXd>& H) {
  return has_imaginary_axis_eig(H, imaginary_axis_tolerance(H));
}

HinfEvaluation hinf_norm(const ClosedLoop& cl, double tol_bis) {
  if (!(tol_bis > 0) || !std::isfinite(tol_bis)) {
    throw InvalidArgumentError("bisection tolerance must be positive and finite");
  }
  if (!is_hurwitz(cl.Ac)) {
    throw UnstableClosedLoopError(
        "closed loop is not Hurwitz; its H-infinity norm is unbounded");
  }

  // gamma <= norm at every probe frequency, so the sweep maximum is a valid
  // lower seed. Probes are scaled by the spectral radius so the sweep covers
  // the band where the dynamics actually live.
  HinfEvaluation out;
  const double rho = spectral_radius(cl.Ac);
  out.probe_frequencies.reserve(kProbeCount + 1);
  out.probe_frequencies.push_back(0.0);
  for (double w : log_spaced_grid(kProbeLow * rho, kProbeHigh * rho, kProbeCount)) {
    out.probe_frequencies.push_back(w);
  }
  double lower = 0.0;
  for (double w : out.probe_frequencies) {
    lower = std::max(lower, sigma_max_response(cl, w));
  }

  const auto level_is_upper_bound = [&cl](double gamma) {
    return !has_imaginary_axis_eig(hamiltonian(cl, gamma * gamma));
  };

  double upper = lower > 0.0 ? 2.0 * lower : 1.0;
  for (int d = 0; !level_is_upper_bound(upper); ++d) {
    if (d >= kMaxDoublings) {
      throw NonConvergenceError(
          "failed to bracket the norm from above; the level test kept "
          "reporting imaginary-axis eigenvalues",
          lower, upper);
    }
    lower = upper;  // a failed level test certifies upper <= norm
    upper *= 2.0;
  }

  while (upper - lower > tol_bis * std::max(1.0, lower)) {
    if (out.iterations >= kMaxBisections) {
      throw NonConvergenceError("bisection exceeded its iteration cap", lower,
                                upper);
    }
    const double mid = 0.5 * (lower + upper);
    if (mid <= lower || mid >= upper) {
      break;  // bracket has collapsed to adjacent doubles
    }
    if (level_is_upper_bound(mid)) {
      upper = mid;
    } else {
      lower = mid;
    }
    ++out.iterations;
  }

  out.lower = lower;
  out.upper = upper;
  out.gamma = 0.5 * (lower + upper);
  out.beta = out.gamma * out.gamma;
  return out;
}

double hinf_norm_grid_oracle(const ClosedLoop& cl,
                             const std::vector<double>& omega_grid) {
  if (omega_grid.empty()) {
    throw InvalidArgumentError("frequency grid must be nonempty");
  }
  if (!is_hurwitz(cl.Ac)) {
    throw UnstableClosedLoopError(
        "closed loop is not Hurwitz; its H-infinity norm is unbounded");
  }
  double best = 0.0;
  for (double w : omega_grid) {
    best = std::max(best, sigma_max_response(cl, w));
  }
  return best;
}

std::vector<double> log_spaced_grid(double lo, double hi, int count) {
  if (!(lo > 0) || !(hi > lo) || !std::isfinite(hi)) {
    throw InvalidArgumentError("log grid needs 0 < lo < hi, both finite");
  }
  if (count < 2) {
    throw InvalidArgumentError("log grid needs at least two points");
  }
  std::vector<double> grid(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    grid[i] = lo * std::exp(step * i);
  }
  return grid;
}

}  // namespace hinfsyn

#include "bfman/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bfman/errors.hpp"

namespace bfman {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

double pmom_log_density(double x, const PMomParams& params) {
  if (x == 0.0) return kNegInf;
  const double psi = params.psi;
  return -0.5 * std::log(2.0 * kPi * psi * psi * psi) - x * x / (2.0 * psi) +
         2.0 * std::log(std::fabs(x));
}

double pmom_sample(const PMomParams& params, RngStream& rng) {
  const double mag = std::sqrt(params.psi) * rng.chi3();
  return rng.bernoulli(0.5) ? mag : -mag;
}

std::pair<bool, double> mass_nonlocal_sample(const MassNonlocalParams& params,
                                             RngStream& rng) {
  if (!rng.bernoulli(params.theta)) return {false, 0.0};
  return {true, pmom_sample(PMomParams{params.psi}, rng)};
}

double slab_conditional_log_density(double eta, double c, double d) {
  if (eta == 0.0) return kNegInf;
  const double centered = eta - d / c;
  return 2.0 * std::log(std::fabs(eta)) - c * centered * centered;
}

double slab_conditional_sample(double c, double d, RngStream& rng) {
  const double mu = d / c;
  const double s = std::sqrt(0.5 / c);
  if (mu == 0.0) {
    // Target reduces to the centered second-moment density: |eta| = s chi_3.
    const double mag = s * rng.chi3();
    return rng.bernoulli(0.5) ? mag : -mag;
  }
  // Envelope: eta^2 <= 2 (eta - mu)^2 + 2 mu^2 bounds the target by twice the
  // mixture of the centered second-moment density and N(mu, s^2).
  const double s2 = s * s;
  const double w_centered = s2 / (s2 + mu * mu);
  for (;;) {
    double x;
    if (rng.bernoulli(w_centered)) {
      const double mag = s * rng.chi3();
      x = mu + (rng.bernoulli(0.5) ? mag : -mag);
    } else {
      x = rng.normal(mu, s);
    }
    const double dx = x - mu;
    const double accept = x * x / (2.0 * (dx * dx + mu * mu));
    if (rng.uniform() < accept) return x;
  }
}

Eigen::VectorXd mvnormal_from_precision(const Eigen::MatrixXd& precision,
                                        const Eigen::VectorXd& linear,
                                        RngStream& rng, const char* context) {
  if (!precision.allFinite()) {
    throw NumericError(std::string("non-finite precision matrix in ") + context);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(precision);
  if (llt.info() != Eigen::Success) {
    throw NumericError(std::string("non-positive-definite precision in ") + context);
  }
  const Eigen::VectorXd mean = llt.solve(linear);
  Eigen::VectorXd z(precision.rows());
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.normal();
  // cov = P^{-1} = (L L^T)^{-1}; solving L^T w = z gives w ~ N(0, P^{-1}).
  return mean + llt.matrixU().solve(z);
}

Eigen::VectorXd mvnormal_with_covariance(const Eigen::VectorXd& mean,
                                         const Eigen::MatrixXd& cov,
                                         RngStream& rng, const char* context) {
  if (!cov.allFinite()) {
    throw NumericError(std::string("non-finite covariance matrix in ") + context);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw NumericError(std::string("non-positive-definite covariance in ") + context);
  }
  Eigen::VectorXd z(cov.rows());
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.normal();
  return mean + llt.matrixL() * z;
}

}  // namespace bfman

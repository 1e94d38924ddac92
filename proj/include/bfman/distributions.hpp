#pragma once

#include <Eigen/Dense>
#include <utility>

#include "bfman/rng.hpp"

namespace bfman {

struct PMomParams {
  double psi;  // scale, > 0
};

struct MassNonlocalParams {
  double theta;  // slab weight, in [0,1]
  double psi;    // slab scale, > 0
};

// log of p(x | psi) = (2 pi psi^3)^{-1/2} exp(-x^2 / 2 psi) x^2.
// x = 0 gives -inf (the x^2 factor kills the density at the origin).
double pmom_log_density(double x, const PMomParams& params);

// Exact draw: |x| = sqrt(psi) * chi_3, sign uniform. E[x^2] = 3 psi.
double pmom_sample(const PMomParams& params, RngStream& rng);

// Returns (z, eta): z ~ Bernoulli(theta); eta is exactly 0.0 when z = 0
// and a pmom_sample otherwise.
std::pair<bool, double> mass_nonlocal_sample(const MassNonlocalParams& params,
                                             RngStream& rng);

// Unnormalized log density of the score full conditional
//   pi(eta | c, d) ∝ eta^2 exp(-c (eta - d/c)^2),  c > 0.
double slab_conditional_log_density(double eta, double c, double d);

// Exact draw from pi(eta | c, d) by rejection from a two-component
// envelope (centered second-moment density + normal), acceptance rate 1/2.
// Serves as ground truth for the Metropolis-Hastings score update.
double slab_conditional_sample(double c, double d, RngStream& rng);

// Draw from N(P^{-1} b, P^{-1}) given the precision matrix P and linear
// term b, via one Cholesky factorization -- the explicit inverse is never
// formed. Throws NumericError naming `context` if P is not positive
// definite.
Eigen::VectorXd mvnormal_from_precision(const Eigen::MatrixXd& precision,
                                        const Eigen::VectorXd& linear,
                                        RngStream& rng, const char* context);

// Draw from N(mean, cov). Throws NumericError naming `context` if cov is
// not positive definite.
Eigen::VectorXd mvnormal_with_covariance(const Eigen::VectorXd& mean,
                                         const Eigen::MatrixXd& cov,
                                         RngStream& rng, const char* context);

}  // namespace bfman

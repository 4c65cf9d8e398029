#pragma once

#include <Eigen/Core>

#include "mcmimo/geometry.hpp"
#include "mcmimo/randmat.hpp"

namespace mcmimo {

// Channel estimates for the users of one cell at their own BS.
// Column k of hhat/htilde is the estimate / estimation error of user k;
// upsilon(k) is the estimate variance, in (0,1) whenever sigma^2 > 0.
struct EstimateSet {
  Eigen::MatrixXcd hhat;    // N x K_i
  Eigen::MatrixXcd htilde;  // N x K_i, htilde = h - hhat
  Eigen::VectorXd upsilon;  // K_i
};

// Estimate variance of user k in cell i from the realized pilot overlaps:
//   rho_kii / (rho_kii + sum_{j!=i} sum_m rho_mji |q_ki^H q_mj|^2 + sigma2).
double estimate_variance(int k, int i, const Deployment& dep,
                         const PilotSet& pilots, double sigma2);

// Training observation at BS `bs`, antennas as rows, symbol times as columns:
//   Y = sum_j H_j diag(sqrt(rho_.j,bs)) Q_j^T + noise.
Eigen::MatrixXcd received_training(const Deployment& dep,
                                   const PilotSet& pilots,
                                   const ChannelRealization& ch, int bs);

// MMSE estimate of user k in cell i by correlating Y with the user's pilot,
// scaled by upsilon/sqrt(rho); returns (hhat, htilde).
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> mmse_estimate(
    const Eigen::MatrixXcd& y, int k, int i, const Deployment& dep,
    const PilotSet& pilots, const ChannelRealization& ch, double sigma2);

// Same estimator assembled term-by-term from the channels (own channel +
// contamination + correlated noise) without forming Y. Equal to
// mmse_estimate entrywise; kept as an independent construction.
Eigen::VectorXcd mmse_estimate_direct(int k, int i, const Deployment& dep,
                                      const PilotSet& pilots,
                                      const ChannelRealization& ch,
                                      double sigma2);

// All users of cell i in one pass (shared overlap products).
EstimateSet estimate_cell(const Eigen::MatrixXcd& y, int i,
                          const Deployment& dep, const PilotSet& pilots,
                          const ChannelRealization& ch, double sigma2);

}  // namespace mcmimo

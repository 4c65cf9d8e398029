#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "mcmimo/training.hpp"

namespace mcmimo {

// One user's matched-filter SINR with its parts, all linear power units:
//   gamma = numerator / (self_interference + interference + noise).
struct SinrSample {
  double gamma = 0.0;
  double numerator = 0.0;
  double self_interference = 0.0;  // xi
  double interference = 0.0;       // intra + inter cell
  double noise = 0.0;
};

// Matched filter c = hhat. Numerator rho ||hhat||^4; xi = rho |hhat^H htilde|^2;
// interference sums rho_mji |hhat^H h_mji|^2 over all (j,m) != (i,k);
// noise sigma2 ||hhat||^2. Throws if the estimate is identically zero.
SinrSample empirical_sinr(int k, int i, const EstimateSet& est,
                          const ChannelRealization& ch, const Deployment& dep,
                          double sigma2);

// All users of cell i at once (shared hhat^H H_j products).
std::vector<SinrSample> empirical_sinr_cell(int i, const EstimateSet& est,
                                            const ChannelRealization& ch,
                                            const Deployment& dep,
                                            double sigma2);

// 10 log10 of the linear mean; throws on empty input.
double average_sinr_db(std::span<const double> gammas);

}  // namespace mcmimo

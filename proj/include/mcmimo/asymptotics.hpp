#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "mcmimo/geometry.hpp"

namespace mcmimo {

enum class MomentMode { General, PowerControlled };

// Inputs of the large-system SINR formulas. m1(j,i) / m2(j,i) are the first
// and second moments of the received-power diagonal for cell j seen at BS i;
// in PowerControlled mode they hold the normalized-gain moments E[Lbar_ji],
// E[Lbar_ji^2] (own cell exactly 1). alpha_j = K_j/N, kappa_j = K_j/tau,
// theta = tau/N, so alpha_j = kappa_j * theta.
struct MomentSet {
  Eigen::MatrixXd m1, m2;  // (j, i)
  std::vector<double> alpha, kappa;
  double theta = 0.0;
  MomentMode mode = MomentMode::General;

  int cells() const { return static_cast<int>(m1.rows()); }
  void validate() const;
};

// Limiting SINR value. A zero denominator (single cell, no noise, vanishing
// loading) is a legitimate unbounded-SINR outcome, reported as a tag.
struct LimitSinr {
  double gamma = 0.0;
  double upsilon = 0.0;
  bool infinite = false;
};

// Empirical per-deployment moments: m1(j,i) = mean_k rho(k,j,i), m2 likewise
// with squares (normalized gains instead of powers in PowerControlled mode).
MomentSet moments_from_deployment(const Deployment& dep,
                                  const SystemConfig& cfg, MomentMode mode);

// Ensemble normalized-gain moments of the layout: Monte-Carlo average of
// ellbar and ellbar^2 over fresh uniform drops, n_samples per cell pair.
// Runs the drop loop in parallel when threads != 1 (0 = all cores);
// the reduction order is fixed, so the result is thread-count independent.
MomentSet ensemble_pc_moments(const SystemConfig& cfg, int n_samples,
                              std::uint64_t seed, int threads = 1);

// Total interference term shared by every limiting-SINR variant:
// sum_j alpha_j m1(j,i).
double mf_interference_term(int i, const MomentSet& m);

// Limiting SINR with independent per-cell pilots (general powers).
LimitSinr dop_limit_sinr(double rho_own, int i, const MomentSet& m,
                         double sigma2);

// Limiting SINR with one shared pilot set; rho_row holds this pilot index's
// received power from every cell at BS i.
LimitSinr fpr_limit_sinr(std::span<const double> rho_row, int i,
                         const MomentSet& m, double sigma2);

// Power-controlled limits: user-independent for per-cell pilots, and
// realization-dependent (through the interferers' normalized gains) for the
// shared-pilot scheme. ellbar_row[i] must be exactly 1.
LimitSinr dop_pc_limit_sinr(int i, const MomentSet& m, double sigma2_over_pu);
LimitSinr fpr_pc_limit_sinr(std::span<const double> ellbar_row, int i,
                            const MomentSet& m, double sigma2_over_pu);

// Conventional N->infinity limit at finite K and tau:
// gamma = rho_own^2 / ((1/tau) sum_{j != i} sum_m rho(m,j,i)^2).
LimitSinr massive_mimo_limit(const Deployment& dep, const SystemConfig& cfg,
                             int k, int i);

}  // namespace mcmimo

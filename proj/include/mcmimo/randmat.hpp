#pragma once

#include <Eigen/Core>
#include <vector>

#include "mcmimo/config.hpp"
#include "mcmimo/rng.hpp"

namespace mcmimo {

// Per-cell tau x K_j pilot matrices with orthonormal columns. Under DOP each
// cell gets an independent Haar draw; under FPR all cells share one.
struct PilotSet {
  std::vector<Eigen::MatrixXcd> q;
  PilotScheme scheme = PilotScheme::Dop;
};

// Fast fading to one fixed receiving BS: h[j] is N x K_j with i.i.d. CN(0,1)
// entries, plus the N x tau training noise block at that BS.
struct ChannelRealization {
  std::vector<Eigen::MatrixXcd> h;
  Eigen::MatrixXcd training_noise;
};

// Haar-distributed tau x tau unitary: complex Ginibre draw, QR, then each
// column scaled by the unit phase of the matching diagonal entry of R (the
// raw Householder Q is not Haar without the phase fix).
Eigen::MatrixXcd haar_unitary(int tau, RngStream& rng);

PilotSet make_pilots(const SystemConfig& cfg, RngStream& rng);

ChannelRealization sample_channels(const SystemConfig& cfg, RngStream& rng);

// Quadratic-form concentration report: max over repetitions of
// |x A x^H - tr(A)/n| style deviations for Gaussian vectors and isometry
// columns, at growing sizes. Used by the statistical test suite.
struct LemmaReport {
  std::vector<int> sizes;
  std::vector<double> gauss_quad;   // x A x^H vs tr(A)/n
  std::vector<double> iso_quad;     // w^H A w vs tr(A)/n
  std::vector<double> gauss_cross;  // |x A y^H|
  std::vector<double> iso_cross;    // |w^H A z|
};

LemmaReport lemma_checks(RngStream& rng, std::vector<int> sizes = {64, 256,
                                                                   1024});

// Uniform draw from the unit sphere in C^n; equals one column of a Haar
// unitary in distribution.
Eigen::VectorXcd haar_column(int n, RngStream& rng);

}  // namespace mcmimo

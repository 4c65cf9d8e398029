#include "mcmimo/training.hpp"

#include <cmath>

namespace mcmimo {

using cd = std::complex<double>;

double estimate_variance(int k, int i, const Deployment& dep,
                         const PilotSet& pilots, double sigma2) {
  const int l = static_cast<int>(pilots.q.size());
  const double rho_own = dep.rho(k, i, i);
  double contamination = 0.0;
  const Eigen::VectorXcd qki = pilots.q[i].col(k);
  for (int j = 0; j < l; ++j) {
    if (j == i) continue;
    const Eigen::VectorXcd overlap = pilots.q[j].adjoint() * qki;
    for (int m = 0; m < overlap.size(); ++m)
      contamination += dep.rho(m, j, i) * std::norm(overlap(m));
  }
  return rho_own / (rho_own + contamination + sigma2);
}

Eigen::MatrixXcd received_training(const Deployment& dep,
                                   const PilotSet& pilots,
                                   const ChannelRealization& ch, int bs) {
  const int l = static_cast<int>(pilots.q.size());
  const int n = static_cast<int>(ch.h[0].rows());
  const int tau = static_cast<int>(pilots.q[0].rows());
  if (ch.training_noise.rows() != n || ch.training_noise.cols() != tau)
    throw std::invalid_argument("received_training: noise dimensions");
  Eigen::MatrixXcd y = ch.training_noise;
  for (int j = 0; j < l; ++j) {
    const int kj = static_cast<int>(pilots.q[j].cols());
    if (ch.h[j].cols() != kj)
      throw std::invalid_argument("received_training: channel dimensions");
    Eigen::VectorXd amp(kj);
    for (int m = 0; m < kj; ++m) amp(m) = std::sqrt(dep.rho(m, j, bs));
    y.noalias() +=
        ch.h[j] * amp.asDiagonal() * pilots.q[j].transpose();
  }
  return y;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> mmse_estimate(
    const Eigen::MatrixXcd& y, int k, int i, const Deployment& dep,
    const PilotSet& pilots, const ChannelRealization& ch, double sigma2) {
  const double ups = estimate_variance(k, i, dep, pilots, sigma2);
  const double scale = ups / std::sqrt(dep.rho(k, i, i));
  Eigen::VectorXcd hhat = scale * (y * pilots.q[i].col(k).conjugate());
  Eigen::VectorXcd htilde = ch.h[i].col(k) - hhat;
  return {std::move(hhat), std::move(htilde)};
}

Eigen::VectorXcd mmse_estimate_direct(int k, int i, const Deployment& dep,
                                      const PilotSet& pilots,
                                      const ChannelRealization& ch,
                                      double sigma2) {
  const int l = static_cast<int>(pilots.q.size());
  const double ups = estimate_variance(k, i, dep, pilots, sigma2);
  const double rho_own = dep.rho(k, i, i);
  const Eigen::VectorXcd qki = pilots.q[i].col(k);

  Eigen::VectorXcd acc = ch.h[i].col(k);
  for (int j = 0; j < l; ++j) {
    if (j == i) continue;
    const Eigen::VectorXcd overlap = pilots.q[j].adjoint() * qki;  // q_mj^H q_ki
    for (int m = 0; m < overlap.size(); ++m) {
      const double w = std::sqrt(dep.rho(m, j, i) / rho_own);
      // the correlation q_ki^H y picks up conj(q_mj^H q_ki) on h_mji
      acc += (w * std::conj(overlap(m))) * ch.h[j].col(m);
    }
  }
  acc += (ch.training_noise * qki.conjugate()) / std::sqrt(rho_own);
  return ups * acc;
}

EstimateSet estimate_cell(const Eigen::MatrixXcd& y, int i,
                          const Deployment& dep, const PilotSet& pilots,
                          const ChannelRealization& ch, double sigma2) {
  const int l = static_cast<int>(pilots.q.size());
  const int ki = static_cast<int>(pilots.q[i].cols());
  EstimateSet est;
  Eigen::VectorXd contamination = Eigen::VectorXd::Zero(ki);
  for (int j = 0; j < l; ++j) {
    if (j == i) continue;
    const Eigen::MatrixXcd overlap =
        pilots.q[j].adjoint() * pilots.q[i];  // K_j x K_i
    for (int k = 0; k < ki; ++k)
      for (int m = 0; m < overlap.rows(); ++m)
        contamination(k) += dep.rho(m, j, i) * std::norm(overlap(m, k));
  }
  est.upsilon.resize(ki);
  for (int k = 0; k < ki; ++k) {
    const double rho_own = dep.rho(k, i, i);
    est.upsilon(k) = rho_own / (rho_own + contamination(k) + sigma2);
  }
  est.hhat.noalias() = y * pilots.q[i].conjugate();
  for (int k = 0; k < ki; ++k)
    est.hhat.col(k) *= est.upsilon(k) / std::sqrt(dep.rho(k, i, i));
  est.htilde = ch.h[i] - est.hhat;
  return est;
}

}  // namespace mcmimo

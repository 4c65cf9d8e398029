#include "mcmimo/uplink.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mcmimo {

static SinrSample assemble(int k, int i, const Eigen::VectorXcd& hhat,
                           const Eigen::VectorXcd& htilde,
                           const ChannelRealization& ch, const Deployment& dep,
                           double sigma2) {
  const double n2 = hhat.squaredNorm();
  if (n2 == 0.0)
    throw std::runtime_error("empirical_sinr: degenerate zero estimate");
  SinrSample s;
  const double rho_own = dep.rho(k, i, i);
  s.numerator = rho_own * n2 * n2;
  s.self_interference = rho_own * std::norm(hhat.dot(htilde));
  double interf = 0.0;
  for (size_t j = 0; j < ch.h.size(); ++j) {
    const Eigen::VectorXcd prod = ch.h[j].adjoint() * hhat;  // (h_mj)^H hhat
    for (int m = 0; m < prod.size(); ++m) {
      if (static_cast<int>(j) == i && m == k) continue;
      interf += dep.rho(m, static_cast<int>(j), i) * std::norm(prod(m));
    }
  }
  s.interference = interf;
  s.noise = sigma2 * n2;
  s.gamma = s.numerator / (s.self_interference + s.interference + s.noise);
  return s;
}

SinrSample empirical_sinr(int k, int i, const EstimateSet& est,
                          const ChannelRealization& ch, const Deployment& dep,
                          double sigma2) {
  return assemble(k, i, est.hhat.col(k), est.htilde.col(k), ch, dep, sigma2);
}

std::vector<SinrSample> empirical_sinr_cell(int i, const EstimateSet& est,
                                            const ChannelRealization& ch,
                                            const Deployment& dep,
                                            double sigma2) {
  const int ki = static_cast<int>(est.hhat.cols());
  const int l = static_cast<int>(ch.h.size());
  std::vector<SinrSample> out(ki);

  Eigen::VectorXd norms(ki);
  for (int k = 0; k < ki; ++k) norms(k) = est.hhat.col(k).squaredNorm();

  // cross(k) accumulates sum_{j,m} rho_mji |hhat_k^H h_mji|^2 over all users.
  Eigen::VectorXd cross = Eigen::VectorXd::Zero(ki);
  Eigen::MatrixXcd own_prod;  // needed to remove the (i,k) term
  for (int j = 0; j < l; ++j) {
    const Eigen::MatrixXcd prod = est.hhat.adjoint() * ch.h[j];  // K_i x K_j
    if (j == i) own_prod = prod;
    for (int k = 0; k < ki; ++k)
      for (int m = 0; m < prod.cols(); ++m)
        cross(k) += dep.rho(m, j, i) * std::norm(prod(k, m));
  }

  for (int k = 0; k < ki; ++k) {
    const double n2 = norms(k);
    if (n2 == 0.0)
      throw std::runtime_error("empirical_sinr: degenerate zero estimate");
    const double rho_own = dep.rho(k, i, i);
    SinrSample& s = out[k];
    s.numerator = rho_own * n2 * n2;
    s.self_interference =
        rho_own * std::norm(est.hhat.col(k).dot(est.htilde.col(k)));
    s.interference = cross(k) - rho_own * std::norm(own_prod(k, k));
    s.noise = sigma2 * n2;
    s.gamma = s.numerator / (s.self_interference + s.interference + s.noise);
  }
  return out;
}

double average_sinr_db(std::span<const double> gammas) {
  if (gammas.empty())
    throw std::invalid_argument("average_sinr_db: no samples");
  const double mean =
      std::accumulate(gammas.begin(), gammas.end(), 0.0) /
      static_cast<double>(gammas.size());
  return 10.0 * std::log10(mean);
}

}  // namespace mcmimo

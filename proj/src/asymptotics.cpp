#include "mcmimo/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "mcmimo/parallel.hpp"

namespace mcmimo {

void MomentSet::validate() const {
  const int l = cells();
  if (m2.rows() != l || m1.cols() != l || m2.cols() != l ||
      static_cast<int>(alpha.size()) != l ||
      static_cast<int>(kappa.size()) != l)
    throw std::invalid_argument("MomentSet: inconsistent dimensions");
  for (int j = 0; j < l; ++j) {
    if (std::abs(alpha[j] - kappa[j] * theta) > 1e-12 * (1.0 + alpha[j]))
      throw std::invalid_argument("MomentSet: alpha_j != kappa_j * theta");
    for (int i = 0; i < l; ++i)
      if (m2(j, i) < m1(j, i) * m1(j, i) - 1e-12)
        throw std::invalid_argument("MomentSet: m2 < m1^2");
  }
  if (mode == MomentMode::PowerControlled)
    for (int i = 0; i < l; ++i)
      if (m1(i, i) != 1.0 || m2(i, i) != 1.0)
        throw std::invalid_argument(
            "MomentSet: own-cell moments must be exactly 1 under power "
            "control");
}

MomentSet moments_from_deployment(const Deployment& dep,
                                  const SystemConfig& cfg, MomentMode mode) {
  const int l = cfg.cells;
  MomentSet m;
  m.mode = mode;
  m.m1 = Eigen::MatrixXd::Zero(l, l);
  m.m2 = Eigen::MatrixXd::Zero(l, l);
  for (int j = 0; j < l; ++j) {
    const int kj = cfg.user_count(j);
    for (int i = 0; i < l; ++i) {
      double s1 = 0.0, s2 = 0.0;
      for (int k = 0; k < kj; ++k) {
        const double v = mode == MomentMode::PowerControlled
                             ? dep.ellbar(k, j, i)
                             : dep.rho(k, j, i);
        s1 += v;
        s2 += v * v;
      }
      m.m1(j, i) = s1 / kj;
      m.m2(j, i) = s2 / kj;
    }
    if (mode == MomentMode::PowerControlled) {
      m.m1(j, j) = 1.0;  // exact by definition
      m.m2(j, j) = 1.0;
    }
  }
  m.theta = static_cast<double>(cfg.training_len) / cfg.antennas;
  for (int j = 0; j < l; ++j) {
    const double kj = cfg.user_count(j);
    m.alpha.push_back(kj / cfg.antennas);
    m.kappa.push_back(kj / cfg.training_len);
  }
  return m;
}

MomentSet ensemble_pc_moments(const SystemConfig& cfg, int n_samples,
                              std::uint64_t seed, int threads) {
  const int l = cfg.cells;
  const auto bs = build_hex_layout(cfg);

  // Fixed-size blocks, one rng stream per block; the serial reduction over
  // blocks makes the sums independent of the thread count.
  constexpr int kBlock = 8192;
  const int n_blocks = (n_samples + kBlock - 1) / kBlock;
  struct Partial {
    Eigen::MatrixXd s1, s2;
  };
  std::vector<Partial> parts(n_blocks);

  par::for_index(n_blocks, threads, [&](std::size_t b) {
    RngStream rng = substream(seed, "moments", b);
    Eigen::MatrixXd s1 = Eigen::MatrixXd::Zero(l, l);
    Eigen::MatrixXd s2 = Eigen::MatrixXd::Zero(l, l);
    const int lo = static_cast<int>(b) * kBlock;
    const int hi = std::min(lo + kBlock, n_samples);
    for (int s = lo; s < hi; ++s) {
      for (int j = 0; j < l; ++j) {
        const Eigen::Vector2d u = bs[j] + sample_hexagon(cfg.inner_radius, rng);
        const double own =
            path_gain((u - bs[j]).norm(), cfg.pathloss_exp);
        for (int i = 0; i < l; ++i) {
          if (i == j) continue;
          const double lb =
              path_gain((u - bs[i]).norm(), cfg.pathloss_exp) / own;
          s1(j, i) += lb;
          s2(j, i) += lb * lb;
        }
      }
    }
    parts[b] = {std::move(s1), std::move(s2)};
  });

  MomentSet m;
  m.mode = MomentMode::PowerControlled;
  m.m1 = Eigen::MatrixXd::Zero(l, l);
  m.m2 = Eigen::MatrixXd::Zero(l, l);
  for (const Partial& p : parts) {
    m.m1 += p.s1;
    m.m2 += p.s2;
  }
  m.m1 /= n_samples;
  m.m2 /= n_samples;
  for (int j = 0; j < l; ++j) {
    m.m1(j, j) = 1.0;
    m.m2(j, j) = 1.0;
  }
  m.theta = static_cast<double>(cfg.training_len) / cfg.antennas;
  for (int j = 0; j < l; ++j) {
    const double kj = cfg.user_count(j);
    m.alpha.push_back(kj / cfg.antennas);
    m.kappa.push_back(kj / cfg.training_len);
  }
  return m;
}

double mf_interference_term(int i, const MomentSet& m) {
  double total = 0.0;
  for (int j = 0; j < m.cells(); ++j) total += m.alpha[j] * m.m1(j, i);
  return total;
}

static LimitSinr finish(double numerator, double denominator, double upsilon) {
  LimitSinr r;
  r.upsilon = upsilon;
  if (denominator == 0.0) {
    r.infinite = true;
    return r;
  }
  r.gamma = numerator / denominator;
  return r;
}

LimitSinr dop_limit_sinr(double rho_own, int i, const MomentSet& m,
                         double sigma2) {
  double contamination_m1 = 0.0, contamination_m2 = 0.0;
  for (int j = 0; j < m.cells(); ++j) {
    if (j == i) continue;
    contamination_m1 += m.kappa[j] * m.m1(j, i);
    contamination_m2 += m.kappa[j] * m.m2(j, i);
  }
  const double ups = rho_own / (rho_own + contamination_m1 + sigma2);
  const double den =
      rho_own * mf_interference_term(i, m) + ups * contamination_m2;
  return finish(rho_own * rho_own * ups, den, ups);
}

LimitSinr fpr_limit_sinr(std::span<const double> rho_row, int i,
                         const MomentSet& m, double sigma2) {
  const double rho_own = rho_row[static_cast<size_t>(i)];
  double row_sum = 0.0, row_sq = 0.0;
  for (int j = 0; j < m.cells(); ++j) {
    if (j == i) continue;
    row_sum += rho_row[static_cast<size_t>(j)];
    row_sq += rho_row[static_cast<size_t>(j)] * rho_row[static_cast<size_t>(j)];
  }
  const double ups = rho_own / (rho_own + row_sum + sigma2);
  const double den = rho_own * mf_interference_term(i, m) + ups * row_sq;
  return finish(rho_own * rho_own * ups, den, ups);
}

LimitSinr dop_pc_limit_sinr(int i, const MomentSet& m, double sigma2_over_pu) {
  if (m.mode != MomentMode::PowerControlled)
    throw std::invalid_argument("dop_pc_limit_sinr: need PC moments");
  double contamination_m1 = 0.0, contamination_m2 = 0.0;
  for (int j = 0; j < m.cells(); ++j) {
    if (j == i) continue;
    contamination_m1 += m.kappa[j] * m.m1(j, i);
    contamination_m2 += m.kappa[j] * m.m2(j, i);
  }
  const double ups = 1.0 / (1.0 + contamination_m1 + sigma2_over_pu);
  const double den = mf_interference_term(i, m) + ups * contamination_m2;
  return finish(ups, den, ups);
}

LimitSinr fpr_pc_limit_sinr(std::span<const double> ellbar_row, int i,
                            const MomentSet& m, double sigma2_over_pu) {
  if (m.mode != MomentMode::PowerControlled)
    throw std::invalid_argument("fpr_pc_limit_sinr: need PC moments");
  double row_sum = 0.0, row_sq = 0.0;
  for (int j = 0; j < m.cells(); ++j) {
    if (j == i) continue;
    row_sum += ellbar_row[static_cast<size_t>(j)];
    row_sq +=
        ellbar_row[static_cast<size_t>(j)] * ellbar_row[static_cast<size_t>(j)];
  }
  const double ups = 1.0 / (1.0 + row_sum + sigma2_over_pu);
  const double den = mf_interference_term(i, m) + ups * row_sq;
  return finish(ups, den, ups);
}

LimitSinr massive_mimo_limit(const Deployment& dep, const SystemConfig& cfg,
                             int k, int i) {
  const double rho_own = dep.rho(k, i, i);
  double contamination = 0.0;
  for (int j = 0; j < cfg.cells; ++j) {
    if (j == i) continue;
    for (int m = 0; m < cfg.user_count(j); ++m) {
      const double r = dep.rho(m, j, i);
      contamination += r * r;
    }
  }
  contamination /= cfg.training_len;
  LimitSinr r;
  if (contamination == 0.0) {
    r.infinite = true;
    return r;
  }
  r.gamma = rho_own * rho_own / contamination;
  return r;
}

}  // namespace mcmimo

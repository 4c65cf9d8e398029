#include "mcmimo/geometry.hpp"

#include <cmath>
#include <numbers>

namespace mcmimo {

double path_gain(double distance, double zeta) {
  if (distance < 0.0)
    throw std::domain_error("path_gain: negative distance");
  return 1.0 / (1.0 + std::pow(distance, zeta));
}

std::vector<Eigen::Vector2d> build_hex_layout(const SystemConfig& cfg) {
  if (cfg.cells == 1) return {Eigen::Vector2d::Zero()};
  if (cfg.cells != 7)
    throw ConfigError("L: hex layout supports L=1 or L=7, got " +
                      std::to_string(cfg.cells));
  std::vector<Eigen::Vector2d> bs;
  bs.reserve(7);
  bs.emplace_back(0.0, 0.0);
  for (int m = 0; m < 6; ++m) {
    const double ang = m * std::numbers::pi / 3.0;
    bs.emplace_back(cfg.bs_spacing * std::cos(ang),
                    cfg.bs_spacing * std::sin(ang));
  }
  return bs;
}

bool point_in_hexagon(const Eigen::Vector2d& p, double apothem) {
  // Flat sides perpendicular to the 30+60m degree axes, vertices at 60m.
  for (int m = 0; m < 3; ++m) {
    const double ang = std::numbers::pi / 6.0 + m * std::numbers::pi / 3.0;
    const double proj = p.x() * std::cos(ang) + p.y() * std::sin(ang);
    if (std::abs(proj) > apothem) return false;
  }
  return true;
}

Eigen::Vector2d sample_hexagon(double apothem, RngStream& rng) {
  // Rejection from the bounding square of the circumscribed circle.
  const double circum = apothem * 2.0 / std::sqrt(3.0);
  for (;;) {
    const double x = (2.0 * rng.uniform() - 1.0) * circum;
    const double y = (2.0 * rng.uniform() - 1.0) * circum;
    Eigen::Vector2d p(x, y);
    if (point_in_hexagon(p, apothem)) return p;
  }
}

std::vector<std::vector<Eigen::Vector2d>> drop_users(
    const SystemConfig& cfg, const std::vector<Eigen::Vector2d>& bs_xy,
    RngStream& rng) {
  std::vector<std::vector<Eigen::Vector2d>> users(bs_xy.size());
  for (size_t j = 0; j < bs_xy.size(); ++j) {
    const int kj = cfg.user_count(static_cast<int>(j));
    users[j].reserve(kj);
    for (int k = 0; k < kj; ++k)
      users[j].push_back(bs_xy[j] + sample_hexagon(cfg.inner_radius, rng));
  }
  return users;
}

Deployment build_deployment(const SystemConfig& cfg, RngStream& rng) {
  cfg.validate();
  Deployment d;
  d.bs_xy = build_hex_layout(cfg);
  d.user_xy = drop_users(cfg, d.bs_xy, rng);

  const int l = cfg.cells;
  const int kmax = cfg.max_users();
  d.ell = GainTensor(kmax, l);
  d.rho = GainTensor(kmax, l);
  d.ellbar = GainTensor(kmax, l);

  size_t flat = 0;  // index into fixed_power, users ordered cell-major
  for (int j = 0; j < l; ++j) {
    const int kj = cfg.user_count(j);
    for (int k = 0; k < kj; ++k, ++flat) {
      for (int i = 0; i < l; ++i) {
        const double dist = (d.user_xy[j][k] - d.bs_xy[i]).norm();
        d.ell(k, j, i) = path_gain(dist, cfg.pathloss_exp);
      }
      const double own = d.ell(k, j, j);
      const double p_kj = cfg.power_mode == PowerMode::Controlled
                              ? cfg.power_target / own
                              : cfg.fixed_power[flat];
      for (int i = 0; i < l; ++i) {
        d.ellbar(k, j, i) = d.ell(k, j, i) / own;
        d.rho(k, j, i) = p_kj * d.ell(k, j, i);
      }
    }
  }
  return d;
}

}  // namespace mcmimo

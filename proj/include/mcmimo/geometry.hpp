#pragma once

#include <Eigen/Core>
#include <vector>

#include "mcmimo/config.hpp"
#include "mcmimo/rng.hpp"

namespace mcmimo {

// Dense (k, j, i) tensor over user index k, transmitting cell j, receiving
// BS i. Rows k >= K_j are unused when cells are unevenly loaded.
class GainTensor {
 public:
  GainTensor() = default;
  GainTensor(int max_users, int cells)
      : k_(max_users), l_(cells),
        data_(static_cast<size_t>(max_users) * cells * cells, 0.0) {}

  double& operator()(int k, int j, int i) {
    return data_[(static_cast<size_t>(k) * l_ + j) * l_ + i];
  }
  double operator()(int k, int j, int i) const {
    return data_[(static_cast<size_t>(k) * l_ + j) * l_ + i];
  }
  int max_users() const { return k_; }
  int cells() const { return l_; }

 private:
  int k_ = 0, l_ = 0;
  std::vector<double> data_;
};

// BS coordinates, user coordinates and the slow-gain tensors of one drop.
//   ell(k,j,i)    = path gain of user k in cell j at BS i
//   rho(k,j,i)    = received power p_kj * ell(k,j,i)
//   ellbar(k,j,i) = ell(k,j,i) / ell(k,j,j)
struct Deployment {
  std::vector<Eigen::Vector2d> bs_xy;
  std::vector<std::vector<Eigen::Vector2d>> user_xy;  // [cell][user]
  GainTensor ell, rho, ellbar;
};

// Bounded path-loss model 1 / (1 + d^zeta); throws on d < 0.
double path_gain(double distance, double zeta);

// Center cell at the origin; for L=7 the ring sits at distance bs_spacing,
// one neighbor per multiple of 60 degrees. Only L in {1, 7} is supported.
std::vector<Eigen::Vector2d> build_hex_layout(const SystemConfig& cfg);

// Hexagonal user-drop region centered on each BS: apothem = inner_radius,
// vertices pointing along the neighbor directions (0, 60, ..., 300 degrees).
bool point_in_hexagon(const Eigen::Vector2d& p, double apothem);
Eigen::Vector2d sample_hexagon(double apothem, RngStream& rng);

std::vector<std::vector<Eigen::Vector2d>> drop_users(
    const SystemConfig& cfg, const std::vector<Eigen::Vector2d>& bs_xy,
    RngStream& rng);

// Drops users and fills all gain tensors. Under CONTROLLED power the
// transmit power is Pu / ell(k,j,j), so rho(k,j,j) == Pu exactly.
Deployment build_deployment(const SystemConfig& cfg, RngStream& rng);

}  // namespace mcmimo

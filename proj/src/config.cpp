#include "mcmimo/config.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mcmimo {

int SystemConfig::max_users() const {
  if (users.empty()) return users_per_cell;
  return *std::max_element(users.begin(), users.end());
}

int SystemConfig::total_users() const {
  if (users.empty()) return users_per_cell * cells;
  return std::accumulate(users.begin(), users.end(), 0);
}

void SystemConfig::validate() const {
  if (cells < 1) throw ConfigError("L: cell count must be >= 1");
  if (antennas < 1) throw ConfigError("N: antenna count must be >= 1");
  if (!users.empty() && static_cast<int>(users.size()) != cells)
    throw ConfigError("K: per-cell user list length must equal L");
  for (int j = 0; j < cells; ++j) {
    const int kj = user_count(j);
    if (kj < 1) throw ConfigError("K: users per cell must be >= 1");
    if (kj > training_len)
      throw ConfigError("K: pilot orthonormality requires K_j <= tau (cell " +
                        std::to_string(j + 1) + " has K=" + std::to_string(kj) +
                        ", tau=" + std::to_string(training_len) + ")");
  }
  if (training_len > coherence_len)
    throw ConfigError("tau: training length must satisfy tau <= T");
  if (!(noise_power > 0.0)) throw ConfigError("sigma2: must be > 0");
  if (!(power_target > 0.0)) throw ConfigError("Pu: must be > 0");
  if (!(pathloss_exp > 0.0)) throw ConfigError("zeta: must be > 0");
  if (!(bs_spacing > 0.0)) throw ConfigError("bs_spacing: must be > 0");
  if (!(inner_radius > 0.0)) throw ConfigError("inner_radius: must be > 0");
  if (power_mode == PowerMode::Fixed) {
    if (static_cast<int>(fixed_power.size()) != total_users())
      throw ConfigError("fixed_power: need one entry per user");
    for (double p : fixed_power)
      if (!(p > 0.0)) throw ConfigError("fixed_power: powers must be > 0");
  }
}

std::string to_string(PilotScheme s) {
  return s == PilotScheme::Dop ? "DOP" : "FPR";
}

std::string to_string(PowerMode m) {
  return m == PowerMode::Controlled ? "CONTROLLED" : "FIXED";
}

PilotScheme pilot_scheme_from_string(const std::string& s) {
  if (s == "DOP" || s == "dop") return PilotScheme::Dop;
  if (s == "FPR" || s == "fpr") return PilotScheme::Fpr;
  throw ConfigError("scheme: expected DOP or FPR, got '" + s + "'");
}

PowerMode power_mode_from_string(const std::string& s) {
  if (s == "CONTROLLED" || s == "controlled") return PowerMode::Controlled;
  if (s == "FIXED" || s == "fixed") return PowerMode::Fixed;
  throw ConfigError("power_mode: expected CONTROLLED or FIXED, got '" + s +
                    "'");
}

}  // namespace mcmimo

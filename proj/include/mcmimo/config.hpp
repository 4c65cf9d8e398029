#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcmimo {

enum class PilotScheme { Dop, Fpr };
enum class PowerMode { Controlled, Fixed };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar parameters of one scenario. Lengths are in the normalized units of
// the layout (BS spacing 2); powers are linear.
struct SystemConfig {
  int cells = 7;              // L
  int users_per_cell = 20;    // K, used when `users` is empty
  std::vector<int> users;     // optional per-cell K_j
  int antennas = 100;         // N
  int training_len = 30;      // tau (symbols)
  int coherence_len = 200;    // T (symbols), metadata; tau <= T
  double noise_power = 1.0;   // sigma^2
  double power_target = 1.0;  // Pu, received-power target under power control
  double pathloss_exp = 3.7;  // zeta
  double bs_spacing = 2.0;
  double inner_radius = 1.0;  // hexagon apothem of the user-drop region
  PilotScheme scheme = PilotScheme::Dop;
  PowerMode power_mode = PowerMode::Controlled;
  // Fixed-power mode: per-user transmit powers, row-major [cell][user].
  std::vector<double> fixed_power;

  int user_count(int cell) const {
    return users.empty() ? users_per_cell : users.at(static_cast<size_t>(cell));
  }
  int max_users() const;
  int total_users() const;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

std::string to_string(PilotScheme s);
std::string to_string(PowerMode m);
PilotScheme pilot_scheme_from_string(const std::string& s);
PowerMode power_mode_from_string(const std::string& s);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace mcmimo

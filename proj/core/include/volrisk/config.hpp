#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "volrisk/trader_sim.hpp"

namespace volrisk {

/// Flat `key = value` text: one pair per line, '#' starts a comment, blank
/// lines ignored.  Later occurrences of a key override earlier ones.
using KeyValueMap = std::map<std::string, std::string>;

KeyValueMap parse_key_values(std::istream& in);
KeyValueMap parse_key_values_file(const std::string& path);

/// Trader-population simulation run: the population spec plus the report
/// grid.  n_grid defaults to decades 100, 1000, ... up to n_traders;
/// emit_paths > 0 additionally writes the first K trader paths.
struct SimulationRunSpec {
  TraderPopulationSpec population;
  std::vector<std::size_t> n_grid;
  std::size_t emit_paths = 0;
};

/// Keys: n_traders, mu_alpha, sigma_alpha, mu_gamma, sigma_gamma, r,
/// dt_years, n_steps, seed, alpha_dist, gamma_dist, redraw_per_step,
/// n_grid (comma-separated), emit_paths.
/// Unknown keys and malformed values raise InvalidConfig.
SimulationRunSpec parse_simulation_spec(const KeyValueMap& kv);
SimulationRunSpec load_simulation_spec(const std::string& path);

}  // namespace volrisk

#include "volrisk/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "volrisk/errors.hpp"

namespace volrisk {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& value) {
  double out;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(Errc::invalid_config, key + " = '" + value + "' is not a number");
  }
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  std::uint64_t out;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(Errc::invalid_config, key + " = '" + value + "' is not a nonnegative integer");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(Errc::invalid_config, key + " = '" + value + "' is not a boolean");
}

Dist to_dist(const std::string& key, const std::string& value) {
  if (value == "normal") return Dist::normal;
  if (value == "shifted-uniform" || value == "shifted_uniform") return Dist::shifted_uniform;
  throw Error(Errc::invalid_config,
              key + " = '" + value + "' (expected normal | shifted-uniform)");
}

}  // namespace

KeyValueMap parse_key_values(std::istream& in) {
  KeyValueMap kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::invalid_config,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) {
      throw Error(Errc::invalid_config, "line " + std::to_string(line_no) + ": empty key");
    }
    kv[key] = value;
  }
  return kv;
}

KeyValueMap parse_key_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_failure, "cannot open '" + path + "'");
  return parse_key_values(in);
}

SimulationRunSpec parse_simulation_spec(const KeyValueMap& kv) {
  SimulationRunSpec run;
  TraderPopulationSpec& p = run.population;

  for (const auto& [key, value] : kv) {
    if (key == "n_traders") {
      p.n_traders = std::size_t(to_u64(key, value));
    } else if (key == "mu_alpha") {
      p.mu_alpha = to_double(key, value);
    } else if (key == "sigma_alpha") {
      p.sigma_alpha = to_double(key, value);
    } else if (key == "mu_gamma") {
      p.mu_gamma = to_double(key, value);
    } else if (key == "sigma_gamma") {
      p.sigma_gamma = to_double(key, value);
    } else if (key == "r") {
      p.r = to_double(key, value);
    } else if (key == "dt_years") {
      p.dt_years = to_double(key, value);
    } else if (key == "n_steps") {
      p.n_steps = std::size_t(to_u64(key, value));
    } else if (key == "seed") {
      p.seed = to_u64(key, value);
    } else if (key == "alpha_dist") {
      p.alpha_dist = to_dist(key, value);
    } else if (key == "gamma_dist") {
      p.gamma_dist = to_dist(key, value);
    } else if (key == "redraw_per_step") {
      p.redraw_per_step = to_bool(key, value);
    } else if (key == "emit_paths") {
      run.emit_paths = std::size_t(to_u64(key, value));
    } else if (key == "n_grid") {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        run.n_grid.push_back(std::size_t(to_u64(key, trim(item))));
      }
    } else {
      throw Error(Errc::invalid_config, "unknown key '" + key + "'");
    }
  }

  validate(p);
  if (run.n_grid.empty()) {
    for (std::size_t n = 100; n < p.n_traders; n *= 10) run.n_grid.push_back(n);
    run.n_grid.push_back(p.n_traders);
    run.n_grid.erase(std::unique(run.n_grid.begin(), run.n_grid.end()), run.n_grid.end());
  }
  if (!std::is_sorted(run.n_grid.begin(), run.n_grid.end())) {
    throw Error(Errc::invalid_config, "n_grid must be ascending");
  }
  if (run.emit_paths > p.n_traders) {
    throw Error(Errc::invalid_config, "emit_paths exceeds n_traders");
  }
  return run;
}

SimulationRunSpec load_simulation_spec(const std::string& path) {
  return parse_simulation_spec(parse_key_values_file(path));
}

}  // namespace volrisk

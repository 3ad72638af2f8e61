#include "wbflow/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wbflow/errors.hpp"

namespace wbflow {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

KeyValues KeyValues::parse(std::istream& in) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    kv.values_[key] = value;
  }
  return kv;
}

KeyValues KeyValues::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse(in);
}

bool KeyValues::has(const std::string& key) const { return values_.count(key) > 0; }

std::string KeyValues::get_string(const std::string& key, const std::string& fallback) {
  consumed_.insert(key);
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KeyValues::get_double(const std::string& key, double fallback) {
  consumed_.insert(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + it->second + "' as number");
  }
}

int KeyValues::get_int(const std::string& key, int fallback) {
  consumed_.insert(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + it->second + "' as integer");
  }
}

bool KeyValues::get_bool(const std::string& key, bool fallback) {
  consumed_.insert(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config key '" + key + "': cannot parse '" + v + "' as boolean");
}

std::vector<double> KeyValues::get_double_list(const std::string& key) {
  consumed_.insert(key);
  std::vector<double> out;
  const auto it = values_.find(key);
  if (it == values_.end()) return out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<int> KeyValues::get_int_list(const std::string& key) {
  std::vector<int> out;
  for (double v : get_double_list(key)) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<std::string> KeyValues::unconsumed() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) {
    if (!consumed_.count(k)) out.push_back(k);
  }
  return out;
}

namespace {

SchemeVariant variant_from(const std::string& s) {
  if (s == "standard") return SchemeVariant::standard;
  if (s == "wellbalanced" || s == "well-balanced") return SchemeVariant::wellbalanced;
  throw ConfigError("unknown scheme variant: " + s);
}

// Scheme/time/boundary overrides shared by the 1D presets.
void apply_overrides(KeyValues& kv, SchemeConfig& scheme, TimeConfig& time, BcKind& bc_left,
                     BcKind& bc_right) {
  if (kv.has("recon.scheme")) {
    scheme.recon = variant_from(kv.get_string("recon.scheme", "")) == SchemeVariant::wellbalanced
                       ? ReconScheme::wellbalanced
                       : ReconScheme::standard;
  }
  if (kv.has("source.scheme")) {
    scheme.source =
        variant_from(kv.get_string("source.scheme", "")) == SchemeVariant::wellbalanced
            ? SourceScheme::wellbalanced
            : SourceScheme::standard;
  }
  if (kv.has("recon.limiter")) {
    const std::string lim = kv.get_string("recon.limiter", "mc");
    if (lim == "minmod") {
      scheme.limiter.theta = 1.0;
    } else if (lim == "mc") {
      scheme.limiter.theta = 2.0;
    } else {
      throw ConfigError("unknown limiter: " + lim);
    }
  }
  scheme.limiter.theta = kv.get_double("recon.theta", scheme.limiter.theta);
  if (scheme.limiter.theta < 1.0 || scheme.limiter.theta > 2.0) {
    throw ConfigError("recon.theta must lie in [1, 2]");
  }
  scheme.limiter.order = kv.get_int("recon.order", scheme.limiter.order);
  if (scheme.limiter.order != 1 && scheme.limiter.order != 2) {
    throw ConfigError("recon.order must be 1 or 2");
  }
  scheme.clip = kv.get_bool("recon.clip", scheme.clip);
  if (kv.has("flux.kind")) scheme.flux = flux_kind_from_string(kv.get_string("flux.kind", ""));
  if (kv.has("source.grad_phi")) {
    const std::string g = kv.get_string("source.grad_phi", "analytic");
    if (g == "analytic") {
      scheme.grad_phi = GradPhiMode::analytic;
    } else if (g == "fd") {
      scheme.grad_phi = GradPhiMode::fd;
    } else {
      throw ConfigError("source.grad_phi must be 'analytic' or 'fd'");
    }
  }
  scheme.eq.tol = kv.get_double("equilibrium.tol", scheme.eq.tol);
  scheme.eq.max_iter = kv.get_int("equilibrium.max_iter", scheme.eq.max_iter);

  time.cfl = kv.get_double("time.cfl", time.cfl);
  time.t_end = kv.get_double("time.t_end", time.t_end);
  time.rk_order = kv.get_int("time.rk_order", time.rk_order);
  if (kv.has("output.times")) time.output_times = kv.get_double_list("output.times");

  if (kv.has("bc.left")) bc_left = bc_kind_from_string(kv.get_string("bc.left", "frozen"));
  if (kv.has("bc.right")) bc_right = bc_kind_from_string(kv.get_string("bc.right", "frozen"));
}

}  // namespace

RunSetup build_run(KeyValues& kv) {
  const std::string name = kv.get_string("problem", "");
  if (name.empty()) throw ConfigError("config needs a 'problem' preset name");

  const SchemeVariant variant = variant_from(kv.get_string("scheme", "wellbalanced"));
  const double mach = kv.get_double("problem.mach", 0.0);
  const double amplitude = kv.get_double("problem.amplitude", 0.0);

  RunSetup setup;
  setup.output_path = kv.get_string("output.path", ".");

  if (name == "xaligned2d") {
    const int nx = kv.get_int("grid.n_cells", 64);
    const int ny = kv.get_int("grid.ny", 32);
    Problem2D p = make_xaligned_flow_2d(mach, nx, ny, variant);
    // Shared overrides; 2D has no distinct left/right handling here.
    BcKind dummy_l = BcKind::frozen, dummy_r = BcKind::frozen;
    apply_overrides(kv, p.scheme, p.time, dummy_l, dummy_r);
    if (kv.has("bc.bottom")) p.bc.bottom = bc_kind_from_string(kv.get_string("bc.bottom", ""));
    if (kv.has("bc.top")) p.bc.top = bc_kind_from_string(kv.get_string("bc.top", ""));
    p.bc.left = dummy_l;
    p.bc.right = dummy_r;
    setup.output_times = p.time.output_times;
    setup.problem = std::move(p);
    return setup;
  }

  const int n = kv.get_int("grid.n_cells", 128);
  Problem1D p;
  if (name == "gaussian_bump") {
    p = make_gaussian_bump(mach, amplitude, n, variant);
  } else if (name == "bondi") {
    p = make_bondi(mach, amplitude, n, variant);
  } else if (name == "bondi_large") {
    p = make_bondi_large(mach, amplitude, n, variant);
  } else if (name == "bondi_shock") {
    p = make_bondi_shock(n, variant);
  } else {
    throw ConfigError("unknown problem preset: " + name);
  }
  apply_overrides(kv, p.scheme, p.time, p.bc_left, p.bc_right);
  setup.output_times = p.time.output_times;
  setup.problem = std::move(p);
  return setup;
}

SuiteSetup build_suite(KeyValues& kv) {
  const std::string name = kv.get_string("problem", "");
  if (name.empty()) throw ConfigError("suite config needs a 'problem' preset name");
  const double mach = kv.get_double("problem.mach", 0.0);
  const double amplitude = kv.get_double("problem.amplitude", 0.0);

  SuiteSetup suite;
  suite.problem_name = name;
  suite.output_path = kv.get_string("output.path", ".");
  suite.convergence.n_values = kv.get_int_list("suite.n_list");
  if (suite.convergence.n_values.empty()) {
    suite.convergence.n_values = {32, 64, 128, 256, 512, 1024, 2048};
  }
  suite.convergence.reference_n = kv.get_int("suite.reference_n", amplitude == 0.0 ? 0 : 8192);

  const std::string schemes = kv.get_string("suite.schemes", "standard,wellbalanced");
  suite.convergence.run_standard = schemes.find("standard") != std::string::npos;
  suite.convergence.run_wellbalanced = schemes.find("wellbalanced") != std::string::npos;

  if (name == "gaussian_bump") {
    suite.factory = [mach, amplitude](int n, SchemeVariant v) {
      return make_gaussian_bump(mach, amplitude, n, v);
    };
  } else if (name == "bondi") {
    suite.factory = [mach, amplitude](int n, SchemeVariant v) {
      return make_bondi(mach, amplitude, n, v);
    };
  } else if (name == "bondi_large") {
    suite.factory = [mach, amplitude](int n, SchemeVariant v) {
      return make_bondi_large(mach, amplitude, n, v);
    };
  } else if (name == "bondi_shock") {
    suite.factory = [](int n, SchemeVariant v) { return make_bondi_shock(n, v); };
  } else {
    throw ConfigError("unknown suite problem preset: " + name);
  }
  return suite;
}

}  // namespace wbflow
